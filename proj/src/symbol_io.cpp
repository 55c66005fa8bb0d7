#include "fock/symbol_io.hpp"

#include <fstream>
#include <sstream>

#include "fock/errors.hpp"

namespace fock {

namespace {

nlohmann::json complex_to_json(const cplx& v) { return {v.real(), v.imag()}; }

cplx complex_from_json(const nlohmann::json& j, const char* field) {
  if (j.is_number()) return cplx{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return cplx{j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError(std::string("symbol json: field '") + field +
                   "' must be a number or [re, im] pair");
}

}  // namespace

nlohmann::json symbol_to_json(const ExponentialSymbol& f) {
  nlohmann::json A = nlohmann::json::array();
  for (Eigen::Index r = 0; r < f.q.A.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < f.q.A.cols(); ++c) row.push_back(complex_to_json(f.q.A(r, c)));
    A.push_back(std::move(row));
  }
  nlohmann::json b = nlohmann::json::array();
  for (Eigen::Index d = 0; d < f.q.b.size(); ++d) b.push_back(complex_to_json(f.q.b[d]));
  return nlohmann::json{{"n", f.dim()},
                        {"scale", complex_to_json(f.scale)},
                        {"prefactor", f.prefactor.exponents()},
                        {"A", std::move(A)},
                        {"b", std::move(b)},
                        {"c0", complex_to_json(f.q.c0)}};
}

ExponentialSymbol symbol_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("symbol json: top level must be an object");
  if (!j.contains("n")) throw ParseError("symbol json: missing required field 'n'");
  int n = 0;
  try {
    n = j.at("n").get<int>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("symbol json: field 'n' must be an integer");
  }
  if (n < 1) throw ParseError("symbol json: 'n' must be >= 1");

  ExponentialSymbol f(n);
  if (j.contains("scale")) f.scale = complex_from_json(j.at("scale"), "scale");
  if (j.contains("c0")) f.q.c0 = complex_from_json(j.at("c0"), "c0");

  if (j.contains("prefactor")) {
    const auto& p = j.at("prefactor");
    if (!p.is_array() || static_cast<int>(p.size()) != n) {
      throw ParseError("symbol json: 'prefactor' must be an array of n integers");
    }
    std::vector<int> exps(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
      const auto& cell = p[static_cast<std::size_t>(d)];
      if (!cell.is_number_integer() || cell.get<int>() < 0) {
        throw ParseError("symbol json: 'prefactor' entries must be integers >= 0");
      }
      exps[static_cast<std::size_t>(d)] = cell.get<int>();
    }
    f.prefactor = MultiIndex(std::move(exps));
  }

  if (j.contains("b")) {
    const auto& b = j.at("b");
    if (!b.is_array() || static_cast<int>(b.size()) != n) {
      throw ParseError("symbol json: 'b' must be an array of n complex values");
    }
    for (int d = 0; d < n; ++d) f.q.b[d] = complex_from_json(b[static_cast<std::size_t>(d)], "b");
  }

  if (j.contains("A")) {
    const auto& A = j.at("A");
    if (!A.is_array() || static_cast<int>(A.size()) != n) {
      throw ParseError("symbol json: 'A' must be an n x n array of complex values");
    }
    Eigen::MatrixXcd mat(n, n);
    for (int r = 0; r < n; ++r) {
      const auto& row = A[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw ParseError("symbol json: 'A' must be an n x n array of complex values");
      }
      for (int c = 0; c < n; ++c) {
        mat(r, c) = complex_from_json(row[static_cast<std::size_t>(c)], "A");
      }
    }
    f.q = QuadraticPolynomial(mat, f.q.b, f.q.c0);  // symmetrizes
  }
  return f;
}

ExponentialSymbol parse_symbol(const std::string& text) {
  std::string payload = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream is(text.substr(1));
    if (!is) throw ParseError("symbol: cannot open file '" + text.substr(1) + "'");
    std::ostringstream buf;
    buf << is.rdbuf();
    payload = buf.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(payload);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("symbol: ") + e.what());
  }
  return symbol_from_json(j);
}

}  // namespace fock
