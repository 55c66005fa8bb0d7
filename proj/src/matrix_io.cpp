#include "fock/matrix_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "fock/errors.hpp"

namespace fock {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view s, const char* what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ParseError(std::string("matrix csv: bad ") + what + " field '" + std::string(s) + "'");
  }
  return v;
}

long parse_long(std::string_view s, const char* what) {
  long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || v < 0) {
    throw ParseError(std::string("matrix csv: bad ") + what + " field '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Analytic: return "analytic";
    case Provenance::Coanalytic: return "coanalytic";
    case Provenance::Product: return "product";
    case Provenance::Translation: return "translation";
    case Provenance::Composition: return "composition";
  }
  return "composition";
}

Provenance provenance_from_name(const std::string& name) {
  if (name == "analytic") return Provenance::Analytic;
  if (name == "coanalytic") return Provenance::Coanalytic;
  if (name == "product") return Provenance::Product;
  if (name == "translation") return Provenance::Translation;
  if (name == "composition") return Provenance::Composition;
  throw ParseError("unknown provenance '" + name + "'");
}

void write_matrix_csv(const TruncatedOperator& op, std::ostream& os) {
  os << "row,col,re,im\n";
  for (Eigen::Index r = 0; r < op.entries.rows(); ++r) {
    for (Eigen::Index c = 0; c < op.entries.cols(); ++c) {
      const cplx v = op.entries(r, c);
      os << r << ',' << c << ',' << format_double(v.real()) << ',' << format_double(v.imag())
         << '\n';
    }
  }
}

Eigen::MatrixXcd read_matrix_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("matrix csv: empty input");
  if (line != "row,col,re,im") throw ParseError("matrix csv: bad header '" + line + "'");

  struct Item {
    long r, c;
    cplx v;
  };
  std::vector<Item> items;
  long max_index = -1;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string_view sv{line};
    std::array<std::string_view, 4> field;
    for (int f = 0; f < 4; ++f) {
      const std::size_t comma = sv.find(',');
      if (f < 3 && comma == std::string_view::npos) {
        throw ParseError("matrix csv: line " + std::to_string(lineno) + " has too few fields");
      }
      field[static_cast<std::size_t>(f)] = f < 3 ? sv.substr(0, comma) : sv;
      if (f < 3) sv.remove_prefix(comma + 1);
    }
    if (field[3].find(',') != std::string_view::npos) {
      throw ParseError("matrix csv: line " + std::to_string(lineno) + " has too many fields");
    }
    Item it;
    it.r = parse_long(field[0], "row");
    it.c = parse_long(field[1], "col");
    it.v = cplx{parse_double(field[2], "re"), parse_double(field[3], "im")};
    max_index = std::max({max_index, it.r, it.c});
    items.push_back(it);
  }
  if (items.empty()) throw ParseError("matrix csv: no entries");
  const Eigen::Index size = static_cast<Eigen::Index>(max_index + 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
  for (const Item& it : items) m(it.r, it.c) = it.v;
  return m;
}

nlohmann::json operator_to_json(const TruncatedOperator& op) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < op.entries.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < op.entries.cols(); ++c) {
      row.push_back({op.entries(r, c).real(), op.entries(r, c).imag()});
    }
    entries.push_back(std::move(row));
  }
  return nlohmann::json{{"spec", {{"n", op.spec.n}, {"alpha", op.spec.alpha}, {"M", op.spec.M}}},
                        {"provenance", provenance_name(op.provenance)},
                        {"entries", std::move(entries)}};
}

TruncatedOperator operator_from_json(const nlohmann::json& j) {
  try {
    TruncatedOperator op;
    const auto& spec = j.at("spec");
    op.spec.n = spec.at("n").get<int>();
    op.spec.alpha = spec.at("alpha").get<double>();
    op.spec.M = spec.at("M").get<int>();
    op.spec.validate();
    op.provenance = provenance_from_name(j.at("provenance").get<std::string>());
    const auto& entries = j.at("entries");
    const Eigen::Index rows = static_cast<Eigen::Index>(entries.size());
    const Eigen::Index expect = static_cast<Eigen::Index>(op.spec.size());
    if (rows != expect) {
      throw ParseError("operator json: entry grid does not match the declared section size");
    }
    op.entries.resize(rows, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const auto& row = entries.at(static_cast<std::size_t>(r));
      if (static_cast<Eigen::Index>(row.size()) != rows) {
        throw ParseError("operator json: ragged entry grid");
      }
      for (Eigen::Index c = 0; c < rows; ++c) {
        const auto& cell = row.at(static_cast<std::size_t>(c));
        op.entries(r, c) = cplx{cell.at(0).get<double>(), cell.at(1).get<double>()};
      }
    }
    return op;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("operator json: ") + e.what());
  }
}

void save_matrix_csv(const TruncatedOperator& op, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw FockError("cannot open '" + path + "' for writing");
  write_matrix_csv(op, os);
}

void save_operator_json(const TruncatedOperator& op, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw FockError("cannot open '" + path + "' for writing");
  os << operator_to_json(op).dump(2) << '\n';
}

TruncatedOperator load_operator_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw FockError("cannot open '" + path + "' for reading");
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("operator json: ") + e.what());
  }
  return operator_from_json(j);
}

}  // namespace fock
