#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fock/errors.hpp"
#include "fock/matrix_io.hpp"
#include "fock/operators.hpp"
#include "fock/symbol.hpp"
#include "fock/symbol_io.hpp"

using namespace fock;

namespace {

// Bitwise equality that distinguishes -0.0 from 0.0 and treats each NaN
// pattern as itself.
bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool same_matrix_bits(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (!same_bits(A(i, j).real(), B(i, j).real())) return false;
      if (!same_bits(A(i, j).imag(), B(i, j).imag())) return false;
    }
  }
  return true;
}

TruncatedOperator messy_operator() {
  const auto [f, g] = translation_pair(point1(cplx{0.7, 0.2}), 1.0);
  return product_compression(f, g, BasisSpec{1, 1.0, 8});
}

}  // namespace

TEST_CASE("shortest round-trip formatting") {
  for (const double v : {0.1, 3.141592653589793, 5e-324, -0.0, 1.0 / 3.0, -1e308}) {
    const std::string s = format_double(v);
    double back = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), back);
    REQUIRE(res.ec == std::errc{});
    CHECK(same_bits(back, v));
  }
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.0) == "-0");
  CHECK(format_double(0.25) == "0.25");
}

TEST_CASE("CSV round-trips entries bit for bit") {
  const TruncatedOperator op = messy_operator();
  std::ostringstream out;
  write_matrix_csv(op, out);
  std::istringstream in(out.str());
  const Eigen::MatrixXcd back = read_matrix_csv(in);
  CHECK(same_matrix_bits(back, op.entries));
  // Header is first, one line per entry.
  CHECK(out.str().rfind("row,col,re,im\n", 0) == 0);
}

TEST_CASE("CSV reader rejects malformed input") {
  const auto read = [](const std::string& text) {
    std::istringstream in(text);
    return read_matrix_csv(in);
  };
  CHECK_THROWS_AS(read("row;col;re;im\n0,0,1,0\n"), ParseError);
  CHECK_THROWS_AS(read("row,col,re,im\n0,0,1\n"), ParseError);
  CHECK_THROWS_AS(read("row,col,re,im\n0,0,1,0,9\n"), ParseError);
  CHECK_THROWS_AS(read("row,col,re,im\n0,zero,1,0\n"), ParseError);
  CHECK_THROWS_AS(read("row,col,re,im\n0,0,one,0\n"), ParseError);
  CHECK_THROWS_AS(read("row,col,re,im\n-1,0,1,0\n"), ParseError);
  CHECK_THROWS_AS(read(""), ParseError);
  CHECK_THROWS_AS(read("row,col,re,im\n"), ParseError);
}

TEST_CASE("JSON operator envelope round-trips") {
  const TruncatedOperator op = messy_operator();
  const nlohmann::json j = operator_to_json(op);
  const TruncatedOperator back = operator_from_json(j);
  CHECK(back.spec.n == op.spec.n);
  CHECK(same_bits(back.spec.alpha, op.spec.alpha));
  CHECK(back.spec.M == op.spec.M);
  CHECK(back.provenance == op.provenance);
  CHECK(same_matrix_bits(back.entries, op.entries));
  // The dump itself is deterministic.
  CHECK(j.dump() == operator_to_json(op).dump());
}

TEST_CASE("JSON operator envelope rejects inconsistent payloads") {
  nlohmann::json j = operator_to_json(messy_operator());
  nlohmann::json wrong_size = j;
  wrong_size["spec"]["M"] = 9;  // grid no longer matches the basis size
  CHECK_THROWS_AS(operator_from_json(wrong_size), ParseError);

  nlohmann::json ragged = j;
  ragged["entries"][2].erase(0);
  CHECK_THROWS_AS(operator_from_json(ragged), ParseError);

  nlohmann::json bad_prov = j;
  bad_prov["provenance"] = "mystery";
  CHECK_THROWS_AS(operator_from_json(bad_prov), ParseError);

  nlohmann::json missing = j;
  missing.erase("entries");
  CHECK_THROWS_AS(operator_from_json(missing), ParseError);

  CHECK_THROWS_AS(operator_from_json(nlohmann::json::parse("[1,2,3]")), ParseError);
}

TEST_CASE("provenance names are stable and invertible") {
  for (const Provenance p : {Provenance::Analytic, Provenance::Coanalytic, Provenance::Product,
                             Provenance::Translation, Provenance::Composition}) {
    CHECK(provenance_from_name(provenance_name(p)) == p);
  }
  CHECK(provenance_name(Provenance::Product) == "product");
  CHECK_THROWS_AS(provenance_from_name("unheard-of"), ParseError);
}

TEST_CASE("file wrappers") {
  const TruncatedOperator op = messy_operator();
  const std::string json_path = "io_test_op.json";
  const std::string csv_path = "io_test_op.csv";
  save_operator_json(op, json_path);
  const TruncatedOperator back = load_operator_json(json_path);
  CHECK(same_matrix_bits(back.entries, op.entries));
  save_matrix_csv(op, csv_path);
  std::ifstream csv(csv_path);
  REQUIRE(csv.good());
  const Eigen::MatrixXcd grid = read_matrix_csv(csv);
  CHECK(same_matrix_bits(grid, op.entries));
  std::remove(json_path.c_str());
  std::remove(csv_path.c_str());
  CHECK_THROWS_AS(load_operator_json("no/such/file.json"), FockError);
}

TEST_CASE("symbol JSON round-trips every field") {
  Eigen::MatrixXcd A(2, 2);
  A << cplx{0.1, -0.2}, cplx{0.0, 0.3}, cplx{0.0, 0.3}, cplx{-0.4, 0.0};
  ExponentialSymbol f(cplx{1.25, -3.5}, MultiIndex({2, 0}),
                      QuadraticPolynomial(A, make_point({cplx{0.5, 0.0}, cplx{0.0, -1.0}}),
                                          cplx{0.1, 0.7}));
  const ExponentialSymbol back = symbol_from_json(symbol_to_json(f));
  CHECK(back.scale == f.scale);
  CHECK(back.prefactor == f.prefactor);
  CHECK(back.q.c0 == f.q.c0);
  CHECK((back.q.b - f.q.b).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.q.A - f.q.A).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("symbol JSON defaults: only the dimension is required") {
  const ExponentialSymbol f = symbol_from_json(nlohmann::json::parse(R"({"n": 3})"));
  CHECK(f.dim() == 3);
  CHECK(f.scale == cplx{1.0, 0.0});
  CHECK(f.prefactor.degree() == 0);
  CHECK(f.q.quadratic_part_zero());
  CHECK(f.q.linear_part_zero());
  CHECK(f.q.c0 == cplx{0.0, 0.0});
  // Plain numbers are accepted wherever a complex value goes.
  const ExponentialSymbol g =
      symbol_from_json(nlohmann::json::parse(R"({"n": 1, "scale": 2.5, "c0": -1})"));
  CHECK(g.scale == cplx{2.5, 0.0});
  CHECK(g.q.c0 == cplx{-1.0, 0.0});
}

TEST_CASE("symbol JSON rejects malformed payloads") {
  const auto parse = [](const char* text) { return symbol_from_json(nlohmann::json::parse(text)); };
  CHECK_THROWS_AS(parse(R"({})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 0})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n": -2})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "b": [[0, 0], [1, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 2, "A": [[0, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "prefactor": [-1]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "prefactor": [0, 0]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "scale": [1, 2, 3]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "scale": "big"})"), ParseError);
}

TEST_CASE("symbol JSON symmetrizes a lopsided quadratic matrix") {
  const ExponentialSymbol f = symbol_from_json(
      nlohmann::json::parse(R"({"n": 2, "A": [[0, [1, 0]], [0, 0]]})"));
  CHECK(f.q.A(0, 1) == cplx{0.5, 0.0});
  CHECK(f.q.A(1, 0) == cplx{0.5, 0.0});
}

TEST_CASE("parse_symbol handles inline text and @file indirection") {
  const ExponentialSymbol inline_sym = parse_symbol(R"({"n": 1, "b": [[1, 0]]})");
  CHECK(inline_sym.q.b[0] == cplx{1.0, 0.0});

  const std::string path = "io_test_symbol.json";
  {
    std::ofstream out(path);
    out << R"({"n": 2, "scale": [0, 1]})";
  }
  const ExponentialSymbol from_file = parse_symbol("@" + path);
  CHECK(from_file.dim() == 2);
  CHECK(from_file.scale == cplx{0.0, 1.0});
  std::remove(path.c_str());

  CHECK_THROWS_AS(parse_symbol("@io_test_missing.json"), ParseError);
  CHECK_THROWS_AS(parse_symbol("{not json"), ParseError);
  CHECK_THROWS_AS(parse_symbol(""), ParseError);
}
