#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fock/errors.hpp"
#include "fock/experiments.hpp"
#include "fock/symbol_io.hpp"

namespace {

using fock::cplx;
using fock::ComplexPoint;

// "1", "-0.5i", "0.7+0.2i", "i", "1e-3-2e+1i" ...
cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw fock::ParseError("complex literal: empty string");

  // Split before the sign of the imaginary part (a +/- that is neither the
  // leading sign nor an exponent sign).
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  }

  auto parse_part = [&](std::string part, bool imag_unit_ok) -> double {
    bool negative = false;
    if (!part.empty() && (part.front() == '+' || part.front() == '-')) {
      negative = part.front() == '-';
      part.erase(part.begin());
    }
    if (imag_unit_ok && (part == "i" || part == "I")) return negative ? -1.0 : 1.0;
    if (imag_unit_ok) {
      if (part.empty() || (part.back() != 'i' && part.back() != 'I')) {
        throw fock::ParseError("complex literal '" + raw + "': imaginary part must end in i");
      }
      part.pop_back();
    }
    try {
      std::size_t used = 0;
      const double v = std::stod(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      return negative ? -v : v;
    } catch (const std::exception&) {
      throw fock::ParseError("complex literal '" + raw + "': bad number '" + part + "'");
    }
  };

  if (split == std::string::npos) {
    const bool imaginary = s.back() == 'i' || s.back() == 'I';
    return imaginary ? cplx{0.0, parse_part(s, true)} : cplx{parse_part(s, false), 0.0};
  }
  return cplx{parse_part(s.substr(0, split), false), parse_part(s.substr(split), true)};
}

ComplexPoint parse_point(const std::string& raw) {
  std::vector<cplx> vals;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = raw.find(',', start);
    vals.push_back(parse_complex(raw.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  ComplexPoint z(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) z[static_cast<Eigen::Index>(i)] = vals[i];
  return z;
}

std::vector<int> parse_int_list(const std::string& raw) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = raw.find(',', start);
    out.push_back(std::stoi(raw.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Either a single complex literal (1 x 1) or a JSON matrix of complex cells.
Eigen::MatrixXcd parse_matrix(const std::string& raw) {
  std::string s = raw;
  const std::size_t first = s.find_first_not_of(" \t");
  if (first != std::string::npos && s[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
      throw fock::ParseError(std::string("matrix literal: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw fock::ParseError("matrix literal: expected rows");
    const int n = static_cast<int>(j.size());
    Eigen::MatrixXcd A(n, n);
    for (int r = 0; r < n; ++r) {
      const auto& row = j.at(static_cast<std::size_t>(r));
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw fock::ParseError("matrix literal: must be square");
      }
      for (int c = 0; c < n; ++c) {
        const auto& cell = row.at(static_cast<std::size_t>(c));
        if (cell.is_number()) {
          A(r, c) = cplx{cell.get<double>(), 0.0};
        } else if (cell.is_array() && cell.size() == 2) {
          A(r, c) = cplx{cell.at(0).get<double>(), cell.at(1).get<double>()};
        } else {
          throw fock::ParseError("matrix literal: cells must be numbers or [re, im]");
        }
      }
    }
    return A;
  }
  Eigen::MatrixXcd A(1, 1);
  A(0, 0) = parse_complex(raw);
  return A;
}

void emit(const fock::ExperimentReport& rep, const std::string& out_path,
          const std::string& format) {
  std::string payload;
  if (format == "json") {
    payload = fock::report_json(rep).dump(2) + "\n";
  } else if (format == "csv") {
    payload = fock::report_csv(rep);
  } else {
    throw fock::ParseError("unknown format '" + format + "' (expected json or csv)");
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
  } else {
    std::ofstream os(out_path);
    if (!os) throw fock::FockError("cannot open '" + out_path + "' for writing");
    os << payload;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-section toolkit for products of Toeplitz operators on weighted spaces of entire functions"};
  app.require_subcommand(1);
  app.fallthrough();

  double alpha = 1.0;
  int dim = 1;
  int trunc = 40;
  int order = 40;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "json";
  app.add_option("--alpha", alpha, "Gaussian weight parameter")->capture_default_str();
  app.add_option("--dim", dim, "complex dimension n")->capture_default_str();
  app.add_option("--trunc", trunc, "truncation degree M")->capture_default_str();
  app.add_option("--order", order, "quadrature points per axis")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized searches")->capture_default_str();
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--format", format, "output format: json or csv")->capture_default_str();

  std::string f_text, g_text, a_text, acoeff_text, A_text;
  std::string u_text = "1", v_text = "1";
  std::string trunc_list_text = "10,20,30,40";
  int grid = 21;
  double radius = 2.0;
  double rmin = 0.0, rmax = 20.0;
  int rpoints = 41;

  CLI::App* classify =
      app.add_subcommand("classify", "decide boundedness of the product with symbols (f, conj(g))");
  classify->add_option("--f", f_text, "analytic symbol (JSON or @file)")->required();
  classify->add_option("--g", g_text, "symbol to conjugate (JSON or @file)")->required();

  CLI::App* translation = app.add_subcommand(
      "translation-identity", "compare the product section against the scaled translation unitary");
  translation->add_option("--a", a_text, "translation point (comma-separated complex literals)")
      ->required();

  CLI::App* dichotomy = app.add_subcommand(
      "dichotomy", "norm blow-up vs unimodular Berezin transform for the quadratic pair");
  dichotomy->add_option("--acoeff", acoeff_text, "quadratic coefficient a in e^{a z^2}")->required();
  dichotomy->add_option("--trunc-list", trunc_list_text, "cutoff degrees")->capture_default_str();
  dichotomy->add_option("--grid", grid, "Berezin grid points per axis")->capture_default_str();
  dichotomy->add_option("--radius", radius, "Berezin grid radius")->capture_default_str();

  CLI::App* growth = app.add_subcommand(
      "kernel-growth", "least-squares slope of the product-kernel log-modulus along a ray");
  growth->add_option("--A", A_text, "quadratic coefficient matrix (complex literal or JSON)")
      ->required();
  growth->add_option("--u", u_text, "ray direction")->capture_default_str();
  growth->add_option("--v", v_text, "offset direction")->capture_default_str();
  growth->add_option("--rmin", rmin, "smallest radius")->capture_default_str();
  growth->add_option("--rmax", rmax, "largest radius")->capture_default_str();
  growth->add_option("--rpoints", rpoints, "number of radii")->capture_default_str();

  CLI::App* selftest =
      app.add_subcommand("selftest", "cross-check the independent computation routes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help/error text
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    fock::ExperimentReport rep;

    if (*classify) {
      const fock::ExponentialSymbol f = fock::parse_symbol(f_text);
      const fock::ExponentialSymbol g = fock::parse_symbol(g_text);
      if (app.count("--dim") && (f.dim() != dim || g.dim() != dim)) {
        throw fock::DimensionMismatch("classify: symbols do not match --dim");
      }
      rep = fock::classify_experiment(f, g, alpha, seed);
    } else if (*translation) {
      const ComplexPoint a = parse_point(a_text);
      if (app.count("--dim") && a.size() != dim) {
        throw fock::DimensionMismatch("translation-identity: point does not match --dim");
      }
      rep = fock::translation_identity_experiment(a, alpha, trunc);
    } else if (*dichotomy) {
      rep = fock::quadratic_dichotomy_experiment(parse_complex(acoeff_text), alpha,
                                                 parse_int_list(trunc_list_text), grid, radius);
    } else if (*growth) {
      const Eigen::MatrixXcd A = parse_matrix(A_text);
      rep = fock::kernel_growth_experiment(A, parse_point(u_text), parse_point(v_text), alpha,
                                           rmin, rmax, rpoints);
    } else if (*selftest) {
      rep = fock::selftest_experiment(order);
    }

    const auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::fprintf(stderr, "# wall_ms=%.3f\n", rep.wall_ms);

    emit(rep, out_path, format);
    return rep.pass ? 0 : 1;
  } catch (const fock::FockError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
