#include "fock/experiments.hpp"

#include <cmath>
#include <sstream>

#include "fock/basis.hpp"
#include "fock/matrix_io.hpp"
#include "fock/quadrature.hpp"
#include "fock/symbol_io.hpp"

namespace fock {

namespace {

nlohmann::json complex_json(const cplx& v) { return {v.real(), v.imag()}; }

nlohmann::json point_json(const ComplexPoint& z) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index d = 0; d < z.size(); ++d) out.push_back(complex_json(z[d]));
  return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// RFC-4180 quoting for cells that would break the comma structure.
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

nlohmann::json report_json(const ExperimentReport& rep) {
  return nlohmann::json{{"command", rep.name},
                        {"input", rep.input},
                        {"result", rep.result},
                        {"tolerance", rep.tolerance},
                        {"pass", rep.pass}};
}

ExperimentReport classify_experiment(const ExponentialSymbol& f, const ExponentialSymbol& g,
                                     double alpha, std::uint64_t seed) {
  ExperimentReport rep;
  rep.name = "classify";
  rep.input = {{"alpha", alpha},
               {"seed", seed},
               {"f", symbol_to_json(f)},
               {"g", symbol_to_json(g)}};
  const BoundednessVerdict v = classify_product(f, g, alpha, seed);
  rep.result = {{"tag", verdict_tag_name(v.tag)}};
  switch (v.tag) {
    case BoundednessVerdict::Tag::BoundedUnitaryMultiple:
      rep.result["gamma"] = complex_json(v.gamma);
      rep.result["gamma_abs"] = std::abs(v.gamma);
      rep.result["a"] = point_json(v.a);
      break;
    case BoundednessVerdict::Tag::UnboundedQuadratic:
      rep.result["witness_u"] = point_json(v.witness_u);
      rep.result["witness_v"] = point_json(v.witness_v);
      rep.result["witness_value"] = v.witness_value;
      break;
    default:
      break;
  }
  rep.result["bounded"] = v.tag == BoundednessVerdict::Tag::ZeroOperator ||
                          v.tag == BoundednessVerdict::Tag::BoundedUnitaryMultiple;
  return rep;
}

ExperimentReport translation_identity_experiment(const ComplexPoint& a, double alpha, int M) {
  ExperimentReport rep;
  rep.name = "translation-identity";
  rep.input = {{"a", point_json(a)}, {"alpha", alpha}, {"M", M}};

  const BasisSpec spec{static_cast<int>(a.size()), alpha, M};
  const auto [f, g] = translation_pair(a, alpha);
  const TruncatedOperator P = product_compression(f, g, spec);
  const TruncatedOperator U = translation_unitary(a, spec);
  const double gamma = std::exp(0.5 * alpha * abs2(a));

  const double entry_dev = (P.entries - gamma * U.entries).cwiseAbs().maxCoeff();
  const double norm = operator_norm(P);
  const double norm_dev = std::abs(norm - gamma);

  const double entry_tol = 1e-8;
  const double norm_tol = 1e-6;
  rep.tolerance = entry_tol;
  rep.pass = entry_dev <= entry_tol && norm_dev <= norm_tol;
  rep.result = {{"gamma", gamma},
                {"max_entry_deviation", entry_dev},
                {"entry_tolerance", entry_tol},
                {"norm", norm},
                {"norm_deviation", norm_dev},
                {"norm_tolerance", norm_tol}};
  return rep;
}

ExperimentReport quadratic_dichotomy_experiment(cplx a_coeff, double alpha,
                                                const std::vector<int>& M_list, int grid_points,
                                                double grid_radius) {
  if (grid_points < 1) throw std::invalid_argument("dichotomy: grid_points must be >= 1");
  if (!(grid_radius > 0.0)) throw std::invalid_argument("dichotomy: grid_radius must be > 0");

  ExperimentReport rep;
  rep.name = "dichotomy";
  rep.input = {{"a_coeff", complex_json(a_coeff)},
               {"alpha", alpha},
               {"M_list", M_list},
               {"grid_points", grid_points},
               {"grid_radius", grid_radius}};

  Eigen::MatrixXcd A(1, 1);
  A(0, 0) = a_coeff;
  const ExponentialSymbol f = ExponentialSymbol::exp_quadratic(A);
  const ExponentialSymbol g = ExponentialSymbol::exp_quadratic(-A);
  if (!fock_membership(f, alpha) || !fock_membership(g, alpha)) {
    throw HypothesisViolation("dichotomy: |a| must be < alpha/2 for the symbols to be admissible");
  }

  const auto curve = norm_curve(f, g, alpha, 1, M_list);
  bool increasing = true;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (!(curve[i].second > curve[i - 1].second)) increasing = false;
  }
  const double first = curve.front().second;
  const double last = curve.back().second;

  // |Berezin| == 1 across the grid no matter how the norms blow up.
  const BasisSpec spec{1, alpha, M_list.back()};
  const TruncatedOperator P = product_compression(f, g, spec);
  double berezin_dev = 0.0;
  for (int iy = 0; iy < grid_points; ++iy) {
    for (int ix = 0; ix < grid_points; ++ix) {
      const double x =
          grid_points == 1 ? 0.0 : -grid_radius + 2.0 * grid_radius * ix / (grid_points - 1);
      const double y =
          grid_points == 1 ? 0.0 : -grid_radius + 2.0 * grid_radius * iy / (grid_points - 1);
      if (x * x + y * y > grid_radius * grid_radius + 1e-12) continue;
      const cplx b = berezin_numeric(P, point1(cplx{x, y}));
      berezin_dev = std::max(berezin_dev, std::abs(std::abs(b) - 1.0));
    }
  }

  const double berezin_tol = 1e-6;
  const bool zero_coeff = a_coeff == cplx{0.0, 0.0};
  double curve_spread = 0.0;
  for (const auto& [M, nv] : curve) curve_spread = std::max(curve_spread, std::abs(nv - first));
  const bool curve_ok = zero_coeff ? curve_spread <= 1e-9 * std::max(1.0, first) : increasing;

  nlohmann::json curve_json = nlohmann::json::array();
  for (const auto& [M, nv] : curve) curve_json.push_back({M, nv});
  rep.tolerance = berezin_tol;
  rep.pass = curve_ok && berezin_dev <= berezin_tol;
  rep.result = {{"curve", std::move(curve_json)},
                {"strictly_increasing", increasing},
                {"ratio_last_first", last / first},
                {"berezin_max_deviation", berezin_dev},
                {"berezin_tolerance", berezin_tol}};
  return rep;
}

ExperimentReport kernel_growth_experiment(const Eigen::MatrixXcd& A, const ComplexPoint& u,
                                          const ComplexPoint& v, double alpha, double r_min,
                                          double r_max, int r_points) {
  if (r_points < 2) throw std::invalid_argument("kernel-growth: need at least 2 sample radii");
  if (!(r_max > r_min)) throw std::invalid_argument("kernel-growth: r_max must exceed r_min");
  const int n = static_cast<int>(u.size());
  if (A.rows() != n || A.cols() != n || v.size() != n) {
    throw DimensionMismatch("kernel-growth: A, u, v dimensions disagree");
  }

  const ExponentialSymbol f = ExponentialSymbol::exp_quadratic(A);
  const ExponentialSymbol g = ExponentialSymbol::exp_quadratic(-A);
  // A was symmetrized inside the symbol; quote the effective slope.
  const double slope_expected = 2.0 * std::real(bilinear_dot(u, f.q.A * v));

  std::vector<double> rs(static_cast<std::size_t>(r_points));
  std::vector<double> ys(static_cast<std::size_t>(r_points));
  for (int i = 0; i < r_points; ++i) {
    const double r = r_min + (r_max - r_min) * i / (r_points - 1);
    rs[static_cast<std::size_t>(i)] = r;
    const ComplexPoint z = r * u;
    const ComplexPoint w = r * u + v;
    ys[static_cast<std::size_t>(i)] = log_abs_product_kernel(f, g, z, w, alpha);
  }

  double r_mean = 0.0, y_mean = 0.0;
  for (int i = 0; i < r_points; ++i) {
    r_mean += rs[static_cast<std::size_t>(i)];
    y_mean += ys[static_cast<std::size_t>(i)];
  }
  r_mean /= r_points;
  y_mean /= r_points;
  double sxy = 0.0, sxx = 0.0;
  for (int i = 0; i < r_points; ++i) {
    const double dx = rs[static_cast<std::size_t>(i)] - r_mean;
    sxy += dx * (ys[static_cast<std::size_t>(i)] - y_mean);
    sxx += dx * dx;
  }
  const double slope_fit = sxy / sxx;
  const double dev = std::abs(slope_fit - slope_expected);

  ExperimentReport rep;
  rep.name = "kernel-growth";
  rep.input = {{"A", symbol_to_json(f)["A"]},
               {"u", point_json(u)},
               {"v", point_json(v)},
               {"alpha", alpha},
               {"r_min", r_min},
               {"r_max", r_max},
               {"r_points", r_points}};
  rep.tolerance = 1e-9;
  rep.pass = dev <= rep.tolerance;
  rep.result = {{"r", rs},
                {"log_abs_kernel", ys},
                {"slope_fit", slope_fit},
                {"slope_expected", slope_expected},
                {"slope_deviation", dev}};
  return rep;
}

namespace {

struct SelfTestCheck {
  std::string name;
  double measured;
  double tolerance;
  bool pass;
};

SelfTestCheck make_check(std::string name, double measured, double tol) {
  const bool ok = measured <= tol;
  return {std::move(name), measured, tol, ok};
}

}  // namespace

ExperimentReport selftest_experiment(int order) {
  const double alpha = 1.0;
  std::vector<SelfTestCheck> checks;

  {  // The quadrature route reproduces orthonormality of the basis monomials.
    double dev = 0.0;
    for (int j = 0; j <= 8; ++j) {
      for (int k = 0; k <= 8; ++k) {
        const MultiIndex mj({j}), mk({k});
        auto ej = [&](const ComplexPoint& z) { return basis_monomial_value(z, mj, alpha); };
        auto ek = [&](const ComplexPoint& z) { return basis_monomial_value(z, mk, alpha); };
        const cplx ip = gaussian_inner(ek, ej, 1, alpha, order);
        dev = std::max(dev, std::abs(ip - (j == k ? cplx{1.0, 0.0} : cplx{0.0, 0.0})));
      }
    }
    checks.push_back(make_check("quadrature-orthonormality", dev, 1e-8));
  }

  {  // Series-built analytic sections match the quadrature oracle.
    const std::vector<ExponentialSymbol> symbols = {
        ExponentialSymbol::constant(cplx{1.0, 0.0}, 1),
        ExponentialSymbol::monomial(MultiIndex({1})),
        ExponentialSymbol::exp_linear(point1(cplx{1.0, 0.0})),
    };
    const BasisSpec spec{1, alpha, 6};
    const BasisIndexMap map{spec};
    double dev = 0.0;
    for (const auto& f : symbols) {
      const TruncatedOperator T = toeplitz_analytic(f, spec);
      for (int j = 0; j < map.size(); ++j) {
        for (int k = 0; k < map.size(); ++k) {
          const cplx o = oracle_entry(f, false, map.indices()[static_cast<std::size_t>(j)],
                                      map.indices()[static_cast<std::size_t>(k)], alpha, order);
          dev = std::max(dev, std::abs(T.entries(j, k) - o));
        }
      }
    }
    checks.push_back(make_check("analytic-entries-vs-quadrature", dev, 1e-8));
  }

  {  // Adjoint sections match the conjugated-symbol oracle.
    const ExponentialSymbol g = ExponentialSymbol::exp_linear(point1(cplx{1.0, 0.0}));
    const BasisSpec spec{1, alpha, 6};
    const BasisIndexMap map{spec};
    const TruncatedOperator T = toeplitz_coanalytic(g, spec);
    double dev = 0.0;
    for (int j = 0; j < map.size(); ++j) {
      for (int k = 0; k < map.size(); ++k) {
        const cplx o = oracle_entry(g, true, map.indices()[static_cast<std::size_t>(j)],
                                    map.indices()[static_cast<std::size_t>(k)], alpha, order);
        dev = std::max(dev, std::abs(T.entries(j, k) - o));
      }
    }
    checks.push_back(make_check("adjoint-entries-vs-quadrature", dev, 1e-8));
  }

  {  // Product sections reproduce the scaled translation unitary.
    double dev = 0.0;
    for (const cplx av : {cplx{1.0, 0.0}, cplx{0.7, 0.2}}) {
      const ComplexPoint a = point1(av);
      const BasisSpec spec{1, alpha, 30};
      const auto [f, g] = translation_pair(a, alpha);
      const TruncatedOperator P = product_compression(f, g, spec);
      const TruncatedOperator U = translation_unitary(a, spec);
      const double gamma = std::exp(0.5 * alpha * abs2(a));
      dev = std::max(dev, (P.entries - gamma * U.entries).cwiseAbs().maxCoeff());
    }
    checks.push_back(make_check("translation-identity", dev, 1e-8));
  }

  {  // Numerical Berezin values agree with the symbol-level transform.
    const BasisSpec spec{1, alpha, 30};
    double dev = 0.0;
    {
      const auto [f, g] = translation_pair(point1(cplx{0.8, 0.0}), alpha);
      const TruncatedOperator P = product_compression(f, g, spec);
      for (const cplx zv : {cplx{0.3, 0.1}, cplx{-0.5, 0.0}}) {
        const ComplexPoint z = point1(zv);
        dev = std::max(dev, std::abs(berezin_numeric(P, z) - berezin_symbolic(f, g, z)));
      }
    }
    {
      Eigen::MatrixXcd A(1, 1);
      A(0, 0) = cplx{0.2, 0.0};
      const ExponentialSymbol f = ExponentialSymbol::exp_quadratic(A);
      const ExponentialSymbol g = ExponentialSymbol::exp_quadratic(-A);
      const TruncatedOperator P = product_compression(f, g, spec);
      const cplx b = berezin_numeric(P, point1(cplx{0.5, 0.0}));
      dev = std::max(dev, std::abs(std::abs(b) - 1.0));
    }
    checks.push_back(make_check("berezin-consistency", dev, 1e-6));
  }

  {  // |product kernel| equals its closed-form log-modulus everywhere.
    Eigen::MatrixXcd Af(1, 1), Ag(1, 1);
    Af(0, 0) = cplx{0.2, 0.0};
    Ag(0, 0) = cplx{-0.1, 0.05};
    ExponentialSymbol f(1);
    f.prefactor = MultiIndex({1});
    f.q = QuadraticPolynomial(Af, point1(cplx{0.3, 0.0}), cplx{0.0, 0.0});
    const ExponentialSymbol g = ExponentialSymbol::exp_quadratic(Ag);
    double dev = 0.0;
    for (const auto& [zv, wv] : std::vector<std::pair<cplx, cplx>>{
             {cplx{0.4, -0.3}, cplx{1.2, 0.5}}, {cplx{-1.0, 0.2}, cplx{0.1, 0.1}}}) {
      const ComplexPoint z = point1(zv), w = point1(wv);
      const double direct = std::abs(product_kernel(f, g, z, w, alpha));
      const double via_log = std::exp(log_abs_product_kernel(f, g, z, w, alpha));
      dev = std::max(dev, std::abs(direct - via_log) / std::max(1e-300, via_log));
    }
    checks.push_back(make_check("kernel-modulus-identity", dev, 1e-10));
  }

  {  // Membership flips exactly at the critical quadratic coefficient.
    bool ok = true;
    for (const auto& [coeff, expect] :
         std::vector<std::pair<double, bool>>{{0.49, true}, {0.5, false}, {0.51, false}}) {
      Eigen::MatrixXcd A(1, 1);
      A(0, 0) = cplx{coeff, 0.0};
      ok = ok && (fock_membership(ExponentialSymbol::exp_quadratic(A), alpha) == expect);
    }
    checks.push_back({"membership-boundary", ok ? 0.0 : 1.0, 0.5, ok});
  }

  {  // Normalized kernels are unit vectors in every p-norm.
    double dev = 0.0;
    const ComplexPoint a = point1(cplx{1.0, 0.5});
    const ExponentialSymbol k = ExponentialSymbol::coherent_state(a, alpha);
    for (const double p : {1.0, 2.0, 4.0}) {
      dev = std::max(dev, std::abs(fock_p_norm(k, p, alpha, NormMethod::Quadrature, order) - 1.0));
    }
    checks.push_back(make_check("p-norm-normalized-kernel", dev, 1e-6));
  }

  ExperimentReport rep;
  rep.name = "selftest";
  rep.input = {{"order", order}};
  nlohmann::json rows = nlohmann::json::array();
  bool all = true;
  for (const auto& c : checks) {
    rows.push_back({{"check", c.name},
                    {"measured", c.measured},
                    {"tolerance", c.tolerance},
                    {"pass", c.pass}});
    all = all && c.pass;
  }
  rep.result = {{"checks", std::move(rows)}};
  rep.pass = all;
  rep.tolerance = 0.0;
  return rep;
}

std::string report_csv(const ExperimentReport& rep) {
  std::ostringstream os;
  if (rep.name == "translation-identity") {
    os << "M,gamma,max_entry_deviation,entry_tolerance,norm,norm_deviation,norm_tolerance,pass\n";
    os << rep.input.at("M").get<int>() << ',' << format_double(rep.result.at("gamma").get<double>())
       << ',' << format_double(rep.result.at("max_entry_deviation").get<double>()) << ','
       << format_double(rep.result.at("entry_tolerance").get<double>()) << ','
       << format_double(rep.result.at("norm").get<double>()) << ','
       << format_double(rep.result.at("norm_deviation").get<double>()) << ','
       << format_double(rep.result.at("norm_tolerance").get<double>()) << ',' << bool_str(rep.pass)
       << '\n';
  } else if (rep.name == "dichotomy") {
    os << "M,norm\n";
    for (const auto& pt : rep.result.at("curve")) {
      os << pt.at(0).get<int>() << ',' << format_double(pt.at(1).get<double>()) << '\n';
    }
    os << "# strictly_increasing," << bool_str(rep.result.at("strictly_increasing").get<bool>())
       << '\n';
    os << "# ratio_last_first,"
       << format_double(rep.result.at("ratio_last_first").get<double>()) << '\n';
    os << "# berezin_max_deviation,"
       << format_double(rep.result.at("berezin_max_deviation").get<double>()) << '\n';
    os << "# pass," << bool_str(rep.pass) << '\n';
  } else if (rep.name == "kernel-growth") {
    os << "r,log_abs_kernel\n";
    const auto& rs = rep.result.at("r");
    const auto& ys = rep.result.at("log_abs_kernel");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      os << format_double(rs.at(i).get<double>()) << ','
         << format_double(ys.at(i).get<double>()) << '\n';
    }
    os << "# slope_fit," << format_double(rep.result.at("slope_fit").get<double>()) << '\n';
    os << "# slope_expected," << format_double(rep.result.at("slope_expected").get<double>())
       << '\n';
    os << "# pass," << bool_str(rep.pass) << '\n';
  } else if (rep.name == "selftest") {
    os << "check,measured,tolerance,pass\n";
    for (const auto& c : rep.result.at("checks")) {
      os << c.at("check").get<std::string>() << ','
         << format_double(c.at("measured").get<double>()) << ','
         << format_double(c.at("tolerance").get<double>()) << ','
         << bool_str(c.at("pass").get<bool>()) << '\n';
    }
  } else {
    // classify and anything future: flat key,value table over the result.
    os << "key,value\n";
    for (const auto& [key, value] : rep.result.items()) {
      os << key << ',' << csv_cell(value.dump()) << '\n';
    }
  }
  return os.str();
}

}  // namespace fock
