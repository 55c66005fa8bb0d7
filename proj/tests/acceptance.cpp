// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Tolerances are pinned here on purpose — they are the contract, not knobs.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "fock/basis.hpp"
#include "fock/experiments.hpp"
#include "fock/operators.hpp"
#include "fock/quadrature.hpp"
#include "fock/symbol.hpp"
#include "pair_family.hpp"

using namespace fock;

namespace {

bool g_all_pass = true;

void report(int number, const char* name, bool pass, const std::string& detail) {
  g_all_pass = g_all_pass && pass;
  std::printf("criterion %d %-44s %s (%s)\n", number, name, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

double wall_ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

const std::vector<cplx> kTranslationPoints{cplx{1.0, 0.0}, cplx{0.7, 0.2}, cplx{0.0, -0.5}};

void criterion_1_translation_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  const double alpha = 1.0;
  const int M = 40;
  double worst_entry = 0.0, worst_norm = 0.0;
  for (const cplx av : kTranslationPoints) {
    const ComplexPoint a = point1(av);
    const BasisSpec spec{1, alpha, M};
    const auto [f, g] = translation_pair(a, alpha);
    const TruncatedOperator P = product_compression(f, g, spec);
    const TruncatedOperator U = translation_unitary(a, spec);
    const double gamma = std::exp(0.5 * alpha * abs2(a));
    worst_entry = std::max(worst_entry, (P.entries - gamma * U.entries).cwiseAbs().maxCoeff());
    worst_norm = std::max(worst_norm, std::abs(operator_norm(P) - gamma));
  }
  const double ms = wall_ms_since(t0);
  const bool pass = worst_entry <= 1e-8 && worst_norm <= 1e-6 && ms < 5000.0;
  report(1, "product section = gamma * translation section", pass,
         fmt("max entry dev %.2e <= 1e-8, max norm dev %.2e <= 1e-6, %.0f ms < 5 s", worst_entry,
             worst_norm, ms));
}

void criterion_2_norm_dichotomy() {
  // Frozen golden curve for the coefficient-0.2 quadratic pair, computed with
  // a 40-digit independent evaluation of the section norms.
  const std::vector<std::pair<int, double>> golden{{10, 1.6877699512751180},
                                                   {20, 3.2551655042146406},
                                                   {30, 6.3360968990471771},
                                                   {40, 12.280143390057586}};
  Eigen::MatrixXcd A(1, 1);
  A(0, 0) = cplx{0.2, 0.0};
  const ExponentialSymbol f = ExponentialSymbol::exp_quadratic(A);
  const ExponentialSymbol g = ExponentialSymbol::exp_quadratic((-A).eval());
  const auto curve = norm_curve(f, g, 1.0, 1, {10, 20, 30, 40});

  bool increasing = true;
  double golden_dev = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (i > 0 && !(curve[i].second > curve[i - 1].second)) increasing = false;
    golden_dev = std::max(golden_dev, std::abs(curve[i].second - golden[i].second) /
                                          golden[i].second);
  }
  const double ratio = curve.back().second / curve.front().second;

  const BasisSpec spec{1, 1.0, 40};
  const TruncatedOperator P = product_compression(f, g, spec);
  double berezin_dev = 0.0;
  for (int iy = 0; iy < 21; ++iy) {
    for (int ix = 0; ix < 21; ++ix) {
      const double x = -2.0 + 0.2 * ix;
      const double y = -2.0 + 0.2 * iy;
      if (x * x + y * y > 4.0 + 1e-12) continue;
      const cplx b = berezin_numeric(P, point1(cplx{x, y}));
      berezin_dev = std::max(berezin_dev, std::abs(std::abs(b) - 1.0));
    }
  }

  const bool pass = increasing && ratio > 1.5 && golden_dev <= 1e-8 && berezin_dev <= 1e-6;
  report(2, "norm blow-up with unimodular Berezin transform", pass,
         fmt("increasing=%s, ratio %.3f > 1.5, golden rel dev %.2e <= 1e-8, Berezin dev %.2e <= "
             "1e-6",
             increasing ? "yes" : "no", ratio, golden_dev, berezin_dev));
}

void criterion_3_classifier_soundness() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto family = fock::testing::make_pair_family();
  int checked = 0, misclassified = 0, uncorroborated = 0;
  for (const auto& p : family) {
    const BoundednessVerdict v = classify_product(p.f, p.g, 1.0);
    if (v.tag != p.expect) {
      misclassified++;
      continue;
    }
    const auto curve = norm_curve(p.f, p.g, 1.0, 1, {30, 40});
    const double n30 = curve[0].second, n40 = curve[1].second;
    bool ok = true;
    switch (v.tag) {
      case BoundednessVerdict::Tag::ZeroOperator:
        ok = n30 == 0.0 && n40 == 0.0;
        break;
      case BoundednessVerdict::Tag::BoundedUnitaryMultiple: {
        const double bound = std::abs(v.gamma) + 1e-9;
        ok = std::abs(n40 - n30) <= 0.01 * n30 && n30 <= bound && n40 <= bound;
        break;
      }
      default:
        ok = n40 > 1.1 * n30;
        break;
    }
    if (!ok) uncorroborated++;
    checked++;
  }
  const double ms = wall_ms_since(t0);
  const bool pass = family.size() == 50 && misclassified == 0 && uncorroborated == 0 &&
                    ms < 120000.0;
  report(3, "verdicts corroborated over 50 symbol pairs", pass,
         fmt("%zu pairs, %d misclassified, %d without matching norm behavior, %.0f ms < 2 min",
             family.size(), misclassified, uncorroborated, ms));
}

void criterion_4_kernel_growth() {
  Eigen::MatrixXcd A(1, 1);
  A(0, 0) = cplx{0.2, 0.0};
  const ExperimentReport rep = kernel_growth_experiment(A, point1(cplx{1.0, 0.0}),
                                                        point1(cplx{1.0, 0.0}), 1.0, 0.0, 20.0, 41);
  const double slope = rep.result.at("slope_fit").get<double>();
  const double dev = std::abs(slope - 0.4);
  const bool pass = dev <= 1e-9;
  report(4, "kernel log-modulus slope = 2 Re(u^T A v)", pass,
         fmt("fitted slope %.12f, |dev from 0.4| %.2e <= 1e-9", slope, dev));
}

void criterion_5_oracle_equivalence() {
  Eigen::MatrixXcd Aq(1, 1);
  Aq(0, 0) = cplx{0.2, 0.0};
  ExponentialSymbol z_exp = ExponentialSymbol::exp_linear(point1(cplx{1.0, 0.0}));
  z_exp.prefactor = MultiIndex({1});
  const std::vector<ExponentialSymbol> symbols{
      ExponentialSymbol::constant(cplx{1.0, 0.0}, 1),
      ExponentialSymbol::monomial(MultiIndex({1})),
      ExponentialSymbol::exp_linear(point1(cplx{1.0, 0.0})),
      ExponentialSymbol::exp_quadratic(Aq),
      z_exp,
  };
  double entry_dev = 0.0;
  double norm_dev = 0.0;
  for (const double alpha : {0.5, 1.0, 2.0}) {
    const BasisSpec spec{1, alpha, 8};
    const BasisIndexMap map{spec};
    for (const auto& f : symbols) {
      const TruncatedOperator T = toeplitz_analytic(f, spec);
      for (int j = 0; j < map.size(); ++j) {
        for (int k = 0; k < map.size(); ++k) {
          const cplx o = oracle_entry(f, false, map.indices()[static_cast<std::size_t>(j)],
                                      map.indices()[static_cast<std::size_t>(k)], alpha);
          entry_dev = std::max(entry_dev, std::abs(T.entries(j, k) - o));
        }
      }
    }
    for (int m = 0; m <= 8; ++m) {
      const MultiIndex mm({m});
      const auto mono = [&](const ComplexPoint& zz) {
        return monomial_value<cplx>(zz, mm);
      };
      const double closed = monomial_norm_sq(mm, alpha);
      const double quad = std::real(gaussian_inner(mono, mono, 1, alpha));
      norm_dev = std::max(norm_dev, std::abs(quad - closed) / closed);
    }
  }
  const bool pass = entry_dev <= 1e-8 && norm_dev <= 1e-10;
  report(5, "series-built entries match the quadrature oracle", pass,
         fmt("max entry dev %.2e <= 1e-8, max monomial-norm rel dev %.2e <= 1e-10", entry_dev,
             norm_dev));
}

void criterion_6_eigen_identity() {
  const double alpha = 1.0;
  const BasisSpec spec{1, alpha, 40};
  const std::vector<cplx> z_values{cplx{0.0, 0.0},  cplx{0.5, 0.5}, cplx{-1.0, 0.0},
                                   cplx{0.0, 1.3},  cplx{2.0, 0.0}, cplx{-1.2, -1.6}};
  double eig_dev = 0.0, ber_dev = 0.0;
  for (const cplx av : kTranslationPoints) {
    const auto [f, g] = translation_pair(point1(av), alpha);
    const TruncatedOperator Tg = toeplitz_coanalytic(g, spec);
    const TruncatedOperator P = product_compression(f, g, spec);
    for (const cplx zv : z_values) {
      const ComplexPoint z = point1(zv);
      const Eigen::VectorXcd kz = normalized_kernel_coeffs(z, spec);
      const cplx lambda = std::conj(eval(g, z));
      eig_dev = std::max(eig_dev, (Tg.entries * kz - lambda * kz).norm());
      ber_dev = std::max(ber_dev, std::abs(berezin_numeric(P, z) - berezin_symbolic(f, g, z)));
    }
  }
  const bool pass = eig_dev <= 1e-6 && ber_dev <= 1e-6;
  report(6, "kernels are eigenvectors; Berezin = f conj(g)", pass,
         fmt("max eigen residual %.2e <= 1e-6, max Berezin dev %.2e <= 1e-6", eig_dev, ber_dev));
}

void criterion_7_unit_p_norms() {
  const double alpha = 1.0;
  double dev = 0.0;
  for (const cplx av : {cplx{0.0, 0.0}, cplx{1.0, 0.0}, cplx{1.0, 1.0}}) {
    const ExponentialSymbol k = ExponentialSymbol::coherent_state(point1(av), alpha);
    for (const double p : {1.0, 2.0, 4.0}) {
      dev = std::max(dev, std::abs(fock_p_norm(k, p, alpha, NormMethod::Quadrature) - 1.0));
    }
  }
  const bool pass = dev <= 1e-6;
  report(7, "normalized kernels have unit p-norm", pass, fmt("max |norm - 1| %.2e <= 1e-6", dev));
}

void criterion_8_membership_boundary() {
  bool ok = true;
  std::string flips;
  for (const auto& [coeff, expect] :
       std::vector<std::pair<double, bool>>{{0.49, true}, {0.5, false}, {0.51, false}}) {
    Eigen::MatrixXcd A(1, 1);
    A(0, 0) = cplx{coeff, 0.0};
    const bool got = fock_membership(ExponentialSymbol::exp_quadratic(A), 1.0);
    ok = ok && got == expect;
    flips += fmt("%s0.%02d->%s", flips.empty() ? "" : ", ", static_cast<int>(coeff * 100 + 0.5),
                 got ? "in" : "out");
  }
  report(8, "membership flips strictly at the critical coefficient", ok, flips);
}

}  // namespace

int main() {
  criterion_1_translation_identity();
  criterion_2_norm_dichotomy();
  criterion_3_classifier_soundness();
  criterion_4_kernel_growth();
  criterion_5_oracle_equivalence();
  criterion_6_eigen_identity();
  criterion_7_unit_p_norms();
  criterion_8_membership_boundary();
  std::printf("%s\n", g_all_pass ? "acceptance: all criteria passed"
                                 : "acceptance: FAILURES PRESENT");
  return g_all_pass ? 0 : 1;
}
