#include "fock/quadrature.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fock/basis.hpp"

namespace fock {

QuadratureRule QuadratureRule::gauss_hermite(int order) {
  if (order < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double off = std::sqrt(k / 2.0);
    J(k, k - 1) = off;
    J(k - 1, k) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) throw NoConvergence("gauss_hermite: eigensolve failed");
  QuadratureRule rule;
  rule.order = order;
  rule.nodes = es.eigenvalues();  // ascending
  rule.weights.resize(order);
  const double sqrt_pi = std::sqrt(M_PI);
  for (int i = 0; i < order; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = sqrt_pi * v0 * v0;
  }
  return rule;
}

cplx gaussian_integral(const Evaluatable& F, int n, double alpha, const QuadratureRule& rule) {
  if (n < 1) throw std::invalid_argument("gaussian_integral: n must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("gaussian_integral: alpha must be > 0");
  if (rule.order < 1) throw std::invalid_argument("gaussian_integral: empty rule");

  // Substituting z_d = (x + iy)/sqrt(alpha) turns the measure into
  // pi^{-n} * prod exp(-t^2) dt over the 2n real axes.
  const double inv_sqrt_alpha = 1.0 / std::sqrt(alpha);
  const int axes = 2 * n;
  std::vector<int> digit(static_cast<std::size_t>(axes), 0);
  ComplexPoint z(n);
  cplx sum{0.0, 0.0};
  for (;;) {
    double wt = 1.0;
    for (int a = 0; a < axes; ++a) wt *= rule.weights[digit[static_cast<std::size_t>(a)]];
    for (int d = 0; d < n; ++d) {
      const double x = rule.nodes[digit[static_cast<std::size_t>(2 * d)]];
      const double y = rule.nodes[digit[static_cast<std::size_t>(2 * d + 1)]];
      z[d] = cplx{x * inv_sqrt_alpha, y * inv_sqrt_alpha};
    }
    sum += wt * F(z);

    int a = 0;
    while (a < axes && ++digit[static_cast<std::size_t>(a)] == rule.order) {
      digit[static_cast<std::size_t>(a)] = 0;
      ++a;
    }
    if (a == axes) break;
  }
  return sum * std::pow(M_PI, -n);
}

cplx gaussian_inner(const Evaluatable& phi, const Evaluatable& psi, int n, double alpha,
                    int order) {
  const QuadratureRule rule = QuadratureRule::gauss_hermite(order);
  return gaussian_integral([&](const ComplexPoint& z) { return phi(z) * std::conj(psi(z)); }, n,
                           alpha, rule);
}

MonteCarloEstimate mc_inner(const Evaluatable& phi, const Evaluatable& psi, int n, double alpha,
                            std::int64_t samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("mc_inner: n must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("mc_inner: alpha must be > 0");
  if (samples < 1000) throw std::invalid_argument("mc_inner: need at least 1000 samples");

  std::mt19937_64 rng(seed);
  const double sigma = std::sqrt(1.0 / (2.0 * alpha));
  std::normal_distribution<double> normal(0.0, sigma);

  // Welford accumulation of the complex running mean and the scalar sum of
  // squared distances from it; deterministic draw order (re then im, by
  // coordinate).
  ComplexPoint z(n);
  cplx mean{0.0, 0.0};
  double m2 = 0.0;
  for (std::int64_t s = 0; s < samples; ++s) {
    for (int d = 0; d < n; ++d) {
      const double re = normal(rng);
      const double im = normal(rng);
      z[d] = cplx{re, im};
    }
    const cplx val = phi(z) * std::conj(psi(z));
    const cplx delta = val - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += std::real(delta * std::conj(val - mean));
  }

  MonteCarloEstimate est;
  est.value = mean;
  est.samples = samples;
  est.std_error =
      samples > 1 ? std::sqrt(m2 / (static_cast<double>(samples) * (static_cast<double>(samples) - 1.0)))
                  : 0.0;
  return est;
}

cplx oracle_entry(const ExponentialSymbol& f, bool conjugated, const MultiIndex& j,
                  const MultiIndex& k, double alpha, int order) {
  if (f.dim() != j.dim() || f.dim() != k.dim()) {
    throw DimensionMismatch("oracle_entry: dimension mismatch");
  }
  if (!f.q.quadratic_part_zero() && !condition_g(f, alpha)) {
    throw GrowthExceedsWeight("oracle_entry: symbol grows faster than the Gaussian weight");
  }
  const int n = f.dim();
  auto integrand = [&](const ComplexPoint& z) {
    const cplx fv = conjugated ? std::conj(eval(f, z)) : eval(f, z);
    return fv * basis_monomial_value(z, k, alpha) * std::conj(basis_monomial_value(z, j, alpha));
  };
  const QuadratureRule rule = QuadratureRule::gauss_hermite(order);
  return gaussian_integral(integrand, n, alpha, rule);
}

}  // namespace fock
