#include "fock/basis.hpp"

#include <cmath>

namespace fock {

double monomial_norm_sq(const MultiIndex& m, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("monomial_norm_sq: alpha must be > 0");
  if (m.degree() <= 20) {
    double num = 1.0;
    for (int d = 0; d < m.dim(); ++d) num *= factorial(m[d]);
    return num / ipow(alpha, m.degree());
  }
  return std::exp(log_factorial(m) - m.degree() * std::log(alpha));
}

cplx kernel_value(const ComplexPoint& z, const ComplexPoint& w, double alpha) {
  return std::exp(alpha * dot_conj(z, w));
}

cplx basis_monomial_value(const ComplexPoint& z, const MultiIndex& m, double alpha) {
  if (z.size() != m.dim()) throw DimensionMismatch("basis_monomial_value: dimension mismatch");
  return monomial_value<cplx>(z, m) / std::sqrt(monomial_norm_sq(m, alpha));
}

Eigen::VectorXcd normalized_kernel_coeffs(const ComplexPoint& z, const BasisSpec& spec) {
  spec.validate();
  if (z.size() != spec.n) throw DimensionMismatch("normalized_kernel_coeffs: dimension mismatch");
  const BasisIndexMap map{spec};
  const auto& idx = map.indices();
  Eigen::VectorXcd c(map.size());
  c[0] = std::exp(-0.5 * spec.alpha * abs2(z));
  for (int i = 1; i < map.size(); ++i) {
    const MultiIndex& m = idx[static_cast<std::size_t>(i)];
    int d = 0;
    while (m[d] == 0) ++d;
    const int parent = map.position(m.minus(MultiIndex::unit(spec.n, d)));
    // c_m / c_{m - e_d} = conj(z_d) * sqrt(alpha / m_d)
    c[i] = c[parent] * std::conj(z[d]) * std::sqrt(spec.alpha / m[d]);
  }
  return c;
}

}  // namespace fock
