#pragma once

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>

#include "fock/errors.hpp"
#include "fock/multi_index.hpp"

namespace fock {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;
using ComplexPoint = Eigen::VectorXcd;

inline ComplexPoint make_point(std::initializer_list<cplx> vals) {
  ComplexPoint z(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (const cplx& v : vals) z[i++] = v;
  return z;
}

inline ComplexPoint point1(cplx v) { return make_point({v}); }

// Hermitian pairing z . conj(w).  (Eigen's dot() conjugates its *left*
// argument, hence the swap.)
inline cplx dot_conj(const ComplexPoint& z, const ComplexPoint& w) {
  if (z.size() != w.size()) throw DimensionMismatch("dot_conj: dimension mismatch");
  return w.dot(z);
}

// Complex bilinear pairing sum_d x_d * y_d (no conjugation anywhere).
inline cplx bilinear_dot(const ComplexPoint& x, const ComplexPoint& y) {
  if (x.size() != y.size()) throw DimensionMismatch("bilinear_dot: dimension mismatch");
  return (x.array() * y.array()).sum();
}

inline double abs2(const ComplexPoint& z) { return z.squaredNorm(); }

template <typename Scalar>
Scalar ipow(Scalar base, int k) {
  if (k < 0) throw std::invalid_argument("ipow: negative exponent");
  Scalar r{1};
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

// z^m = prod_d z_d^{m_d}
template <typename Scalar, typename Vec>
Scalar monomial_value(const Vec& z, const MultiIndex& m) {
  if (static_cast<int>(z.size()) != m.dim()) {
    throw DimensionMismatch("monomial_value: dimension mismatch");
  }
  Scalar r{1};
  for (int d = 0; d < m.dim(); ++d) r *= ipow(static_cast<Scalar>(z[d]), m[d]);
  return r;
}

}  // namespace fock
