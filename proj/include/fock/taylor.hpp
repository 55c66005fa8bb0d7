#pragma once

#include <complex>
#include <vector>

#include "fock/multi_index.hpp"
#include "fock/point.hpp"
#include "fock/symbol.hpp"

namespace fock {

// Taylor coefficients of an entire function through total degree `degree`,
// stored against the graded multi-index enumeration.  `Real` is the
// accumulation type: double for external use, long double inside the
// operator-assembly pipelines where alternating sums need headroom.
template <typename Real>
struct TaylorSeriesT {
  int n = 1;
  int degree = 0;
  std::vector<MultiIndex> index;               // graded order, |m| <= degree
  std::vector<std::complex<Real>> coeff;       // parallel to index

  std::complex<Real> at_position(std::size_t i) const { return coeff[i]; }
};

using TaylorSeries = TaylorSeriesT<double>;

// Coefficients of f = scale * z^{m0} * e^{q} through total degree D, exact
// up to roundoff (the expansion of e^{q} satisfies the first-order Euler
// recurrence |m| E_m = sum_{0 < k <= m} |k| q_k E_{m-k}, where q_k are the
// <= degree-2 coefficients of q; the prefactor then shifts everything by m0).
TaylorSeries taylor(const ExponentialSymbol& f, int degree);

// Degree-truncated product of two coefficient arrays on the same grading.
TaylorSeries series_product(const TaylorSeries& a, const TaylorSeries& b, int degree);

namespace detail {

TaylorSeriesT<long double> taylor_ld(const ExponentialSymbol& f, int degree);

}  // namespace detail

}  // namespace fock
