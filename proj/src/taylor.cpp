#include "fock/taylor.hpp"

#include <cmath>

namespace fock {

namespace {

// The nonzero coefficients q_k of q(z) = z^T A z + b.z (constant excluded):
// b_d at e_d, A_dd at 2 e_d, and 2 A_de at e_d + e_e for d < e.
template <typename Real>
struct PolyTerm {
  MultiIndex k;
  std::complex<Real> coeff;
  int weight;  // |k|
};

template <typename Real>
std::vector<PolyTerm<Real>> poly_terms(const QuadraticPolynomial& q) {
  using C = std::complex<Real>;
  const int n = q.dim();
  std::vector<PolyTerm<Real>> terms;
  for (int d = 0; d < n; ++d) {
    const cplx bd = q.b[d];
    if (bd != cplx{0.0, 0.0}) {
      terms.push_back({MultiIndex::unit(n, d), C(bd.real(), bd.imag()), 1});
    }
  }
  for (int d = 0; d < n; ++d) {
    for (int e = d; e < n; ++e) {
      const cplx add = d == e ? cplx(q.A(d, d)) : cplx(2.0 * q.A(d, e));
      if (add != cplx{0.0, 0.0}) {
        MultiIndex k = MultiIndex::unit(n, d).plus(MultiIndex::unit(n, e));
        terms.push_back({k, C(add.real(), add.imag()), 2});
      }
    }
  }
  return terms;
}

template <typename Real>
TaylorSeriesT<Real> taylor_impl(const ExponentialSymbol& f, int degree) {
  using C = std::complex<Real>;
  if (degree < 0) throw std::invalid_argument("taylor: degree must be >= 0");
  const int n = f.dim();

  BasisSpec grid{n, 1.0, degree};
  TaylorSeriesT<Real> out;
  out.n = n;
  out.degree = degree;
  out.index = enumerate_basis(grid);
  out.coeff.assign(out.index.size(), C{0, 0});
  if (f.is_zero()) return out;

  const int shift = f.prefactor.degree();
  const int exp_degree = degree - shift;
  if (exp_degree < 0) return out;  // every kept coefficient is below the prefactor

  // Expand e^{q - c0} through degree `exp_degree` by the Euler recurrence.
  BasisSpec exp_grid{n, 1.0, exp_degree};
  const BasisIndexMap map{exp_grid};
  const auto terms = poly_terms<Real>(f.q);
  std::vector<C> E(static_cast<std::size_t>(map.size()), C{0, 0});
  E[0] = C{1, 0};
  for (int i = 1; i < map.size(); ++i) {
    const MultiIndex& m = map.indices()[static_cast<std::size_t>(i)];
    C acc{0, 0};
    for (const auto& t : terms) {
      if (!t.k.leq(m)) continue;
      const int prev = map.position(m.minus(t.k));
      acc += Real(t.weight) * t.coeff * E[static_cast<std::size_t>(prev)];
    }
    E[static_cast<std::size_t>(i)] = acc / Real(m.degree());
  }

  const C scale_c{static_cast<Real>(f.scale.real()), static_cast<Real>(f.scale.imag())};
  const C c0_c{static_cast<Real>(f.q.c0.real()), static_cast<Real>(f.q.c0.imag())};
  const C front = scale_c * std::exp(c0_c);
  const BasisIndexMap out_map{grid};
  for (int i = 0; i < map.size(); ++i) {
    const MultiIndex target = map.indices()[static_cast<std::size_t>(i)].plus(f.prefactor);
    if (target.degree() > degree) continue;
    out.coeff[static_cast<std::size_t>(out_map.position(target))] =
        front * E[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

TaylorSeries taylor(const ExponentialSymbol& f, int degree) {
  return taylor_impl<double>(f, degree);
}

TaylorSeries series_product(const TaylorSeries& a, const TaylorSeries& b, int degree) {
  if (a.n != b.n) throw DimensionMismatch("series_product: dimension mismatch");
  if (degree < 0) throw std::invalid_argument("series_product: degree must be >= 0");
  if (a.degree < degree || b.degree < degree) {
    throw std::invalid_argument("series_product: factors must carry coefficients through the requested degree");
  }
  BasisSpec grid{a.n, 1.0, degree};
  const BasisIndexMap map{grid};
  TaylorSeries out;
  out.n = a.n;
  out.degree = degree;
  out.index = map.indices();
  out.coeff.assign(out.index.size(), cplx{0.0, 0.0});
  for (std::size_t ia = 0; ia < a.index.size(); ++ia) {
    if (a.coeff[ia] == cplx{0.0, 0.0}) continue;
    const int da = a.index[ia].degree();
    if (da > degree) continue;
    for (std::size_t ib = 0; ib < b.index.size(); ++ib) {
      if (da + b.index[ib].degree() > degree) continue;
      if (b.coeff[ib] == cplx{0.0, 0.0}) continue;
      const int pos = map.position(a.index[ia].plus(b.index[ib]));
      out.coeff[static_cast<std::size_t>(pos)] += a.coeff[ia] * b.coeff[ib];
    }
  }
  return out;
}

namespace detail {

TaylorSeriesT<long double> taylor_ld(const ExponentialSymbol& f, int degree) {
  return taylor_impl<long double>(f, degree);
}

}  // namespace detail

}  // namespace fock
