#include "fock/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "fock/basis.hpp"
#include "fock/taylor.hpp"

namespace fock {

namespace {

using LMatrix = std::vector<lcplx>;  // row-major size x size, long double entries

// Long-double analytic section; both public builders and the product
// compression draw from this so the final rounding to double happens once.
LMatrix analytic_section_ld(const ExponentialSymbol& f, const BasisSpec& spec,
                            const BasisIndexMap& map) {
  if (f.dim() != spec.n) throw DimensionMismatch("toeplitz_analytic: dimension mismatch");
  if (!condition_g(f, spec.alpha)) {
    throw ConditionGViolation("toeplitz_analytic: symbol violates the growth condition");
  }
  const auto series = detail::taylor_ld(f, spec.M);
  const BasisIndexMap series_map{BasisSpec{spec.n, 1.0, spec.M}};
  const int size = map.size();
  LMatrix out(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), lcplx{0.0L, 0.0L});
  for (int j = 0; j < size; ++j) {
    const MultiIndex& mj = map.indices()[static_cast<std::size_t>(j)];
    for (int k = 0; k < size; ++k) {
      const MultiIndex& mk = map.indices()[static_cast<std::size_t>(k)];
      if (!mk.leq(mj)) continue;  // multiplication only raises degrees
      const int cpos = series_map.position(mj.minus(mk));
      const lcplx c = series.coeff[static_cast<std::size_t>(cpos)];
      if (c == lcplx{0.0L, 0.0L}) continue;
      out[static_cast<std::size_t>(j) * size + k] = c * sqrt_factorial_ratio(mj, mk, spec.alpha);
    }
  }
  return out;
}

Eigen::MatrixXcd to_double(const LMatrix& m, int size) {
  Eigen::MatrixXcd out(size, size);
  for (int j = 0; j < size; ++j) {
    for (int k = 0; k < size; ++k) {
      const lcplx v = m[static_cast<std::size_t>(j) * size + k];
      out(j, k) = cplx{static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
  }
  return out;
}

}  // namespace

TruncatedOperator toeplitz_analytic(const ExponentialSymbol& f, const BasisSpec& spec) {
  spec.validate();
  const BasisIndexMap map{spec};
  const LMatrix m = analytic_section_ld(f, spec, map);
  return {spec, Provenance::Analytic, to_double(m, map.size())};
}

TruncatedOperator toeplitz_coanalytic(const ExponentialSymbol& g, const BasisSpec& spec) {
  TruncatedOperator op = toeplitz_analytic(g, spec);
  op.provenance = Provenance::Coanalytic;
  op.entries = op.entries.adjoint().eval();
  return op;
}

TruncatedOperator product_compression(const ExponentialSymbol& f, const ExponentialSymbol& g,
                                      const BasisSpec& spec) {
  spec.validate();
  if (f.dim() != g.dim()) throw DimensionMismatch("product_compression: dimension mismatch");
  const BasisIndexMap map{spec};
  const LMatrix mf = analytic_section_ld(f, spec, map);
  const LMatrix mg = analytic_section_ld(g, spec, map);
  const int size = map.size();
  const auto& idx = map.indices();

  LMatrix prod(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), lcplx{0.0L, 0.0L});
  for (int j = 0; j < size; ++j) {
    for (int k = 0; k < size; ++k) {
      lcplx acc{0.0L, 0.0L};
      // Interior index m must sit under both j and k; everything higher
      // contributes nothing, so the section of the product closes exactly.
      for (int m = 0; m < size; ++m) {
        const MultiIndex& mm = idx[static_cast<std::size_t>(m)];
        if (mm.degree() > std::min(idx[static_cast<std::size_t>(j)].degree(),
                                   idx[static_cast<std::size_t>(k)].degree())) {
          break;  // graded order: all later indices have degree at least this
        }
        if (!mm.leq(idx[static_cast<std::size_t>(j)]) || !mm.leq(idx[static_cast<std::size_t>(k)]))
          continue;
        acc += mf[static_cast<std::size_t>(j) * size + m] *
               std::conj(mg[static_cast<std::size_t>(k) * size + m]);
      }
      prod[static_cast<std::size_t>(j) * size + k] = acc;
    }
  }
  return {spec, Provenance::Product, to_double(prod, size)};
}

TruncatedOperator translation_unitary(const ComplexPoint& a, const BasisSpec& spec) {
  spec.validate();
  if (a.size() != spec.n) throw DimensionMismatch("translation_unitary: dimension mismatch");
  const BasisIndexMap map{spec};
  const int size = map.size();
  const int n = spec.n;

  // Exponential series of e^{alpha z . conj(a)} through degree M.
  const auto kernel_series =
      detail::taylor_ld(ExponentialSymbol::exp_linear(spec.alpha * a.conjugate()), spec.M);
  const lcplx front{std::exp(-0.5L * static_cast<long double>(spec.alpha) *
                             static_cast<long double>(abs2(a))),
                    0.0L};

  // Binomial coefficients up to M, exact in long double well past this range.
  std::vector<std::vector<long double>> choose(static_cast<std::size_t>(spec.M + 1));
  for (int r = 0; r <= spec.M; ++r) {
    choose[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(r + 1), 1.0L);
    for (int c = 1; c < r; ++c) {
      choose[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          choose[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] +
          choose[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
    }
  }

  std::vector<lcplx> neg_a_pow_flat;  // (-a_d)^t for t <= M, per coordinate
  neg_a_pow_flat.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(spec.M + 1));
  for (int d = 0; d < n; ++d) {
    const lcplx na{static_cast<long double>(-a[d].real()), static_cast<long double>(-a[d].imag())};
    lcplx p{1.0L, 0.0L};
    for (int t = 0; t <= spec.M; ++t) {
      neg_a_pow_flat[static_cast<std::size_t>(d) * (spec.M + 1) + t] = p;
      p *= na;
    }
  }

  Eigen::MatrixXcd entries(size, size);
  std::vector<lcplx> column(static_cast<std::size_t>(size));
  std::vector<int> s(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < size; ++k) {
    const MultiIndex& mk = map.indices()[static_cast<std::size_t>(k)];
    std::fill(column.begin(), column.end(), lcplx{0.0L, 0.0L});

    // (z - a)^k = sum_{s <= k} prod_d C(k_d, s_d) (-a_d)^{k_d - s_d} z^s,
    // convolved with the kernel series, truncated at degree M.
    std::fill(s.begin(), s.end(), 0);
    for (;;) {
      lcplx binom{1.0L, 0.0L};
      int s_deg = 0;
      for (int d = 0; d < n; ++d) {
        const int kd = mk[d], sd = s[static_cast<std::size_t>(d)];
        binom *= choose[static_cast<std::size_t>(kd)][static_cast<std::size_t>(sd)] *
                 neg_a_pow_flat[static_cast<std::size_t>(d) * (spec.M + 1) + (kd - sd)];
        s_deg += sd;
      }
      MultiIndex ms = mk;  // rebuilt from s below
      for (int d = 0; d < n; ++d) ms[d] = s[static_cast<std::size_t>(d)];
      for (std::size_t ie = 0; ie < kernel_series.index.size(); ++ie) {
        if (kernel_series.index[ie].degree() + s_deg > spec.M) break;
        const lcplx ec = kernel_series.coeff[ie];
        if (ec == lcplx{0.0L, 0.0L}) continue;
        const int pos = map.position(ms.plus(kernel_series.index[ie]));
        column[static_cast<std::size_t>(pos)] += binom * ec;
      }

      int d = 0;
      while (d < n && ++s[static_cast<std::size_t>(d)] > mk[d]) {
        s[static_cast<std::size_t>(d)] = 0;
        ++d;
      }
      if (d == n) break;
    }

    for (int j = 0; j < size; ++j) {
      const lcplx v = front * column[static_cast<std::size_t>(j)] *
                      sqrt_factorial_ratio(map.indices()[static_cast<std::size_t>(j)], mk,
                                           spec.alpha);
      entries(j, k) = cplx{static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
  }
  return {spec, Provenance::Translation, entries};
}

double operator_norm(const Eigen::MatrixXcd& A, double tol, int max_iter) {
  if (A.rows() != A.cols()) throw DimensionMismatch("operator_norm: matrix must be square");
  if (!(tol > 0.0)) throw std::invalid_argument("operator_norm: tol must be > 0");
  const int n = static_cast<int>(A.rows());
  if (n == 0 || A.isZero(0.0)) return 0.0;

  Eigen::VectorXcd v = Eigen::VectorXcd::Constant(n, cplx{1.0, 0.0});
  v /= v.norm();
  double sigma_prev = -1.0;
  int restarts = 0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXcd w = A * v;
    const double sigma = w.norm();  // = sqrt(v^H A^H A v), Rayleigh from below
    if (sigma == 0.0) {
      // Start vector fell in the kernel; restart along a basis direction.
      if (restarts >= n) return 0.0;
      v = Eigen::VectorXcd::Zero(n);
      v[restarts++] = cplx{1.0, 0.0};
      sigma_prev = -1.0;
      continue;
    }
    if (sigma_prev >= 0.0 && std::abs(sigma - sigma_prev) <= tol * sigma) return sigma;
    sigma_prev = sigma;
    Eigen::VectorXcd u = A.adjoint() * w;
    const double un = u.norm();
    if (un == 0.0) return sigma;
    v = u / un;
  }
  throw NoConvergence("operator_norm: power iteration did not converge");
}

double operator_norm(const TruncatedOperator& A, double tol, int max_iter) {
  return operator_norm(A.entries, tol, max_iter);
}

std::vector<std::pair<int, double>> norm_curve(const ExponentialSymbol& f,
                                               const ExponentialSymbol& g, double alpha, int n,
                                               const std::vector<int>& M_list, double tol) {
  if (M_list.empty()) throw std::invalid_argument("norm_curve: empty cutoff list");
  for (std::size_t i = 1; i < M_list.size(); ++i) {
    if (M_list[i] <= M_list[i - 1]) {
      throw std::invalid_argument("norm_curve: cutoffs must be strictly increasing");
    }
  }
  std::vector<std::pair<int, double>> out;
  out.reserve(M_list.size());
  for (int M : M_list) {
    const BasisSpec spec{n, alpha, M};
    const TruncatedOperator P = product_compression(f, g, spec);
    out.emplace_back(M, operator_norm(P, tol));
  }
  return out;
}

cplx berezin_numeric(const TruncatedOperator& A, const ComplexPoint& z) {
  const Eigen::VectorXcd v = normalized_kernel_coeffs(z, A.spec);
  return v.dot(A.entries * v);  // Eigen dot conjugates the left factor: v^H (A v)
}

Eigen::VectorXcd apply(const TruncatedOperator& A, const Eigen::VectorXcd& coeffs) {
  if (coeffs.size() != A.entries.cols()) throw DimensionMismatch("apply: coefficient length mismatch");
  return A.entries * coeffs;
}

}  // namespace fock
