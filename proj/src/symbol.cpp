#include "fock/symbol.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "fock/quadrature.hpp"

namespace fock {

QuadraticPolynomial::QuadraticPolynomial(int n)
    : A(Eigen::MatrixXcd::Zero(n, n)), b(Eigen::VectorXcd::Zero(n)) {
  if (n < 1) throw std::invalid_argument("QuadraticPolynomial: n must be >= 1");
}

QuadraticPolynomial::QuadraticPolynomial(Eigen::MatrixXcd A_in, Eigen::VectorXcd b_in, cplx c0_in)
    : A(std::move(A_in)), b(std::move(b_in)), c0(c0_in) {
  if (A.rows() != A.cols()) throw DimensionMismatch("QuadraticPolynomial: A must be square");
  if (A.rows() != b.size()) throw DimensionMismatch("QuadraticPolynomial: A and b sizes differ");
  if (b.size() < 1) throw std::invalid_argument("QuadraticPolynomial: n must be >= 1");
  A = ((A + A.transpose()) / 2.0).eval();  // only the symmetric part acts in z^T A z
}

int QuadraticPolynomial::degree() const {
  if (!quadratic_part_zero()) return 2;
  if (!linear_part_zero()) return 1;
  return 0;
}

cplx QuadraticPolynomial::eval(const ComplexPoint& z) const {
  if (z.size() != b.size()) throw DimensionMismatch("QuadraticPolynomial::eval: dimension mismatch");
  const cplx quad = (z.transpose() * (A * z)).value();
  return quad + bilinear_dot(b, z) + c0;
}

ExponentialSymbol::ExponentialSymbol(int n)
    : prefactor(MultiIndex::zeros(n)), q(n) {}

ExponentialSymbol::ExponentialSymbol(cplx scale_in, MultiIndex prefactor_in,
                                     QuadraticPolynomial q_in)
    : scale(scale_in), prefactor(std::move(prefactor_in)), q(std::move(q_in)) {
  if (prefactor.dim() != q.dim()) {
    throw DimensionMismatch("ExponentialSymbol: prefactor and polynomial dimensions differ");
  }
}

ExponentialSymbol ExponentialSymbol::zero(int n) {
  ExponentialSymbol f(n);
  f.scale = cplx{0.0, 0.0};
  return f;
}

ExponentialSymbol ExponentialSymbol::constant(cplx c, int n) {
  ExponentialSymbol f(n);
  f.scale = c;
  return f;
}

ExponentialSymbol ExponentialSymbol::monomial(const MultiIndex& m, cplx scale) {
  ExponentialSymbol f(m.dim());
  f.scale = scale;
  f.prefactor = m;
  return f;
}

ExponentialSymbol ExponentialSymbol::exp_linear(const Eigen::VectorXcd& b, cplx c0, cplx scale) {
  const int n = static_cast<int>(b.size());
  ExponentialSymbol f(n);
  f.scale = scale;
  f.q.b = b;
  f.q.c0 = c0;
  return f;
}

ExponentialSymbol ExponentialSymbol::exp_quadratic(const Eigen::MatrixXcd& A, cplx scale) {
  QuadraticPolynomial q(A, Eigen::VectorXcd::Zero(A.rows()), cplx{0.0, 0.0});
  return ExponentialSymbol(scale, MultiIndex::zeros(static_cast<int>(A.rows())), q);
}

ExponentialSymbol ExponentialSymbol::coherent_state(const ComplexPoint& a, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("coherent_state: alpha must be > 0");
  return exp_linear(alpha * a.conjugate(), cplx{-0.5 * alpha * abs2(a), 0.0});
}

std::pair<ExponentialSymbol, ExponentialSymbol> translation_pair(const ComplexPoint& a,
                                                                 double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("translation_pair: alpha must be > 0");
  const Eigen::VectorXcd b = alpha * a.conjugate();
  return {ExponentialSymbol::exp_linear(b), ExponentialSymbol::exp_linear(-b)};
}

cplx eval(const ExponentialSymbol& f, const ComplexPoint& z) {
  if (z.size() != f.dim()) throw DimensionMismatch("eval: dimension mismatch");
  if (f.is_zero()) return cplx{0.0, 0.0};
  return f.scale * monomial_value<cplx>(z, f.prefactor) * std::exp(f.q.eval(z));
}

ExponentialSymbol multiply(const ExponentialSymbol& f, const ExponentialSymbol& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch("multiply: dimension mismatch");
  QuadraticPolynomial q(f.dim());
  q.A = f.q.A + g.q.A;
  q.b = f.q.b + g.q.b;
  q.c0 = f.q.c0 + g.q.c0;
  return ExponentialSymbol(f.scale * g.scale, f.prefactor.plus(g.prefactor), q);
}

Eigen::MatrixXd real_hessian(const QuadraticPolynomial& q) {
  const int n = q.dim();
  Eigen::MatrixXd H(2 * n, 2 * n);
  const Eigen::MatrixXd re = q.A.real();
  const Eigen::MatrixXd im = q.A.imag();
  H.topLeftCorner(n, n) = re;
  H.topRightCorner(n, n) = -im;
  H.bottomLeftCorner(n, n) = -im;
  H.bottomRightCorner(n, n) = -re;
  return H;
}

namespace {

// max eigenvalue and spectral norm of the real Hessian of f's quadratic part.
struct HessianSpectrum {
  double lambda_max;
  double norm;
};

HessianSpectrum hessian_spectrum(const ExponentialSymbol& f) {
  const Eigen::MatrixXd H = real_hessian(f.q);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  if (es.info() != Eigen::Success) throw NoConvergence("hessian_spectrum: eigensolve failed");
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  return {hi, std::max(std::abs(lo), std::abs(hi))};
}

bool strict_bound(const ExponentialSymbol& f, double threshold) {
  if (f.is_zero()) return true;  // the zero function lies in every space
  const HessianSpectrum s = hessian_spectrum(f);
  return threshold - s.lambda_max > 1e-12 * (1.0 + s.norm);
}

}  // namespace

bool fock_membership(const ExponentialSymbol& f, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("fock_membership: alpha must be > 0");
  return strict_bound(f, alpha / 2.0);
}

bool condition_g(const ExponentialSymbol& f, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("condition_g: alpha must be > 0");
  return strict_bound(f, alpha);
}

const char* verdict_tag_name(BoundednessVerdict::Tag tag) {
  switch (tag) {
    case BoundednessVerdict::Tag::ZeroOperator: return "ZeroOperator";
    case BoundednessVerdict::Tag::BoundedUnitaryMultiple: return "BoundedUnitaryMultiple";
    case BoundednessVerdict::Tag::UnboundedQuadratic: return "UnboundedQuadratic";
    case BoundednessVerdict::Tag::UnboundedNonconstantProduct: return "UnboundedNonconstantProduct";
  }
  return "?";
}

namespace {

// Directions (u, v) maximizing |Re(u^T A v)| over the deterministic
// candidate set {(e_j, e_k), (e_j, i e_k)}; Re(e_j^T A (i e_k)) = -Im A_jk,
// so the sweep sees both real and imaginary parts of every entry.
bool coordinate_witness(const Eigen::MatrixXcd& A, ComplexPoint& u, ComplexPoint& v,
                        double& value) {
  const int n = static_cast<int>(A.rows());
  double best = 0.0;
  int best_j = -1, best_k = -1;
  bool best_rotated = false;
  for (int jj = 0; jj < n; ++jj) {
    for (int kk = 0; kk < n; ++kk) {
      const double re = std::real(A(jj, kk));
      const double im = std::imag(A(jj, kk));
      if (std::abs(re) > std::abs(best)) {
        best = re;
        best_j = jj;
        best_k = kk;
        best_rotated = false;
      }
      if (std::abs(im) > std::abs(best)) {
        best = -im;
        best_j = jj;
        best_k = kk;
        best_rotated = true;
      }
    }
  }
  const double scale = 1.0 + A.cwiseAbs().maxCoeff();
  if (best_j < 0 || std::abs(best) <= 1e-14 * scale) return false;
  u = ComplexPoint::Zero(n);
  v = ComplexPoint::Zero(n);
  u[best_j] = cplx{1.0, 0.0};
  v[best_k] = best_rotated ? cplx{0.0, 1.0} : cplx{1.0, 0.0};
  value = best;
  return true;
}

void random_witness(const Eigen::MatrixXcd& A, std::uint64_t seed, ComplexPoint& u,
                    ComplexPoint& v, double& value) {
  const int n = static_cast<int>(A.rows());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double floor = 1e-8 * (1.0 + A.cwiseAbs().maxCoeff());
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ComplexPoint cu(n), cv(n);
    for (int d = 0; d < n; ++d) {
      const double a1 = unit(rng), a2 = unit(rng);
      cu[d] = cplx{a1, a2};
    }
    for (int d = 0; d < n; ++d) {
      const double a1 = unit(rng), a2 = unit(rng);
      cv[d] = cplx{a1, a2};
    }
    const double val = std::real(bilinear_dot(cu, A * cv));
    if (std::abs(val) > floor) {
      u = cu;
      v = cv;
      value = val;
      return;
    }
  }
  throw NoConvergence("classify_product: witness search failed");
}

}  // namespace

BoundednessVerdict classify_product(const ExponentialSymbol& f, const ExponentialSymbol& g,
                                    double alpha, std::uint64_t seed) {
  if (f.dim() != g.dim()) throw DimensionMismatch("classify_product: dimension mismatch");
  if (!(alpha > 0.0)) throw std::invalid_argument("classify_product: alpha must be > 0");
  // Hypotheses come first: even if the other factor is zero, a nonzero
  // symbol outside the space invalidates the question being asked.
  if (!f.is_zero() && !fock_membership(f, alpha)) {
    throw HypothesisViolation("classify_product: f is not in the weighted space");
  }
  if (!g.is_zero() && !fock_membership(g, alpha)) {
    throw HypothesisViolation("classify_product: g is not in the weighted space");
  }

  BoundednessVerdict verdict;
  if (f.is_zero() || g.is_zero()) {
    verdict.tag = BoundednessVerdict::Tag::ZeroOperator;
    return verdict;
  }

  const ExponentialSymbol h = multiply(f, g);
  const bool product_constant =
      h.prefactor.degree() == 0 && h.q.quadratic_part_zero() && h.q.linear_part_zero();

  if (!product_constant) {
    verdict.tag = BoundednessVerdict::Tag::UnboundedNonconstantProduct;
    return verdict;
  }

  if (f.q.quadratic_part_zero()) {
    // f = scale_f e^{b.z + c0_f}, g the matching reciprocal: the product
    // operator is gamma times the translation unitary at a = conj(b)/alpha.
    verdict.tag = BoundednessVerdict::Tag::BoundedUnitaryMultiple;
    verdict.a = f.q.b.conjugate() / alpha;
    verdict.gamma = f.scale * std::conj(g.scale) * std::exp(f.q.c0 + std::conj(g.q.c0)) *
                    std::exp(0.5 * alpha * abs2(verdict.a));
    return verdict;
  }

  verdict.tag = BoundednessVerdict::Tag::UnboundedQuadratic;
  if (!coordinate_witness(f.q.A, verdict.witness_u, verdict.witness_v, verdict.witness_value)) {
    random_witness(f.q.A, seed, verdict.witness_u, verdict.witness_v, verdict.witness_value);
  }
  return verdict;
}

cplx berezin_symbolic(const ExponentialSymbol& f, const ExponentialSymbol& g,
                      const ComplexPoint& z) {
  if (f.dim() != g.dim()) throw DimensionMismatch("berezin_symbolic: dimension mismatch");
  return eval(f, z) * std::conj(eval(g, z));
}

cplx product_kernel(const ExponentialSymbol& f, const ExponentialSymbol& g, const ComplexPoint& z,
                    const ComplexPoint& w, double alpha) {
  if (f.dim() != g.dim()) throw DimensionMismatch("product_kernel: dimension mismatch");
  if (z.size() != f.dim() || w.size() != f.dim()) {
    throw DimensionMismatch("product_kernel: point dimension mismatch");
  }
  const cplx expo = alpha * dot_conj(w, z) - 0.5 * alpha * (abs2(z) + abs2(w));
  return eval(f, w) * std::conj(eval(g, z)) * std::exp(expo);
}

double log_abs_eval(const ExponentialSymbol& f, const ComplexPoint& z) {
  if (z.size() != f.dim()) throw DimensionMismatch("log_abs_eval: dimension mismatch");
  if (f.is_zero()) return -std::numeric_limits<double>::infinity();
  double l = std::log(std::abs(f.scale));
  for (int d = 0; d < f.dim(); ++d) {
    if (f.prefactor[d] > 0) {
      const double az = std::abs(z[d]);
      if (az == 0.0) return -std::numeric_limits<double>::infinity();
      l += f.prefactor[d] * std::log(az);
    }
  }
  return l + std::real(f.q.eval(z));
}

double log_abs_product_kernel(const ExponentialSymbol& f, const ExponentialSymbol& g,
                              const ComplexPoint& z, const ComplexPoint& w, double alpha) {
  if (f.dim() != g.dim()) throw DimensionMismatch("log_abs_product_kernel: dimension mismatch");
  return log_abs_eval(f, w) + log_abs_eval(g, z) - 0.5 * alpha * (z - w).squaredNorm();
}

double fock_p_norm(const ExponentialSymbol& f, double p, double alpha, NormMethod method,
                   int order) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("fock_p_norm: p must be in (0, inf)");
  if (!(alpha > 0.0)) throw std::invalid_argument("fock_p_norm: alpha must be > 0");
  if (!fock_membership(f, alpha)) {
    throw NotInSpace("fock_p_norm: symbol is not in the weighted space");
  }
  if (f.is_zero()) return 0.0;

  const bool closed_form_ok = f.prefactor.degree() == 0 && f.q.quadratic_part_zero();
  if (method == NormMethod::ClosedForm && !closed_form_ok) {
    throw HypothesisViolation(
        "fock_p_norm: closed form needs a pure exponential of a linear polynomial");
  }
  if (closed_form_ok && method != NormMethod::Quadrature) {
    // |scale| e^{Re c0} e^{|b|^2/(2 alpha)}: the p-norm of e^{b.z} does not
    // depend on p once measured against the matching Gaussian.
    return std::abs(f.scale) * std::exp(std::real(f.q.c0) + f.q.b.squaredNorm() / (2.0 * alpha));
  }

  // ||f||^p = integral of |f|^p against the weight-(p alpha / 2) Gaussian.
  const double beta = p * alpha / 2.0;
  const QuadratureRule rule = QuadratureRule::gauss_hermite(order);
  auto integrand = [&](const ComplexPoint& z) -> cplx {
    const double l = log_abs_eval(f, z);
    return cplx{std::isinf(l) ? 0.0 : std::exp(p * l), 0.0};
  };
  const cplx integral = gaussian_integral(integrand, f.dim(), beta, rule);
  return std::pow(std::real(integral), 1.0 / p);
}

}  // namespace fock
