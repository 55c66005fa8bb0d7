#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

#include "fock/multi_index.hpp"
#include "fock/point.hpp"

namespace fock {

// q(z) = z^T A z + b . z + c0 with A complex symmetric (the constructor
// symmetrizes, so only the symmetric part of a supplied A ever matters).
struct QuadraticPolynomial {
  Eigen::MatrixXcd A;
  Eigen::VectorXcd b;
  cplx c0{0.0, 0.0};

  explicit QuadraticPolynomial(int n);
  QuadraticPolynomial(Eigen::MatrixXcd A_in, Eigen::VectorXcd b_in, cplx c0_in);

  int dim() const { return static_cast<int>(b.size()); }
  // 2 if A != 0, else 1 if b != 0, else 0.  Zero tests are exact.
  int degree() const;
  bool quadratic_part_zero() const { return A.isZero(0.0); }
  bool linear_part_zero() const { return b.isZero(0.0); }

  cplx eval(const ComplexPoint& z) const;
};

// scale * z^{m0} * exp(q(z)) — an entire function of z in C^n.  Everything
// the library computes with (operators, kernels, norms, classification) is
// closed under the products of these symbols and their conjugates.
struct ExponentialSymbol {
  cplx scale{1.0, 0.0};
  MultiIndex prefactor;  // the monomial exponent m0
  QuadraticPolynomial q;

  explicit ExponentialSymbol(int n);
  ExponentialSymbol(cplx scale_in, MultiIndex prefactor_in, QuadraticPolynomial q_in);

  int dim() const { return q.dim(); }
  bool is_zero() const { return scale == cplx{0.0, 0.0}; }

  static ExponentialSymbol zero(int n);
  static ExponentialSymbol constant(cplx c, int n);
  static ExponentialSymbol monomial(const MultiIndex& m, cplx scale = {1.0, 0.0});
  // exp(b . z + c0), scaled.
  static ExponentialSymbol exp_linear(const Eigen::VectorXcd& b, cplx c0 = {0.0, 0.0},
                                      cplx scale = {1.0, 0.0});
  // exp(z^T A z), scaled.
  static ExponentialSymbol exp_quadratic(const Eigen::MatrixXcd& A, cplx scale = {1.0, 0.0});
  // The normalized kernel k_a as a symbol:
  // exp(alpha z . conj(a) - alpha|a|^2/2).
  static ExponentialSymbol coherent_state(const ComplexPoint& a, double alpha);
};

// The canonical bounded pair (f, g) = (e^{alpha z . conj(a)}, e^{-alpha z . conj(a)}):
// the Toeplitz product with these symbols is exp(alpha|a|^2/2) times the
// translation unitary at a.
std::pair<ExponentialSymbol, ExponentialSymbol> translation_pair(const ComplexPoint& a,
                                                                 double alpha);

cplx eval(const ExponentialSymbol& f, const ComplexPoint& z);

// Pointwise product: scales multiply, prefactors add, polynomials add.
ExponentialSymbol multiply(const ExponentialSymbol& f, const ExponentialSymbol& g);

// Real Hessian H of x -> Re q2(x + iy) as a quadratic form on R^{2n},
// where q2(z) = z^T A z:
//   H = [ Re A   -Im A ]
//       [ -Im A  -Re A ]
// Its eigenvalues control how |e^{q}| grows against the Gaussian weight.
Eigen::MatrixXd real_hessian(const QuadraticPolynomial& q);

// f belongs to every weighted space F^p_alpha iff (alpha/2) I - H is
// strictly positive definite (the criterion does not depend on p; the
// monomial prefactor and linear term never matter).  "Strict" is enforced as
// smallest eigenvalue > 1e-12 * (1 + ||H||).
bool fock_membership(const ExponentialSymbol& f, double alpha);

// Growth condition for Toeplitz matrix entries / Gaussian integrals to exist:
// alpha I - H strictly positive definite.
bool condition_g(const ExponentialSymbol& f, double alpha);

struct BoundednessVerdict {
  enum class Tag {
    ZeroOperator,
    BoundedUnitaryMultiple,
    UnboundedQuadratic,
    UnboundedNonconstantProduct,
  };

  Tag tag;

  // BoundedUnitaryMultiple: the product operator equals gamma * (translation
  // unitary at a), with gamma = scale_f * conj(scale_g)
  //                             * exp(c0_f + conj(c0_g)) * exp(alpha|a|^2/2).
  cplx gamma{0.0, 0.0};
  ComplexPoint a;

  // UnboundedQuadratic: directions with Re(u^T A_f v) != 0, along which the
  // product kernel grows exponentially.
  ComplexPoint witness_u;
  ComplexPoint witness_v;
  double witness_value = 0.0;  // Re(u^T A_f v)
};

const char* verdict_tag_name(BoundednessVerdict::Tag tag);

// Decide boundedness of the Toeplitz product with analytic symbol f and
// conjugate-analytic symbol conj(g).  Preconditions: both symbols live in
// dimension n and every *nonzero* input passes fock_membership (otherwise
// HypothesisViolation).  The trichotomy on nonzero inputs:
//   - f * g constant and A_f = 0  =>  BoundedUnitaryMultiple
//   - f * g constant and A_f != 0 =>  UnboundedQuadratic (witness attached)
//   - f * g nonconstant           =>  UnboundedNonconstantProduct
// `seed` feeds the fallback random witness search (the deterministic
// coordinate sweep succeeds for every matrix, so the fallback is a guard).
BoundednessVerdict classify_product(const ExponentialSymbol& f, const ExponentialSymbol& g,
                                    double alpha, std::uint64_t seed = 0);

// Berezin transform of the product operator, which collapses to
// f(z) * conj(g(z)) — independent of alpha.
cplx berezin_symbolic(const ExponentialSymbol& f, const ExponentialSymbol& g,
                      const ComplexPoint& z);

// Two-point kernel of the product operator against normalized kernels:
//   T(z, w) = f(w) conj(g(z)) exp(-alpha|z|^2/2 + alpha w . conj(z) - alpha|w|^2/2).
cplx product_kernel(const ExponentialSymbol& f, const ExponentialSymbol& g,
                    const ComplexPoint& z, const ComplexPoint& w, double alpha);

// log |T(z, w)| evaluated without overflow:
//   log|f(w)| + log|g(z)| - (alpha/2)|z - w|^2.
// Returns -infinity where the modulus vanishes.
double log_abs_product_kernel(const ExponentialSymbol& f, const ExponentialSymbol& g,
                              const ComplexPoint& z, const ComplexPoint& w, double alpha);

// log|f(z)| = log|scale| + sum m0_d log|z_d| + Re q(z); -infinity at zeros.
double log_abs_eval(const ExponentialSymbol& f, const ComplexPoint& z);

enum class NormMethod { Auto, ClosedForm, Quadrature };

// ||f||_{p,alpha} = ( integral of |f|^p against the weight-(p alpha / 2)
// Gaussian probability measure )^{1/p}.  ClosedForm is available when f has
// no monomial prefactor and no quadratic part:
//   |scale| * exp(Re c0) * exp(|b|^2 / (2 alpha)), independent of p.
// Quadrature integrates |f|^p with a tensor Gauss-Hermite rule.  Auto picks
// ClosedForm when available.  Throws NotInSpace when f fails membership.
double fock_p_norm(const ExponentialSymbol& f, double p, double alpha,
                   NormMethod method = NormMethod::Auto, int order = 40);

}  // namespace fock
