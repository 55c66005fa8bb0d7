#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fock/multi_index.hpp"
#include "fock/point.hpp"
#include "fock/symbol.hpp"

namespace fock {

// How a finite-section matrix came to be; carried through serialization so
// an exported artifact says what it is.
enum class Provenance { Analytic, Coanalytic, Product, Translation, Composition };

// Finite section of an operator on the weighted entire-function space:
// entries(i, j) = <T e_{m_j}, e_{m_i}> against the graded normalized
// monomial basis of `spec` (rows = output index, cols = input index).
struct TruncatedOperator {
  BasisSpec spec;
  Provenance provenance = Provenance::Composition;
  Eigen::MatrixXcd entries;
};

// Multiplication by an analytic symbol f, compressed to the section.  The
// matrix is lower triangular in the grading: the (j, k) entry is the Taylor
// coefficient of f at j - k times sqrt(j!/k!) alpha^{(|k|-|j|)/2}.  Requires
// the growth condition (ConditionGViolation otherwise).
TruncatedOperator toeplitz_analytic(const ExponentialSymbol& f, const BasisSpec& spec);

// The adjoint case, symbol conj(g): exactly the conjugate transpose of
// toeplitz_analytic(g, spec).
TruncatedOperator toeplitz_coanalytic(const ExponentialSymbol& g, const BasisSpec& spec);

// Finite section of the *product* (analytic f) x (coanalytic conj(g)).
// Because the analytic factor raises degrees and the coanalytic one lowers
// them, the section of the product equals a finite sum over interior
// indices m <= min(j, k):
//   entries(j, k) = sum_m [T_f]_{j,m} conj([T_g]_{k,m})
// with no truncation leakage — this is the exact compression, not the
// product of the two compressions.
TruncatedOperator product_compression(const ExponentialSymbol& f, const ExponentialSymbol& g,
                                      const BasisSpec& spec);

// Section of the weighted translation W_a phi(z) = phi(z - a) k_a(z), built
// independently of the Toeplitz machinery: column k holds the expansion
// coefficients of W_a e_k, assembled from the binomial expansion of
// (z - a)^k convolved with the exponential series of e^{alpha z . conj(a)}.
TruncatedOperator translation_unitary(const ComplexPoint& a, const BasisSpec& spec);

// Largest singular value by power iteration on A^H A: deterministic
// all-ones start, Rayleigh-quotient estimate (monotone from below), stop on
// relative change <= tol, NoConvergence past max_iter.
double operator_norm(const Eigen::MatrixXcd& A, double tol = 1e-10, int max_iter = 10000);
double operator_norm(const TruncatedOperator& A, double tol = 1e-10, int max_iter = 10000);

// Norm of the product compression at each cutoff in M_list (strictly
// increasing).  Bounded products plateau; unbounded ones keep climbing.
std::vector<std::pair<int, double>> norm_curve(const ExponentialSymbol& f,
                                               const ExponentialSymbol& g, double alpha, int n,
                                               const std::vector<int>& M_list,
                                               double tol = 1e-10);

// <A k_z, k_z> for the normalized kernel at z — the numerical counterpart of
// the symbol-level Berezin transform.
cplx berezin_numeric(const TruncatedOperator& A, const ComplexPoint& z);

// A * coeffs, with dimension checking.
Eigen::VectorXcd apply(const TruncatedOperator& A, const Eigen::VectorXcd& coeffs);

}  // namespace fock
