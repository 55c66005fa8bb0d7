#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

#include "fock/multi_index.hpp"
#include "fock/point.hpp"
#include "fock/symbol.hpp"

namespace fock {

// Nodes/weights for integrals against exp(-t^2) dt on the real line.
// Computed by diagonalizing the Jacobi matrix of the Hermite recurrence
// (symmetric tridiagonal, zero diagonal, off-diagonal sqrt(k/2)); the weight
// of node i is sqrt(pi) times the squared first eigenvector component.
// Exact for polynomials of degree <= 2*order - 1.
struct QuadratureRule {
  int order = 0;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  static QuadratureRule gauss_hermite(int order);
};

using Evaluatable = std::function<cplx(const ComplexPoint&)>;

// Integral of F over C^n against the weight-alpha Gaussian probability
// measure (alpha/pi)^n exp(-alpha|z|^2) dv(z), by the tensor Gauss-Hermite
// rule with `order` points per real axis (2n axes).  Deterministic
// summation order.
cplx gaussian_integral(const Evaluatable& F, int n, double alpha, const QuadratureRule& rule);

// Inner product <phi, psi> = integral of phi * conj(psi) d(Gaussian).
cplx gaussian_inner(const Evaluatable& phi, const Evaluatable& psi, int n, double alpha,
                    int order = 40);

struct MonteCarloEstimate {
  cplx value{0.0, 0.0};
  double std_error = 0.0;
  std::int64_t samples = 0;
};

// Monte Carlo estimate of <phi, psi> by sampling the weight-alpha complex
// Gaussian (each coordinate: independent real/imaginary normals of variance
// 1/(2*alpha)).  Deterministic for a fixed seed.  Requires samples >= 1000.
MonteCarloEstimate mc_inner(const Evaluatable& phi, const Evaluatable& psi, int n, double alpha,
                            std::int64_t samples, std::uint64_t seed);

// Quadrature oracle for a single Toeplitz matrix entry: the inner product
//   <M_f e_k, e_j>            (conjugated == false)
//   <M_conj(f) e_k, e_j>      (conjugated == true)
// against the normalized monomials e_m.  Computed straight from the
// integral, with none of the Taylor-coefficient machinery the production
// path uses, so the two can check each other.  Throws GrowthExceedsWeight
// when |f| grows too fast for the Gaussian weight (quadratic part violating
// the growth condition).
cplx oracle_entry(const ExponentialSymbol& f, bool conjugated, const MultiIndex& j,
                  const MultiIndex& k, double alpha, int order = 40);

}  // namespace fock
