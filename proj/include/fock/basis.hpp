#pragma once

#include <Eigen/Dense>

#include "fock/multi_index.hpp"
#include "fock/point.hpp"

namespace fock {

// ||z^m||^2 = m! / alpha^{|m|} under the weight-alpha Gaussian measure.
double monomial_norm_sq(const MultiIndex& m, double alpha);

// Reproducing kernel K(z, w) = exp(alpha * z . conj(w)).
cplx kernel_value(const ComplexPoint& z, const ComplexPoint& w, double alpha);

// Value of the normalized basis monomial e_m(z) = z^m / ||z^m||.
cplx basis_monomial_value(const ComplexPoint& z, const MultiIndex& m, double alpha);

// Coefficient vector of the *normalized* kernel k_z = K(.,z)/||K(.,z)|| in
// the graded monomial basis of the section: coefficient at m is
// exp(-alpha|z|^2/2) * sqrt(alpha^{|m|}/m!) * conj(z)^m, built by the stable
// one-step recurrence along the graded enumeration.
Eigen::VectorXcd normalized_kernel_coeffs(const ComplexPoint& z, const BasisSpec& spec);

}  // namespace fock
