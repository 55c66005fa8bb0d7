#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fock/operators.hpp"
#include "fock/symbol.hpp"

namespace fock {

// Outcome of one reproducible experiment.  The serialized artifact (JSON or
// CSV) is a pure function of the inputs — wall-clock time is kept out of it
// so repeated runs produce bit-identical files.
struct ExperimentReport {
  std::string name;
  nlohmann::json input;
  nlohmann::json result;
  double tolerance = 0.0;
  bool pass = true;
  double wall_ms = 0.0;  // informational only; never serialized
};

nlohmann::json report_json(const ExperimentReport& rep);
std::string report_csv(const ExperimentReport& rep);

// Boundedness classification of the product with symbols (f, conj(g)).
ExperimentReport classify_experiment(const ExponentialSymbol& f, const ExponentialSymbol& g,
                                     double alpha, std::uint64_t seed = 0);

// Builds the product section for the canonical bounded pair at a and the
// translation section independently, then compares them entry by entry and
// in norm against exp(alpha|a|^2/2).
ExperimentReport translation_identity_experiment(const ComplexPoint& a, double alpha, int M);

// The two faces of the quadratic pair f = e^{a z^2}, g = e^{-a z^2}:
// finite-section norms that climb without bound along M_list, against a
// Berezin transform of modulus one on a grid.
ExperimentReport quadratic_dichotomy_experiment(cplx a_coeff, double alpha,
                                                const std::vector<int>& M_list, int grid_points,
                                                double grid_radius);

// Log-modulus of the product kernel along z = r u, w = r u + v: affine in r
// with slope exactly 2 Re(u^T A v); reports the least-squares slope.
ExperimentReport kernel_growth_experiment(const Eigen::MatrixXcd& A, const ComplexPoint& u,
                                          const ComplexPoint& v, double alpha, double r_min,
                                          double r_max, int r_points);

// Fast cross-checks of the independent computation routes against each
// other (quadrature vs series entries, translation identity, Berezin
// consistency, kernel modulus, membership boundary, p-norms).
ExperimentReport selftest_experiment(int order = 40);

}  // namespace fock
