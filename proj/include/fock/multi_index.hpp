#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fock/errors.hpp"

namespace fock {

// Exponent vector m = (m_1,...,m_n) for a monomial z^m = z_1^{m_1}...z_n^{m_n}.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);

  static MultiIndex zeros(int n);
  // unit(n, d) has a single 1 in slot d.
  static MultiIndex unit(int n, int d);

  int dim() const { return static_cast<int>(e_.size()); }
  int degree() const;  // |m| = m_1 + ... + m_n

  int operator[](int d) const { return e_[static_cast<std::size_t>(d)]; }
  int& operator[](int d) { return e_[static_cast<std::size_t>(d)]; }

  const std::vector<int>& exponents() const { return e_; }

  // Componentwise m_d <= other_d for all d.
  bool leq(const MultiIndex& other) const;

  MultiIndex plus(const MultiIndex& other) const;
  // Caller must guarantee other.leq(*this).
  MultiIndex minus(const MultiIndex& other) const;

  std::string str() const;  // "(m_1,...,m_n)"

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }

 private:
  std::vector<int> e_;
};

// Enumeration order of the monomial basis: ascending total degree, and inside
// a degree block lexicographically decreasing, so for n = 2 the order starts
// (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
bool graded_before(const MultiIndex& a, const MultiIndex& b);

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const;
};

inline constexpr std::size_t kBasisSizeCap = 10000;

// Parameters of a finite section: weight alpha, dimension n, and the cutoff
// degree M.  The section keeps every monomial with |m| <= M, which is
// C(M+n, n) basis vectors.
struct BasisSpec {
  int n = 1;
  double alpha = 1.0;
  int M = 40;

  // Throws std::invalid_argument for nonsense parameters.
  void validate() const;
  // Number of monomials with |m| <= M.  Throws BasisCapExceeded past `cap`.
  std::size_t size(std::size_t cap = kBasisSizeCap) const;
};

// All multi-indices with |m| <= spec.M in graded order (see graded_before).
std::vector<MultiIndex> enumerate_basis(const BasisSpec& spec, std::size_t cap = kBasisSizeCap);

// Position lookup within the graded enumeration.
class BasisIndexMap {
 public:
  explicit BasisIndexMap(const BasisSpec& spec);

  const std::vector<MultiIndex>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  // -1 when the index lies outside the section.
  int position(const MultiIndex& m) const;

 private:
  std::vector<MultiIndex> indices_;
  std::unordered_map<MultiIndex, int, MultiIndexHash> pos_;
};

// k! as a double: exact integer arithmetic through 20!, exp(lgamma) above.
double factorial(int k);
// log(k!)
double log_factorial(int k);
// log(m!) = sum over coordinates of log(m_d!).
double log_factorial(const MultiIndex& m);

// sqrt(j!/k!) * alpha^{(|k|-|j|)/2}, the weight that converts Taylor
// coefficients into matrix entries against the normalized monomial basis.
// Evaluated as a product of sqrt(i/alpha) steps so intermediate magnitudes
// stay balanced; falls back to log space when degrees are large enough that
// even the long double running product could overflow.
long double sqrt_factorial_ratio(const MultiIndex& j, const MultiIndex& k, double alpha);

}  // namespace fock
