#include "fock/multi_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fock {

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int v : e_) {
    if (v < 0) throw std::invalid_argument("MultiIndex: exponents must be nonnegative");
  }
}

MultiIndex MultiIndex::zeros(int n) {
  if (n < 1) throw std::invalid_argument("MultiIndex::zeros: n must be >= 1");
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0));
}

MultiIndex MultiIndex::unit(int n, int d) {
  MultiIndex m = zeros(n);
  if (d < 0 || d >= n) throw std::invalid_argument("MultiIndex::unit: slot out of range");
  m[d] = 1;
  return m;
}

int MultiIndex::degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

bool MultiIndex::leq(const MultiIndex& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("MultiIndex::leq: dimension mismatch");
  for (int d = 0; d < dim(); ++d) {
    if (e_[static_cast<std::size_t>(d)] > other[d]) return false;
  }
  return true;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("MultiIndex::plus: dimension mismatch");
  MultiIndex r = *this;
  for (int d = 0; d < dim(); ++d) r[d] += other[d];
  return r;
}

MultiIndex MultiIndex::minus(const MultiIndex& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("MultiIndex::minus: dimension mismatch");
  MultiIndex r = *this;
  for (int d = 0; d < dim(); ++d) {
    r[d] -= other[d];
    if (r[d] < 0) throw std::invalid_argument("MultiIndex::minus: result would be negative");
  }
  return r;
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << '(';
  for (int d = 0; d < dim(); ++d) {
    if (d) os << ',';
    os << (*this)[d];
  }
  os << ')';
  return os.str();
}

bool graded_before(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("graded_before: dimension mismatch");
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Same degree: lexicographically decreasing.
  return a.exponents() > b.exponents();
}

std::size_t MultiIndexHash::operator()(const MultiIndex& m) const {
  // FNV-1a over the exponent words; cheap and stable.
  std::uint64_t h = 1469598103934665603ull;
  for (int v : m.exponents()) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

void BasisSpec::validate() const {
  if (n < 1) throw std::invalid_argument("BasisSpec: n must be >= 1");
  if (M < 0) throw std::invalid_argument("BasisSpec: M must be >= 0");
  if (!(alpha > 0.0)) throw std::invalid_argument("BasisSpec: alpha must be > 0");
}

std::size_t BasisSpec::size(std::size_t cap) const {
  validate();
  // C(M+n, n), with a log-space overflow check before the exact product.
  const double lsize = std::lgamma(static_cast<double>(M + n) + 1.0) -
                       std::lgamma(static_cast<double>(M) + 1.0) -
                       std::lgamma(static_cast<double>(n) + 1.0);
  if (lsize > std::log(static_cast<double>(cap)) + 1.0) {
    throw BasisCapExceeded("basis size C(" + std::to_string(M + n) + "," + std::to_string(n) +
                           ") exceeds cap " + std::to_string(cap));
  }
  unsigned long long r = 1;
  for (int i = 1; i <= n; ++i) {
    r = r * static_cast<unsigned long long>(M + i) / static_cast<unsigned long long>(i);
  }
  if (r > cap) {
    throw BasisCapExceeded("basis size " + std::to_string(r) + " exceeds cap " + std::to_string(cap));
  }
  return static_cast<std::size_t>(r);
}

namespace {

// Emit all m with |m| = remaining into out, first coordinate descending,
// recursing on the tail.  This yields exactly the lexicographically
// decreasing order inside a degree block.
void emit_degree_block(int dim, int remaining, std::vector<int>& prefix,
                       std::vector<MultiIndex>& out) {
  if (dim == 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int lead = remaining; lead >= 0; --lead) {
    prefix.push_back(lead);
    emit_degree_block(dim - 1, remaining - lead, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_basis(const BasisSpec& spec, std::size_t cap) {
  const std::size_t total = spec.size(cap);
  std::vector<MultiIndex> out;
  out.reserve(total);
  std::vector<int> prefix;
  for (int deg = 0; deg <= spec.M; ++deg) {
    emit_degree_block(spec.n, deg, prefix, out);
  }
  return out;
}

BasisIndexMap::BasisIndexMap(const BasisSpec& spec) : indices_(enumerate_basis(spec)) {
  pos_.reserve(indices_.size());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    pos_.emplace(indices_[i], static_cast<int>(i));
  }
}

int BasisIndexMap::position(const MultiIndex& m) const {
  auto it = pos_.find(m);
  return it == pos_.end() ? -1 : it->second;
}

double factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  if (k <= 20) {
    // 20! = 2432902008176640000 fits a 64-bit integer exactly.
    unsigned long long r = 1;
    for (int i = 2; i <= k; ++i) r *= static_cast<unsigned long long>(i);
    return static_cast<double>(r);
  }
  return std::exp(std::lgamma(static_cast<double>(k) + 1.0));
}

double log_factorial(int k) {
  if (k < 0) throw std::invalid_argument("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(k) + 1.0);
}

double log_factorial(const MultiIndex& m) {
  double s = 0.0;
  for (int d = 0; d < m.dim(); ++d) s += log_factorial(m[d]);
  return s;
}

long double sqrt_factorial_ratio(const MultiIndex& j, const MultiIndex& k, double alpha) {
  if (j.dim() != k.dim()) throw DimensionMismatch("sqrt_factorial_ratio: dimension mismatch");
  if (!(alpha > 0.0)) throw std::invalid_argument("sqrt_factorial_ratio: alpha must be > 0");
  const int hi = std::max(j.degree(), k.degree());
  if (hi > 600) {
    // Out of the comfortable range for a running product; evaluate the log.
    const long double l = 0.5L * (static_cast<long double>(log_factorial(j)) -
                                  static_cast<long double>(log_factorial(k))) +
                          0.5L * static_cast<long double>(k.degree() - j.degree()) *
                              std::log(static_cast<long double>(alpha));
    return std::exp(l);
  }
  long double r = 1.0L;
  const long double a = static_cast<long double>(alpha);
  for (int d = 0; d < j.dim(); ++d) {
    for (int i = k[d] + 1; i <= j[d]; ++i) r *= std::sqrt(static_cast<long double>(i) / a);
    for (int i = j[d] + 1; i <= k[d]; ++i) r /= std::sqrt(static_cast<long double>(i) / a);
  }
  return r;
}

}  // namespace fock
