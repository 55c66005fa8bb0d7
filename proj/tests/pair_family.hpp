#pragma once

// Deterministic family of 50 symbol pairs covering every verdict the
// classifier can produce, all admissible at alpha = 1.  Used by the
// acceptance gate to corroborate verdicts against finite-section norm
// behavior, so the mix leans on pairs whose growth (or plateau) is
// comfortably resolvable between cutoffs 30 and 40.

#include <string>
#include <utility>
#include <vector>

#include "fock/symbol.hpp"

namespace fock::testing {

struct SymbolPair {
  std::string name;
  ExponentialSymbol f;
  ExponentialSymbol g;
  BoundednessVerdict::Tag expect;
};

inline std::vector<SymbolPair> make_pair_family() {
  using Tag = BoundednessVerdict::Tag;
  std::vector<SymbolPair> out;

  const auto bounded = [&](const std::string& name, cplx a) {
    auto [f, g] = translation_pair(point1(a), 1.0);
    out.push_back({name, std::move(f), std::move(g), Tag::BoundedUnitaryMultiple});
  };
  const auto quad_pair = [&](const std::string& name, cplx a, cplx b = {0.0, 0.0},
                             cplx sf = {1.0, 0.0}, cplx sg = {1.0, 0.0}) {
    Eigen::MatrixXcd A(1, 1);
    A(0, 0) = a;
    ExponentialSymbol f(sf, MultiIndex({0}), QuadraticPolynomial(A, point1(b), cplx{0.0, 0.0}));
    ExponentialSymbol g(sg, MultiIndex({0}),
                        QuadraticPolynomial((-A).eval(), point1(-b), cplx{0.0, 0.0}));
    out.push_back({name, std::move(f), std::move(g), Tag::UnboundedQuadratic});
  };
  const auto linear = [](cplx b, cplx scale = {1.0, 0.0}, cplx c0 = {0.0, 0.0}) {
    return ExponentialSymbol::exp_linear(point1(b), c0, scale);
  };

  // --- bounded: canonical translation pairs, some with scale / offset noise.
  bounded("bounded a=0.3", cplx{0.3, 0.0});
  bounded("bounded a=-0.4+0.2i", cplx{-0.4, 0.2});
  bounded("bounded a=0.8i", cplx{0.0, 0.8});
  bounded("bounded a=1", cplx{1.0, 0.0});
  bounded("bounded a=0.6-0.6i", cplx{0.6, -0.6});
  bounded("bounded a=-1.2", cplx{-1.2, 0.0});
  bounded("bounded a=0.25+0.95i", cplx{0.25, 0.95});
  bounded("bounded a=1.2i", cplx{0.0, 1.2});
  bounded("bounded a=-0.9-0.5i", cplx{-0.9, -0.5});
  {
    auto [f, g] = translation_pair(point1(cplx{0.5, 0.0}), 1.0);
    f.scale = cplx{2.0, 0.0};
    g.scale = cplx{0.0, -1.0};
    out.push_back({"bounded scaled a=0.5", std::move(f), std::move(g),
                   Tag::BoundedUnitaryMultiple});
  }
  {
    auto [f, g] = translation_pair(point1(cplx{1.1, 0.3}), 1.0);
    f.q.c0 = cplx{0.2, -0.4};
    g.q.c0 = cplx{-0.1, 0.3};
    out.push_back({"bounded offset a=1.1+0.3i", std::move(f), std::move(g),
                   Tag::BoundedUnitaryMultiple});
  }
  {
    auto [f, g] = translation_pair(point1(cplx{-0.2, 0.1}), 1.0);
    f.scale = cplx{0.0, 0.5};
    f.q.c0 = cplx{-0.3, 0.0};
    g.scale = cplx{1.5, 0.0};
    g.q.c0 = cplx{0.1, 0.2};
    out.push_back({"bounded scaled+offset a=-0.2+0.1i", std::move(f), std::move(g),
                   Tag::BoundedUnitaryMultiple});
  }

  // --- unbounded with constant product: quadratic exponents that cancel.
  quad_pair("quad a=0.15", cplx{0.15, 0.0});
  quad_pair("quad a=0.2", cplx{0.2, 0.0});
  quad_pair("quad a=0.25i", cplx{0.0, 0.25});
  quad_pair("quad a=-0.3", cplx{-0.3, 0.0});
  quad_pair("quad a=0.2+0.2i", cplx{0.2, 0.2});
  quad_pair("quad a=0.35", cplx{0.35, 0.0});
  quad_pair("quad a=-0.25i", cplx{0.0, -0.25});
  quad_pair("quad a=0.4", cplx{0.4, 0.0});
  quad_pair("quad a=0.18-0.12i", cplx{0.18, -0.12});
  quad_pair("quad a=-0.45", cplx{-0.45, 0.0});
  quad_pair("quad a=0.3i b=0.4", cplx{0.0, 0.3}, cplx{0.4, 0.0});
  quad_pair("quad a=0.22 b=-0.3+0.2i scaled", cplx{0.22, 0.0}, cplx{-0.3, 0.2}, cplx{2.0, 0.0},
            cplx{0.5, 0.0});
  {
    Eigen::MatrixXcd A(1, 1);
    A(0, 0) = cplx{-0.2, 0.3};
    ExponentialSymbol f(cplx{1.0, 0.0}, MultiIndex({0}),
                        QuadraticPolynomial(A, point1(cplx{0.0, 0.0}), cplx{0.25, 0.0}));
    ExponentialSymbol g(cplx{1.0, 0.0}, MultiIndex({0}),
                        QuadraticPolynomial((-A).eval(), point1(cplx{0.0, 0.0}), cplx{0.05, -0.1}));
    out.push_back({"quad a=-0.2+0.3i offset", std::move(f), std::move(g),
                   Tag::UnboundedQuadratic});
  }

  // --- zero operator: at least one factor vanishes identically.
  out.push_back({"zero f", ExponentialSymbol::zero(1), linear(cplx{0.3, 0.0}),
                 Tag::ZeroOperator});
  {
    ExponentialSymbol f = linear(cplx{0.2, 0.0});
    f.prefactor = MultiIndex({1});
    out.push_back({"zero g", std::move(f), ExponentialSymbol::zero(1), Tag::ZeroOperator});
  }
  out.push_back({"zero both", ExponentialSymbol::zero(1), ExponentialSymbol::zero(1),
                 Tag::ZeroOperator});
  {
    Eigen::MatrixXcd A(1, 1);
    A(0, 0) = cplx{0.2, 0.0};
    out.push_back({"zero f, quadratic g", ExponentialSymbol::zero(1),
                   ExponentialSymbol::exp_quadratic(A, cplx{2.0, 0.0}), Tag::ZeroOperator});
  }
  {
    Eigen::MatrixXcd A(1, 1);
    A(0, 0) = cplx{-0.1, 0.0};
    ExponentialSymbol f(cplx{0.0, 3.0}, MultiIndex({0}),
                        QuadraticPolynomial(A, point1(cplx{0.2, 0.0}), cplx{0.0, 0.0}));
    out.push_back({"zero g, quadratic f", std::move(f), ExponentialSymbol::zero(1),
                   Tag::ZeroOperator});
  }

  // --- nonconstant products: linear mismatches ...
  const auto mismatch = [&](const std::string& name, ExponentialSymbol f, ExponentialSymbol g) {
    out.push_back({name, std::move(f), std::move(g), Tag::UnboundedNonconstantProduct});
  };
  mismatch("linear 1.0/-0.2", linear(cplx{1.0, 0.0}), linear(cplx{-0.2, 0.0}));
  mismatch("linear 0.5/0.3i", linear(cplx{0.5, 0.0}), linear(cplx{0.0, 0.3}));
  mismatch("linear 0.7i/0.7i", linear(cplx{0.0, 0.7}), linear(cplx{0.0, 0.7}));
  mismatch("linear -0.6/-0.4", linear(cplx{-0.6, 0.0}), linear(cplx{-0.4, 0.0}));
  mismatch("linear 0.9/const", linear(cplx{0.9, 0.0}),
           ExponentialSymbol::constant(cplx{1.0, 0.0}, 1));
  mismatch("linear complex pair", linear(cplx{0.3, 0.4}), linear(cplx{0.3, -0.1}));
  mismatch("linear -0.5i/-0.25i", linear(cplx{0.0, -0.5}), linear(cplx{0.0, -0.25}));
  mismatch("linear scaled 1.2/-0.5", linear(cplx{1.2, 0.0}, cplx{2.0, 0.0}),
           linear(cplx{-0.5, 0.0}, cplx{-1.0, 0.0}));

  // ... monomial prefactors ...
  mismatch("monomial z/1", ExponentialSymbol::monomial(MultiIndex({1})),
           ExponentialSymbol::constant(cplx{1.0, 0.0}, 1));
  mismatch("monomial z^2/1", ExponentialSymbol::monomial(MultiIndex({2})),
           ExponentialSymbol::constant(cplx{1.0, 0.0}, 1));
  mismatch("monomial z/z", ExponentialSymbol::monomial(MultiIndex({1})),
           ExponentialSymbol::monomial(MultiIndex({1})));
  {
    ExponentialSymbol f = linear(cplx{0.3, 0.0});
    f.prefactor = MultiIndex({2});
    mismatch("monomial z^2 e^{0.3z}/e^{0.2z}", std::move(f), linear(cplx{0.2, 0.0}));
  }
  {
    ExponentialSymbol f = ExponentialSymbol::monomial(MultiIndex({1}));
    mismatch("monomial z/e^{0.5z}", std::move(f), linear(cplx{0.5, 0.0}));
  }
  mismatch("monomial z^3/const", ExponentialSymbol::monomial(MultiIndex({3})),
           ExponentialSymbol::constant(cplx{2.0, 0.0}, 1));

  // ... and quadratic exponents that do not cancel.
  const auto quad = [](cplx a, cplx scale = {1.0, 0.0}) {
    Eigen::MatrixXcd A(1, 1);
    A(0, 0) = a;
    return ExponentialSymbol::exp_quadratic(A, scale);
  };
  mismatch("A-mismatch 0.3/0.1", quad(cplx{0.3, 0.0}), quad(cplx{0.1, 0.0}));
  mismatch("A-mismatch 0.2/0.2", quad(cplx{0.2, 0.0}), quad(cplx{0.2, 0.0}));
  mismatch("A-mismatch -0.15/-0.2", quad(cplx{-0.15, 0.0}), quad(cplx{-0.2, 0.0}));
  mismatch("A-mismatch 0.25i/0.25i", quad(cplx{0.0, 0.25}), quad(cplx{0.0, 0.25}));
  mismatch("A-mismatch 0.45/-0.2", quad(cplx{0.45, 0.0}), quad(cplx{-0.2, 0.0}));
  {
    ExponentialSymbol f = quad(cplx{0.2, 0.0});
    f.prefactor = MultiIndex({1});
    mismatch("A-mismatch z e^{0.2z^2}/e^{0.15z^2}", std::move(f), quad(cplx{0.15, 0.0}));
  }

  return out;
}

}  // namespace fock::testing
