#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "sov/algebra/laurent_poly.hpp"

namespace sov::testing {

using TermSpec = std::pair<std::vector<int>, Rational>;

inline LaurentPoly P(const VarSet& vs, std::initializer_list<TermSpec> spec) {
  std::vector<Term> terms;
  for (const auto& [e, c] : spec) terms.push_back(Term{Exponents(std::span<const int>(e)), c});
  return LaurentPoly::from_terms(vs, std::move(terms));
}

inline LaurentPoly C(const VarSet& vs, const Rational& c) { return LaurentPoly::constant(vs, c); }

inline LaurentPoly V(const VarSet& vs, const char* name, int power = 1) {
  return LaurentPoly::variable(vs, name, power);
}

/// Deterministic generator of small random Laurent polynomials.
class PolyGen {
 public:
  explicit PolyGen(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational small_rational(bool nonzero = false) {
    for (;;) {
      const int n = uniform(-5, 5);
      const int d = uniform(1, 3);
      if (nonzero && n == 0) continue;
      return Rational(n, d);
    }
  }

  LaurentPoly poly(const VarSet& vs, int max_terms = 4, int max_exp = 2) {
    std::vector<Term> terms;
    const int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) {
      Exponents e(vs.size());
      for (std::size_t v = 0; v < vs.size(); ++v) e.set(v, uniform(-max_exp, max_exp));
      terms.push_back(Term{e, small_rational()});
    }
    return LaurentPoly::from_terms(vs, std::move(terms));
  }

  LaurentPoly nonzero_poly(const VarSet& vs, int max_terms = 3, int max_exp = 2) {
    for (;;) {
      LaurentPoly p = poly(vs, max_terms, max_exp);
      if (!p.is_zero()) return p;
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace sov::testing
