#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "sov/algebra/laurent_poly.hpp"

namespace sov::testing {

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

/// det[D_{x_i}^{2(n-j)}] expanded over permutations, each product of Euler
/// operators applied by repeated differentiation.
inline LaurentPoly k_operator_by_permutations(const LaurentPoly& f, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  LaurentPoly out(f.vars());
  do {
    LaurentPoly g = f;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t power = 2 * (n - 1 - p[i]);
      for (std::size_t r = 0; r < power; ++r) g = euler_derivative(g, i);
    }
    if (permutation_sign(p) > 0) {
      out += g;
    } else {
      out -= g;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace sov::testing
