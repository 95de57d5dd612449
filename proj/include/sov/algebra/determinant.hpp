#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sov/algebra/laurent_poly.hpp"

namespace sov {

template <class T>
using Matrix = std::vector<std::vector<T>>;

using PolyMatrix = Matrix<LaurentPoly>;

namespace detail {

template <class T>
T laplace_rows(const Matrix<T>& m, std::size_t row, std::vector<std::size_t>& cols, const T& one) {
  if (cols.empty()) return one;
  T acc = one - one;
  for (std::size_t pos = 0; pos < cols.size(); ++pos) {
    const T& entry = m[row][cols[pos]];
    if (entry.is_zero()) continue;
    const std::size_t c = cols[pos];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pos));
    T minor = laplace_rows(m, row + 1, cols, one);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(pos), c);
    if (minor.is_zero()) continue;
    if (pos % 2 == 0) {
      acc += entry * minor;
    } else {
      acc -= entry * minor;
    }
  }
  return acc;
}

template <class T>
void require_square(const Matrix<T>& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
  }
}

}  // namespace detail

/// Determinant by Laplace expansion along the first row, over any commutative
/// ring type with +, -, *, is_zero(). `one` fixes the value of the 0x0 case.
template <class T>
T cofactor_determinant(const Matrix<T>& m, const T& one) {
  detail::require_square(m);
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return detail::laplace_rows(m, 0, cols, one);
}

/// Fraction-free Gaussian elimination. Every division is exact in the ring.
LaurentPoly bareiss_determinant(PolyMatrix m, const VarSet& vars);

LaurentPoly cofactor_determinant(const PolyMatrix& m, const VarSet& vars);

/// Cofactor expansion up to 4x4, Bareiss above. The 0x0 determinant is 1.
LaurentPoly det_poly_matrix(const PolyMatrix& m, const VarSet& vars);

}  // namespace sov
