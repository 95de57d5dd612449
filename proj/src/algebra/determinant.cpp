#include "sov/algebra/determinant.hpp"

#include <utility>

#include "sov/algebra/errors.hpp"

namespace sov {

namespace {

void require_vars(const PolyMatrix& m, const VarSet& vars) {
  for (const auto& row : m) {
    for (const auto& e : row) {
      if (!(e.vars() == vars)) throw VarSetMismatch("matrix entry over " + to_string(e.vars()));
    }
  }
}

}  // namespace

LaurentPoly bareiss_determinant(PolyMatrix m, const VarSet& vars) {
  detail::require_square(m);
  require_vars(m, vars);
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(vars, Rational(1));
  bool negate = false;
  LaurentPoly prev = LaurentPoly::constant(vars, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return LaurentPoly(vars);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(num, prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPoly cofactor_determinant(const PolyMatrix& m, const VarSet& vars) {
  require_vars(m, vars);
  return cofactor_determinant<LaurentPoly>(m, LaurentPoly::constant(vars, Rational(1)));
}

LaurentPoly det_poly_matrix(const PolyMatrix& m, const VarSet& vars) {
  if (m.size() <= 4) return cofactor_determinant(m, vars);
  return bareiss_determinant(m, vars);
}

}  // namespace sov
