#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sov/algebra/laurent_poly.hpp"

namespace sov {

/// Power series in a formal parameter eps, truncated after eps^order.
/// Coefficients are Laurent polynomials over a common variable set.
class EpsSeries {
 public:
  EpsSeries(VarSet vars, std::size_t order);
  EpsSeries(std::size_t order, std::vector<LaurentPoly> coeffs);
  /// The constant series c (coefficient of eps^0 only).
  static EpsSeries constant(const LaurentPoly& c, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const VarSet& vars() const { return vars_; }
  const LaurentPoly& operator[](std::size_t m) const { return coeffs_[m]; }
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// Index of the first nonzero coefficient, or order()+1 for the zero series.
  std::size_t valuation() const;

  EpsSeries& operator+=(const EpsSeries& o);
  EpsSeries& operator-=(const EpsSeries& o);
  EpsSeries& operator*=(const Rational& c);
  friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
  friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
  friend EpsSeries operator*(EpsSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const EpsSeries& a, const EpsSeries& b);

  std::string to_string() const;

 private:
  void require_compatible(const EpsSeries& o) const;

  VarSet vars_;
  std::vector<LaurentPoly> coeffs_;
};

/// Truncated expansion of exp(m * eps) = sum_{j <= order} (m eps)^j / j!, with
/// constant coefficients over `vars`.
EpsSeries eps_series_exp(long m, std::size_t order, const VarSet& vars = VarSet());

/// Reads variable `var` of `f` as the formal symbol e^eps: each var^m becomes
/// the truncated series of exp(m eps). The result no longer contains `var`.
EpsSeries expand_exp_variable(const LaurentPoly& f, std::string_view var, std::size_t order);

}  // namespace sov
