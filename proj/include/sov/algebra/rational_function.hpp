#pragma once

#include <string>

#include "sov/algebra/laurent_poly.hpp"

namespace sov {

/// Quotient of two univariate Laurent polynomials in the same variable.
///
/// Stored reduced: common polynomial factors are cancelled, the denominator is
/// an ordinary polynomial with nonzero constant term and leading coefficient 1.
class RationalFunction {
 public:
  explicit RationalFunction(LaurentPoly numerator);
  RationalFunction(LaurentPoly numerator, LaurentPoly denominator);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  const VarSet& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator*=(const Rational& c);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator*(RationalFunction a, const Rational& c) { return a *= c; }

  /// Compared by cross-multiplication.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Euler operator z d/dz, by the quotient rule.
  RationalFunction euler_derivative() const;

  std::string to_string() const;

 private:
  void reduce();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Monic gcd of two univariate Laurent polynomials, normalized to an ordinary
/// polynomial with nonzero constant term. gcd(0, 0) is 0.
LaurentPoly univariate_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace sov
