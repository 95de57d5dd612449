#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sov/algebra/exponents.hpp"
#include "sov/algebra/rational.hpp"
#include "sov/algebra/varset.hpp"

namespace sov {

struct Term {
  Exponents exps;
  Rational coeff;
};

/// Multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept sorted by exponent vector (lexicographic, ascending) with no
/// zero coefficients, so equality of polynomials is equality of term lists.
/// The leading term in lex order is terms().back().
class LaurentPoly {
 public:
  /// The zero polynomial over no variables.
  LaurentPoly() = default;
  /// The zero polynomial over `vars`.
  explicit LaurentPoly(VarSet vars) : vars_(std::move(vars)) {}

  /// Canonicalizes: sorts, merges equal exponents, drops zeros.
  static LaurentPoly from_terms(VarSet vars, std::vector<Term> terms);
  static LaurentPoly constant(VarSet vars, const Rational& c);
  static LaurentPoly monomial(VarSet vars, Exponents e, const Rational& c = Rational(1));
  /// c * name^power.
  static LaurentPoly variable(VarSet vars, std::string_view name, int power = 1,
                              const Rational& c = Rational(1));

  const VarSet& vars() const { return vars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading_term() const { return terms_.back(); }

  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;

  /// Largest / smallest exponent of variable `var` over all terms (0 for the zero polynomial).
  int max_degree(std::size_t var) const;
  int min_degree(std::size_t var) const;
  bool depends_on(std::size_t var) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator-(const LaurentPoly& a);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(unsigned e) const;
  /// Multiplies every term by the monomial x^shift.
  LaurentPoly shifted(const Exponents& shift) const;

  /// Re-expresses the polynomial over `target`, matching variables by name.
  /// Variables absent from `target` must not occur in any term.
  LaurentPoly embed(const VarSet& target) const;
  /// Renames variables positionally; `new_names` has size() == vars().size().
  LaurentPoly renamed(const std::vector<std::string>& new_names) const;
  /// f(x_{perm[0]}, ..., x_{perm[n-1]}): variable i of the result's argument list
  /// takes the slot of variable perm[i].
  LaurentPoly permuted(std::span<const std::size_t> perm) const;
  /// f with x_var -> x_var^{-1}.
  LaurentPoly inverted(std::size_t var) const;

  /// Multiplies each term by scale(exps); terms mapped to zero disappear.
  LaurentPoly scale_terms(const std::function<Rational(const Exponents&)>& scale) const;

  std::string to_string() const;

 private:
  void canonicalize();

  VarSet vars_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

enum class PolyOp { kAdd, kSub, kMul };

/// Ring arithmetic on polynomials over the same variable set.
LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op);

/// Exact quotient num / den in the Laurent ring. Throws NotDivisible when a
/// remainder is left.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Replaces var^m by image^m in every term. `image` must be a single term over
/// the same variables, with nonzero coefficient, and must not contain `var`.
LaurentPoly substitute_monomial(const LaurentPoly& f, std::string_view var, const LaurentPoly& image);

/// Sets each listed variable to 1 and drops it from the variable set.
LaurentPoly eval_at_one(const LaurentPoly& f, const std::vector<std::string>& vars);

/// Drops the listed variables, which must not occur in any term.
LaurentPoly drop_variables(const LaurentPoly& f, const std::vector<std::string>& vars);

/// Euler operator x d/dx in variable `var`.
LaurentPoly euler_derivative(const LaurentPoly& f, std::size_t var);

/// Coefficient of var^power, as a polynomial over the same variables (var exponent 0).
LaurentPoly coefficient_of(const LaurentPoly& f, std::size_t var, int power);

}  // namespace sov
