#include "sov/algebra/rational_function.hpp"

#include <stdexcept>
#include <vector>

#include "sov/algebra/errors.hpp"

namespace sov {

namespace {

void require_univariate(const LaurentPoly& p) {
  if (p.vars().size() != 1) throw std::invalid_argument("rational function needs exactly one variable");
}

// Dense coefficients of z^{-min} p, lowest degree first.
std::vector<Rational> to_dense(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  const int lo = p.min_degree(0);
  std::vector<Rational> c(static_cast<std::size_t>(p.max_degree(0) - lo + 1));
  for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.exps[0] - lo)] = t.coeff;
  return c;
}

LaurentPoly from_dense(const VarSet& vars, const std::vector<Rational>& c) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) terms.push_back(Term{Exponents{static_cast<int>(i)}, c[i]});
  }
  return LaurentPoly::from_terms(vars, std::move(terms));
}

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::vector<Rational> remainder(std::vector<Rational> a, const std::vector<Rational>& b) {
  const Rational lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const Rational q = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i].sub_product(q, b[i]);
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

LaurentPoly univariate_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  require_univariate(a);
  std::vector<Rational> x = to_dense(a);
  std::vector<Rational> y = to_dense(b);
  while (!y.empty()) {
    std::vector<Rational> r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return LaurentPoly(a.vars());
  const Rational inv = x.back().inverse();
  for (auto& c : x) c *= inv;
  return from_dense(a.vars(), x);
}

RationalFunction::RationalFunction(LaurentPoly numerator)
    : RationalFunction(numerator, LaurentPoly::constant(numerator.vars(), Rational(1))) {}

RationalFunction::RationalFunction(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_univariate(num_);
  if (!(num_.vars() == den_.vars())) throw VarSetMismatch("rational function parts over different variables");
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(vars(), Rational(1));
    return;
  }
  const LaurentPoly g = univariate_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  // Monomials are units: move them all into the numerator, then make the
  // denominator monic.
  Exponents shift{-den_.min_degree(0)};
  num_ = num_.shifted(shift);
  den_ = den_.shifted(shift);
  const Rational inv = den_.leading_term().coeff.inverse();
  num_ *= inv;
  den_ *= inv;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const Rational& c) {
  *this = RationalFunction(num_ * c, den_);
  return *this;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction RationalFunction::euler_derivative() const {
  LaurentPoly top = sov::euler_derivative(num_, 0) * den_ - num_ * sov::euler_derivative(den_, 0);
  return RationalFunction(std::move(top), den_ * den_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace sov
