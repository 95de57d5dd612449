#include "sov/algebra/eps_series.hpp"

#include <sstream>
#include <stdexcept>

#include "sov/algebra/errors.hpp"

namespace sov {

EpsSeries::EpsSeries(VarSet vars, std::size_t order)
    : vars_(vars), coeffs_(order + 1, LaurentPoly(vars)) {}

EpsSeries::EpsSeries(std::size_t order, std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != order + 1) throw std::invalid_argument("series needs order+1 coefficients");
  vars_ = coeffs_[0].vars();
  for (const auto& c : coeffs_) {
    if (!(c.vars() == vars_)) throw VarSetMismatch("series coefficients over different variables");
  }
}

EpsSeries EpsSeries::constant(const LaurentPoly& c, std::size_t order) {
  EpsSeries s(c.vars(), order);
  s.coeffs_[0] = c;
  return s;
}

bool EpsSeries::is_zero() const { return valuation() > order(); }

std::size_t EpsSeries::valuation() const {
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (!coeffs_[m].is_zero()) return m;
  }
  return coeffs_.size();
}

void EpsSeries::require_compatible(const EpsSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("series truncated at different orders");
  if (!(vars_ == o.vars_)) throw VarSetMismatch("series over different variables");
}

EpsSeries& EpsSeries::operator+=(const EpsSeries& o) {
  require_compatible(o);
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] += o.coeffs_[m];
  return *this;
}

EpsSeries& EpsSeries::operator-=(const EpsSeries& o) {
  require_compatible(o);
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] -= o.coeffs_[m];
  return *this;
}

EpsSeries& EpsSeries::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
  a.require_compatible(b);
  EpsSeries r(a.vars_, a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

bool operator==(const EpsSeries& a, const EpsSeries& b) {
  return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

std::string EpsSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (coeffs_[m].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[m] << ")";
    if (m > 0) os << "*eps^" << m;
  }
  if (first) os << "0";
  os << " + O(eps^" << order() + 1 << ")";
  return os.str();
}

EpsSeries eps_series_exp(long m, std::size_t order, const VarSet& vars) {
  std::vector<LaurentPoly> coeffs;
  Rational term(1);
  for (std::size_t j = 0; j <= order; ++j) {
    if (j > 0) term = term * Rational(m) / Rational(static_cast<std::int64_t>(j));
    coeffs.push_back(LaurentPoly::constant(vars, term));
  }
  return EpsSeries(order, std::move(coeffs));
}

EpsSeries expand_exp_variable(const LaurentPoly& f, std::string_view var, std::size_t order) {
  const std::size_t v = f.vars().index_of(var);
  const VarSet rest = f.vars().without({std::string(var)});
  std::vector<std::vector<Term>> buckets(order + 1);
  for (const auto& t : f.terms()) {
    const long m = t.exps[v];
    Exponents e(rest.size());
    for (std::size_t i = 0, k = 0; i < f.vars().size(); ++i) {
      if (i != v) e.set(k++, t.exps[i]);
    }
    // coefficient of eps^j in exp(m eps) is m^j / j!
    Rational c = t.coeff;
    for (std::size_t j = 0; j <= order; ++j) {
      if (j > 0) c = c * Rational(m) / Rational(static_cast<std::int64_t>(j));
      if (!c.is_zero()) buckets[j].push_back(Term{e, c});
    }
  }
  std::vector<LaurentPoly> coeffs;
  coeffs.reserve(order + 1);
  for (auto& b : buckets) coeffs.push_back(LaurentPoly::from_terms(rest, std::move(b)));
  return EpsSeries(order, std::move(coeffs));
}

}  // namespace sov
