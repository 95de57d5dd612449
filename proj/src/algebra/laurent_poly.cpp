#include "sov/algebra/laurent_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "sov/algebra/errors.hpp"

namespace sov {

namespace {

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
  if (!(a.vars() == b.vars())) {
    throw VarSetMismatch(std::string(op) + ": variable sets differ " + to_string(a.vars()) +
                         " vs " + to_string(b.vars()));
  }
}

bool term_less(const Term& a, const Term& b) { return a.exps < b.exps; }

}  // namespace

void LaurentPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Term acc = std::move(terms_[i]);
    std::size_t j = i + 1;
    while (j < terms_.size() && terms_[j].exps == acc.exps) {
      acc.coeff += terms_[j].coeff;
      ++j;
    }
    if (!acc.coeff.is_zero()) terms_[out++] = std::move(acc);
    i = j;
  }
  terms_.resize(out);
}

LaurentPoly LaurentPoly::from_terms(VarSet vars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exps.size() != vars.size()) {
      throw std::invalid_argument("exponent vector length does not match variable set");
    }
  }
  LaurentPoly p(std::move(vars));
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

LaurentPoly LaurentPoly::constant(VarSet vars, const Rational& c) {
  Exponents e(vars.size());
  return monomial(std::move(vars), e, c);
}

LaurentPoly LaurentPoly::monomial(VarSet vars, Exponents e, const Rational& c) {
  if (e.size() != vars.size()) throw std::invalid_argument("monomial exponent length mismatch");
  LaurentPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.push_back(Term{e, c});
  return p;
}

LaurentPoly LaurentPoly::variable(VarSet vars, std::string_view name, int power, const Rational& c) {
  Exponents e(vars.size());
  e.set(vars.index_of(name), power);
  return monomial(std::move(vars), e, c);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps.is_zero());
}

Rational LaurentPoly::coefficient(const Exponents& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& x) { return t.exps < x; });
  if (it != terms_.end() && it->exps == e) return it->coeff;
  return Rational(0);
}

Rational LaurentPoly::constant_term() const { return coefficient(Exponents(vars_.size())); }

int LaurentPoly::max_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  int m = terms_[0].exps[var];
  for (const auto& t : terms_) m = std::max(m, t.exps[var]);
  return m;
}

int LaurentPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  int m = terms_[0].exps[var];
  for (const auto& t : terms_) m = std::min(m, t.exps[var]);
  return m;
}

bool LaurentPoly::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.exps[var] != 0; });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_vars(*this, o, "add");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exps < b->exps)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exps < a->exps) {
      merged.push_back(*b++);
    } else {
      Term t = std::move(*a++);
      t.coeff += (b++)->coeff;
      if (!t.coeff.is_zero()) merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a, b, "mul");
  LaurentPoly r(a.vars());
  if (a.is_zero() || b.is_zero()) return r;
  if (a.size() == 1 || b.size() == 1) {
    const LaurentPoly& mono = a.size() == 1 ? a : b;
    const LaurentPoly& other = a.size() == 1 ? b : a;
    r.terms_.reserve(other.size());
    // Shifting by a fixed monomial preserves lex order.
    for (const auto& t : other.terms_) {
      r.terms_.push_back(Term{t.exps + mono.terms_[0].exps, t.coeff * mono.terms_[0].coeff});
    }
    return r;
  }
  std::unordered_map<Exponents, Rational, ExponentsHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      acc[ta.exps + tb.exps].add_product(ta.coeff, tb.coeff);
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back(Term{e, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_less);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r(a);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].exps == b.terms_[i].exps) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(vars_, Rational(1));
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  LaurentPoly r(*this);
  for (auto& t : r.terms_) t.exps += shift;
  return r;
}

LaurentPoly LaurentPoly::embed(const VarSet& target) const {
  std::vector<std::size_t> slot(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto j = target.find(vars_.name(i));
    if (!j) {
      if (depends_on(i)) {
        throw VarSetMismatch("embed: variable " + vars_.name(i) + " missing from " + sov::to_string(target));
      }
      slot[i] = target.size();
    } else {
      slot[i] = *j;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (slot[i] < target.size()) e.set(slot[i], t.exps[i]);
    }
    out.push_back(Term{e, t.coeff});
  }
  return from_terms(target, std::move(out));
}

LaurentPoly LaurentPoly::renamed(const std::vector<std::string>& new_names) const {
  if (new_names.size() != vars_.size()) throw std::invalid_argument("renamed: wrong number of names");
  LaurentPoly r(*this);
  r.vars_ = VarSet(new_names);
  return r;
}

LaurentPoly LaurentPoly::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != vars_.size()) throw std::invalid_argument("permuted: wrong permutation length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(vars_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) e.set(perm[i], t.exps[i]);
    out.push_back(Term{e, t.coeff});
  }
  return from_terms(vars_, std::move(out));
}

LaurentPoly LaurentPoly::inverted(std::size_t var) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term u = t;
    u.exps.set(var, -t.exps[var]);
    out.push_back(std::move(u));
  }
  return from_terms(vars_, std::move(out));
}

LaurentPoly LaurentPoly::scale_terms(const std::function<Rational(const Exponents&)>& scale) const {
  LaurentPoly r(vars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff * scale(t.exps);
    if (!c.is_zero()) r.terms_.push_back(Term{t.exps, std::move(c)});
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->coeff;
    const bool unit_monomial = !it->exps.is_zero();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.sign() < 0 ? -c : c;
    bool wrote = false;
    if (!(mag.is_one() && unit_monomial)) {
      os << (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")");
      wrote = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const int e = it->exps[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << vars_.name(i);
      if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::kAdd: return a + b;
    case PolyOp::kSub: return a - b;
    case PolyOp::kMul: return a * b;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  require_same_vars(num, den, "divide");
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  const VarSet& vars = num.vars();
  if (num.is_zero()) return LaurentPoly(vars);
  const Term& lead = den.leading_term();
  const Rational lead_inv = lead.coeff.inverse();
  if (den.is_monomial()) {
    Exponents neg(vars.size());
    neg -= lead.exps;
    return num.shifted(neg) * lead_inv;
  }

  // Over an integral domain the per-variable degree ranges add under
  // multiplication, so every quotient term lies in this box.
  const std::size_t n = vars.size();
  std::vector<int> qmin(n), qmax(n);
  for (std::size_t v = 0; v < n; ++v) {
    qmax[v] = num.max_degree(v) - den.max_degree(v);
    qmin[v] = num.min_degree(v) - den.min_degree(v);
    if (qmin[v] > qmax[v]) throw NotDivisible("degree range of " + vars.name(v) + " incompatible");
  }
  auto in_box = [&](const Exponents& e) {
    for (std::size_t v = 0; v < n; ++v) {
      if (e[v] < qmin[v] || e[v] > qmax[v]) return false;
    }
    return true;
  };

  std::map<Exponents, Rational> rem;
  for (const auto& t : num.terms()) rem.emplace_hint(rem.end(), t.exps, t.coeff);
  std::vector<Term> quotient;
  Rational scratch;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Exponents qe = top->first - lead.exps;
    if (!in_box(qe)) {
      throw NotDivisible("nonzero remainder dividing " + std::to_string(num.size()) + " terms by " +
                         std::to_string(den.size()) + " terms");
    }
    Rational qc = top->second * lead_inv;
    rem.erase(top);
    // The leading product cancels the removed term exactly; skip it.
    const auto den_terms = den.terms();
    for (std::size_t i = 0; i + 1 < den_terms.size(); ++i) {
      auto [it, inserted] = rem.try_emplace(qe + den_terms[i].exps);
      it->second.sub_product(qc, den_terms[i].coeff);
      if (it->second.is_zero()) rem.erase(it);
    }
    quotient.push_back(Term{qe, std::move(qc)});
  }
  return LaurentPoly::from_terms(vars, std::move(quotient));
}

LaurentPoly substitute_monomial(const LaurentPoly& f, std::string_view var, const LaurentPoly& image) {
  require_same_vars(f, image, "substitute");
  if (!image.is_monomial()) throw std::invalid_argument("substitution image must be a single monomial");
  const std::size_t v = f.vars().index_of(var);
  const Term& img = image.terms()[0];
  if (img.exps[v] != 0) throw std::invalid_argument("substitution image contains the substituted variable");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    const int m = t.exps[v];
    Exponents e = t.exps;
    e.set(v, 0);
    e += img.exps.scaled(m);
    out.push_back(Term{e, t.coeff * img.coeff.pow(m)});
  }
  return LaurentPoly::from_terms(f.vars(), std::move(out));
}

LaurentPoly eval_at_one(const LaurentPoly& f, const std::vector<std::string>& vars) {
  for (const auto& v : vars) f.vars().index_of(v);
  const VarSet target = f.vars().without(vars);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < f.vars().size(); ++i) {
    if (target.contains(f.vars().name(i))) keep.push_back(i);
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Exponents e(target.size());
    for (std::size_t i = 0; i < keep.size(); ++i) e.set(i, t.exps[keep[i]]);
    out.push_back(Term{e, t.coeff});
  }
  return LaurentPoly::from_terms(target, std::move(out));
}

LaurentPoly drop_variables(const LaurentPoly& f, const std::vector<std::string>& vars) {
  for (const auto& v : vars) {
    if (f.depends_on(f.vars().index_of(v))) {
      throw ConsistencyError("variable " + v + " still occurs after elimination");
    }
  }
  return eval_at_one(f, vars);
}

LaurentPoly euler_derivative(const LaurentPoly& f, std::size_t var) {
  return f.scale_terms([var](const Exponents& e) { return Rational(e[var]); });
}

LaurentPoly coefficient_of(const LaurentPoly& f, std::size_t var, int power) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.exps[var] == power) {
      Term u = t;
      u.exps.set(var, 0);
      out.push_back(std::move(u));
    }
  }
  return LaurentPoly::from_terms(f.vars(), std::move(out));
}

}  // namespace sov
