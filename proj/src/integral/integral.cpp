#include "sov/integral/integral.hpp"

#include <stdexcept>
#include <utility>

#include "sov/algebra/determinant.hpp"
#include "sov/algebra/errors.hpp"
#include "sov/operators/operators.hpp"

namespace sov {

namespace {

const Term& single_term(const LaurentPoly& p, const char* what) {
  if (!p.is_monomial()) throw std::invalid_argument(std::string(what) + " must be a single term");
  return p.terms().front();
}

// c * prod name^power over vs.
LaurentPoly mono(const VarSet& vs, std::initializer_list<std::pair<std::string, int>> factors,
                 const Rational& c = Rational(1)) {
  Exponents e(vs.size());
  for (const auto& [name, power] : factors) e.set(vs.index_of(name), e[vs.index_of(name)] + power);
  return LaurentPoly::monomial(vs, e, c);
}

std::string nm(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }

}  // namespace

LaurentPoly p_functional(const LaurentPoly& f, std::string_view var) {
  const std::size_t v = f.vars().index_of(var);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    const int m = t.exps[v];
    if (m == 0) {
      throw ConstantTermError("P-functional undefined: nonzero constant term in " + std::string(var));
    }
    Exponents e = t.exps;
    e.set(v, 0);
    Rational c = t.coeff;
    c /= Rational(m);
    out.push_back(Term{e, c});
  }
  return LaurentPoly::from_terms(f.vars(), std::move(out));
}

LaurentPoly dlog_integral(const LaurentPoly& f, std::string_view var, const LaurentPoly& lower,
                          const LaurentPoly& upper) {
  const VarSet& vs = f.vars();
  const std::size_t v = vs.index_of(var);
  const LaurentPoly lo = lower.embed(vs);
  const LaurentPoly up = upper.embed(vs);
  const Term& lt = single_term(lo, "lower bound");
  const Term& ut = single_term(up, "upper bound");
  if (lt.exps[v] != 0 || ut.exps[v] != 0) throw std::invalid_argument("integration bounds must not contain the variable");
  std::vector<Term> out;
  out.reserve(2 * f.size());
  for (const Term& t : f.terms()) {
    const int m = t.exps[v];
    if (m == 0) throw ConstantTermError("logarithmic term: " + std::string(var) + "^0 in a dlog integral");
    Exponents base = t.exps;
    base.set(v, 0);
    Rational c = t.coeff;
    c /= Rational(m);
    Exponents eu = base;
    eu += ut.exps.scaled(m);
    out.push_back(Term{eu, c * ut.coeff.pow(m)});
    Exponents el = base;
    el += lt.exps.scaled(m);
    out.push_back(Term{el, -(c * lt.coeff.pow(m))});
  }
  return LaurentPoly::from_terms(vs, std::move(out));
}

LaurentPoly w_integral(const LaurentPoly& f, std::string_view var, const LaurentPoly& upper) {
  return dlog_integral(f, var, LaurentPoly::constant(f.vars(), Rational(1)), upper);
}

void IntegrationPlan::add(IntegrationStep step) { steps_.push_back(std::move(step)); }

std::vector<std::string> IntegrationPlan::eliminated() const {
  std::vector<std::string> out;
  for (const auto& s : steps_) std::visit([&](const auto& step) { out.push_back(step.var); }, s);
  return out;
}

void FormalIntegrand::apply(const IntegrationStep& step) {
  const std::string var = std::visit([](const auto& s) { return s.var; }, step);
  if (eliminated_.count(var)) throw ConsistencyError("variable " + var + " was already integrated out");
  if (const auto* d = std::get_if<DeltaSubstitute>(&step)) {
    LaurentPoly sum(body_.vars());
    for (const LaurentPoly& image : d->images) sum += substitute_monomial(body_, var, image.embed(body_.vars()));
    body_ = std::move(sum);
  } else if (const auto* w = std::get_if<WIntegrate>(&step)) {
    body_ = w_integral(body_, var, w->upper);
  } else if (const auto* l = std::get_if<DlogIntegrate>(&step)) {
    body_ = dlog_integral(body_, var, l->lower, l->upper);
  } else {
    body_ = p_functional(body_, var);
  }
  eliminated_.insert(var);
}

void FormalIntegrand::run(const IntegrationPlan& plan) {
  for (const auto& step : plan.steps()) apply(step);
}

LaurentPoly FormalIntegrand::result(const VarSet& target) const {
  const std::vector<std::string> gone(eliminated_.begin(), eliminated_.end());
  return drop_variables(body_, gone).embed(target);
}

VarSet q_operator_varset(std::size_t L) {
  std::vector<std::string> names = numbered_names("x", L);
  for (const auto& n : numbered_names("y", L)) names.push_back(n);
  for (const auto& n : numbered_names("t", L - 1)) names.push_back(n);
  names.push_back("w");
  names.push_back("z");
  return VarSet(std::move(names));
}

IntegrationPlan q_operator_plan(std::size_t L) {
  const VarSet vs = q_operator_varset(L);
  // x_L prod_{l<L} x_l t_l^2 / y_l
  LaurentPoly kernel = mono(vs, {{nm("x", L), 1}});
  for (std::size_t l = 1; l < L; ++l) kernel *= mono(vs, {{nm("x", l), 1}, {nm("t", l), 2}, {nm("y", l), -1}});
  IntegrationPlan plan;
  plan.add(DeltaSubstitute{nm("y", L), {kernel * mono(vs, {{"w", 1}}), kernel * mono(vs, {{"w", -1}})}});
  plan.add(WIntegrate{"w", mono(vs, {{"z", 1}})});
  for (std::size_t i = L - 1; i >= 1; --i) {
    plan.add(DlogIntegrate{nm("y", i), mono(vs, {{nm("t", i), 1}, {nm("x", i), 1}}),
                           mono(vs, {{nm("t", i), 1}, {nm("x", i + 1), 1}})});
    plan.add(PFunctional{nm("t", i)});
  }
  return plan;
}

namespace {

VarSet x_and_z(std::size_t L) {
  std::vector<std::string> names = numbered_names("x", L);
  names.push_back("z");
  return VarSet(std::move(names));
}

LaurentPoly run_q_plan(const LaurentPoly& integrand_over_y, std::size_t L) {
  FormalIntegrand integrand(integrand_over_y.embed(q_operator_varset(L)));
  integrand.run(q_operator_plan(L));
  return integrand.result(x_and_z(L));
}

}  // namespace

LaurentPoly q_operator_integral_apply(const Partition& lambda) {
  const std::size_t L = lambda.length();
  return run_q_plan(a_mu(mu_from_lambda(lambda), numbered_names("y", L)), L);
}

LaurentPoly q_operator_full_apply(const LaurentPoly& f, std::size_t L) {
  const LaurentPoly fy = f.embed(VarSet::numbered("x", L)).renamed(numbered_names("y", L));
  const LaurentPoly integrated = run_q_plan(a_mu(delta(L), numbered_names("y", L)) * fy, L);
  const VarSet target = x_and_z(L);
  const LaurentPoly den = phi_delta_closed_form(L).embed(target) * a_mu(delta(L)).embed(target);
  return divide_exact(integrated, den);
}

VarSet a_operator_varset(std::size_t k) {
  std::vector<std::string> names = numbered_names("y", k);
  for (const auto& n : numbered_names("t", k - 1)) names.push_back(n);
  names.push_back("w");
  for (const auto& n : numbered_names("x", k)) names.push_back(n);
  names.push_back("E");
  return VarSet(std::move(names));
}

IntegrationPlan a_operator_plan(std::size_t k) {
  const VarSet vs = a_operator_varset(k);
  // E prod_{l<k} t_l^2 x_l / y_l
  LaurentPoly kernel = mono(vs, {{"E", 1}});
  for (std::size_t l = 1; l < k; ++l) kernel *= mono(vs, {{nm("x", l), 1}, {nm("t", l), 2}, {nm("y", l), -1}});
  IntegrationPlan plan;
  plan.add(DeltaSubstitute{nm("y", k), {kernel * mono(vs, {{"w", -1}}), kernel * mono(vs, {{"w", 1}})}});
  plan.add(WIntegrate{"w", mono(vs, {{nm("x", k), 1}})});
  for (std::size_t i = k - 1; i >= 1; --i) {
    const LaurentPoly upper = i == k - 1 ? mono(vs, {{nm("t", i), 1}, {"E", 1}})
                                         : mono(vs, {{nm("t", i), 1}, {nm("x", i + 1), 1}});
    plan.add(DlogIntegrate{nm("y", i), mono(vs, {{nm("t", i), 1}, {nm("x", i), 1}}), upper});
    plan.add(PFunctional{nm("t", i)});
  }
  return plan;
}

EpsLimitResult a_k_integral_run(const Partition& lambda, std::size_t k, std::size_t eps_order) {
  const std::size_t L = lambda.length();
  if (k < 1 || k > L) throw std::invalid_argument("A_k needs 1 <= k <= L");
  if (eps_order < 1) throw std::invalid_argument("eps order must be at least 1");
  const LaurentPoly body = a_mu_trunc(mu_from_lambda(lambda), k + 1, numbered_names("y", k));
  FormalIntegrand integrand(body.embed(a_operator_varset(k)));
  integrand.run(a_operator_plan(k));
  std::vector<std::string> names = numbered_names("x", k);
  names.push_back("E");
  const LaurentPoly reduced = integrand.result(VarSet(std::move(names)));
  EpsSeries series = expand_exp_variable(reduced, "E", eps_order);
  LaurentPoly extracted = series[1] * Rational(1, 2);
  return EpsLimitResult{std::move(series), std::move(extracted)};
}

bool a_k_integral_verify(const Partition& lambda, std::size_t k, std::size_t eps_order) {
  const EpsLimitResult r = a_k_integral_run(lambda, k, eps_order);
  if (!r.series[0].is_zero()) return false;
  const MuVector mu = mu_from_lambda(lambda);
  const VarSet vs = VarSet::numbered("x", k);
  const LaurentPoly rhs = phi_mu(mu, nm("x", k)).embed(vs) * a_mu_trunc(mu, k).embed(vs);
  return r.extracted.embed(vs) == rhs;
}

namespace {

VarSet kprop_varset(std::size_t k, std::size_t L) {
  std::vector<std::string> names = numbered_names("x", k - 1);
  for (std::size_t i = k; i <= L; ++i) names.push_back(nm("u", i));
  return VarSet(std::move(names));
}

}  // namespace

LaurentPoly symbolic_a1(std::size_t k, std::size_t L) {
  const VarSet vs = kprop_varset(k, L);
  LaurentPoly out = LaurentPoly::constant(vs, Rational(1));
  for (std::size_t i = k; i <= L; ++i) {
    const LaurentPoly ui = mono(vs, {{nm("u", i), 1}});
    out *= ui;
    for (std::size_t j = i + 1; j <= L; ++j) out *= ui * ui - mono(vs, {{nm("u", j), 2}});
  }
  return out;
}

EpsSeries kprop_series(const Partition& lambda, std::size_t k) {
  const std::size_t L = lambda.length();
  if (k < 1 || k > L) throw std::invalid_argument("kprop needs 1 <= k <= L");
  const MuVector mu = mu_from_lambda(lambda);
  const std::size_t order = (L - k + 1) * (L - k + 1);
  const VarSet vs = kprop_varset(k, L);
  const EpsSeries zero(vs, order);
  Matrix<EpsSeries> m(L, std::vector<EpsSeries>(L, zero));
  for (std::size_t r = 0; r < L; ++r) {
    for (std::size_t c = 0; c < L; ++c) {
      std::vector<LaurentPoly> coeffs(order + 1, LaurentPoly(vs));
      if (r + 1 < k) {
        coeffs[0] = mono(vs, {{nm("x", r + 1), mu[c]}}) - mono(vs, {{nm("x", r + 1), -mu[c]}});
      } else {
        // e^{eps u mu} - e^{-eps u mu} = sum_n 2 (eps u mu)^{2n+1} / (2n+1)!
        for (std::size_t p = 1; p <= order; p += 2) {
          const Rational c2 = Rational(2) * Rational(mu[c]).pow(static_cast<int>(p)) * factorial(static_cast<int>(p)).inverse();
          coeffs[p] = mono(vs, {{nm("u", r + 1), static_cast<int>(p)}}, c2);
        }
      }
      m[r][c] = EpsSeries(order, std::move(coeffs));
    }
  }
  return cofactor_determinant(m, EpsSeries::constant(LaurentPoly::constant(vs, Rational(1)), order));
}

bool kprop_direct_verify(const Partition& lambda, std::size_t k) {
  const std::size_t L = lambda.length();
  const EpsSeries s = kprop_series(lambda, k);
  const std::size_t order = s.order();
  for (std::size_t p = 0; p < order; ++p) {
    if (!s[p].is_zero()) return false;
  }
  Rational c = Rational(2).pow(static_cast<int>(L - k + 1));
  for (std::size_t m = 0; m <= L - k; ++m) c /= factorial(static_cast<int>(2 * m + 1));
  const LaurentPoly expected = symbolic_a1(k, L) * a_mu_trunc(mu_from_lambda(lambda), k).embed(s.vars()) * c;
  return s[order] == expected;
}

bool kprop_inductive_verify(const Partition& lambda, std::size_t k) {
  const std::size_t L = lambda.length();
  if (k < 1 || k > L) throw std::invalid_argument("kprop needs 1 <= k <= L");
  const MuVector mu = mu_from_lambda(lambda);
  std::vector<std::string> names = numbered_names("x", k - 1);
  names.push_back("E");
  const std::size_t order = 2 * (L - k) + 1;
  const EpsSeries s = expand_exp_variable(a_mu_trunc(mu, k + 1, names), "E", order);
  for (std::size_t p = 0; p < order; ++p) {
    if (!s[p].is_zero()) return false;
  }
  const Rational c = Rational(2) * factorial(static_cast<int>(order)).inverse();
  return s[order] == a_mu_trunc(mu, k).embed(s.vars()) * c;
}

bool kprop_limit_verify(const Partition& lambda, std::size_t k) {
  return kprop_direct_verify(lambda, k) && kprop_inductive_verify(lambda, k);
}

std::map<Partition, LaurentPoly> q_basis_apply(const CharacterExpansion& e, const std::string& z) {
  std::map<Partition, LaurentPoly> out;
  for (const auto& [lambda, c] : e.coeffs()) out.emplace(lambda, q_poly(lambda, z) * c);
  return out;
}

LaurentPoly a_k_basis_apply(const Partition& lambda, std::size_t k) {
  const std::size_t L = lambda.length();
  if (k < 1 || k > L) throw std::invalid_argument("A_k needs 1 <= k <= L");
  const VarSet vs = VarSet::numbered("x", k);
  return q_poly(lambda, nm("x", k)).embed(vs) * chi_truncated(lambda, k - 1).embed(vs);
}

LaurentPoly separating_operator_apply(const CharacterExpansion& e) {
  const std::size_t L = e.length();
  LaurentPoly out(VarSet::numbered("x", L));
  for (const auto& [lambda, c] : e.coeffs()) out += q_product(lambda, L) * (dimension(lambda) * c);
  return out;
}

LaurentPoly separating_operator_chain(const CharacterExpansion& e) {
  const std::size_t L = e.length();
  const VarSet vs = VarSet::numbered("x", L);
  LaurentPoly out(vs);
  for (const auto& [lambda, c] : e.coeffs()) {
    LaurentPoly current = chi(lambda);
    LaurentPoly factors = LaurentPoly::constant(vs, Rational(1));
    for (std::size_t k = L; k >= 1; --k) {
      // A_k on rho_k chi leaves q(x_k) times rho_{k-1} chi.
      const LaurentPoly q = q_poly(lambda, nm("x", k));
      const LaurentPoly next = eval_at_one(current, {nm("x", k)});
      const VarSet vk = VarSet::numbered("x", k);
      if (!(a_k_basis_apply(lambda, k) == q.embed(vk) * next.embed(vk))) {
        throw ConsistencyError("A_" + std::to_string(k) + " disagrees with the specialised character");
      }
      factors *= q.embed(vs);
      current = next;
    }
    out += factors * current.embed(vs) * c;
  }
  return out;
}

bool qa_consistency_check(const Partition& lambda, std::size_t k) {
  const std::size_t L = lambda.length();
  if (k < 1 || k > L) throw std::invalid_argument("A_k needs 1 <= k <= L");
  const LaurentPoly qz = q_operator_full_apply(chi(lambda), L);
  std::vector<std::string> trailing;
  for (std::size_t i = k; i <= L; ++i) trailing.push_back(nm("x", i));
  const LaurentPoly rho = eval_at_one(qz, trailing);
  const LaurentPoly at_xk = rho.renamed(numbered_names("x", k));
  return at_xk == a_k_basis_apply(lambda, k);
}

}  // namespace sov
