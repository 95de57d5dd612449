#include "sov/operators/operators.hpp"

#include <stdexcept>

#include "sov/algebra/errors.hpp"

namespace sov {

namespace {

int parity_sign(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

// Univariate polynomial `f` in "z" rewritten in variable `name` and embedded in `target`.
LaurentPoly as_variable(const LaurentPoly& f, const std::string& name, const VarSet& target) {
  return f.renamed({name}).embed(target);
}

}  // namespace

Rational elementary_symmetric(const std::vector<Rational>& vals, std::size_t j) {
  if (j > vals.size()) throw std::invalid_argument("elementary_symmetric: j exceeds the number of values");
  // e[r] after processing a prefix holds e_r of that prefix.
  std::vector<Rational> e(j + 1, Rational(0));
  e[0] = Rational(1);
  for (const Rational& v : vals) {
    for (std::size_t r = j; r >= 1; --r) e[r].add_product(e[r - 1], v);
  }
  return e[j];
}

LaurentPoly apply_e_j_of_D2(const LaurentPoly& f, std::size_t j, std::size_t L) {
  if (f.vars().size() != L) throw VarSetMismatch("apply_e_j_of_D2: polynomial must have L variables");
  if (j == 0) return f;
  return f.scale_terms([&](const Exponents& e) {
    std::vector<Rational> sq(L);
    for (std::size_t i = 0; i < L; ++i) sq[i] = Rational(static_cast<long>(e[i]) * e[i]);
    return elementary_symmetric(sq, j);
  });
}

LaurentPoly hamiltonian_apply(std::size_t j, const LaurentPoly& f, std::size_t L) {
  if (j > L) throw std::invalid_argument("hamiltonian_apply: j must be at most L");
  const LaurentPoly ad = a_mu(delta(L));
  const LaurentPoly g = f.embed(ad.vars());
  return divide_exact(apply_e_j_of_D2(ad * g, j, L), ad);
}

Rational eigenvalue(const Partition& lambda, std::size_t j) {
  const MuVector mu = mu_from_lambda(lambda);
  if (j < 1 || j > mu.length()) throw std::invalid_argument("eigenvalue: j must satisfy 1 <= j <= L");
  std::vector<Rational> sq;
  for (int m : mu.values()) sq.emplace_back(static_cast<long>(m) * m);
  return elementary_symmetric(sq, j);
}

LaurentPoly K_operator_apply(const LaurentPoly& f, std::size_t n) {
  if (n > f.vars().size()) throw VarSetMismatch("K_operator_apply: fewer variables than n");
  return f.scale_terms([n](const Exponents& e) {
    Rational s(1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        s *= Rational(static_cast<long>(e[i]) * e[i] - static_cast<long>(e[j]) * e[j]);
      }
    }
    return s;
  });
}

LaurentPoly phi_delta_multi(std::size_t L, std::size_t k) {
  return phi_mu(delta(L), k, numbered_names("x", k));
}

LaurentPoly phi_delta_product(std::size_t L, std::size_t k) {
  const VarSet vs = VarSet::numbered("x", k);
  const LaurentPoly pd = phi_delta_closed_form(L);
  LaurentPoly out = LaurentPoly::constant(vs, Rational(1));
  for (std::size_t i = 0; i < k; ++i) out *= as_variable(pd, vs.name(i), vs);
  return out;
}

LaurentPoly s_inverse_apply(const LaurentPoly& f, std::size_t L) {
  const VarSet vs = VarSet::numbered("x", L);
  const LaurentPoly kf = K_operator_apply(phi_delta_product(L, L) * f.embed(vs), L);
  LaurentPoly out = divide_exact(kf, phi_delta_multi(L, L));
  if (parity_sign(L * (L - 1) / 2) < 0) out = -out;
  return out;
}

int s_k_inverse_sign(std::size_t L, std::size_t k) {
  if (k < 1 || k > L) throw std::invalid_argument("S_k^{-1}: k must satisfy 1 <= k <= L");
  return parity_sign(k * (k - 1) / 2);
}

int s_k_inverse_sign_as_printed(std::size_t L, std::size_t k) {
  return parity_sign((L - 1) * L / 2 + k * (L + 1));
}

LaurentPoly s_k_inverse_apply(const LaurentPoly& f, std::size_t L, std::size_t k) {
  const int sign = s_k_inverse_sign(L, k);
  const VarSet vs = VarSet::numbered("x", k);
  const LaurentPoly kf = K_operator_apply(phi_delta_product(L, k) * f.embed(vs), k);
  LaurentPoly out = divide_exact(kf, phi_delta_multi(L, k));
  if (sign < 0) out = -out;
  return out;
}

LaurentPoly q_product(const Partition& lambda, std::size_t k) {
  const VarSet vs = VarSet::numbered("x", k);
  const LaurentPoly q = q_poly(lambda);
  LaurentPoly out = LaurentPoly::constant(vs, Rational(1));
  for (std::size_t i = 0; i < k; ++i) out *= as_variable(q, vs.name(i), vs);
  return out;
}

LaurentPoly apply_mu_operator(const LaurentPoly& f, const MuVector& mu) {
  if (f.vars().size() != 1) throw VarSetMismatch("apply_mu_operator: expected a univariate polynomial");
  return f.scale_terms([&](const Exponents& e) {
    const long m2 = static_cast<long>(e[0]) * e[0];
    Rational s(1);
    for (int v : mu.values()) s *= Rational(m2 - static_cast<long>(v) * v);
    return s;
  });
}

LaurentPoly diff2_residual(const Partition& lambda) {
  const LaurentPoly g = phi_delta_closed_form(lambda.length()) * q_poly(lambda);
  return apply_mu_operator(g, mu_from_lambda(lambda));
}

RationalFunction z_operator_apply(const RationalFunction& f, std::size_t L) {
  const VarSet& vs = f.vars();
  const std::string& z = vs.name(0);
  const Rational l(static_cast<long>(L));
  const LaurentPoly num = LaurentPoly::variable(vs, z, 2, l) + LaurentPoly::variable(vs, z, 1, Rational(2) * l - Rational(2)) +
                          LaurentPoly::constant(vs, l);
  const LaurentPoly den = LaurentPoly::variable(vs, z, 2) - LaurentPoly::constant(vs, Rational(1));
  return f.euler_derivative() + RationalFunction(num, den) * f;
}

RationalFunction w_operator_residual(const Partition& lambda) {
  const std::size_t L = lambda.length();
  const MuVector mu = mu_from_lambda(lambda);
  RationalFunction f(q_poly(lambda));
  for (int m : mu.values()) {
    const RationalFunction z2 = z_operator_apply(z_operator_apply(f, L), L);
    f = z2 - f * Rational(static_cast<long>(m) * m);
  }
  return f;
}

bool w_annihilation_check(const Partition& lambda) {
  return diff2_residual(lambda).is_zero() && w_operator_residual(lambda).is_zero();
}

WeightVector::WeightVector(std::vector<Rational> c) : c_(std::move(c)) {
  Rational sum(0);
  for (const Rational& v : c_) sum += v;
  if (sum != Rational(1)) throw std::invalid_argument("weights must sum to 1");
}

WeightVector WeightVector::first_site(std::size_t L) {
  std::vector<Rational> c(L, Rational(0));
  c.at(0) = Rational(1);
  return WeightVector(std::move(c));
}

LaurentPoly w_single_site(const Partition& lambda, std::size_t i) {
  const std::size_t L = lambda.length();
  const VarSet vs = VarSet::numbered("x", L);
  const LaurentPoly pd = phi_delta_closed_form(L);
  const LaurentPoly residual = apply_mu_operator(pd * q_poly(lambda), mu_from_lambda(lambda));
  return as_variable(divide_exact(residual, pd), vs.name(i), vs);
}

LaurentPoly factorized_hamiltonian_apply(const Partition& lambda, std::size_t j, const WeightVector& c) {
  const std::size_t L = lambda.length();
  if (c.size() != L) throw std::invalid_argument("weight vector length must equal L");
  const VarSet vs = VarSet::numbered("x", L);
  const LaurentPoly q = q_poly(lambda);
  const LaurentPoly prod = q_product(lambda, L);
  const Rational h = eigenvalue(lambda, j);
  LaurentPoly out(vs);
  for (std::size_t i = 0; i < L; ++i) {
    if (c[i].is_zero()) continue;
    // W_i commutes with q(x_k) for k != i, so it only touches the i-th factor.
    LaurentPoly others = LaurentPoly::constant(vs, Rational(1));
    for (std::size_t k = 0; k < L; ++k) {
      if (k != i) others *= as_variable(q, vs.name(k), vs);
    }
    out += (w_single_site(lambda, i) * others + prod * h) * c[i];
  }
  return out;
}

bool factorized_hamiltonian_check(const Partition& lambda, std::size_t j, const WeightVector& c) {
  try {
    return factorized_hamiltonian_apply(lambda, j, c) == q_product(lambda, lambda.length()) * eigenvalue(lambda, j);
  } catch (const NotDivisible&) {
    return false;
  }
}

}  // namespace sov
