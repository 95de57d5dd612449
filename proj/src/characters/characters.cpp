#include "sov/characters/characters.hpp"

#include <stdexcept>
#include <utility>

#include "sov/algebra/determinant.hpp"
#include "sov/algebra/errors.hpp"

namespace sov {

namespace {

LaurentPoly odd_binomial(const VarSet& vs, std::size_t var, int m) {
  Exponents e(vs.size());
  e.set(var, m);
  Exponents inv(vs.size());
  inv.set(var, -m);
  return LaurentPoly::from_terms(vs, {{e, Rational(1)}, {inv, Rational(-1)}});
}

Rational int_pow(long base, int exp) { return Rational(base).pow(exp); }

// x_i^{i-L} prod_{i<j}(x_i - x_j) prod_{i<=j}(x_i - 1/x_j) over the first n
// variables of vs, with the exponent shift i - L taken for the full length L.
LaurentPoly denominator_core(const VarSet& vs, std::size_t n, std::size_t L) {
  LaurentPoly out = LaurentPoly::constant(vs, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    const int shift = static_cast<int>(i + 1) - static_cast<int>(L);
    out *= LaurentPoly::variable(vs, vs.name(i), shift);
    for (std::size_t j = i; j < n; ++j) {
      const LaurentPoly xi = LaurentPoly::variable(vs, vs.name(i));
      if (j > i) out *= xi - LaurentPoly::variable(vs, vs.name(j));
      out *= xi - LaurentPoly::variable(vs, vs.name(j), -1);
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> numbered_names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

LaurentPoly a_mu(const MuVector& mu, const std::vector<std::string>& names) {
  if (names.size() != mu.length()) throw std::invalid_argument("a_mu needs one variable per part of mu");
  return a_mu_trunc(mu, mu.length() + 1, names);
}

LaurentPoly a_mu(const MuVector& mu) { return a_mu(mu, numbered_names("x", mu.length())); }

LaurentPoly a_mu_trunc(const MuVector& mu, std::size_t k, const std::vector<std::string>& names) {
  const std::size_t L = mu.length();
  if (k < 1 || k > L + 1) throw std::invalid_argument("truncation index k must satisfy 1 <= k <= L+1");
  if (names.size() != k - 1) throw std::invalid_argument("a_mu_trunc needs k-1 variables");
  const VarSet vs(names);
  PolyMatrix m(L, std::vector<LaurentPoly>(L, LaurentPoly(vs)));
  for (std::size_t r = 0; r < L; ++r) {
    for (std::size_t c = 0; c < L; ++c) {
      if (r + 1 < k) {
        m[r][c] = odd_binomial(vs, r, mu[c]);
      } else {
        // 1-based row i = r+1 carries mu_j^{2(L-i)+1}
        m[r][c] = LaurentPoly::constant(vs, int_pow(mu[c], static_cast<int>(2 * (L - r) - 1)));
      }
    }
  }
  return det_poly_matrix(m, vs);
}

LaurentPoly a_mu_trunc(const MuVector& mu, std::size_t k) {
  return a_mu_trunc(mu, k, numbered_names("x", k == 0 ? 0 : k - 1));
}

Rational a1_product(const std::vector<int>& values) {
  Rational out(1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    out *= Rational(values[i]);
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      out *= Rational(static_cast<long>(values[i]) * values[i] - static_cast<long>(values[j]) * values[j]);
    }
  }
  return out;
}

Rational a1_mu_product(const MuVector& mu) { return a1_product(mu.values()); }

LaurentPoly a2_mu_expansion(const MuVector& mu, const std::string& z) {
  const VarSet vs{z};
  LaurentPoly out(vs);
  const std::size_t L = mu.length();
  for (std::size_t k = 0; k < L; ++k) {
    std::vector<int> rest;
    for (std::size_t i = 0; i < L; ++i) {
      if (i != k) rest.push_back(mu[i]);
    }
    Rational c = a1_product(rest);
    if (k % 2 == 1) c = -c;
    out += c * odd_binomial(vs, 0, mu[k]);
  }
  return out;
}

LaurentPoly weyl_denominator_product(std::size_t L) {
  if (L == 0) throw std::invalid_argument("L must be positive");
  return denominator_core(VarSet::numbered("x", L), L, L);
}

LaurentPoly a_delta_trunc_product(std::size_t L, std::size_t k) {
  if (k < 1 || k > L + 1) throw std::invalid_argument("truncation index k must satisfy 1 <= k <= L+1");
  const std::size_t n = k - 1;
  const VarSet vs = VarSet::numbered("x", n);
  Rational c(1);
  for (std::size_t i = 0; i + k <= L; ++i) c *= factorial(static_cast<int>(2 * i + 1));
  LaurentPoly out = denominator_core(vs, n, L) * c;
  const unsigned power = static_cast<unsigned>(2 * (L - k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    out *= (LaurentPoly::variable(vs, vs.name(i)) - LaurentPoly::constant(vs, Rational(1))).pow(power);
  }
  return out;
}

LaurentPoly chi(const Partition& lambda) {
  const std::size_t L = lambda.length();
  return divide_exact(a_mu(mu_from_lambda(lambda)), a_mu(delta(L)));
}

LaurentPoly chi_truncated(const Partition& lambda, std::size_t k) {
  const std::size_t L = lambda.length();
  if (k > L) throw std::invalid_argument("chi_truncated needs 0 <= k <= L");
  return divide_exact(a_mu_trunc(mu_from_lambda(lambda), k + 1), a_mu_trunc(delta(L), k + 1));
}

Rational dimension(const Partition& lambda) {
  const MuVector mu = mu_from_lambda(lambda);
  Rational out = a1_mu_product(mu);
  for (std::size_t i = 1; i <= mu.length(); ++i) out /= factorial(static_cast<int>(2 * i - 1));
  return out;
}

LaurentPoly phi_mu(const MuVector& mu, std::size_t k, const std::vector<std::string>& names) {
  return a_mu_trunc(mu, k + 1, names) * a1_mu_product(mu).inverse();
}

LaurentPoly phi_mu(const MuVector& mu, const std::string& z) { return phi_mu(mu, 1, {z}); }

LaurentPoly phi_delta_closed_form(std::size_t L, const std::string& z) {
  if (L == 0) throw std::invalid_argument("L must be positive");
  const VarSet vs{z};
  const LaurentPoly zv = LaurentPoly::variable(vs, z);
  const LaurentPoly one = LaurentPoly::constant(vs, Rational(1));
  LaurentPoly out = (zv + one) * (zv - one).pow(static_cast<unsigned>(2 * L - 1));
  out *= LaurentPoly::variable(vs, z, -static_cast<int>(L));
  return out * factorial(static_cast<int>(2 * L - 1)).inverse();
}

LaurentPoly q_poly(const Partition& lambda, const std::string& z) {
  return divide_exact(phi_mu(mu_from_lambda(lambda), z), phi_mu(delta(lambda.length()), z));
}

Rational CharacterExpansion::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void CharacterExpansion::add(const Partition& lambda, const Rational& c) {
  if (lambda.length() != L_) throw std::invalid_argument("partition length does not match the expansion");
  Rational& slot = coeffs_[lambda];
  slot += c;
  if (slot.is_zero()) coeffs_.erase(lambda);
}

bool is_weyl_invariant(const LaurentPoly& f) {
  const std::size_t n = f.vars().size();
  if (n == 0) return true;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) perm[j] = j;
    std::swap(perm[i], perm[i + 1]);
    if (!(f.permuted(perm) == f)) return false;
  }
  return f.inverted(0) == f;
}

CharacterExpansion expand_in_chi_basis(const LaurentPoly& f, std::size_t L) {
  const VarSet vs = VarSet::numbered("x", L);
  const LaurentPoly g = f.embed(vs);
  if (!is_weyl_invariant(g)) throw NotWeylInvariant("expand_in_chi_basis: input is not Weyl invariant");
  const LaurentPoly anti = a_mu(delta(L)) * g;
  CharacterExpansion out(L);
  for (const Term& t : anti.terms()) {
    bool dominant = t.exps[L - 1] >= 1;
    for (std::size_t i = 0; dominant && i + 1 < L; ++i) dominant = t.exps[i] > t.exps[i + 1];
    if (!dominant) continue;
    std::vector<int> nu(L);
    for (std::size_t i = 0; i < L; ++i) nu[i] = t.exps[i];
    out.add(lambda_from_mu(MuVector(nu)), t.coeff);
  }
  if (!(reconstruct(out) == g)) throw ConsistencyError("expand_in_chi_basis: reconstruction does not reproduce the input");
  return out;
}

LaurentPoly reconstruct(const CharacterExpansion& e) {
  const VarSet vs = VarSet::numbered("x", e.length());
  LaurentPoly out(vs);
  for (const auto& [lambda, c] : e.coeffs()) out += chi(lambda) * c;
  return out;
}

}  // namespace sov
