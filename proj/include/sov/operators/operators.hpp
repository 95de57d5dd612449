#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sov/algebra/laurent_poly.hpp"
#include "sov/algebra/rational_function.hpp"
#include "sov/characters/characters.hpp"

namespace sov {

/// e_j(vals); e_0 = 1.
Rational elementary_symmetric(const std::vector<Rational>& vals, std::size_t j);

/// e_j(D_1^2, ..., D_L^2) on a polynomial over L variables: the monomial with
/// exponents m is scaled by e_j(m_1^2, ..., m_L^2).
LaurentPoly apply_e_j_of_D2(const LaurentPoly& f, std::size_t j, std::size_t L);

/// H_j f = a_delta^{-1} e_j(D^2) a_delta f over x1..xL. f must be Weyl invariant;
/// otherwise the final division throws NotDivisible.
LaurentPoly hamiltonian_apply(std::size_t j, const LaurentPoly& f, std::size_t L);

/// h_j(lambda) = e_j(mu_1^2, ..., mu_L^2).
Rational eigenvalue(const Partition& lambda, std::size_t j);

/// K_n = det[D_{x_i}^{2(n-j)}] acting on the first n variables of f. On the
/// monomial with exponents m it is the scalar prod_{i<j}(m_i^2 - m_j^2).
LaurentPoly K_operator_apply(const LaurentPoly& f, std::size_t n);

/// phi_delta(x1..xk) = a_delta^{(k+1)}(x1..xk) / a_delta^{(1)} for L variables.
LaurentPoly phi_delta_multi(std::size_t L, std::size_t k);

/// prod_{i<=k} phi_delta(x_i), over x1..xk.
LaurentPoly phi_delta_product(std::size_t L, std::size_t k);

/// S^{-1} f = (-1)^{L(L-1)/2} phi_delta(x)^{-1} K_L prod phi_delta(x_i) f, with f over x1..xL.
LaurentPoly s_inverse_apply(const LaurentPoly& f, std::size_t L);

/// Sign used in front of S_k^{-1}: (-1)^{k(k-1)/2}.
int s_k_inverse_sign(std::size_t L, std::size_t k);
/// The sign as printed in the statement, (-1)^{(L-1)L/2 + k(L+1)}.
int s_k_inverse_sign_as_printed(std::size_t L, std::size_t k);

/// S_k^{-1} f with f over x1..xk.
LaurentPoly s_k_inverse_apply(const LaurentPoly& f, std::size_t L, std::size_t k);

/// prod_{i<=k} q_lambda(x_i), over x1..xk.
LaurentPoly q_product(const Partition& lambda, std::size_t k);

/// prod_n (D_z^2 - mu_n^2) applied to a univariate polynomial.
LaurentPoly apply_mu_operator(const LaurentPoly& f, const MuVector& mu);

/// prod_n (D_z^2 - mu_n^2) (phi_delta(z) q_lambda(z)); zero when the identity holds.
LaurentPoly diff2_residual(const Partition& lambda);

/// Z = D_z + (L z^2 + 2L z - 2z + L)/(z^2 - 1) as an operator on rational functions in z.
RationalFunction z_operator_apply(const RationalFunction& f, std::size_t L);

/// W q_lambda with W = prod_n (Z^2 - mu_n^2), computed on rational functions.
RationalFunction w_operator_residual(const Partition& lambda);

/// True iff both the polynomial route and the Z route give zero.
bool w_annihilation_check(const Partition& lambda);

/// Weights c_1..c_L with sum 1.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> c);
  /// (1, 0, ..., 0)
  static WeightVector first_site(std::size_t L);

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& values() const { return c_; }

 private:
  std::vector<Rational> c_;
};

/// W_i q_lambda(x_i), obtained as phi_delta(x_i)^{-1} prod_n (D^2 - mu_n^2) phi_delta(x_i) q_lambda(x_i).
LaurentPoly w_single_site(const Partition& lambda, std::size_t i);

/// sum_i c_i (W_i + h_j) prod_k q_lambda(x_k), over x1..xL.
LaurentPoly factorized_hamiltonian_apply(const Partition& lambda, std::size_t j, const WeightVector& c);

/// factorized_hamiltonian_apply(...) == h_j prod_k q_lambda(x_k).
bool factorized_hamiltonian_check(const Partition& lambda, std::size_t j, const WeightVector& c);

}  // namespace sov
