#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sov/algebra/laurent_poly.hpp"
#include "sov/characters/partition.hpp"

namespace sov {

/// Variable names prefix1..prefixN.
std::vector<std::string> numbered_names(const std::string& prefix, std::size_t count);

/// det[x_i^{mu_j} - x_i^{-mu_j}] over the variables `names` (|names| = L).
LaurentPoly a_mu(const MuVector& mu, const std::vector<std::string>& names);
LaurentPoly a_mu(const MuVector& mu);

/// Truncated determinant: rows i < k are x_i^{mu_j} - x_i^{-mu_j}, rows i >= k
/// are the numbers mu_j^{2(L-i)+1}. Polynomial in k-1 variables; 1 <= k <= L+1.
LaurentPoly a_mu_trunc(const MuVector& mu, std::size_t k, const std::vector<std::string>& names);
LaurentPoly a_mu_trunc(const MuVector& mu, std::size_t k);

/// prod_i mu_i * prod_{i<j} (mu_i^2 - mu_j^2); equals a_mu_trunc(mu, 1).
Rational a1_mu_product(const MuVector& mu);
/// Same product for an arbitrary list of integers (no ordering required).
Rational a1_product(const std::vector<int>& values);

/// Row expansion of a_mu_trunc(mu, 2) in the single variable `z`.
LaurentPoly a2_mu_expansion(const MuVector& mu, const std::string& z = "z");

/// prod x_i^{i-L} prod_{i<j}(x_i - x_j) prod_{i<=j}(x_i - 1/x_j); equals a_mu(delta).
LaurentPoly weyl_denominator_product(std::size_t L);

/// Product form of a_mu_trunc(delta, k), polynomial in x_1..x_{k-1}.
LaurentPoly a_delta_trunc_product(std::size_t L, std::size_t k);

/// Symplectic character a_mu / a_delta by exact division.
LaurentPoly chi(const Partition& lambda);
/// chi(x_1..x_k, 1..1) as a_mu_trunc(mu, k+1) / a_mu_trunc(delta, k+1); 0 <= k <= L.
LaurentPoly chi_truncated(const Partition& lambda, std::size_t k);
/// Weyl dimension formula prod_i mu_i/(2i-1)! prod_{i<j}(mu_i^2 - mu_j^2).
Rational dimension(const Partition& lambda);

/// a_mu_trunc(mu, k+1)(z_1..z_k) / a1_mu_product(mu), over `names` (|names| = k).
LaurentPoly phi_mu(const MuVector& mu, std::size_t k, const std::vector<std::string>& names);
/// Univariate case k = 1.
LaurentPoly phi_mu(const MuVector& mu, const std::string& z = "z");
/// (z+1)(z-1)^{2L-1} / (z^L (2L-1)!), expanded.
LaurentPoly phi_delta_closed_form(std::size_t L, const std::string& z = "z");

/// chi(z,1,..,1)/chi(1,..,1) = phi_mu(z)/phi_delta(z), by exact univariate division.
LaurentPoly q_poly(const Partition& lambda, const std::string& z = "z");

/// Finite linear combination sum c_lambda chi_lambda, all partitions of length L.
class CharacterExpansion {
 public:
  explicit CharacterExpansion(std::size_t L) : L_(L) {}

  std::size_t length() const { return L_; }
  const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  Rational coefficient(const Partition& lambda) const;

  /// Adds c * chi_lambda; zero results are removed.
  void add(const Partition& lambda, const Rational& c);

  friend bool operator==(const CharacterExpansion&, const CharacterExpansion&) = default;

 private:
  std::size_t L_;
  std::map<Partition, Rational> coeffs_;
};

/// True when f is symmetric in its variables and invariant under each x_i -> 1/x_i.
bool is_weyl_invariant(const LaurentPoly& f);

/// Coefficients of f in the chi basis, read from the dominant monomials of a_delta * f.
/// Throws NotWeylInvariant for non-invariant input and ConsistencyError if the
/// reconstruction does not reproduce f.
CharacterExpansion expand_in_chi_basis(const LaurentPoly& f, std::size_t L);

/// sum c_lambda chi_lambda over x1..xL.
LaurentPoly reconstruct(const CharacterExpansion& e);

}  // namespace sov
