#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sov/algebra/eps_series.hpp"
#include "sov/algebra/laurent_poly.hpp"
#include "sov/characters/characters.hpp"

namespace sov {

/// Sum over m of c_m / m for f = sum c_m var^m; var is eliminated. Throws
/// ConstantTermError when the var^0 coefficient is nonzero.
LaurentPoly p_functional(const LaurentPoly& f, std::string_view var);

/// Integral of f dvar/var from `lower` to `upper` (single terms over the same
/// variables): var^m -> (upper^m - lower^m)/m. Throws ConstantTermError on a
/// var^0 term, which would integrate to a logarithm.
LaurentPoly dlog_integral(const LaurentPoly& f, std::string_view var, const LaurentPoly& lower,
                          const LaurentPoly& upper);

/// Integral of f dw/w from 1 to `upper`.
LaurentPoly w_integral(const LaurentPoly& f, std::string_view var, const LaurentPoly& upper);

/// Integration steps. Every step eliminates exactly one variable.
struct DeltaSubstitute {
  std::string var;
  /// One image per delta kernel; the branches are summed.
  std::vector<LaurentPoly> images;
};
struct WIntegrate {
  std::string var;
  LaurentPoly upper;
};
struct DlogIntegrate {
  std::string var;
  LaurentPoly lower;
  LaurentPoly upper;
};
struct PFunctional {
  std::string var;
};
using IntegrationStep = std::variant<DeltaSubstitute, WIntegrate, DlogIntegrate, PFunctional>;

class IntegrationPlan {
 public:
  IntegrationPlan() = default;
  void add(IntegrationStep step);
  const std::vector<IntegrationStep>& steps() const { return steps_; }
  /// Variables eliminated by the plan, in order.
  std::vector<std::string> eliminated() const;

 private:
  std::vector<IntegrationStep> steps_;
};

/// Laurent polynomial over the extended variable set, tracking which
/// variables have already been integrated out.
class FormalIntegrand {
 public:
  explicit FormalIntegrand(LaurentPoly body) : body_(std::move(body)) {}

  const LaurentPoly& body() const { return body_; }
  const std::set<std::string>& eliminated() const { return eliminated_; }

  /// Applies one step; throws ConsistencyError if the variable was already eliminated.
  void apply(const IntegrationStep& step);
  void run(const IntegrationPlan& plan);

  /// The body restricted to `target`; eliminated variables are dropped first.
  LaurentPoly result(const VarSet& target) const;

 private:
  LaurentPoly body_;
  std::set<std::string> eliminated_;
};

/// Variables x1..xL, y1..yL, t1..t(L-1), w, z.
VarSet q_operator_varset(std::size_t L);

/// The plan for Q_z with L variables: both delta kernels for yL, then w up to z,
/// then (y_i, t_i) for i = L-1 down to 1.
IntegrationPlan q_operator_plan(std::size_t L);

/// Runs the Q_z plan on a_mu(y). Result over x1..xL, z; equals phi_mu(z) a_mu(x).
LaurentPoly q_operator_integral_apply(const Partition& lambda);

/// Q_z f for Weyl-invariant f over x1..xL: the plan applied to a_delta(y) f(y),
/// divided exactly by phi_delta(z) a_delta(x). Result over x1..xL, z.
LaurentPoly q_operator_full_apply(const LaurentPoly& f, std::size_t L);

/// Limit data: the eps-series of the integrated expression and half its eps^1 coefficient.
struct EpsLimitResult {
  EpsSeries series;
  LaurentPoly extracted;
};

/// Variables y1..yk, t1..t(k-1), w, x1..xk, E, where E stands for e^eps.
VarSet a_operator_varset(std::size_t k);
IntegrationPlan a_operator_plan(std::size_t k);

/// Runs the A_k plan on a^{(k+1)}_mu(y1..yk) and expands in eps to `eps_order`.
EpsLimitResult a_k_integral_run(const Partition& lambda, std::size_t k, std::size_t eps_order = 2);
/// eps^0 vanishes and the extracted part equals phi_mu(x_k) a^{(k)}_mu(x1..x(k-1)).
bool a_k_integral_verify(const Partition& lambda, std::size_t k, std::size_t eps_order = 2);

/// a_mu(x1..x(k-1), e^{eps u_k}, ..., e^{eps u_L}) as an eps-series to order
/// (L-k+1)^2, coefficients over x1..x(k-1), u_k..u_L.
EpsSeries kprop_series(const Partition& lambda, std::size_t k);
/// prod u_i prod_{i<j}(u_i^2 - u_j^2) over u_k..u_L.
LaurentPoly symbolic_a1(std::size_t k, std::size_t L);
/// All-trajectory route: coefficients below (L-k+1)^2 vanish and the leading one
/// is 2^{L-k+1} a1(u) / prod_{m=0}^{L-k}(2m+1)! times a^{(k)}_mu.
bool kprop_direct_verify(const Partition& lambda, std::size_t k);
/// One-variable route: a^{(k+1)}_mu(x1..x(k-1), e^eps) has leading coefficient
/// 2/(2(L-k)+1)! a^{(k)}_mu at order 2(L-k)+1.
bool kprop_inductive_verify(const Partition& lambda, std::size_t k);
bool kprop_limit_verify(const Partition& lambda, std::size_t k);

/// c_lambda -> c_lambda q_lambda(z).
std::map<Partition, LaurentPoly> q_basis_apply(const CharacterExpansion& e, const std::string& z = "z");

/// q_lambda(x_k) chi_lambda(x1..x(k-1), 1..1), over x1..xk.
LaurentPoly a_k_basis_apply(const Partition& lambda, std::size_t k);

/// S f = sum c_lambda dim(lambda) prod_i q_lambda(x_i), over x1..xL.
LaurentPoly separating_operator_apply(const CharacterExpansion& e);
/// Same value through the chain A_1 ... A_L, specialising one variable at a time.
LaurentPoly separating_operator_chain(const CharacterExpansion& e);

/// rho_{k-1}(Q_z chi_lambda) at z = x_k equals a_k_basis_apply(lambda, k).
bool qa_consistency_check(const Partition& lambda, std::size_t k);

}  // namespace sov
