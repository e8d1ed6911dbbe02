#pragma once

#include <optional>
#include <vector>

#include "rrcbf/class_k.hpp"
#include "rrcbf/plants.hpp"

namespace rrcbf {

enum class CbfVariant { ZCBF, RCBF, RRCBF, RoCBF, DOCBF, DORRCBF, HORRCBF, HODORRCBF };

bool variant_uses_beta(CbfVariant v);
bool variant_uses_estimate(CbfVariant v);
const char* variant_name(CbfVariant v);

/// Bound on the observer estimation error used by the DO-CBF margin term.
/// None drops the term (the configuration the ACC comparison runs use);
/// Decaying is eps_inf + (eps0 - eps_inf) e^{-rate t}.
struct EstimationErrorPolicy {
  enum class Kind { None, Constant, Decaying };
  Kind kind = Kind::None;
  double eps0 = 0.0;
  double rate = 0.0;
  double eps_inf = 0.0;

  double value(double t) const;
};

struct CbfVariantConfig {
  CbfVariant variant = CbfVariant::ZCBF;
  std::vector<ClassKFn> alpha_chain;        // length = relative degree of h
  std::optional<ClassKFn> beta;             // required for reciprocal-resistance variants
  double sigma = 0.0;                       // reciprocal regularization
  std::optional<double> disturbance_bound;  // delta_0 for RoCBF, matched input units
  EstimationErrorPolicy error_bound_policy;

  /// Throws ConfigError on any structural mismatch with the plant.
  void validate(int relative_degree) const;
};

/// One affine inequality a.u + b >= 0 on the control input.
struct HalfspaceConstraint {
  RowVector a;
  double b = 0.0;
};

/// The recursion psi_0 = h, psi_i = psi_{i-1}-dot + alpha_i(psi_{i-1}),
/// together with the coefficients of psi_{r-1}-dot = c0(x) + c1(x) u.
struct PsiChain {
  std::vector<double> values;  // psi_0 .. psi_{r-1}
  double c0 = 0.0;
  RowVector c1;
};

/// First-order (relative degree 1) constraint builder. d_hat is the matched
/// (input-space) disturbance estimate, required exactly for the observer
/// variants. t only matters for a Decaying estimation-error policy.
HalfspaceConstraint build_constraint(const CbfVariantConfig& config, const PlantModel& plant,
                                     const Vector& x, const std::optional<Vector>& d_hat = {},
                                     double t = 0.0);

/// Builds the psi recursion at x. Verifies L_g L_f^k h = 0 for k <= r-2
/// (ModelError otherwise). Gradients of chain levels use analytic evaluators
/// from the plant's SafeFunctionSpec when present and central finite
/// differences otherwise.
PsiChain build_psi_chain(const CbfVariantConfig& config, const PlantModel& plant, const Vector& x);

/// Applies the variant condition at the top level of a prebuilt chain; the
/// simulator uses this to log psi values without rebuilding the chain.
HalfspaceConstraint apply_chain_variant(const CbfVariantConfig& config, const PsiChain& chain,
                                        const std::optional<Vector>& d_hat = {}, double t = 0.0);

/// High-order constraint: the variant condition applied at the psi_{r-1}
/// level. With r = 1 this reproduces build_constraint exactly.
HalfspaceConstraint build_ho_constraint(const CbfVariantConfig& config, const PlantModel& plant,
                                        const Vector& x, const std::optional<Vector>& d_hat = {},
                                        double t = 0.0);

}  // namespace rrcbf
