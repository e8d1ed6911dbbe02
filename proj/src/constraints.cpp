#include "rrcbf/constraints.hpp"

#include <cmath>
#include <string>

#include "rrcbf/errors.hpp"

namespace rrcbf {

namespace {
constexpr double kSingularBand = 1e-12;
constexpr double kRelDegTol = 1e-9;
}  // namespace

bool variant_uses_beta(CbfVariant v) {
  return v == CbfVariant::RRCBF || v == CbfVariant::DORRCBF || v == CbfVariant::HORRCBF ||
         v == CbfVariant::HODORRCBF;
}

bool variant_uses_estimate(CbfVariant v) {
  return v == CbfVariant::DOCBF || v == CbfVariant::DORRCBF || v == CbfVariant::HODORRCBF;
}

const char* variant_name(CbfVariant v) {
  switch (v) {
    case CbfVariant::ZCBF: return "ZCBF";
    case CbfVariant::RCBF: return "RCBF";
    case CbfVariant::RRCBF: return "RRCBF";
    case CbfVariant::RoCBF: return "RoCBF";
    case CbfVariant::DOCBF: return "DOCBF";
    case CbfVariant::DORRCBF: return "DORRCBF";
    case CbfVariant::HORRCBF: return "HORRCBF";
    case CbfVariant::HODORRCBF: return "HODORRCBF";
  }
  return "?";
}

double EstimationErrorPolicy::value(double t) const {
  switch (kind) {
    case Kind::None: return 0.0;
    case Kind::Constant: return eps0;
    case Kind::Decaying: return eps_inf + (eps0 - eps_inf) * std::exp(-rate * t);
  }
  return 0.0;
}

void CbfVariantConfig::validate(int relative_degree) const {
  if (static_cast<int>(alpha_chain.size()) != relative_degree)
    throw ConfigError("variant config: alpha_chain length " +
                      std::to_string(alpha_chain.size()) + " != relative degree " +
                      std::to_string(relative_degree));
  if (variant_uses_beta(variant) && !beta.has_value())
    throw ConfigError(std::string("variant ") + variant_name(variant) + " requires beta");
  if (sigma < 0.0) throw ConfigError("variant config: sigma must be nonnegative");
  if (variant == CbfVariant::RoCBF) {
    if (!disturbance_bound.has_value() || !(*disturbance_bound >= 0.0))
      throw ConfigError("RoCBF requires a nonnegative disturbance_bound");
  }
  if (variant == CbfVariant::RCBF && relative_degree != 1)
    throw ConfigError("RCBF is only defined at relative degree 1 (B = 1/h)");
}

namespace {

struct FirstOrderTerms {
  double h;
  double lfh;
  RowVector lgh;
};

FirstOrderTerms first_order_terms(const PlantModel& plant, const Vector& x) {
  const auto& sf = plant.safe_fn;
  FirstOrderTerms out;
  out.h = sf.h(x);
  const Vector grad = sf.grad_h(x);
  out.lfh = sf.lf_h ? sf.lf_h(x) : grad.dot(plant.drift(x));
  out.lgh = grad.transpose() * plant.input_map(x);
  return out;
}

// Variant condition applied at the top chain level. Term order is fixed so
// the nesting identities hold bitwise:
//   b(RR) = b(Z) - beta(...)          b(DO-RR) = b(RR) + c1 . d_hat
HalfspaceConstraint apply_variant(const CbfVariantConfig& config, double psi_top, double c0,
                                  const RowVector& c1, const std::optional<Vector>& d_hat,
                                  double t) {
  const ClassKFn& alpha_top = config.alpha_chain.back();

  if (variant_uses_estimate(config.variant)) {
    if (!d_hat.has_value())
      throw ConfigError(std::string(variant_name(config.variant)) + " requires d_hat");
  } else if (d_hat.has_value()) {
    throw ConfigError(std::string(variant_name(config.variant)) +
                      " does not take a disturbance estimate");
  }

  HalfspaceConstraint c;
  c.a = c1;
  c.b = c0 + alpha_top(psi_top);
  if (variant_uses_beta(config.variant)) {
    if (psi_top + config.sigma <= kSingularBand)
      throw SingularityError("constraint: psi + sigma in singular band at value " +
                             std::to_string(psi_top));
    c.b -= (*config.beta)(1.0 / (psi_top + config.sigma));
  }
  if (config.variant == CbfVariant::RoCBF) c.b -= c1.norm() * (*config.disturbance_bound);
  if (config.variant == CbfVariant::DOCBF &&
      config.error_bound_policy.kind != EstimationErrorPolicy::Kind::None)
    c.b -= c1.norm() * config.error_bound_policy.value(t);
  if (variant_uses_estimate(config.variant)) c.b += c1.dot(*d_hat);
  return c;
}

// grad of s(x) by central differences with per-component relative steps.
Vector fd_gradient(const std::function<double(const Vector&)>& s, const Vector& x) {
  Vector g(x.size());
  Vector xp = x, xm = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double d = 1e-5 * std::max(1.0, std::abs(x[i]));
    xp[i] = x[i] + d;
    xm[i] = x[i] - d;
    g[i] = (s(xp) - s(xm)) / (2.0 * d);
    xp[i] = x[i];
    xm[i] = x[i];
  }
  return g;
}

}  // namespace

HalfspaceConstraint build_constraint(const CbfVariantConfig& config, const PlantModel& plant,
                                     const Vector& x, const std::optional<Vector>& d_hat,
                                     double t) {
  config.validate(plant.safe_fn.relative_degree);
  const FirstOrderTerms ft = first_order_terms(plant, x);

  if (config.variant == CbfVariant::RCBF) {
    // B = 1/h filter form: (L_f h + L_g h u)/h^2 + alpha3(h) >= 0, passed to
    // the QP as built. The 1/h^2 scaling makes the row stiff near the
    // boundary, which is visible in solver slacks there.
    if (ft.h <= kSingularBand)
      throw SingularityError("RCBF: h in singular band at value " + std::to_string(ft.h));
    const double h2 = ft.h * ft.h;
    HalfspaceConstraint c;
    c.a = ft.lgh / h2;
    c.b = ft.lfh / h2 + config.alpha_chain[0](ft.h);
    if (d_hat.has_value()) throw ConfigError("RCBF does not take a disturbance estimate");
    return c;
  }
  return apply_variant(config, ft.h, ft.lfh, ft.lgh, d_hat, t);
}

PsiChain build_psi_chain(const CbfVariantConfig& config, const PlantModel& plant,
                         const Vector& x) {
  const auto& sf = plant.safe_fn;
  const int r = sf.relative_degree;
  config.validate(r);

  const Matrix g = plant.input_map(x);

  PsiChain chain;
  chain.values.reserve(static_cast<std::size_t>(r));

  // Evaluator of the current chain level and the exact/FD gradient of it at x.
  std::function<double(const Vector&)> level = sf.h;
  Vector grad_level = sf.grad_h(x);
  double psi = sf.h(x);
  chain.values.push_back(psi);

  for (int i = 1; i < r; ++i) {
    // Relative-degree structure requires L_g of every lower level to vanish.
    const double lg = (grad_level.transpose() * g).norm();
    if (lg > kRelDegTol)
      throw ModelError("psi chain: L_g L_f^" + std::to_string(i - 1) + " h = " +
                       std::to_string(lg) + " violates declared relative degree " +
                       std::to_string(r));

    const ClassKFn alpha_i = config.alpha_chain[static_cast<std::size_t>(i - 1)];
    auto prev = level;
    auto prev_dot = [prev, &plant, &sf, i](const Vector& y) {
      if (i == 1 && sf.lf_h) return sf.lf_h(y);
      return fd_gradient(prev, y).dot(plant.drift(y));
    };
    // psi_i(y) = prev_dot(y) + alpha_i(prev(y)); evaluable anywhere, so the
    // next gradient can fall back to finite differences of it.
    level = [prev, prev_dot, alpha_i](const Vector& y) { return prev_dot(y) + alpha_i(prev(y)); };

    const double psi_prev = psi;
    const double lf_prev =
        (i == 1 && sf.lf_h) ? sf.lf_h(x) : grad_level.dot(plant.drift(x));
    psi = lf_prev + alpha_i(psi_prev);
    chain.values.push_back(psi);

    if (i == 1 && sf.grad_lf_h) {
      grad_level = sf.grad_lf_h(x) + alpha_i.slope(psi_prev) * sf.grad_h(x);
    } else {
      grad_level = fd_gradient(level, x);
    }
  }

  chain.c0 = grad_level.dot(plant.drift(x));
  chain.c1 = grad_level.transpose() * g;
  if (r == 1) {
    // Keep the degenerate chain bitwise-identical to the first-order builder.
    const FirstOrderTerms ft = first_order_terms(plant, x);
    chain.c0 = ft.lfh;
    chain.c1 = ft.lgh;
  }
  return chain;
}

HalfspaceConstraint apply_chain_variant(const CbfVariantConfig& config, const PsiChain& chain,
                                        const std::optional<Vector>& d_hat, double t) {
  if (config.variant == CbfVariant::RCBF)
    throw ConfigError("RCBF has no high-order form");
  return apply_variant(config, chain.values.back(), chain.c0, chain.c1, d_hat, t);
}

HalfspaceConstraint build_ho_constraint(const CbfVariantConfig& config, const PlantModel& plant,
                                        const Vector& x, const std::optional<Vector>& d_hat,
                                        double t) {
  return apply_chain_variant(config, build_psi_chain(config, plant, x), d_hat, t);
}

}  // namespace rrcbf
