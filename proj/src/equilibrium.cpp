#include "cdlab/equilibrium.hpp"

#include "cdlab/error.hpp"

namespace cdlab {

const char* to_string(EquilibriumKind kind) {
  return kind == EquilibriumKind::circle_uniform ? "circle_uniform" : "arcsine";
}

EquilibriumMeasure equilibrium_for(const QuadratureMeasure& mu) {
  switch (mu.support_tag()) {
    case SupportTag::circle:
      return {EquilibriumKind::circle_uniform, 512};
    case SupportTag::interval:
      return {EquilibriumKind::arcsine, 512};
    case SupportTag::custom:
      break;
  }
  fail(ErrorKind::unsupported_support,
       "no closed-form equilibrium measure for a custom support");
}

double integrate(const EquilibriumMeasure& nu, const PlaneFunction& g) {
  if (nu.quadrature_order < 1)
    fail(ErrorKind::invalid_argument, "equilibrium quadrature order must be >= 1");
  const QuadratureMeasure rule = nu.kind == EquilibriumKind::circle_uniform
                                     ? circle_lebesgue(nu.quadrature_order)
                                     : arcsine(nu.quadrature_order);
  return rule.integrate(g);
}

}  // namespace cdlab
