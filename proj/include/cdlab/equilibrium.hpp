#pragma once

#include "cdlab/measure.hpp"
#include "cdlab/types.hpp"

namespace cdlab {

enum class EquilibriumKind { circle_uniform, arcsine };

const char* to_string(EquilibriumKind kind);

// Closed-form equilibrium measure; both kinds are probability measures.
struct EquilibriumMeasure {
  EquilibriumKind kind = EquilibriumKind::circle_uniform;
  int quadrature_order = 512;
};

/// circle -> uniform, interval -> arcsine; custom supports have no closed
/// form and raise unsupported_support.
EquilibriumMeasure equilibrium_for(const QuadratureMeasure& mu);

double integrate(const EquilibriumMeasure& nu, const PlaneFunction& g);

}  // namespace cdlab
