#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cdlab/types.hpp"

namespace cdlab {

enum class SupportTag { circle, interval, custom };

const char* to_string(SupportTag tag);
SupportTag support_tag_from_string(const std::string& name);

/// Finite weighted node set standing in for a positive measure on a
/// compact subset of the plane.
///
/// `exactness` is metadata: the largest total degree a+b for which the
/// moments of z^a conj(z)^b are integrated exactly (0 when unknown).
class QuadratureMeasure {
public:
  /// Validates every invariant (positive weights, matching lengths, node
  /// placement for the circle/interval tags) and throws invalid_argument.
  QuadratureMeasure(std::vector<Complex> nodes, std::vector<double> weights,
                    int exactness, SupportTag support_tag);

  const std::vector<Complex>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  int exactness() const noexcept { return exactness_; }
  SupportTag support_tag() const noexcept { return support_tag_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  double total_mass() const;

  /// Pairwise-summed quadrature of g.
  double integrate(const PlaneFunction& g) const;
  Complex integrate_complex(const std::function<Complex(Complex)>& g) const;

private:
  std::vector<Complex> nodes_;
  std::vector<double> weights_;
  int exactness_;
  SupportTag support_tag_;
};

/// m equispaced points on the unit circle with mass 1/m each.
QuadratureMeasure circle_lebesgue(int m);

/// Gauss-Legendre rule of order m for dx on [-1, 1].
QuadratureMeasure interval_lebesgue(int m);

/// Gauss-Chebyshev (first kind) rule for dx / (pi sqrt(1 - x^2)).
QuadratureMeasure arcsine(int m);

QuadratureMeasure from_points(std::vector<Complex> nodes,
                              std::vector<double> weights);

/// Multiplies the weight at x by exp(-g(x)).
QuadratureMeasure scale_by(const QuadratureMeasure& mu, const PlaneFunction& g);

struct GaussRule {
  std::vector<double> nodes;  // ascending
  std::vector<double> weights;
};

// Newton iteration on the Legendre three-term recurrence.
GaussRule gauss_legendre(int m);

}  // namespace cdlab
