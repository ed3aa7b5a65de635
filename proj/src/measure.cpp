#include "cdlab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cdlab/error.hpp"
#include "cdlab/summation.hpp"

namespace cdlab {

namespace {

constexpr double kPlacementTol = 1e-12;

}  // namespace

const char* to_string(SupportTag tag) {
  switch (tag) {
    case SupportTag::circle: return "circle";
    case SupportTag::interval: return "interval";
    case SupportTag::custom: return "custom";
  }
  return "custom";
}

SupportTag support_tag_from_string(const std::string& name) {
  if (name == "circle") return SupportTag::circle;
  if (name == "interval") return SupportTag::interval;
  if (name == "custom") return SupportTag::custom;
  fail(ErrorKind::invalid_argument, "unknown support tag '" + name + "'");
}

QuadratureMeasure::QuadratureMeasure(std::vector<Complex> nodes,
                                     std::vector<double> weights,
                                     int exactness, SupportTag support_tag)
    : nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      exactness_(exactness),
      support_tag_(support_tag) {
  if (nodes_.empty()) fail(ErrorKind::invalid_argument, "empty node list");
  if (nodes_.size() != weights_.size())
    fail(ErrorKind::invalid_argument, "node/weight length mismatch");
  if (exactness_ < 0) fail(ErrorKind::invalid_argument, "negative exactness");
  for (std::size_t a = 0; a < weights_.size(); ++a) {
    if (!(weights_[a] > 0.0) || !std::isfinite(weights_[a]))
      fail(ErrorKind::invalid_argument,
           "nonpositive-weight at node " + std::to_string(a));
    const Complex z = nodes_[a];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      fail(ErrorKind::invalid_argument,
           "non-finite node " + std::to_string(a));
    if (support_tag_ == SupportTag::circle &&
        std::abs(std::abs(z) - 1.0) > kPlacementTol)
      fail(ErrorKind::invalid_argument, "circle node off the unit circle");
    if (support_tag_ == SupportTag::interval &&
        (std::abs(z.imag()) > kPlacementTol ||
         std::abs(z.real()) > 1.0 + kPlacementTol))
      fail(ErrorKind::invalid_argument, "interval node outside [-1, 1]");
  }
}

double QuadratureMeasure::total_mass() const {
  return pairwise_sum(std::span<const double>(weights_));
}

double QuadratureMeasure::integrate(const PlaneFunction& g) const {
  std::vector<double> terms(nodes_.size());
  for (std::size_t a = 0; a < nodes_.size(); ++a)
    terms[a] = g(nodes_[a]) * weights_[a];
  return pairwise_sum(std::span<const double>(terms));
}

Complex QuadratureMeasure::integrate_complex(
    const std::function<Complex(Complex)>& g) const {
  std::vector<Complex> terms(nodes_.size());
  for (std::size_t a = 0; a < nodes_.size(); ++a)
    terms[a] = g(nodes_[a]) * weights_[a];
  return pairwise_sum(std::span<const Complex>(terms));
}

QuadratureMeasure circle_lebesgue(int m) {
  if (m < 1) fail(ErrorKind::invalid_argument, "circle_lebesgue: m must be >= 1");
  std::vector<Complex> nodes(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    // Exact values at the quarter points keep {1, i, -1, -i} free of
    // sin(pi) noise.
    if ((4 * a) % m == 0) {
      static constexpr Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      nodes[static_cast<std::size_t>(a)] = quarter[(4 * a / m) % 4];
    } else {
      nodes[static_cast<std::size_t>(a)] =
          std::polar(1.0, 2.0 * std::numbers::pi * a / m);
    }
  }
  std::vector<double> weights(static_cast<std::size_t>(m), 1.0 / m);
  return QuadratureMeasure(std::move(nodes), std::move(weights), m - 1,
                           SupportTag::circle);
}

GaussRule gauss_legendre(int m) {
  if (m < 1) fail(ErrorKind::invalid_argument, "gauss_legendre: m must be >= 1");
  constexpr double tol = 1e-15;
  constexpr int max_iter = 100;
  GaussRule rule;
  rule.nodes.assign(static_cast<std::size_t>(m), 0.0);
  rule.weights.assign(static_cast<std::size_t>(m), 0.0);
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int it = 0; it < max_iter; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < m; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      dp = m * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) <= tol) break;
    }
    // Recompute the derivative at the converged root.
    {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < m; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      dp = m * (z * p1 - p2) / (z * z - 1.0);
    }
    if (m % 2 == 1 && i == half - 1) z = 0.0;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -z;
    rule.nodes[static_cast<std::size_t>(m - 1 - i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(m - 1 - i)] = w;
  }
  return rule;
}

QuadratureMeasure interval_lebesgue(int m) {
  if (m < 1) fail(ErrorKind::invalid_argument, "interval_lebesgue: m must be >= 1");
  GaussRule rule = gauss_legendre(m);
  std::vector<Complex> nodes(rule.nodes.begin(), rule.nodes.end());
  return QuadratureMeasure(std::move(nodes), std::move(rule.weights), 2 * m - 1,
                           SupportTag::interval);
}

QuadratureMeasure arcsine(int m) {
  if (m < 1) fail(ErrorKind::invalid_argument, "arcsine: m must be >= 1");
  std::vector<Complex> nodes(static_cast<std::size_t>(m));
  for (int a = 1; a <= m; ++a) {
    double x = std::cos((2.0 * a - 1.0) * std::numbers::pi / (2.0 * m));
    if (2 * a - 1 == m) x = 0.0;
    nodes[static_cast<std::size_t>(a - 1)] = x;
  }
  // Symmetrize so that odd moments cancel exactly.
  for (int a = 0; a < m / 2; ++a) {
    const double x = nodes[static_cast<std::size_t>(a)].real();
    nodes[static_cast<std::size_t>(m - 1 - a)] = -x;
  }
  std::vector<double> weights(static_cast<std::size_t>(m), 1.0 / m);
  return QuadratureMeasure(std::move(nodes), std::move(weights), 2 * m - 1,
                           SupportTag::interval);
}

QuadratureMeasure from_points(std::vector<Complex> nodes,
                              std::vector<double> weights) {
  return QuadratureMeasure(std::move(nodes), std::move(weights), 0,
                           SupportTag::custom);
}

QuadratureMeasure scale_by(const QuadratureMeasure& mu, const PlaneFunction& g) {
  std::vector<double> weights = mu.weights();
  bool identically_zero = true;
  for (std::size_t a = 0; a < weights.size(); ++a) {
    const double ga = g(mu.nodes()[a]);
    if (!std::isfinite(ga))
      fail(ErrorKind::invalid_argument,
           "scale_by: g is not finite at node " + std::to_string(a));
    if (ga != 0.0) identically_zero = false;
    weights[a] *= std::exp(-ga);
  }
  return QuadratureMeasure(mu.nodes(), std::move(weights),
                           identically_zero ? mu.exactness() : 0,
                           mu.support_tag());
}

}  // namespace cdlab
