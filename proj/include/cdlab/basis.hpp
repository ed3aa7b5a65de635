#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "cdlab/measure.hpp"
#include "cdlab/types.hpp"

namespace cdlab {

/// Polynomials of degree <= degree_bound with pointwise norm
/// |P(x)| exp(-k phi(x)) at tensor power k. An empty metric_weight means
/// phi == 0 (the trivialized planar model).
struct WeightedSpace {
  int degree_bound = 0;
  int tensor_power = 1;
  PlaneFunction metric_weight;

  WeightedSpace() = default;
  WeightedSpace(int degree_bound, int tensor_power,
                PlaneFunction metric_weight = {});

  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(degree_bound) + 1;
  }

  // exp(-k phi(x)); throws invalid_argument when phi(x) is not finite.
  double metric_factor(Complex x) const;
};

enum class FactorizationRoute {
  // Arnoldi / modified Gram-Schmidt on the row-weighted Vandermonde matrix.
  orthogonal,
  // Cholesky of the monomial Gram matrix.
  cholesky,
};

const char* to_string(FactorizationRoute route);

/// Orthonormal polynomials s_0..s_{n-1} for Hilb_k(h^L, mu).
///
/// `coeffs` holds the lower-triangular monomial coefficients (row i is
/// s_i = sum_j C(i, j) z^j) with positive real diagonal. Bases built by the
/// orthogonal route also carry the Arnoldi recurrence, which is used for
/// evaluation since monomial expansions lose all accuracy at moderate degree
/// on real intervals.
class OrthonormalBasis {
public:
  const WeightedSpace& space() const noexcept { return space_; }
  const CMatrix& coeffs() const noexcept { return coeffs_; }
  double gram_condition() const noexcept { return gram_condition_; }
  FactorizationRoute route() const noexcept { return route_; }
  const std::string& id() const noexcept { return id_; }
  std::size_t dimension() const noexcept { return space_.dimension(); }

  // Upper-Hessenberg recurrence: z s_j = sum_{i <= j+1} H(i, j) s_i.
  // Empty for the Cholesky route.
  const std::optional<CMatrix>& recurrence() const noexcept {
    return recurrence_;
  }
  double leading_constant() const noexcept { return s0_; }

private:
  friend OrthonormalBasis orthonormalize(const QuadratureMeasure&,
                                         const WeightedSpace&,
                                         FactorizationRoute);

  WeightedSpace space_;
  CMatrix coeffs_;
  double gram_condition_ = 1.0;
  FactorizationRoute route_ = FactorizationRoute::orthogonal;
  std::string id_;
  std::optional<CMatrix> recurrence_;
  double s0_ = 1.0;
};

/// G(i, j) = sum_a z_a^j conj(z_a)^i exp(-2k phi(z_a)) w_a.
CMatrix gram_matrix(const QuadratureMeasure& mu, const WeightedSpace& space);

/// Throws rank_deficient when the Gram matrix is not numerically positive
/// definite (a pivot below 1e-13 of the largest diagonal, or the squared
/// Arnoldi residual below 1e-13 of the squared norm it started from).
OrthonormalBasis orthonormalize(
    const QuadratureMeasure& mu, const WeightedSpace& space,
    FactorizationRoute route = FactorizationRoute::orthogonal);

/// Phi(a, i) = s_i(x_a) exp(-k phi(x_a)).
CMatrix evaluate_basis(const OrthonormalBasis& basis,
                       std::span<const Complex> points);

/// Same values through Horner's rule on the monomial coefficients,
/// whatever route built the basis.
CMatrix evaluate_basis_horner(const OrthonormalBasis& basis,
                              std::span<const Complex> points);

/// max |Phi^* W Phi - I| over the quadrature of mu.
double orthonormality_residual(const OrthonormalBasis& basis,
                               const QuadratureMeasure& mu);

}  // namespace cdlab
