#pragma once

#include <span>
#include <vector>

#include "cdlab/basis.hpp"
#include "cdlab/measure.hpp"
#include "cdlab/types.hpp"

namespace cdlab {

// Default cap on quadrature size for dense kernel tables.
inline constexpr std::size_t kMaxKernelNodes = 4096;

/// Dense evaluation of the Bergman kernel B_k(x_a, x_b) over a node set,
/// metric factors exp(-k phi(x_a) - k phi(x_b)) included.
class KernelTable {
public:
  KernelTable(CMatrix values, std::vector<Complex> nodes, std::size_t n_k);

  const CMatrix& values() const noexcept { return values_; }
  const std::vector<double>& diag() const noexcept { return diag_; }
  const std::vector<Complex>& nodes() const noexcept { return nodes_; }
  std::size_t n_k() const noexcept { return n_k_; }
  std::size_t size() const noexcept { return nodes_.size(); }

private:
  CMatrix values_;
  std::vector<double> diag_;
  std::vector<Complex> nodes_;
  std::size_t n_k_;
};

/// K = Phi Phi^* over the nodes of mu. Throws invalid_argument if mu has
/// more than `max_nodes` nodes.
KernelTable kernel_table(const OrthonormalBasis& basis,
                         const QuadratureMeasure& mu,
                         std::size_t max_nodes = kMaxKernelNodes);

/// mu_k^Berg(A x B) = (1/n_k) sum_{a in A, b in B} |K(a, b)|^2 w_a w_b.
double bergman_mass(const KernelTable& table, const QuadratureMeasure& mu,
                    const IndexSet& a, const IndexSet& b);

/// Node-indexed weights (1/n_k) B_k(x_a, x_a) w_a of the diagonal measure.
std::vector<double> diagonal_density(const KernelTable& table,
                                     const QuadratureMeasure& mu);

/// max_a |sum_b |K(a,b)|^2 w_b - B_k(x_a,x_a)| / max(1, B_k(x_a,x_a)).
double pushforward_residual(const KernelTable& table,
                            const QuadratureMeasure& mu);

/// sup over the grid of B_k(x, x): the optimal constant in
/// sup |P|^2 exp(-2k phi) <= C ||P||^2_{Hilb_k}.
double bm_constant(const OrthonormalBasis& basis,
                   std::span<const Complex> eval_grid);

/// Evaluation grid 8x denser than the measure's quadrature, sampling the
/// support: equispaced on the circle, equispaced with endpoints on
/// [-1, 1], and the nodes themselves for custom measures.
std::vector<Complex> default_bm_grid(const QuadratureMeasure& mu);

}  // namespace cdlab
