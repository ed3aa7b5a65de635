#include "cdlab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cdlab/error.hpp"
#include "cdlab/summation.hpp"

namespace cdlab {

KernelTable::KernelTable(CMatrix values, std::vector<Complex> nodes,
                         std::size_t n_k)
    : values_(std::move(values)), nodes_(std::move(nodes)), n_k_(n_k) {
  if (values_.rows() != values_.cols() ||
      static_cast<std::size_t>(values_.rows()) != nodes_.size())
    fail(ErrorKind::invalid_argument, "kernel table shape mismatch");
  diag_.resize(nodes_.size());
  for (std::size_t a = 0; a < nodes_.size(); ++a) {
    const auto i = static_cast<Eigen::Index>(a);
    diag_[a] = std::max(0.0, values_(i, i).real());
  }
}

KernelTable kernel_table(const OrthonormalBasis& basis,
                         const QuadratureMeasure& mu, std::size_t max_nodes) {
  if (mu.size() > max_nodes)
    fail(ErrorKind::invalid_argument,
         "kernel_table: " + std::to_string(mu.size()) +
             " nodes exceed the cap of " + std::to_string(max_nodes));
  const CMatrix phi = evaluate_basis(basis, mu.nodes());
  CMatrix k = phi * phi.adjoint();
  const Eigen::Index m = k.rows();
  for (Eigen::Index b = 0; b < m; ++b) {
    k(b, b) = k(b, b).real();
    for (Eigen::Index a = b + 1; a < m; ++a) {
      const Complex avg = 0.5 * (k(a, b) + std::conj(k(b, a)));
      k(a, b) = avg;
      k(b, a) = std::conj(avg);
    }
  }
  return KernelTable(std::move(k), mu.nodes(), basis.dimension());
}

namespace {

void check_compatible(const KernelTable& table, const QuadratureMeasure& mu) {
  if (table.size() != mu.size())
    fail(ErrorKind::invalid_argument,
         "kernel table and measure have different node counts");
}

void check_indices(const IndexSet& set, std::size_t size) {
  for (std::size_t a : set)
    if (a >= size)
      fail(ErrorKind::invalid_argument,
           "region index " + std::to_string(a) + " out of range");
}

}  // namespace

double bergman_mass(const KernelTable& table, const QuadratureMeasure& mu,
                    const IndexSet& a_set, const IndexSet& b_set) {
  check_compatible(table, mu);
  check_indices(a_set, table.size());
  check_indices(b_set, table.size());
  if (a_set.empty() || b_set.empty()) return 0.0;
  const CMatrix& k = table.values();
  const auto& w = mu.weights();
  std::vector<double> row_terms(b_set.size());
  std::vector<double> outer(a_set.size());
  for (std::size_t ia = 0; ia < a_set.size(); ++ia) {
    const std::size_t a = a_set[ia];
    for (std::size_t ib = 0; ib < b_set.size(); ++ib) {
      const std::size_t b = b_set[ib];
      row_terms[ib] =
          std::norm(k(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))) * w[b];
    }
    outer[ia] = w[a] * pairwise_sum(std::span<const double>(row_terms));
  }
  return pairwise_sum(std::span<const double>(outer)) /
         static_cast<double>(table.n_k());
}

std::vector<double> diagonal_density(const KernelTable& table,
                                     const QuadratureMeasure& mu) {
  check_compatible(table, mu);
  std::vector<double> density(mu.size());
  const double inv_n = 1.0 / static_cast<double>(table.n_k());
  for (std::size_t a = 0; a < mu.size(); ++a)
    density[a] = inv_n * table.diag()[a] * mu.weights()[a];
  return density;
}

double pushforward_residual(const KernelTable& table,
                            const QuadratureMeasure& mu) {
  check_compatible(table, mu);
  const CMatrix& k = table.values();
  const auto& w = mu.weights();
  const std::size_t m = mu.size();
  std::vector<double> terms(m);
  double worst = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b)
      terms[b] = std::norm(k(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))) * w[b];
    const double row = pairwise_sum(std::span<const double>(terms));
    const double d = table.diag()[a];
    worst = std::max(worst, std::abs(row - d) / std::max(1.0, d));
  }
  return worst;
}

double bm_constant(const OrthonormalBasis& basis,
                   std::span<const Complex> eval_grid) {
  if (eval_grid.empty())
    fail(ErrorKind::invalid_argument, "bm_constant: empty evaluation grid");
  const CMatrix phi = evaluate_basis(basis, eval_grid);
  double best = 0.0;
  for (Eigen::Index a = 0; a < phi.rows(); ++a) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < phi.cols(); ++i) acc += std::norm(phi(a, i));
    best = std::max(best, acc);
  }
  return best;
}

std::vector<Complex> default_bm_grid(const QuadratureMeasure& mu) {
  const std::size_t count = 8 * mu.size();
  std::vector<Complex> grid;
  switch (mu.support_tag()) {
    case SupportTag::circle:
      grid.reserve(count);
      for (std::size_t a = 0; a < count; ++a)
        grid.push_back(std::polar(1.0, 2.0 * std::numbers::pi *
                                           static_cast<double>(a) /
                                           static_cast<double>(count)));
      break;
    case SupportTag::interval:
      grid.reserve(count);
      for (std::size_t a = 0; a < count; ++a)
        grid.emplace_back(-1.0 + 2.0 * static_cast<double>(a) /
                                     static_cast<double>(count - 1),
                          0.0);
      break;
    case SupportTag::custom:
      grid = mu.nodes();
      break;
  }
  return grid;
}

}  // namespace cdlab
