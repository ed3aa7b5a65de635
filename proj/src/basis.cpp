#include "cdlab/basis.hpp"

#include <atomic>
#include <cmath>

#include <Eigen/Dense>

#include "cdlab/error.hpp"

namespace cdlab {

namespace {

constexpr double kPivotTol = 1e-13;
constexpr int kPowerIterations = 60;

std::string next_basis_id() {
  static std::atomic<unsigned long> counter{0};
  return "onb-" + std::to_string(++counter);
}

// sqrt(w_a) exp(-k phi(x_a)).
RVector row_scaling(const QuadratureMeasure& mu, const WeightedSpace& space) {
  RVector u(static_cast<Eigen::Index>(mu.size()));
  for (std::size_t a = 0; a < mu.size(); ++a)
    u(static_cast<Eigen::Index>(a)) =
        std::sqrt(mu.weights()[a]) * space.metric_factor(mu.nodes()[a]);
  return u;
}

// Row-weighted Vandermonde U V, (U V)(a, j) = u_a z_a^j.
CMatrix weighted_vandermonde(const QuadratureMeasure& mu, const RVector& u,
                             Eigen::Index n) {
  const auto m = static_cast<Eigen::Index>(mu.size());
  CMatrix v(m, n);
  for (Eigen::Index a = 0; a < m; ++a) {
    const Complex z = mu.nodes()[static_cast<std::size_t>(a)];
    Complex p = u(a);
    for (Eigen::Index j = 0; j < n; ++j) {
      v(a, j) = p;
      p *= z;
    }
  }
  return v;
}

// Largest eigenvalue of A^* A by power iteration from a fixed start.
template <typename Apply, typename ApplyAdjoint>
double power_norm_squared(Eigen::Index n, Apply apply, ApplyAdjoint adjoint) {
  CVector x = CVector::Ones(n) / std::sqrt(static_cast<double>(n));
  double lambda = 0.0;
  for (int it = 0; it < kPowerIterations; ++it) {
    CVector y = adjoint(apply(x));
    const double norm = y.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) return norm;
    lambda = norm;
    x = y / norm;
  }
  return lambda;
}

double estimate_gram_condition(const QuadratureMeasure& mu, const RVector& u,
                               const CMatrix& coeffs) {
  const Eigen::Index n = coeffs.rows();
  const CMatrix v = weighted_vandermonde(mu, u, n);
  const double gram_max = power_norm_squared(
      n, [&](const CVector& x) { return CVector(v * x); },
      [&](const CVector& y) { return CVector(v.adjoint() * y); });
  const double coeff_max = power_norm_squared(
      n, [&](const CVector& x) { return CVector(coeffs * x); },
      [&](const CVector& y) { return CVector(coeffs.adjoint() * y); });
  // lambda_min(G) = 1 / sigma_max(C)^2.
  return gram_max * coeff_max;
}

void build_orthogonal(const QuadratureMeasure& mu, const WeightedSpace& space,
                      CMatrix& coeffs, CMatrix& hess, double& s0) {
  const auto n = static_cast<Eigen::Index>(space.dimension());
  const auto m = static_cast<Eigen::Index>(mu.size());
  const RVector u = row_scaling(mu, space);

  CVector z(m);
  for (Eigen::Index a = 0; a < m; ++a) z(a) = mu.nodes()[static_cast<std::size_t>(a)];

  CMatrix q(m, n);
  hess = CMatrix::Zero(n, n);
  const double u_norm = u.norm();
  if (!(u_norm > 0.0)) fail(ErrorKind::rank_deficient, "zero total weight");
  s0 = 1.0 / u_norm;
  q.col(0) = u.cast<Complex>() * s0;

  coeffs = CMatrix::Zero(n, n);
  coeffs(0, 0) = s0;

  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    CVector v = z.cwiseProduct(q.col(j));
    const double start = v.norm();
    CVector h = CVector::Zero(j + 1);
    for (int pass = 0; pass < 2; ++pass) {
      const CVector hp = q.leftCols(j + 1).adjoint() * v;
      v.noalias() -= q.leftCols(j + 1) * hp;
      h += hp;
    }
    const double sub = v.norm();
    if (!(sub * sub > kPivotTol * start * start) || !(start > 0.0))
      fail(ErrorKind::rank_deficient,
           "Gram matrix not positive definite at degree " +
               std::to_string(j + 1) + " (node support too small)");
    hess.block(0, j, j + 1, 1) = h;
    hess(j + 1, j) = sub;
    q.col(j + 1) = v / sub;

    // Monomial coefficients follow the same recurrence.
    CVector next = CVector::Zero(n);
    next.segment(1, j + 1) = coeffs.row(j).head(j + 1).transpose();
    for (Eigen::Index i = 0; i <= j; ++i)
      next.head(i + 1) -= h(i) * coeffs.row(i).head(i + 1).transpose();
    coeffs.row(j + 1) = next.transpose() / sub;
  }
}

void build_cholesky(const QuadratureMeasure& mu, const WeightedSpace& space,
                    CMatrix& coeffs) {
  const CMatrix g = gram_matrix(mu, space);
  const Eigen::Index n = g.rows();
  double max_diag = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) max_diag = std::max(max_diag, g(i, i).real());

  CMatrix l = CMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Complex acc = g(j, j);
    for (Eigen::Index s = 0; s < j; ++s) acc -= l(j, s) * std::conj(l(j, s));
    const double pivot = acc.real();
    if (!(pivot > kPivotTol * max_diag))
      fail(ErrorKind::rank_deficient,
           "Gram matrix not positive definite at degree " + std::to_string(j) +
               " (node support too small)");
    const double d = std::sqrt(pivot);
    l(j, j) = d;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Complex t = g(i, j);
      for (Eigen::Index s = 0; s < j; ++s) t -= l(i, s) * std::conj(l(j, s));
      l(i, j) = t / d;
    }
  }
  const CMatrix linv = l.triangularView<Eigen::Lower>().solve(CMatrix::Identity(n, n));
  coeffs = linv.conjugate();
  for (Eigen::Index i = 0; i < n; ++i) {
    coeffs(i, i) = coeffs(i, i).real();
    for (Eigen::Index j = i + 1; j < n; ++j) coeffs(i, j) = 0.0;
  }
}

}  // namespace

WeightedSpace::WeightedSpace(int degree_bound, int tensor_power,
                             PlaneFunction metric_weight)
    : degree_bound(degree_bound),
      tensor_power(tensor_power),
      metric_weight(std::move(metric_weight)) {
  if (degree_bound < 0)
    fail(ErrorKind::invalid_argument, "degree_bound must be >= 0");
  if (tensor_power < 1)
    fail(ErrorKind::invalid_argument, "tensor_power must be >= 1");
}

double WeightedSpace::metric_factor(Complex x) const {
  if (!metric_weight) return 1.0;
  const double phi = metric_weight(x);
  if (!std::isfinite(phi))
    fail(ErrorKind::invalid_argument, "metric weight is not finite at a point");
  return std::exp(-tensor_power * phi);
}

const char* to_string(FactorizationRoute route) {
  return route == FactorizationRoute::orthogonal ? "orthogonal" : "cholesky";
}

CMatrix gram_matrix(const QuadratureMeasure& mu, const WeightedSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.dimension());
  const RVector u = row_scaling(mu, space);
  const CMatrix v = weighted_vandermonde(mu, u, n);
  CMatrix g = v.adjoint() * v;
  return (g + g.adjoint()) * 0.5;
}

OrthonormalBasis orthonormalize(const QuadratureMeasure& mu,
                                const WeightedSpace& space,
                                FactorizationRoute route) {
  OrthonormalBasis basis;
  basis.space_ = space;
  basis.route_ = route;
  basis.id_ = next_basis_id();
  if (route == FactorizationRoute::orthogonal) {
    CMatrix hess;
    build_orthogonal(mu, space, basis.coeffs_, hess, basis.s0_);
    basis.recurrence_ = std::move(hess);
  } else {
    build_cholesky(mu, space, basis.coeffs_);
    basis.s0_ = basis.coeffs_(0, 0).real();
  }
  basis.gram_condition_ =
      estimate_gram_condition(mu, row_scaling(mu, space), basis.coeffs_);
  return basis;
}

CMatrix evaluate_basis_horner(const OrthonormalBasis& basis,
                              std::span<const Complex> points) {
  const auto n = static_cast<Eigen::Index>(basis.dimension());
  const auto m = static_cast<Eigen::Index>(points.size());
  const CMatrix& c = basis.coeffs();
  CMatrix phi(m, n);
  for (Eigen::Index a = 0; a < m; ++a) {
    const Complex x = points[static_cast<std::size_t>(a)];
    const double factor = basis.space().metric_factor(x);
    for (Eigen::Index i = 0; i < n; ++i) {
      Complex acc = 0.0;
      for (Eigen::Index j = i; j >= 0; --j) acc = acc * x + c(i, j);
      phi(a, i) = acc * factor;
    }
  }
  return phi;
}

CMatrix evaluate_basis(const OrthonormalBasis& basis,
                       std::span<const Complex> points) {
  if (!basis.recurrence()) return evaluate_basis_horner(basis, points);
  const CMatrix& h = *basis.recurrence();
  const auto n = static_cast<Eigen::Index>(basis.dimension());
  const auto m = static_cast<Eigen::Index>(points.size());
  CMatrix phi(m, n);
  CVector x(m);
  for (Eigen::Index a = 0; a < m; ++a) {
    x(a) = points[static_cast<std::size_t>(a)];
    phi(a, 0) = basis.leading_constant();
  }
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    CVector v = x.cwiseProduct(phi.col(j));
    v.noalias() -= phi.leftCols(j + 1) * h.block(0, j, j + 1, 1);
    phi.col(j + 1) = v / h(j + 1, j);
  }
  for (Eigen::Index a = 0; a < m; ++a)
    phi.row(a) *= basis.space().metric_factor(x(a));
  return phi;
}

double orthonormality_residual(const OrthonormalBasis& basis,
                               const QuadratureMeasure& mu) {
  CMatrix phi = evaluate_basis(basis, mu.nodes());
  for (std::size_t a = 0; a < mu.size(); ++a)
    phi.row(static_cast<Eigen::Index>(a)) *= std::sqrt(mu.weights()[a]);
  const CMatrix g = phi.adjoint() * phi;
  const auto n = g.rows();
  return (g - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace cdlab
