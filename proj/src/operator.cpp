#include "cdlab/operator.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "cdlab/error.hpp"
#include "cdlab/summation.hpp"

namespace cdlab {

namespace {

constexpr double kHermitianTol = 1e-8;

double max_asymmetry(const CMatrix& a) {
  if (a.rows() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> sample_symbol(const SymbolDesc& f,
                                  const std::vector<Complex>& nodes) {
  std::vector<double> values(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    values[a] = f.fn(nodes[a]);
    if (!std::isfinite(values[a]))
      fail(ErrorKind::invalid_argument,
           "symbol '" + f.name + "' is not finite at node " + std::to_string(a));
  }
  return values;
}

ToeplitzMatrix assemble(const CMatrix& phi, const std::vector<double>& weights,
                        const std::vector<double>& fvals, const SymbolDesc& f,
                        int k, const std::string& basis_id) {
  CMatrix scaled = phi;
  for (Eigen::Index a = 0; a < phi.rows(); ++a)
    scaled.row(a) *= fvals[static_cast<std::size_t>(a)] *
                     weights[static_cast<std::size_t>(a)];
  CMatrix raw = phi.adjoint() * scaled;
  const double asym = max_asymmetry(raw);
  CMatrix herm = (raw + raw.adjoint()) * 0.5;
  return ToeplitzMatrix(std::move(herm), f, k, basis_id, asym);
}

}  // namespace

ToeplitzMatrix::ToeplitzMatrix(CMatrix entries, SymbolDesc symbol, int k,
                               std::string basis_id, double asymmetry)
    : entries_(std::move(entries)),
      symbol_(std::move(symbol)),
      k_(k),
      basis_id_(std::move(basis_id)),
      asymmetry_(asymmetry) {
  if (entries_.rows() != entries_.cols())
    fail(ErrorKind::invalid_argument, "Toeplitz matrix must be square");
}

ToeplitzMatrix toeplitz(const OrthonormalBasis& basis,
                        const QuadratureMeasure& mu, const SymbolDesc& f) {
  const std::vector<double> fvals = sample_symbol(f, mu.nodes());
  const CMatrix phi = evaluate_basis(basis, mu.nodes());
  return assemble(phi, mu.weights(), fvals, f, basis.space().tensor_power,
                  basis.id());
}

ToeplitzMatrix classical_toeplitz(std::span<const Complex> fourier, int k) {
  if (k < 1) fail(ErrorKind::invalid_argument, "classical_toeplitz: k must be >= 1");
  if (fourier.size() != static_cast<std::size_t>(2 * k - 1))
    fail(ErrorKind::invalid_argument,
         "classical_toeplitz: expected 2k-1 Fourier coefficients");
  const int mid = k - 1;
  for (int j = 1; j <= mid; ++j) {
    const Complex pos = fourier[static_cast<std::size_t>(mid + j)];
    const Complex neg = fourier[static_cast<std::size_t>(mid - j)];
    if (std::abs(pos - std::conj(neg)) > 1e-12)
      fail(ErrorKind::symmetry_violation,
           "a_{-" + std::to_string(j) + "} != conj(a_" + std::to_string(j) + ")");
  }
  if (std::abs(fourier[static_cast<std::size_t>(mid)].imag()) > 1e-12)
    fail(ErrorKind::symmetry_violation, "a_0 is not real");
  CMatrix t(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      t(i, j) = fourier[static_cast<std::size_t>(i - j + mid)];
  const double asym = max_asymmetry(t);
  t = (t + t.adjoint()).eval() * 0.5;
  return ToeplitzMatrix(std::move(t), SymbolDesc{"fourier", {}}, k,
                        "classical-" + std::to_string(k), asym);
}

std::vector<double> normalized_legendre(double x, int n) {
  std::vector<double> values(static_cast<std::size_t>(std::max(n, 0)));
  if (n <= 0) return values;
  values[0] = 1.0 / std::sqrt(2.0);
  if (n == 1) return values;
  values[1] = std::sqrt(1.5) * x;
  // x L_j = b_j L_{j+1} + b_{j-1} L_{j-1}, b_j = (j+1)/sqrt((2j+1)(2j+3)).
  auto b = [](int j) {
    return (j + 1.0) / std::sqrt((2.0 * j + 1.0) * (2.0 * j + 3.0));
  };
  for (int j = 1; j + 1 < n; ++j)
    values[static_cast<std::size_t>(j + 1)] =
        (x * values[static_cast<std::size_t>(j)] -
         b(j - 1) * values[static_cast<std::size_t>(j - 1)]) /
        b(j);
  return values;
}

ToeplitzMatrix legendre_toeplitz(const SymbolDesc& f, int k, int m) {
  if (k < 1) fail(ErrorKind::invalid_argument, "legendre_toeplitz: k must be >= 1");
  if (m <= 0) m = 4 * k;
  if (m < k)
    fail(ErrorKind::invalid_argument,
         "legendre_toeplitz: quadrature order must be >= k");
  const GaussRule rule = gauss_legendre(m);
  std::vector<Complex> nodes(rule.nodes.begin(), rule.nodes.end());
  const std::vector<double> fvals = sample_symbol(f, nodes);
  CMatrix phi(m, k);
  for (int a = 0; a < m; ++a) {
    const std::vector<double> l = normalized_legendre(rule.nodes[static_cast<std::size_t>(a)], k);
    for (int i = 0; i < k; ++i) phi(a, i) = l[static_cast<std::size_t>(i)];
  }
  return assemble(phi, rule.weights, fvals, f, k, "legendre-" + std::to_string(k));
}

CMatrix compose(const ToeplitzMatrix& a, const ToeplitzMatrix& b) {
  if (a.k() != b.k() || a.basis_id() != b.basis_id() || a.size() != b.size())
    fail(ErrorKind::basis_mismatch,
         "compose: operands live on different bases (" + a.basis_id() + " vs " +
             b.basis_id() + ")");
  return a.entries() * b.entries();
}

std::vector<double> singular_values(const CMatrix& a) {
  if (a.size() == 0) return {};
  Eigen::BDCSVD<CMatrix> svd(a);
  const RVector& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

double schatten_norm(const CMatrix& a, double p) {
  if (!(p >= 1.0)) fail(ErrorKind::invalid_argument, "schatten_norm: p must be >= 1");
  if (a.rows() != a.cols() || a.rows() == 0)
    fail(ErrorKind::invalid_argument, "schatten_norm: square nonempty matrix required");
  const std::vector<double> s = singular_values(a);
  std::vector<double> powers(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) powers[i] = std::pow(s[i], p);
  const double mean = pairwise_sum(std::span<const double>(powers)) /
                      static_cast<double>(a.rows());
  return std::pow(mean, 1.0 / p);
}

double operator_norm(const CMatrix& a) {
  if (a.rows() != a.cols())
    fail(ErrorKind::invalid_argument, "operator_norm: square matrix required");
  const std::vector<double> s = singular_values(a);
  return s.empty() ? 0.0 : *std::max_element(s.begin(), s.end());
}

SpectralMeasure spectrum(const CMatrix& a, int k) {
  if (a.rows() != a.cols())
    fail(ErrorKind::invalid_argument, "spectrum: square matrix required");
  const double asym = max_asymmetry(a);
  if (asym > kHermitianTol)
    fail(ErrorKind::not_hermitian,
         "asymmetry " + std::to_string(asym) + " exceeds 1e-8");
  SpectralMeasure out;
  out.k = k;
  if (a.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a, Eigen::EigenvaluesOnly);
  const RVector& ev = solver.eigenvalues();
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

SpectralMeasure spectrum(const ToeplitzMatrix& a) {
  return spectrum(a.entries(), a.k());
}

double spectral_statistic(const ToeplitzMatrix& a, const RealFunction& g) {
  const SpectralMeasure s = spectrum(a);
  std::vector<double> values(s.eigenvalues.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = g(s.eigenvalues[i]);
  return pairwise_sum(std::span<const double>(values)) /
         static_cast<double>(values.size());
}

CMatrix functional_calculus(const CMatrix& a, const RealFunction& h) {
  const double asym = max_asymmetry(a);
  if (asym > kHermitianTol)
    fail(ErrorKind::not_hermitian,
         "asymmetry " + std::to_string(asym) + " exceeds 1e-8");
  const CMatrix herm = (a + a.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
  RVector hv = solver.eigenvalues();
  for (Eigen::Index i = 0; i < hv.size(); ++i) hv(i) = h(hv(i));
  const CMatrix& u = solver.eigenvectors();
  return u * hv.cast<Complex>().asDiagonal() * u.adjoint();
}

CMatrix functional_calculus(const ToeplitzMatrix& a, const RealFunction& h) {
  return functional_calculus(a.entries(), h);
}

double algebra_defect(const OrthonormalBasis& basis,
                      const QuadratureMeasure& mu, const SymbolDesc& f,
                      const SymbolDesc& g, double p) {
  const ToeplitzMatrix tf = toeplitz(basis, mu, f);
  const ToeplitzMatrix tg = toeplitz(basis, mu, g);
  const SymbolDesc fg{f.name + "*" + g.name,
                      [ff = f.fn, gg = g.fn](Complex z) { return ff(z) * gg(z); }};
  const ToeplitzMatrix tfg = toeplitz(basis, mu, fg);
  return schatten_norm(compose(tf, tg) - tfg.entries(), p);
}

double defect_kernel_bound(const KernelTable& table,
                           const QuadratureMeasure& mu, const SymbolDesc& f,
                           const SymbolDesc& g) {
  if (table.size() != mu.size())
    fail(ErrorKind::invalid_argument,
         "kernel table and measure have different node counts");
  const std::vector<double> fv = sample_symbol(f, mu.nodes());
  const std::vector<double> gv = sample_symbol(g, mu.nodes());
  const auto& w = mu.weights();
  const CMatrix& k = table.values();
  const std::size_t m = mu.size();
  std::vector<double> row(m);
  std::vector<double> outer(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const double s = fv[a] * (gv[a] - gv[b]);
      row[b] = s * s *
               std::norm(k(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))) * w[b];
    }
    outer[a] = w[a] * pairwise_sum(std::span<const double>(row));
  }
  return std::sqrt(pairwise_sum(std::span<const double>(outer)) /
                   static_cast<double>(table.n_k()));
}

double symbol_distance(const OrthonormalBasis& basis,
                       const QuadratureMeasure& mu, const SymbolDesc& f,
                       const SymbolDesc& g) {
  const ToeplitzMatrix tf = toeplitz(basis, mu, f);
  const ToeplitzMatrix tg = toeplitz(basis, mu, g);
  return schatten_norm(tf.entries() - tg.entries(), 1.0);
}

SpectralBounds spectral_radius_bounds(const ToeplitzMatrix& a,
                                      const SymbolDesc& f,
                                      const QuadratureMeasure& mu) {
  const SpectralMeasure s = spectrum(a);
  const std::vector<double> fv = sample_symbol(f, mu.nodes());
  const auto [lo, hi] = std::minmax_element(fv.begin(), fv.end());
  SpectralBounds out{};
  out.lambda_min = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.front();
  out.lambda_max = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.back();
  out.inf_f = *lo;
  out.sup_f = *hi;
  const double eps = 1e-9 * (1.0 + std::max(std::abs(*lo), std::abs(*hi)));
  out.confined = out.inf_f - eps <= out.lambda_min &&
                 out.lambda_min <= out.lambda_max &&
                 out.lambda_max <= out.sup_f + eps;
  return out;
}

}  // namespace cdlab
