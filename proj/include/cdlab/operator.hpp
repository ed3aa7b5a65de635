#pragma once

#include <string>
#include <vector>

#include "cdlab/basis.hpp"
#include "cdlab/kernel.hpp"
#include "cdlab/measure.hpp"
#include "cdlab/types.hpp"

namespace cdlab {

struct SymbolDesc {
  std::string name;
  PlaneFunction fn;
};

/// Hermitian matrix of T_k(f) = B_k o M_k(f) in an orthonormal basis.
class ToeplitzMatrix {
public:
  ToeplitzMatrix(CMatrix entries, SymbolDesc symbol, int k,
                 std::string basis_id, double asymmetry = 0.0);

  const CMatrix& entries() const noexcept { return entries_; }
  const SymbolDesc& symbol() const noexcept { return symbol_; }
  int k() const noexcept { return k_; }
  const std::string& basis_id() const noexcept { return basis_id_; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(entries_.rows());
  }
  // max |A - A^*| before symmetrization.
  double asymmetry() const noexcept { return asymmetry_; }

private:
  CMatrix entries_;
  SymbolDesc symbol_;
  int k_;
  std::string basis_id_;
  double asymmetry_;
};

struct SpectralMeasure {
  std::vector<double> eigenvalues;  // ascending
  int k = 0;
};

struct SpectralBounds {
  double lambda_min;
  double lambda_max;
  double inf_f;
  double sup_f;
  // inf f - eps <= lambda_min <= lambda_max <= sup f + eps,
  // eps = 1e-9 (1 + max |f|).
  bool confined;
};

/// entries(i, j) = sum_a f(x_a) s_j(x_a) conj(s_i(x_a)) e^{-2k phi} w_a,
/// then (A + A^*)/2.
ToeplitzMatrix toeplitz(const OrthonormalBasis& basis,
                        const QuadratureMeasure& mu, const SymbolDesc& f);

/// entries(i, j) = a_{i-j}; `fourier` holds a_{-(k-1)} .. a_{k-1}.
ToeplitzMatrix classical_toeplitz(std::span<const Complex> fourier, int k);

/// T_k{f} in normalized Legendre polynomials, Gauss-Legendre order m
/// (m <= 0 selects 4k).
ToeplitzMatrix legendre_toeplitz(const SymbolDesc& f, int k, int m = 0);

/// Orthonormal Legendre polynomials L_0..L_{n-1} at x.
std::vector<double> normalized_legendre(double x, int n);

CMatrix compose(const ToeplitzMatrix& a, const ToeplitzMatrix& b);

/// ((1/n) sum sigma_i^p)^{1/p}.
double schatten_norm(const CMatrix& a, double p);
double operator_norm(const CMatrix& a);
std::vector<double> singular_values(const CMatrix& a);

/// Throws not_hermitian above 1e-8 asymmetry.
SpectralMeasure spectrum(const ToeplitzMatrix& a);
SpectralMeasure spectrum(const CMatrix& a, int k);

/// (1/n) sum g(lambda_i).
double spectral_statistic(const ToeplitzMatrix& a, const RealFunction& g);

/// U h(Lambda) U^*.
CMatrix functional_calculus(const ToeplitzMatrix& a, const RealFunction& h);
CMatrix functional_calculus(const CMatrix& a, const RealFunction& h);

/// || T(f) T(g) - T(f g) ||_p.
double algebra_defect(const OrthonormalBasis& basis,
                      const QuadratureMeasure& mu, const SymbolDesc& f,
                      const SymbolDesc& g, double p);

/// Hilbert-Schmidt bound on the p = 2 defect through the kernel
/// S_k(x, y) = (f(x) g(x) - f(x) g(y)) B_k(x, y).
double defect_kernel_bound(const KernelTable& table,
                           const QuadratureMeasure& mu, const SymbolDesc& f,
                           const SymbolDesc& g);

/// (1/n) Tr |T(f) - T(g)|.
double symbol_distance(const OrthonormalBasis& basis,
                       const QuadratureMeasure& mu, const SymbolDesc& f,
                       const SymbolDesc& g);

SpectralBounds spectral_radius_bounds(const ToeplitzMatrix& a,
                                      const SymbolDesc& f,
                                      const QuadratureMeasure& mu);

}  // namespace cdlab
