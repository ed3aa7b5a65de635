#pragma once

// Test-only reference computations. Nothing here calls into the library's
// numerical paths; each routine is an independent route to a value the
// library also computes.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace oracle {

using cld = std::complex<long double>;

// Characteristic polynomial of a Hermitian matrix by Faddeev-LeVerrier,
// coefficients c[0..n] of sum c_i t^i with c[n] = 1.
inline std::vector<long double> char_poly(const Eigen::MatrixXcd& b) {
  const int n = static_cast<int>(b.rows());
  using M = Eigen::Matrix<cld, Eigen::Dynamic, Eigen::Dynamic>;
  M bl = b.cast<cld>();
  std::vector<long double> c(static_cast<std::size_t>(n) + 1, 0.0L);
  c[static_cast<std::size_t>(n)] = 1.0L;
  M mk = M::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = bl * mk;
    for (int i = 0; i < n; ++i) mk(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const cld tr = (bl * mk).trace();
    c[static_cast<std::size_t>(n - k)] = -tr.real() / k;
  }
  return c;
}

inline long double horner(const std::vector<long double>& c, long double t,
                          long double* deriv = nullptr) {
  long double p = 0.0L;
  long double dp = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * t + p;
    p = p * t + *it;
  }
  if (deriv) *deriv = dp;
  return p;
}

// Real roots of a real-rooted polynomial: Newton from the right of the
// largest root converges monotonically; deflate and repeat, then polish.
inline std::vector<long double> real_roots(std::vector<long double> c,
                                           long double upper) {
  const std::vector<long double> original = c;
  std::vector<long double> roots;
  while (c.size() > 1) {
    long double t = upper;
    for (int it = 0; it < 500; ++it) {
      long double d = 0.0L;
      const long double p = horner(c, t, &d);
      if (d == 0.0L) break;
      const long double step = p / d;
      t -= step;
      if (std::fabs(step) <= 1e-18L * std::max(1.0L, std::fabs(t))) break;
    }
    for (int it = 0; it < 5; ++it) {
      long double d = 0.0L;
      const long double p = horner(original, t, &d);
      if (d != 0.0L) t -= p / d;
    }
    roots.push_back(t);
    // Synthetic division by (x - t).
    std::vector<long double> q(c.size() - 1);
    long double carry = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = c[i] + carry * t;
    }
    c = q;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Schatten p-norm through eigenvalues of A A^* found as polynomial roots.
inline double schatten_by_char_poly(const Eigen::MatrixXcd& a, double p) {
  const Eigen::MatrixXcd b = a * a.adjoint();
  const long double upper = b.trace().real() + 1.0L;
  const auto roots = real_roots(char_poly(b), upper);
  long double acc = 0.0L;
  for (long double r : roots) acc += std::pow(std::sqrt(std::max(r, 0.0L)), p);
  return static_cast<double>(std::pow(acc / roots.size(), 1.0L / p));
}

inline long double binomial(int n, int k) {
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Monomial coefficients of the orthonormal Legendre polynomial L_n
// (int_{-1}^{1} L_n L_m dx = delta_nm) from the explicit sum formula.
inline std::vector<long double> legendre_coeffs(int n) {
  std::vector<long double> c(static_cast<std::size_t>(n) + 1, 0.0L);
  const long double scale = std::sqrt((2.0L * n + 1.0L) / 2.0L) / std::pow(2.0L, n);
  for (int k = 0; 2 * k <= n; ++k) {
    const long double term = (k % 2 ? -1.0L : 1.0L) * binomial(n, k) * binomial(2 * n - 2 * k, n);
    c[static_cast<std::size_t>(n - 2 * k)] = scale * term;
  }
  return c;
}

// Exact int_{-1}^{1} f L_i L_j dx for polynomial f (monomial coefficients).
inline double legendre_entry(const std::vector<long double>& f, int i, int j) {
  const auto li = legendre_coeffs(i);
  const auto lj = legendre_coeffs(j);
  long double acc = 0.0L;
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < li.size(); ++b)
      for (std::size_t c = 0; c < lj.size(); ++c) {
        const std::size_t e = a + b + c;
        if (e % 2 == 0) acc += f[a] * li[b] * lj[c] * 2.0L / (e + 1);
      }
  return static_cast<double>(acc);
}

// T[f](i, j) = a_{i-j} built straight from the coefficient definition;
// `coeff(n)` returns a_n.
template <typename Coeff>
Eigen::MatrixXcd fourier_toeplitz(int k, Coeff coeff) {
  Eigen::MatrixXcd t(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t(i, j) = coeff(i - j);
  return t;
}

// sqrt((1/n) sum |d_ij|^2): the normalized Hilbert-Schmidt norm.
inline double hs_norm(const Eigen::MatrixXcd& d) {
  long double acc = 0.0L;
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j) acc += std::norm(std::complex<long double>(d(i, j)));
  return static_cast<double>(std::sqrt(acc / d.rows()));
}

inline Eigen::MatrixXcd random_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
  return a;
}

}  // namespace oracle
