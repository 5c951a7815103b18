#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>

namespace cplanes {

/// (n, l, k): principal, orbital and azimuthal quantum numbers.
/// n >= 1, 0 <= l <= n - 1, |k| <= l.
class QuantumNumbers {
 public:
  /// Throws DomainError if the triple is not admissible.
  QuantumNumbers(int n, int l, int k);

  int n() const noexcept { return n_; }
  int l() const noexcept { return l_; }
  int k() const noexcept { return k_; }

  static bool admissible(int n, int l, int k) noexcept;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;

 private:
  int n_, l_, k_;
};

/// n! as a double from a table up to 170!; +inf beyond.
double factorial(int n);
/// ln(n!), exact table below 171, lgamma above.
double log_factorial(int n);
/// a! / b!, through the table when both fit, logarithms otherwise.
double factorial_ratio(int a, int b);

/// Associated Legendre function P_l^k(x) with the Condon-Shortley phase,
/// negative k by P_l^{-k} = (-1)^k (l-k)!/(l+k)! P_l^k.
/// Throws DomainError for l < 0, |k| > l or |x| > 1.
double assoc_legendre(int l, int k, double x);

struct LegendreDerivatives {
  double value, first, second;
};

/// P, P' and P'' from the derivative recurrence
/// (x^2 - 1) P_l^k' = l x P_l^k - (l + k) P_{l-1}^k. Requires |x| < 1.
LegendreDerivatives assoc_legendre_derivatives(int l, int k, double x);

/// Generalized Laguerre polynomial L_m^a(x), normalized so that
/// L_m^a(0) = C(m + a, m). Throws DomainError for m < 0 or a < 0.
double gen_laguerre(int m, int a, double x);

struct LaguerreDerivatives {
  double value, first, second;
};

/// L, L' = -L_{m-1}^{a+1}, L'' = L_{m-2}^{a+2}.
LaguerreDerivatives gen_laguerre_derivatives(int m, int a, double x);

/// Radial normalization sqrt((2/(n a0))^3 (n-l-1)! / (2n (n+l)!)).
double norm_const(const QuantumNumbers& qn);

/// Angular normalization sqrt((2l+1)/(4 pi) (l-k)!/(l+k)!).
double angular_norm(int l, int k);

namespace detail {

// Recurrences shared by the real API and the analytic continuation used for
// holomorphy probing. T is double or std::complex<double>; sin_part is
// sqrt(1 - x^2), supplied by the caller so the branch is chosen there.
template <class T>
T legendre_nonneg(int l, int k, T x, T sin_part) {
  // P_k^k = (-1)^k (2k-1)!! (1-x^2)^{k/2}
  T pmm = T(1.0);
  double odd = 1.0;
  for (int i = 1; i <= k; ++i) {
    pmm *= -odd * sin_part;
    odd += 2.0;
  }
  if (l == k) return pmm;
  T pmmp1 = x * double(2 * k + 1) * pmm;
  if (l == k + 1) return pmmp1;
  T pll{};
  for (int ll = k + 2; ll <= l; ++ll) {
    pll = (x * double(2 * ll - 1) * pmmp1 - double(ll + k - 1) * pmm) / double(ll - k);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

template <class T>
T legendre(int l, int k, T x, T sin_part) {
  const int ak = k < 0 ? -k : k;
  T v = legendre_nonneg(l, ak, x, sin_part);
  if (k < 0) {
    const double sign = (ak % 2 == 0) ? 1.0 : -1.0;
    v *= sign * factorial_ratio(l - ak, l + ak);
  }
  return v;
}

template <class T>
T laguerre(int m, int a, T x) {
  T l0 = T(1.0);
  if (m == 0) return l0;
  T l1 = T(1.0 + a) - x;
  for (int j = 1; j < m; ++j) {
    T l2 = ((double(2 * j + 1 + a) - x) * l1 - double(j + a) * l0) / double(j + 1);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

}  // namespace detail

}  // namespace cplanes
