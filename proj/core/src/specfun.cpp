#include "cplanes/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cplanes/errors.hpp"

namespace cplanes {
namespace {

constexpr int kTableMax = 170;

std::array<double, kTableMax + 1> make_factorials() {
  std::array<double, kTableMax + 1> t{};
  t[0] = 1.0;
  for (int i = 1; i <= kTableMax; ++i) t[i] = t[i - 1] * double(i);
  return t;
}

const std::array<double, kTableMax + 1> kFactorials = make_factorials();

void check_legendre_args(int l, int k, double x) {
  if (l < 0) throw DomainError("assoc_legendre: l must be >= 0");
  if (k > l || k < -l)
    throw DomainError("assoc_legendre: |k| = " + std::to_string(std::abs(k)) + " exceeds l = " +
                      std::to_string(l));
  if (!(std::abs(x) <= 1.0)) throw DomainError("assoc_legendre: |x| must be <= 1");
}

}  // namespace

bool QuantumNumbers::admissible(int n, int l, int k) noexcept {
  return n >= 1 && l >= 0 && l <= n - 1 && k >= -l && k <= l;
}

QuantumNumbers::QuantumNumbers(int n, int l, int k) : n_(n), l_(l), k_(k) {
  if (!admissible(n, l, k))
    throw DomainError("inadmissible quantum numbers (n, l, k) = (" + std::to_string(n) + ", " +
                      std::to_string(l) + ", " + std::to_string(k) +
                      "); need n >= 1, 0 <= l <= n-1, |k| <= l");
}

double factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  if (n > kTableMax) return INFINITY;
  return kFactorials[n];
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  if (n <= kTableMax) return std::log(kFactorials[n]);
  return std::lgamma(double(n) + 1.0);
}

double factorial_ratio(int a, int b) {
  if (a <= kTableMax && b <= kTableMax) return factorial(a) / factorial(b);
  return std::exp(log_factorial(a) - log_factorial(b));
}

double assoc_legendre(int l, int k, double x) {
  check_legendre_args(l, k, x);
  return detail::legendre(l, k, x, std::sqrt((1.0 - x) * (1.0 + x)));
}

LegendreDerivatives assoc_legendre_derivatives(int l, int k, double x) {
  check_legendre_args(l, k, x);
  if (!(std::abs(x) < 1.0)) throw DomainError("assoc_legendre_derivatives: need |x| < 1");
  const int ak = std::abs(k);
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  auto p = [&](int ll) { return ll < ak ? 0.0 : detail::legendre_nonneg(ll, ak, x, s); };
  const double x2m1 = x * x - 1.0;

  const double p0 = p(l), p1 = p(l - 1), p2 = p(l - 2);
  const double d0 = (l * x * p0 - (l + ak) * p1) / x2m1;
  const double d1 = l - 1 < ak ? 0.0 : ((l - 1) * x * p1 - (l - 1 + ak) * p2) / x2m1;
  const double dd0 = (l * p0 + l * x * d0 - (l + ak) * d1 - 2.0 * x * d0) / x2m1;

  double factor = 1.0;
  if (k < 0) factor = ((ak % 2 == 0) ? 1.0 : -1.0) * factorial_ratio(l - ak, l + ak);
  return {factor * p0, factor * d0, factor * dd0};
}

double gen_laguerre(int m, int a, double x) {
  if (m < 0 || a < 0) throw DomainError("gen_laguerre: m and a must be non-negative");
  return detail::laguerre(m, a, x);
}

LaguerreDerivatives gen_laguerre_derivatives(int m, int a, double x) {
  if (m < 0 || a < 0) throw DomainError("gen_laguerre: m and a must be non-negative");
  return {detail::laguerre(m, a, x), m >= 1 ? -detail::laguerre(m - 1, a + 1, x) : 0.0,
          m >= 2 ? detail::laguerre(m - 2, a + 2, x) : 0.0};
}

double norm_const(const QuantumNumbers& qn) {
  const int n = qn.n(), l = qn.l();
  const double a0 = 1.0;
  const double c = 2.0 / (n * a0);
  return std::sqrt(c * c * c * factorial_ratio(n - l - 1, n + l) / (2.0 * n));
}

double angular_norm(int l, int k) {
  if (l < 0 || k > l || k < -l) throw DomainError("angular_norm: need |k| <= l");
  return std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi) * factorial_ratio(l - k, l + k));
}

}  // namespace cplanes
