#pragma once

#include <array>
#include <complex>
#include <span>
#include <stdexcept>

namespace cplanes::fd {

/// Central-difference weights for derivative orders 1..4 on offsets
/// -3..3. accuracy selects O(h^2) or O(h^4) truncation.
inline std::span<const double, 7> central_weights(int order, int accuracy) {
  static constexpr std::array<std::array<double, 7>, 4> second{{
      {0.0, 0.0, -0.5, 0.0, 0.5, 0.0, 0.0},
      {0.0, 0.0, 1.0, -2.0, 1.0, 0.0, 0.0},
      {0.0, -0.5, 1.0, 0.0, -1.0, 0.5, 0.0},
      {0.0, 1.0, -4.0, 6.0, -4.0, 1.0, 0.0},
  }};
  static constexpr std::array<std::array<double, 7>, 4> fourth{{
      {0.0, 1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0, 0.0},
      {0.0, -1.0 / 12.0, 4.0 / 3.0, -2.5, 4.0 / 3.0, -1.0 / 12.0, 0.0},
      {0.125, -1.0, 1.625, 0.0, -1.625, 1.0, -0.125},
      {-1.0 / 6.0, 2.0, -6.5, 28.0 / 3.0, -6.5, 2.0, -1.0 / 6.0},
  }};
  if (order < 1 || order > 4) throw std::invalid_argument("fd: derivative order must be 1..4");
  if (accuracy == 2) return second[order - 1];
  if (accuracy == 4) return fourth[order - 1];
  throw std::invalid_argument("fd: accuracy must be 2 or 4");
}

/// d^order/ds^order g(s) at s = 0. g is called only at offsets with nonzero weight.
template <class G>
auto derivative(G&& g, int order, double h, int accuracy = 4) {
  const auto w = central_weights(order, accuracy);
  using R = decltype(g(0.0));
  // Weights are symmetric (even order) or antisymmetric (odd order) and sum
  // to zero, so the stencil is applied to differences; constants give exactly 0.
  const bool odd = order % 2 == 1;
  const R centre = odd ? R{} : g(0.0);
  R acc{};
  for (int j = 1; j <= 3; ++j) {
    const double c = w[j + 3];
    if (c == 0.0) continue;
    acc += odd ? c * (g(j * h) - g(-j * h)) : c * ((g(j * h) - centre) + (g(-j * h) - centre));
  }
  double scale = h;
  for (int k = 1; k < order; ++k) scale *= h;
  return acc / scale;
}

/// Mixed partial d^(m+n)/da^m db^n g(a, b) at the origin by a tensor product
/// of 1-D central stencils. Order zero in a direction means plain evaluation.
template <class G>
auto mixed_derivative(G&& g, int m, int n, double ha, double hb, int accuracy = 4) {
  auto along_b = [&](double a) {
    if (n == 0) return g(a, 0.0);
    return derivative([&](double b) { return g(a, b); }, n, hb, accuracy);
  };
  if (m == 0) return along_b(0.0);
  return derivative(along_b, m, ha, accuracy);
}

}  // namespace cplanes::fd
