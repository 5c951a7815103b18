#pragma once

#include <vector>

namespace cplanes {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// Gauss-Laguerre for weight exp(-x) on [0, inf).
QuadratureRule gauss_laguerre(int n);

/// Equally spaced trapezoid on [0, 2 pi) for periodic integrands.
QuadratureRule periodic_trapezoid(int n);

}  // namespace cplanes
