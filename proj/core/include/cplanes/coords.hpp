#pragma once

#include <complex>
#include <optional>

#include "cplanes/residual_report.hpp"
#include "cplanes/units.hpp"

namespace cplanes {

using cplx = std::complex<double>;

/// A point (x1, x2, x3, t) of real space-time, atomic units.
struct RealEvent {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double t = 0.0;

  double radius() const noexcept;
  bool finite() const noexcept;
};

/// A point (z1, z2, z3, tau) of the three-complex-plane space.
///
/// Images of real events satisfy z2 = i conj(z1) and Im z3 = 0. Off-image
/// points are legal values (holomorphy checks perturb one plane at a time);
/// to_real() rejects them.
struct ComplexEvent {
  cplx z1;
  cplx z2;
  cplx z3;
  cplx tau;

  /// Imaginary part of the complex time, s = -hbar r / (alpha E).
  double s() const noexcept { return tau.imag(); }
  /// sqrt(|z1|^2 + |z2|^2 + |z3|^2).
  double modulus() const noexcept;
};

/// Complex spherical polar coordinates (z_r, z_theta, z_phi).
///
/// z_theta is absent at the origin and z_phi is absent on the x3 axis; the
/// accessors throw SingularPointError tagged "origin" / "on-axis".
struct ComplexSpherical {
  double z_r = 0.0;
  std::optional<cplx> z_theta;
  std::optional<cplx> z_phi;

  cplx theta() const;
  cplx phi() const;
  bool on_axis() const noexcept { return !z_phi.has_value(); }
  bool at_origin() const noexcept { return !z_theta.has_value(); }
};

/// Ordinary spherical coordinates, theta in [0, pi], phi in (-pi, pi].
struct RealSpherical {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Forward isometric map. Throws DomainError on non-finite input.
ComplexEvent to_complex(const RealEvent& ev, const PhysicalParams& p);

/// Inverse map. Throws InvariantViolation naming the image invariant that the
/// input breaks (tolerance ~1e-9 relative).
RealEvent to_real(const ComplexEvent& cev, const PhysicalParams& p);

/// |LHS - RHS| for the isometry, plane-correlation and product identities at
/// the image of ev. Correlation is skipped when z1 vanishes.
ResidualReport identity_residuals(const RealEvent& ev, const PhysicalParams& p);

ComplexSpherical to_complex_spherical(const ComplexEvent& cev);

/// theta = arccos(z_theta), phi = -i ln(z_phi) on the principal branch.
/// On the axis phi is 0 by convention. Throws DomainError if |z_phi| != 1 or
/// z_theta is not real in [-1, 1].
RealSpherical complex_to_real_spherical(const ComplexSpherical& cs);

/// Direct (trigonometric) spherical coordinates of a real point.
RealSpherical real_spherical(const RealEvent& ev) noexcept;

RealEvent from_spherical(const RealSpherical& sph, double t) noexcept;

/// exp(-i E tau / hbar).
cplx time_phase(const PhysicalParams& p, cplx tau) noexcept;

}  // namespace cplanes
