#pragma once

#include <functional>

#include "cplanes/calculus.hpp"
#include "cplanes/coords.hpp"
#include "cplanes/residual_report.hpp"
#include "cplanes/specfun.hpp"
#include "cplanes/units.hpp"

namespace cplanes {

struct EnergyLevel {
  int n = 1;
  double energy = 0.0;  // Hartree
};

/// E_n = -m_e e^4 / (32 pi^2 eps0^2 hbar^2 n^2); -1/(2 n^2) in atomic units.
/// Throws DomainError for n < 1.
EnergyLevel energy(int n);

/// alpha = sqrt(-hbar^2 / (2 m_e E)). Throws DomainError unless E < 0.
double alpha_of(double energy);

/// A hydrogenic eigensolution Psi_nlk.
///
/// The radial argument is rho = 2 z_r / alpha with alpha = n a0 at E_n, and
/// the radial exponential is supplied entirely by exp(-i E tau / hbar).
class Eigensolution {
 public:
  explicit Eigensolution(QuantumNumbers qn);

  /// Same (n, l, k) structure but built from an arbitrary bound energy;
  /// used to construct deliberately wrong candidates.
  static Eigensolution with_energy(QuantumNumbers qn, double energy);

  const QuantumNumbers& qn() const noexcept { return qn_; }
  const EnergyLevel& level() const noexcept { return level_; }
  double alpha() const noexcept { return params_.alpha(); }
  const PhysicalParams& params() const noexcept { return params_; }
  /// Radial times angular normalization.
  double normalization() const noexcept { return normalization_; }

 private:
  Eigensolution(QuantumNumbers qn, EnergyLevel level);

  QuantumNumbers qn_;
  EnergyLevel level_;
  PhysicalParams params_;
  double normalization_;
};

/// A field on complex spherical coordinates.
using SphericalField = std::function<cplx(const ComplexSpherical&)>;

inline constexpr double kPoleEpsilon = 1e-6;  // on 1 - z_theta^2

/// Orbital angular momentum squared,
///   L^2 = -hbar^2/(1 - z^2) { [(1 - z^2) d/dz]^2 - (z_phi d/dz_phi)^2 },
/// z = z_theta, by finite differences: z_theta along its arc zeta = arccos z,
/// z_phi along the unit circle. Throws SingularPointError("pole") if
/// |1 - z_theta^2| < kPoleEpsilon and ("on-axis") if z_phi is absent.
cplx l2_apply(const SphericalField& f, const ComplexSpherical& cs);

/// hbar z_phi df/dz_phi along the unit circle. Throws on the axis.
cplx l3_apply(const SphericalField& f, const ComplexSpherical& cs);

/// N rho^l L_{n-l-1}^{2l+1}(rho) Y-norm P_l^k(z_theta) z_phi^k exp(-i E tau / hbar).
/// On the axis only k = 0 evaluates; at the origin only l = 0.
cplx psi_complex(const Eigensolution& sol, const ComplexSpherical& cs, cplx tau);

/// Psi as a function of independent (z1, z2, z3, tau), continued off the
/// image of real space through z_r^2 = z3^2 - 2i z1 z2 and |z1|^2 = -i z1 z2.
/// Agrees with psi_complex on images of real events.
cplx psi_continued(const Eigensolution& sol, const ComplexEvent& cev);

/// psi_continued wrapped as a complex-form field.
ComplexField psi_field(const Eigensolution& sol);

/// The ordinary textbook wavefunction R_nl(r) Y_lk(theta, phi) exp(-i E_n t),
/// evaluated with cos(theta) and exp(i k phi).
cplx psi_real_textbook(const QuantumNumbers& qn, const RealSpherical& at, double t);

struct SchrodingerResidual {
  cplx lhs;            // left side of the complex-coordinate equation
  double psi_abs = 0;  // |Psi| at the point
  double relative = 0; // |lhs| / (|Psi| hbar^2/(2 m_e a0^2))
};

/// Evaluates
///   -hbar^2/(2m) lap Psi + hbar^2/(m alpha r) z.dPsi/dz - (1/r)(e^2/(4 pi eps0) - hbar^2/(m alpha)) Psi
/// with lap = z_r^-4 (z_r^2 d/dz_r)^2 - L^2/(hbar^2 z_r^2), at fixed tau, at the
/// image of ev under p. Throws SingularPointError near the origin, pole or axis.
SchrodingerResidual schrodinger_residual(const Eigensolution& sol, const RealEvent& ev,
                                         const PhysicalParams& p);

/// Residuals of the three separated equations at a sample point (z_r > 0,
/// z_theta^2 < 1, off axis). Entries:
///   phi                      (z d/dz)^2 Phi - k^2 Phi
///   theta                    d/dz[(1-z^2) Theta'] - k^2 Theta/(1-z^2) + l(l+1) Theta
///   theta_printed_sign       same with +k^2 (info)
///   theta_l_lminus1          same with l(l-1) (info)
///   radial                   xi R'' + (2 - xi) R' - (1 - lambda + l(l+1)/xi) R on R = xi^l L
///   radial_coefficient_2l2   same with (2l + 2 - xi) on R = xi^l L (info)
///   radial_laguerre_reduced  xi L'' + (2l + 2 - xi) L' + (lambda - l - 1) L on L
/// with lambda = e^2/(4 pi eps0 hbar) sqrt(-m/(2E)), equal to n at E_n.
/// Residuals are scaled by max(1, |function value|).
ResidualReport separated_residuals(const Eigensolution& sol, const ComplexSpherical& sample,
                                   double tolerance = 1e-6);

}  // namespace cplanes
