#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cplanes/coords.hpp"
#include "cplanes/residual_report.hpp"

namespace cplanes {

/// The four complex coordinates. z3 is the real plane.
enum class Plane { z1, z2, z3, tau };

std::string_view to_string(Plane plane) noexcept;

/// Operators carrying 1/|x| refuse evaluation closer to the origin than this.
inline constexpr double kAxisEpsilon = 1e-8;

/// A complex-valued field. A field given on complex coordinates treats
/// (z1, z2, z3, tau) as independent variables and can be probed off the image
/// of real space; a field given on real coordinates can only be differenced
/// in (x_i, t).
class ComplexField {
 public:
  enum class Representation { real, complex };

  using RealFn = std::function<cplx(const RealEvent&)>;
  using ComplexFn = std::function<cplx(const ComplexEvent&)>;

  static ComplexField on_real(RealFn fn, std::string name, bool smooth = true);
  static ComplexField on_complex(ComplexFn fn, std::string name, bool smooth = true);

  Representation representation() const noexcept { return rep_; }
  bool has_complex_form() const noexcept { return rep_ == Representation::complex; }
  const std::string& name() const noexcept { return name_; }
  bool smooth() const noexcept { return smooth_; }

  /// Value at a real event; complex fields are evaluated at its image under p.
  cplx operator()(const RealEvent& ev, const PhysicalParams& p) const;
  /// Value at a complex event. Throws std::logic_error for real-only fields.
  cplx operator()(const ComplexEvent& cev) const;

 private:
  ComplexField(Representation rep, RealFn r, ComplexFn c, std::string name, bool smooth)
      : rep_(rep), real_(std::move(r)), complex_(std::move(c)),
        name_(std::move(name)), smooth_(smooth) {}

  Representation rep_;
  RealFn real_;
  ComplexFn complex_;
  std::string name_;
  bool smooth_;
};

/// Real-step central differencing in (x_i, t). h = rel_step * max(1, |coordinate|).
struct FiniteDifference {
  double rel_step = 1e-5;
  bool richardson = false;
};

/// One-plane constrained derivative of order (m, n):
/// d^(m+n) / dx1^m dx2^n with every other complex coordinate held fixed.
/// For z3 and tau only m is meaningful (n must be 0).
struct DerivativeSpec {
  Plane plane = Plane::z1;
  int m = 1;
  int n = 0;
  /// 0 selects an order-dependent default step.
  double rel_step = 0.0;

  /// Validates orders (m, n >= 0, 1 <= m + n <= 4) and the plane/order pairing.
  static DerivativeSpec constrained(Plane plane, int m, int n = 0, double rel_step = 0.0);

  /// The coordinates held constant, in the notation (z2, z3, tau) etc.
  std::vector<Plane> held_constant() const;
};

/// d/dz1, d/dz2, d/dz3 or d/dtau expressed through real derivatives,
///   d/dz1 = [d/dx1 - i d/dx2 + (x1 - i x2)/(alpha r) (i hbar/E) d/dt] / sqrt(2)
/// and the analogous z2, z3 forms; d/dtau = d/dt.
/// Throws SingularPointError("origin") for r < kAxisEpsilon (z1, z2, z3 planes).
cplx d_z(const ComplexField& f, const RealEvent& ev, const PhysicalParams& p, Plane plane,
         const FiniteDifference& fd = {});

/// sum_i z_i df/dz_i; equals x_i df/dx_i + (r/alpha)(i hbar/E) df/dt.
cplx radial_scaling(const ComplexField& f, const RealEvent& ev, const PhysicalParams& p,
                    const FiniteDifference& fd = {});

/// Real derivative d/dx_axis (axis 1..3) or d/dt (axis 4) rebuilt from the
/// complex-coordinate operators (the inverse relations).
cplx d_x_via_complex(const ComplexField& f, const RealEvent& ev, const PhysicalParams& p,
                     int axis, const FiniteDifference& fd = {});

/// Constrained real derivative from the single-plane complex derivative:
///   (z1 plane)  i^n (d/dz1 / sqrt 2)^(m+n) f
///   (z2 plane)  i^m (d/dz2 / sqrt 2)^(m+n) f
///   (z3, tau)   d^m f / dz3^m,  d^m f / dtau^m
/// Complex-form fields are differenced in the plane directly; real-only
/// fields fall back to nested d_z (accurate to m + n <= 2).
cplx d_x_constrained(const ComplexField& f, const ComplexEvent& cev, const PhysicalParams& p,
                     const DerivativeSpec& spec);

/// The same constrained derivative computed by moving x1 and x2 themselves
/// inside the chosen plane with the other coordinates fixed. Requires a
/// complex-form field.
cplx d_x_direct(const ComplexField& f, const ComplexEvent& cev, const DerivativeSpec& spec);

/// (d^2/dx1^2 + d^2/dx2^2) with the complement of `plane` (z1 or z2) held.
cplx constrained_laplacian(const ComplexField& f, const ComplexEvent& cev, Plane plane);

enum class ConjugateForm {
  star_of_derivative,     // d*/dz, the complex conjugate of the d/dz operator
  derivative_by_conjugate  // d/dz*, derivative with respect to the conjugate variable
};

/// The two conjugate operators for plane z1 or z2, in the printed forms
///   d*/dz1 = [d/dx1 + i d/dx2 + (x1 + i x2)/(alpha r)(i hbar/E) d/dt] / sqrt 2
///   d/dz1* = [d/dx1 + i d/dx2 - (x1 + i x2)/(alpha r)(i hbar/E) d/dt] / sqrt 2
/// They differ only in the sign of the time term.
cplx conjugate_derivative(const ComplexField& f, const RealEvent& ev, const PhysicalParams& p,
                          ConjugateForm form, Plane plane = Plane::z1,
                          const FiniteDifference& fd = {});

/// df/dtau* = (df/dt + i df/ds) / 2 at fixed z. Requires a complex-form field.
cplx d_tau_conjugate(const ComplexField& f, const ComplexEvent& cev,
                     const FiniteDifference& fd = {});

inline constexpr double kHolomorphyTolerance = 1e-6;

/// Cauchy-Riemann residuals in the three complex planes:
///   "tau_plane": |f_tt + (alpha E / hbar)^2 f_rr|, r entering only through s
///   "z1_plane":  |(df/dx1 + i df/dx2)| at fixed tau, z2, z3
///   "z2_plane":  |(df/dx2 + i df/dx1)| at fixed tau, z1, z3
/// Complex-form fields are probed in each plane with the others held.
/// Real-only fields: tau plane differenced in r along the fixed direction,
/// z planes through the real chain rule with tau held. On real space z1 and
/// i conj(z2) coincide, so a real-only field holomorphic in z1 shows a z2-plane
/// residual; give the complex form when both planes matter.
ResidualReport cr_residuals(const ComplexField& f, const RealEvent& ev, const PhysicalParams& p,
                            double tolerance = kHolomorphyTolerance);

struct HolomorphyOffender {
  std::size_t sample = 0;
  std::string plane;
  double residual = 0.0;
  RealEvent at;
};

struct HolomorphyVerdict {
  bool holomorphic = false;
  double max_residual = 0.0;
  double tolerance = kHolomorphyTolerance;
  std::size_t samples = 0;
  std::vector<HolomorphyOffender> worst;  // largest first, at most 5
};

/// Aggregates cr_residuals over samples. Throws std::invalid_argument when
/// samples is empty.
HolomorphyVerdict holomorphy_report(const ComplexField& f, std::span<const RealEvent> samples,
                                    const PhysicalParams& p,
                                    double tolerance = kHolomorphyTolerance);

/// Built-in fields, all given on complex coordinates.
namespace fields {
ComplexField coordinate(Plane plane);
ComplexField conj_z1();
ComplexField abs2_z1();
ComplexField constant(cplx value);
/// sum_k coeffs[k] * w^k where w is the coordinate of `plane`.
ComplexField polynomial(std::vector<cplx> coeffs, Plane plane = Plane::z1);
/// Product of powers z1^a z2^b z3^c.
ComplexField monomial(int a, int b, int c);
/// exp(-i E tau / hbar).
ComplexField time_phase(const PhysicalParams& p);
/// exp(w) for the coordinate w of `plane`.
ComplexField exponential(Plane plane);
}  // namespace fields

}  // namespace cplanes
