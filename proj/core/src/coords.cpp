#include "cplanes/coords.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cplanes/errors.hpp"

namespace cplanes {
namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr double kImageTolerance = 1e-9;

double principal_phi(double phi) noexcept {
  return phi <= -std::numbers::pi ? std::numbers::pi : phi;
}

}  // namespace

double RealEvent::radius() const noexcept { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

bool RealEvent::finite() const noexcept {
  return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3) && std::isfinite(t);
}

double ComplexEvent::modulus() const noexcept {
  return std::sqrt(std::norm(z1) + std::norm(z2) + std::norm(z3));
}

cplx ComplexSpherical::theta() const {
  if (!z_theta) throw SingularPointError("origin", "z_theta is undefined at the origin");
  return *z_theta;
}

cplx ComplexSpherical::phi() const {
  if (!z_phi) throw SingularPointError("on-axis", "z_phi is undefined on the x3 axis");
  return *z_phi;
}

ComplexEvent to_complex(const RealEvent& ev, const PhysicalParams& p) {
  if (!ev.finite()) throw DomainError("to_complex: event has non-finite components");
  const double r = ev.radius();
  ComplexEvent cev;
  cev.z1 = cplx(ev.x1, ev.x2) * kInvSqrt2;
  cev.z2 = cplx(ev.x2, ev.x1) * kInvSqrt2;
  cev.z3 = cplx(ev.x3, 0.0);
  cev.tau = cplx(ev.t, -PhysicalParams::hbar * r / (p.alpha() * p.energy()));
  return cev;
}

RealEvent to_real(const ComplexEvent& cev, const PhysicalParams& p) {
  const bool finite = std::isfinite(std::abs(cev.z1)) && std::isfinite(std::abs(cev.z2)) &&
                      std::isfinite(std::abs(cev.z3)) && std::isfinite(std::abs(cev.tau));
  if (!finite) throw DomainError("to_real: event has non-finite components");

  const double scale = 1.0 + std::abs(cev.z1) + std::abs(cev.z2) + std::abs(cev.z3);
  const double correlation = std::abs(cev.z2 - kI * std::conj(cev.z1));
  if (correlation > kImageTolerance * scale)
    throw InvariantViolation("z2 = i*conj(z1)", "to_real: |z2 - i conj(z1)| = " +
                                                    std::to_string(correlation));
  if (std::abs(cev.z3.imag()) > kImageTolerance * scale)
    throw InvariantViolation("Im(z3) = 0",
                             "to_real: Im(z3) = " + std::to_string(cev.z3.imag()));

  RealEvent ev;
  ev.x1 = ((cev.z1 - kI * cev.z2) * kInvSqrt2).real();
  ev.x2 = ((cev.z2 - kI * cev.z1) * kInvSqrt2).real();
  ev.x3 = cev.z3.real();

  const double r = cev.modulus();
  const cplx t = cev.tau + kI * PhysicalParams::hbar * r / (p.energy() * p.alpha());
  if (std::abs(t.imag()) > kImageTolerance * (1.0 + std::abs(cev.tau)))
    throw InvariantViolation("Im(tau) = -hbar|z|/(alpha E)",
                             "to_real: complex time inconsistent with |z|, residual " +
                                 std::to_string(t.imag()));
  ev.t = t.real();
  return ev;
}

ResidualReport identity_residuals(const RealEvent& ev, const PhysicalParams& p) {
  const ComplexEvent cev = to_complex(ev, p);
  const double planar = ev.x1 * ev.x1 + ev.x2 * ev.x2;
  const double sq = planar + ev.x3 * ev.x3;

  ResidualReport report;
  const double lhs4 = (std::conj(cev.z1) * cev.z1 + std::conj(cev.z2) * cev.z2 +
                       std::conj(cev.z3) * cev.z3).real();
  report.check("isometry", std::abs(lhs4 - sq), 1e-12 * (1.0 + sq),
               "z1* z1 + z2* z2 + z3* z3 = x1^2 + x2^2 + x3^2");

  if (std::abs(cev.z1) <= 1e-9) {
    report.skip("correlation_1", "z1 = 0 on the x3 axis");
    report.skip("correlation_2", "z1 = 0 on the x3 axis");
  } else {
    report.check("correlation_1", std::abs(cev.z1 / std::conj(cev.z2) - kI), 1e-13,
                 "z1 / z2* = i");
    report.check("correlation_2", std::abs(cev.z2 / std::conj(cev.z1) - kI), 1e-13,
                 "z2 / z1* = i");
  }

  report.check("product", std::abs(-2.0 * kI * cev.z1 * cev.z2 - planar), 1e-12 * (1.0 + planar),
               "-2i z1 z2 = x1^2 + x2^2");
  return report;
}

ComplexSpherical to_complex_spherical(const ComplexEvent& cev) {
  ComplexSpherical cs;
  cs.z_r = cev.modulus();
  if (cs.z_r > 0.0) cs.z_theta = cev.z3 / cs.z_r;
  const double a1 = std::abs(cev.z1);
  if (a1 > 1e-14 * cs.z_r && a1 > 0.0) cs.z_phi = cev.z1 / a1;
  return cs;
}

RealSpherical complex_to_real_spherical(const ComplexSpherical& cs) {
  RealSpherical out;
  out.r = cs.z_r;
  if (cs.z_theta) {
    const cplx z = *cs.z_theta;
    if (std::abs(z.imag()) > kImageTolerance || std::abs(z.real()) > 1.0 + 1e-12)
      throw DomainError("complex_to_real_spherical: z_theta must be real in [-1, 1]");
    out.theta = std::acos(std::clamp(z.real(), -1.0, 1.0));
  }
  if (cs.z_phi) {
    const cplx w = *cs.z_phi;
    if (std::abs(std::abs(w) - 1.0) > kImageTolerance)
      throw DomainError("complex_to_real_spherical: |z_phi| must be 1, got " +
                        std::to_string(std::abs(w)));
    const cplx phi = -cplx(0.0, 1.0) * std::log(w);
    out.phi = principal_phi(phi.real());
  }
  return out;
}

RealSpherical real_spherical(const RealEvent& ev) noexcept {
  RealSpherical out;
  out.r = ev.radius();
  out.theta = out.r > 0.0 ? std::acos(std::clamp(ev.x3 / out.r, -1.0, 1.0)) : 0.0;
  out.phi = principal_phi(std::atan2(ev.x2, ev.x1));
  return out;
}

RealEvent from_spherical(const RealSpherical& sph, double t) noexcept {
  const double st = std::sin(sph.theta);
  return {sph.r * st * std::cos(sph.phi), sph.r * st * std::sin(sph.phi),
          sph.r * std::cos(sph.theta), t};
}

cplx time_phase(const PhysicalParams& p, cplx tau) noexcept {
  return std::exp(-kI * p.energy() * tau / PhysicalParams::hbar);
}

}  // namespace cplanes
