#include "cplanes/hydrogen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cplanes/errors.hpp"
#include "cplanes/finite_difference.hpp"

namespace cplanes {
namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kAngularStep = 2e-3;

cplx int_power(cplx w, int k) {
  cplx v{1.0, 0.0};
  const cplx base = k < 0 ? 1.0 / w : w;
  for (int i = 0; i < std::abs(k); ++i) v *= base;
  return v;
}

template <class T>
T radial_polynomial(int n, int l, T rho) {
  T v = detail::laguerre(n - l - 1, 2 * l + 1, rho);
  for (int i = 0; i < l; ++i) v *= rho;
  return v;
}

ComplexSpherical with_theta(const ComplexSpherical& cs, cplx z) {
  ComplexSpherical c = cs;
  c.z_theta = z;
  return c;
}

ComplexSpherical with_phi(const ComplexSpherical& cs, cplx w) {
  ComplexSpherical c = cs;
  c.z_phi = w;
  return c;
}

ComplexSpherical with_radius(const ComplexSpherical& cs, double r) {
  ComplexSpherical c = cs;
  c.z_r = r;
  return c;
}

// Derivatives of a function of a real z_theta, taken along zeta = arccos(z_theta).
struct ArcDerivatives {
  double x;          // z_theta
  double sin_zeta;   // sqrt(1 - x^2)
  cplx d1, d2;       // d/dzeta, d^2/dzeta^2
};

template <class G>
ArcDerivatives arc_derivatives(G&& g_of_z, double x) {
  const double zeta = std::acos(std::clamp(x, -1.0, 1.0));
  const double margin = std::min(zeta, std::numbers::pi - zeta);
  const double h = std::min(kAngularStep, margin / 8.0);
  auto g = [&](double d) { return g_of_z(std::cos(zeta + d)); };
  return {x, std::sqrt((1.0 - x) * (1.0 + x)), fd::derivative(g, 1, h), fd::derivative(g, 2, h)};
}

void require_off_pole(cplx z, const char* op) {
  if (std::abs(1.0 - z * z) < kPoleEpsilon)
    throw SingularPointError("pole", std::string(op) + ": 1 - z_theta^2 vanishes");
}

bool is_real(cplx z) { return std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z)); }

// (1/(1-z^2)) [(1-z^2) d/dz]^2 f = d/dz[(1-z^2) df/dz].
cplx legendre_operator(const SphericalField& f, const ComplexSpherical& cs) {
  const cplx z = cs.theta();
  if (is_real(z)) {
    const ArcDerivatives a =
        arc_derivatives([&](double x) { return f(with_theta(cs, cplx(x, 0.0))); }, z.real());
    return a.d2 + (a.x / a.sin_zeta) * a.d1;
  }
  const double h = kAngularStep * std::max(1.0, std::abs(z));
  auto g = [&](double d) { return f(with_theta(cs, z + d)); };
  return (1.0 - z * z) * fd::derivative(g, 2, h) - 2.0 * z * fd::derivative(g, 1, h);
}

// d^k/ddelta^k f(z_phi e^{i delta}).
cplx circle_derivative(const SphericalField& f, const ComplexSpherical& cs, int order) {
  const cplx w = cs.phi();
  return fd::derivative([&](double d) { return f(with_phi(cs, w * std::polar(1.0, d))); }, order,
                        kAngularStep);
}

}  // namespace

EnergyLevel energy(int n) {
  if (n < 1) throw DomainError("energy: principal quantum number must be >= 1, got " +
                               std::to_string(n));
  const double pi = std::numbers::pi;
  const double e2 = PhysicalParams::elementary_charge * PhysicalParams::elementary_charge;
  const double eps0 = PhysicalParams::vacuum_permittivity;
  const double hbar = PhysicalParams::hbar;
  const double numerator = PhysicalParams::electron_mass * e2 * e2;
  const double denominator = 32.0 * pi * pi * eps0 * eps0 * hbar * hbar;
  return {n, -numerator / denominator / (double(n) * double(n))};
}

PhysicalParams PhysicalParams::for_level(int n, UnitSystem units) {
  return bound(cplanes::energy(n).energy, units);
}

double alpha_of(double e) { return PhysicalParams::bound(e).alpha(); }

Eigensolution::Eigensolution(QuantumNumbers qn) : Eigensolution(qn, energy(qn.n())) {}

Eigensolution::Eigensolution(QuantumNumbers qn, EnergyLevel level)
    : qn_(qn),
      level_(level),
      params_(PhysicalParams::bound(level.energy)),
      normalization_(norm_const(qn) * angular_norm(qn.l(), qn.k())) {}

Eigensolution Eigensolution::with_energy(QuantumNumbers qn, double e) {
  return Eigensolution(qn, EnergyLevel{qn.n(), e});
}

cplx l2_apply(const SphericalField& f, const ComplexSpherical& cs) {
  const cplx z = cs.theta();
  require_off_pole(z, "l2_apply");
  cs.phi();  // throws on the axis
  const cplx theta_part = legendre_operator(f, cs);
  // (z_phi d/dz_phi)^2 = -d^2/ddelta^2 along the unit circle.
  const cplx azimuthal = -circle_derivative(f, cs, 2);
  const double hbar2 = PhysicalParams::hbar * PhysicalParams::hbar;
  return -hbar2 * (theta_part - azimuthal / (1.0 - z * z));
}

cplx l3_apply(const SphericalField& f, const ComplexSpherical& cs) {
  // z_phi d/dz_phi = -i d/ddelta.
  return PhysicalParams::hbar * (-kI) * circle_derivative(f, cs, 1);
}

cplx psi_complex(const Eigensolution& sol, const ComplexSpherical& cs, cplx tau) {
  const int n = sol.qn().n(), l = sol.qn().l(), k = sol.qn().k();
  if (cs.at_origin() && l > 0)
    throw SingularPointError("origin", "psi_complex: z_theta undefined at the origin for l > 0");
  if (cs.on_axis() && k != 0)
    throw SingularPointError("on-axis", "psi_complex: z_phi undefined on the axis for k != 0");

  const double rho = 2.0 * cs.z_r / sol.alpha();
  const double radial = radial_polynomial(n, l, rho);

  cplx angular{1.0, 0.0};
  if (!cs.at_origin()) {
    const cplx z = *cs.z_theta;
    if (is_real(z) && std::abs(z.real()) <= 1.0) {
      angular = assoc_legendre(l, k, z.real());
    } else {
      angular = detail::legendre(l, k, z, std::sqrt((1.0 - z) * (1.0 + z)));
    }
  }
  if (k != 0) angular *= int_power(*cs.z_phi, k);
  return sol.normalization() * radial * angular * time_phase(sol.params(), tau);
}

cplx psi_continued(const Eigensolution& sol, const ComplexEvent& cev) {
  const int n = sol.qn().n(), l = sol.qn().l(), k = sol.qn().k();
  const cplx q = -kI * cev.z1 * cev.z2;  // |z1|^2 on real images
  const cplx zr = std::sqrt(2.0 * q + cev.z3 * cev.z3);
  const cplx phase = time_phase(sol.params(), cev.tau);

  if (std::abs(zr) == 0.0) {
    if (l > 0) return 0.0;
    return sol.normalization() * radial_polynomial(n, 0, 0.0) * phase;
  }
  const cplx rho = 2.0 * zr / sol.alpha();
  const cplx z_theta = cev.z3 / zr;
  const cplx sin_part = std::sqrt(2.0 * q) / zr;
  cplx angular = detail::legendre(l, k, z_theta, sin_part);
  if (k != 0) {
    if (std::abs(q) == 0.0)
      throw SingularPointError("on-axis", "psi_continued: z_phi undefined on the axis");
    angular *= int_power(cev.z1 / std::sqrt(q), k);
  }
  return sol.normalization() * radial_polynomial(n, l, rho) * angular * phase;
}

ComplexField psi_field(const Eigensolution& sol) {
  const auto& qn = sol.qn();
  return ComplexField::on_complex(
      [sol](const ComplexEvent& cev) { return psi_continued(sol, cev); },
      "psi_" + std::to_string(qn.n()) + std::to_string(qn.l()) + std::to_string(qn.k()));
}

cplx psi_real_textbook(const QuantumNumbers& qn, const RealSpherical& at, double t) {
  const int n = qn.n(), l = qn.l(), k = qn.k();
  const double a0 = PhysicalParams::bohr_radius;
  const double rho = 2.0 * at.r / (n * a0);
  const double radial = norm_const(qn) * std::pow(rho, l) *
                        gen_laguerre(n - l - 1, 2 * l + 1, rho) * std::exp(-rho / 2.0);
  const cplx harmonic = angular_norm(l, k) * assoc_legendre(l, k, std::cos(at.theta)) *
                        std::polar(1.0, k * at.phi);
  const double e = energy(n).energy;
  return radial * harmonic * std::polar(1.0, -e * t / PhysicalParams::hbar);
}

SchrodingerResidual schrodinger_residual(const Eigensolution& sol, const RealEvent& ev,
                                         const PhysicalParams& p) {
  const ComplexEvent cev = to_complex(ev, p);
  const ComplexSpherical cs = to_complex_spherical(cev);
  const double r = cs.z_r;
  if (r < kAxisEpsilon)
    throw SingularPointError("origin", "schrodinger_residual: operator carries 1/z_r");
  require_off_pole(cs.theta(), "schrodinger_residual");
  if (sol.qn().k() != 0) cs.phi();

  const SphericalField psi = [&](const ComplexSpherical& c) { return psi_complex(sol, c, cev.tau); };
  const double h = std::min(2e-3 * std::max(1.0, r), 0.25 * r);
  auto radial = [&](double d) { return psi(with_radius(cs, r + d)); };
  const cplx f_r = fd::derivative(radial, 1, h);
  const cplx f_rr = fd::derivative(radial, 2, h);

  const cplx value = psi(cs);
  // On the axis (k = 0 only) the azimuthal derivative vanishes.
  const cplx l2 = cs.on_axis() ? cplx(0.0) : l2_apply(psi, cs);

  const double hbar2 = PhysicalParams::hbar * PhysicalParams::hbar;
  const double m = PhysicalParams::electron_mass;
  const double alpha = p.alpha();
  const double coulomb = PhysicalParams::elementary_charge * PhysicalParams::elementary_charge /
                         (4.0 * std::numbers::pi * PhysicalParams::vacuum_permittivity);
  // z_r^-4 (z_r^2 d/dz_r)^2 = d^2/dz_r^2 + (2/z_r) d/dz_r.
  const cplx laplacian = f_rr + 2.0 * f_r / r - l2 / (hbar2 * r * r);
  const cplx z_dot_grad = r * f_r;

  SchrodingerResidual out;
  out.lhs = -hbar2 / (2.0 * m) * laplacian + hbar2 / (m * alpha * r) * z_dot_grad -
            (coulomb - hbar2 / (m * alpha)) / r * value;
  out.psi_abs = std::abs(value);
  const double a0 = PhysicalParams::bohr_radius;
  out.relative = std::abs(out.lhs) / (out.psi_abs * hbar2 / (2.0 * m * a0 * a0));
  return out;
}

ResidualReport separated_residuals(const Eigensolution& sol, const ComplexSpherical& sample,
                                   double tolerance) {
  const int n = sol.qn().n(), l = sol.qn().l(), k = sol.qn().k();
  if (sample.z_r <= 0.0)
    throw SingularPointError("origin", "separated_residuals: need z_r > 0");
  const cplx zt = sample.theta();
  require_off_pole(zt, "separated_residuals");
  if (!is_real(zt)) throw DomainError("separated_residuals: z_theta must be real");
  const cplx w = sample.phi();

  ResidualReport report;

  // Azimuthal: (z d/dz)^2 Phi - k^2 Phi, Phi = z_phi^k.
  {
    auto phi = [&](double d) { return int_power(w * std::polar(1.0, d), k); };
    const cplx value = phi(0.0);
    const cplx op = -fd::derivative(phi, 2, kAngularStep);
    report.check("phi", std::abs(op - double(k * k) * value) / std::max(1.0, std::abs(value)),
                 std::min(tolerance, 1e-7), "(z_phi d/dz_phi)^2 Phi - k^2 Phi");
  }

  // Polar: Legendre equation in z_theta with L^2 = l(l+1) hbar^2.
  {
    const double x = zt.real();
    const ArcDerivatives a =
        arc_derivatives([&](double z) { return cplx(assoc_legendre(l, k, z), 0.0); }, x);
    const double theta = assoc_legendre(l, k, x);
    const cplx op = a.d2 + (a.x / a.sin_zeta) * a.d1;  // d/dz[(1-z^2) dTheta/dz]
    const double azim = double(k * k) / (1.0 - x * x);
    const double scale = std::max(1.0, std::abs(theta));
    report.check("theta", std::abs(op - azim * theta + double(l * (l + 1)) * theta) / scale,
                 tolerance, "d/dz[(1-z^2)Theta'] - k^2 Theta/(1-z^2) + l(l+1) Theta");
    report.info("theta_printed_sign",
                std::abs(op + azim * theta + double(l * (l + 1)) * theta) / scale,
                "+k^2 Theta/(1-z^2) as printed");
    report.info("theta_l_lminus1", std::abs(op - azim * theta + double(l * (l - 1)) * theta) / scale,
                "L^2 = l(l-1) hbar^2 as printed");
  }

  // Radial: xi = 2 r / alpha, lambda = e^2/(4 pi eps0 hbar) sqrt(-m/(2E)).
  {
    const double xi = 2.0 * sample.z_r / sol.alpha();
    const double coulomb = PhysicalParams::elementary_charge * PhysicalParams::elementary_charge /
                           (4.0 * std::numbers::pi * PhysicalParams::vacuum_permittivity);
    const double lambda = coulomb / PhysicalParams::hbar *
                          std::sqrt(-PhysicalParams::electron_mass / (2.0 * sol.level().energy));
    const double h = std::min(2e-3 * std::max(1.0, xi), 0.25 * xi);
    auto big_r = [&](double d) { return radial_polynomial(n, l, xi + d); };
    const double r0 = big_r(0.0);
    const double r1 = fd::derivative(big_r, 1, h);
    const double r2 = fd::derivative(big_r, 2, h);
    const double centrifugal = double(l * (l + 1)) / xi;
    const double constant = 1.0 - lambda + centrifugal;
    const double scale = std::max(1.0, std::abs(r0));
    const std::string params = "lambda=" + std::to_string(lambda) + ", L^2=l(l+1)";

    report.check("radial", std::abs(xi * r2 + (2.0 - xi) * r1 - constant * r0) / scale, tolerance,
                 "xi R'' + (2 - xi) R' - (1 - lambda + L^2/(hbar^2 xi)) R, R = xi^l L; " + params);
    report.info("radial_coefficient_2l2",
                std::abs(xi * r2 + (2.0 * l + 2.0 - xi) * r1 - constant * r0) / scale,
                "coefficient (2l + 2 - xi) applied to R = xi^l L");

    auto lag = [&](double d) { return detail::laguerre(n - l - 1, 2 * l + 1, xi + d); };
    const double l0 = lag(0.0);
    const double l1 = fd::derivative(lag, 1, h);
    const double l2 = fd::derivative(lag, 2, h);
    report.check("radial_laguerre_reduced",
                 std::abs(xi * l2 + (2.0 * l + 2.0 - xi) * l1 + (lambda - l - 1.0) * l0) /
                     std::max(1.0, std::abs(l0)),
                 tolerance, "xi L'' + (2l + 2 - xi) L' + (lambda - l - 1) L on R' = L");
  }
  return report;
}

}  // namespace cplanes
