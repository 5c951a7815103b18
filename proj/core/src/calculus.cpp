#include "cplanes/calculus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cplanes/errors.hpp"
#include "cplanes/finite_difference.hpp"

namespace cplanes {
namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

double scaled(double rel, double coord) { return rel * std::max(1.0, std::abs(coord)); }

double& component(RealEvent& ev, int axis) {
  switch (axis) {
    case 1: return ev.x1;
    case 2: return ev.x2;
    case 3: return ev.x3;
    case 4: return ev.t;
  }
  throw std::invalid_argument("axis must be 1..4");
}

cplx& coordinate_ref(ComplexEvent& cev, Plane plane) {
  switch (plane) {
    case Plane::z1: return cev.z1;
    case Plane::z2: return cev.z2;
    case Plane::z3: return cev.z3;
    case Plane::tau: return cev.tau;
  }
  throw std::invalid_argument("unknown plane");
}

cplx coordinate_of(const ComplexEvent& cev, Plane plane) {
  ComplexEvent copy = cev;
  return coordinate_ref(copy, plane);
}

// Plain partial derivative of f along a real coordinate (axis 4 is t).
cplx partial(const ComplexField& f, const RealEvent& ev, const PhysicalParams& p, int axis,
             const FiniteDifference& fd) {
  RealEvent base = ev;
  const double h = scaled(fd.rel_step, component(base, axis));
  auto g = [&](double d) {
    RealEvent e = ev;
    component(e, axis) += d;
    return f(e, p);
  };
  const cplx coarse = fd::derivative(g, 1, h, 2);
  if (!fd.richardson) return coarse;
  const cplx fine = fd::derivative(g, 1, 0.5 * h, 2);
  return (4.0 * fine - coarse) / 3.0;
}

struct RealGradient {
  cplx d1, d2, d3, dt;
};

RealGradient gradient(const ComplexField& f, const RealEvent& ev, const PhysicalParams& p,
                      const FiniteDifference& fd) {
  return {partial(f, ev, p, 1, fd), partial(f, ev, p, 2, fd), partial(f, ev, p, 3, fd),
          partial(f, ev, p, 4, fd)};
}

// (i hbar / E) / (alpha r), the factor multiplying the time derivative.
cplx time_factor(const PhysicalParams& p, double r) {
  return kI * PhysicalParams::hbar / p.energy() / (p.alpha() * r);
}

double require_off_origin(const RealEvent& ev, const char* op) {
  const double r = ev.radius();
  if (r < kAxisEpsilon)
    throw SingularPointError("origin", std::string(op) + ": operator carries 1/|x|, r = " +
                                           std::to_string(r));
  return r;
}

// Default step for an order-k derivative taken inside one complex plane.
double plane_step(int order) {
  static constexpr std::array<double, 4> steps{1e-3, 5e-3, 1e-2, 2e-2};
  return steps.at(order - 1);
}

ComplexEvent shifted(const ComplexEvent& cev, Plane plane, cplx delta) {
  ComplexEvent e = cev;
  coordinate_ref(e, plane) += delta;
  return e;
}

cplx ipow(int k) {
  static constexpr std::array<cplx, 4> powers{cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  return powers[((k % 4) + 4) % 4];
}

}  // namespace

std::string_view to_string(Plane plane) noexcept {
  switch (plane) {
    case Plane::z1: return "z1";
    case Plane::z2: return "z2";
    case Plane::z3: return "z3";
    case Plane::tau: return "tau";
  }
  return "?";
}

ComplexField ComplexField::on_real(RealFn fn, std::string name, bool smooth) {
  return ComplexField(Representation::real, std::move(fn), {}, std::move(name), smooth);
}

ComplexField ComplexField::on_complex(ComplexFn fn, std::string name, bool smooth) {
  return ComplexField(Representation::complex, {}, std::move(fn), std::move(name), smooth);
}

cplx ComplexField::operator()(const RealEvent& ev, const PhysicalParams& p) const {
  if (rep_ == Representation::complex) return complex_(to_complex(ev, p));
  return real_(ev);
}

cplx ComplexField::operator()(const ComplexEvent& cev) const {
  if (rep_ != Representation::complex)
    throw std::logic_error("field '" + name_ + "' has no complex-coordinate form");
  return complex_(cev);
}

DerivativeSpec DerivativeSpec::constrained(Plane plane, int m, int n, double rel_step) {
  if (m < 0 || n < 0) throw std::invalid_argument("derivative orders must be non-negative");
  if (m + n < 1 || m + n > 4) throw std::invalid_argument("total derivative order must be 1..4");
  if ((plane == Plane::z3 || plane == Plane::tau) && n != 0)
    throw std::invalid_argument("planes z3 and tau take a single order m");
  if (rel_step < 0.0) throw std::invalid_argument("step must be positive");
  return {plane, m, n, rel_step};
}

std::vector<Plane> DerivativeSpec::held_constant() const {
  std::vector<Plane> held;
  for (Plane q : {Plane::z1, Plane::z2, Plane::z3, Plane::tau})
    if (q != plane) held.push_back(q);
  return held;
}

cplx d_z(const ComplexField& f, const RealEvent& ev, const PhysicalParams& p, Plane plane,
         const FiniteDifference& fd) {
  if (plane == Plane::tau) return partial(f, ev, p, 4, fd);
  const double r = require_off_origin(ev, "d_z");
  const RealGradient g = gradient(f, ev, p, fd);
  const cplx tf = time_factor(p, r) * g.dt;
  switch (plane) {
    case Plane::z1:
      return kInvSqrt2 * (g.d1 - kI * g.d2 + cplx(ev.x1, -ev.x2) * tf);
    case Plane::z2:
      return kInvSqrt2 * (g.d2 - kI * g.d1 + cplx(ev.x2, -ev.x1) * tf);
    case Plane::z3:
      return g.d3 + ev.x3 * tf;
    case Plane::tau:
      break;
  }
  return g.dt;
}

cplx radial_scaling(const ComplexField& f, const RealEvent& ev, const PhysicalParams& p,
                    const FiniteDifference& fd) {
  const ComplexEvent cev = to_complex(ev, p);
  return cev.z1 * d_z(f, ev, p, Plane::z1, fd) + cev.z2 * d_z(f, ev, p, Plane::z2, fd) +
         cev.z3 * d_z(f, ev, p, Plane::z3, fd);
}

cplx d_x_via_complex(const ComplexField& f, const RealEvent& ev, const PhysicalParams& p,
                     int axis, const FiniteDifference& fd) {
  const cplx dtau = d_z(f, ev, p, Plane::tau, fd);
  if (axis == 4) return dtau;
  require_off_origin(ev, "d_x_via_complex");
  const ComplexEvent cev = to_complex(ev, p);
  const cplx tf = time_factor(p, cev.modulus()) * dtau;
  switch (axis) {
    case 1:
      return kInvSqrt2 * (d_z(f, ev, p, Plane::z1, fd) + kI * d_z(f, ev, p, Plane::z2, fd) -
                          (cev.z1 - kI * cev.z2) * tf);
    case 2:
      return kInvSqrt2 * (d_z(f, ev, p, Plane::z2, fd) + kI * d_z(f, ev, p, Plane::z1, fd) -
                          (cev.z2 - kI * cev.z1) * tf);
    case 3:
      return d_z(f, ev, p, Plane::z3, fd) - cev.z3 * tf;
  }
  throw std::invalid_argument("axis must be 1..4");
}

cplx d_x_constrained(const ComplexField& f, const ComplexEvent& cev, const PhysicalParams& p,
                     const DerivativeSpec& spec) {
  const DerivativeSpec s = DerivativeSpec::constrained(spec.plane, spec.m, spec.n, spec.rel_step);
  const int order = s.m + s.n;

  cplx derivative;
  if (f.has_complex_form()) {
    const cplx w = coordinate_of(cev, s.plane);
    const double h = scaled(s.rel_step > 0.0 ? s.rel_step : plane_step(order), std::abs(w));
    derivative = fd::derivative([&](double d) { return f(shifted(cev, s.plane, d)); }, order, h);
  } else {
    // Nested application of the real-coordinate operator.
    const RealEvent ev = to_real(cev, p);
    const double rel = s.rel_step > 0.0 ? s.rel_step : (order == 1 ? 1e-5 : order == 2 ? 1e-4 : 1e-3);
    const FiniteDifference fd{rel, false};
    std::function<cplx(const RealEvent&, int)> nested = [&](const RealEvent& e, int k) -> cplx {
      if (k == 0) return f(e, p);
      const ComplexField inner = ComplexField::on_real(
          [&, k](const RealEvent& x) { return nested(x, k - 1); }, "nested");
      return d_z(inner, e, p, s.plane, fd);
    };
    derivative = nested(ev, order);
  }

  switch (s.plane) {
    case Plane::z1: return ipow(s.n) * std::pow(kInvSqrt2, order) * derivative;
    case Plane::z2: return ipow(s.m) * std::pow(kInvSqrt2, order) * derivative;
    case Plane::z3:
    case Plane::tau: break;
  }
  return derivative;
}

cplx d_x_direct(const ComplexField& f, const ComplexEvent& cev, const DerivativeSpec& spec) {
  const DerivativeSpec s = DerivativeSpec::constrained(spec.plane, spec.m, spec.n, spec.rel_step);
  if (!f.has_complex_form())
    throw std::logic_error("d_x_direct needs a field given on complex coordinates");
  const cplx w = coordinate_of(cev, s.plane);
  const double h = scaled(s.rel_step > 0.0 ? s.rel_step : plane_step(s.m + s.n), std::abs(w));

  switch (s.plane) {
    case Plane::z1:
      // x1 -> z1 + a/sqrt2, x2 -> z1 + i b/sqrt2 with z2, z3, tau fixed.
      return fd::mixed_derivative(
          [&](double a, double b) { return f(shifted(cev, Plane::z1, cplx(a, b) * kInvSqrt2)); },
          s.m, s.n, h, h);
    case Plane::z2:
      // x2 -> z2 + b/sqrt2, x1 -> z2 + i a/sqrt2 with z1, z3, tau fixed.
      return fd::mixed_derivative(
          [&](double a, double b) { return f(shifted(cev, Plane::z2, cplx(b, a) * kInvSqrt2)); },
          s.m, s.n, h, h);
    case Plane::z3:
    case Plane::tau:
      break;
  }
  return fd::derivative([&](double a) { return f(shifted(cev, s.plane, a)); }, s.m, h);
}

cplx constrained_laplacian(const ComplexField& f, const ComplexEvent& cev, Plane plane) {
  if (plane != Plane::z1 && plane != Plane::z2)
    throw std::invalid_argument("constrained Laplacian is defined for planes z1 and z2");
  return d_x_direct(f, cev, DerivativeSpec::constrained(plane, 2, 0)) +
         d_x_direct(f, cev, DerivativeSpec::constrained(plane, 0, 2));
}

cplx conjugate_derivative(const ComplexField& f, const RealEvent& ev, const PhysicalParams& p,
                          ConjugateForm form, Plane plane, const FiniteDifference& fd) {
  if (plane != Plane::z1 && plane != Plane::z2)
    throw std::invalid_argument("conjugate derivatives are defined for planes z1 and z2");
  const double r = require_off_origin(ev, "conjugate_derivative");
  const RealGradient g = gradient(f, ev, p, fd);
  const double sign = form == ConjugateForm::star_of_derivative ? 1.0 : -1.0;
  const cplx tf = sign * time_factor(p, r) * g.dt;
  if (plane == Plane::z1) return kInvSqrt2 * (g.d1 + kI * g.d2 + cplx(ev.x1, ev.x2) * tf);
  return kInvSqrt2 * (g.d2 + kI * g.d1 + cplx(ev.x2, ev.x1) * tf);
}

cplx d_tau_conjugate(const ComplexField& f, const ComplexEvent& cev, const FiniteDifference& fd) {
  if (!f.has_complex_form())
    throw std::logic_error("d_tau_conjugate needs a field given on complex coordinates");
  const double h = scaled(fd.rel_step, std::abs(cev.tau));
  const cplx dt = fd::derivative([&](double d) { return f(shifted(cev, Plane::tau, d)); }, 1, h, 2);
  const cplx ds =
      fd::derivative([&](double d) { return f(shifted(cev, Plane::tau, kI * d)); }, 1, h, 2);
  return 0.5 * (dt + kI * ds);
}

ResidualReport cr_residuals(const ComplexField& f, const RealEvent& ev, const PhysicalParams& p,
                            double tolerance) {
  const double r = require_off_origin(ev, "cr_residuals");
  // ds/dr at fixed E, alpha; s = -hbar r / (alpha E).
  const double ds_dr = -PhysicalParams::hbar / (p.alpha() * p.energy());
  const double rr_weight = 1.0 / (ds_dr * ds_dr);  // (alpha E / hbar)^2
  const double h_t = scaled(2e-3, ev.t);

  cplx tau_res, z1_res, z2_res;
  if (f.has_complex_form()) {
    const ComplexEvent cev = to_complex(ev, p);
    const double h_r = scaled(2e-3, r);
    const cplx f_tt =
        fd::derivative([&](double d) { return f(shifted(cev, Plane::tau, d)); }, 2, h_t);
    const cplx f_rr = fd::derivative(
        [&](double d) { return f(shifted(cev, Plane::tau, kI * ds_dr * d)); }, 2, h_r);
    tau_res = f_tt + rr_weight * f_rr;

    auto in_plane = [&](Plane plane) {
      const cplx w = coordinate_of(cev, plane);
      const double h = scaled(1e-5, std::abs(w));
      const cplx du =
          fd::derivative([&](double d) { return f(shifted(cev, plane, d)); }, 1, h, 2);
      const cplx dv =
          fd::derivative([&](double d) { return f(shifted(cev, plane, kI * d)); }, 1, h, 2);
      return kInvSqrt2 * (du + kI * dv);
    };
    z1_res = in_plane(Plane::z1);
    z2_res = in_plane(Plane::z2);
  } else {
    const double h_r = std::min(scaled(2e-3, r), 0.25 * r);
    const cplx f_tt = fd::derivative(
        [&](double d) {
          RealEvent e = ev;
          e.t += d;
          return f(e, p);
        },
        2, h_t);
    const cplx f_rr = fd::derivative(
        [&](double d) {
          const double s = 1.0 + d / r;
          return f(RealEvent{ev.x1 * s, ev.x2 * s, ev.x3 * s, ev.t}, p);
        },
        2, h_r);
    tau_res = f_tt + rr_weight * f_rr;

    // Real chain rule with tau held: d/dx_j|_tau = d/dx_j + (i hbar/E) x_j/(alpha r) d/dt.
    const RealGradient g = gradient(f, ev, p, FiniteDifference{});
    const cplx tf = time_factor(p, r) * g.dt;
    z1_res = g.d1 + kI * g.d2 + cplx(ev.x1, ev.x2) * tf;
    z2_res = g.d2 + kI * g.d1 + cplx(ev.x2, ev.x1) * tf;
  }

  ResidualReport report;
  report.check("tau_plane", std::abs(tau_res), tolerance,
               "f_tt + (alpha E/hbar)^2 f_rr at fixed z");
  report.check("z1_plane", std::abs(z1_res), tolerance, "(df/dx1 + i df/dx2) at fixed tau, z2, z3");
  report.check("z2_plane", std::abs(z2_res), tolerance, "(df/dx2 + i df/dx1) at fixed tau, z1, z3");
  return report;
}

HolomorphyVerdict holomorphy_report(const ComplexField& f, std::span<const RealEvent> samples,
                                    const PhysicalParams& p, double tolerance) {
  if (samples.empty()) throw std::invalid_argument("holomorphy_report: no sample points");
  HolomorphyVerdict verdict;
  verdict.tolerance = tolerance;
  verdict.samples = samples.size();

  std::vector<HolomorphyOffender> all;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const ResidualReport rep = cr_residuals(f, samples[i], p, tolerance);
    for (const auto& e : rep.entries()) {
      all.push_back({i, e.name, e.value, samples[i]});
      if (std::isnan(e.value) || e.value > verdict.max_residual)
        verdict.max_residual = std::isnan(e.value) ? INFINITY : e.value;
    }
  }
  const std::size_t keep = std::min<std::size_t>(5, all.size());
  std::partial_sort(all.begin(), all.begin() + keep, all.end(),
                    [](const auto& a, const auto& b) { return a.residual > b.residual; });
  all.resize(keep);
  verdict.worst = std::move(all);
  verdict.holomorphic = verdict.max_residual < tolerance;
  return verdict;
}

namespace fields {

ComplexField coordinate(Plane plane) {
  return ComplexField::on_complex([plane](const ComplexEvent& c) { return coordinate_of(c, plane); },
                                  std::string(to_string(plane)));
}

ComplexField conj_z1() {
  return ComplexField::on_complex([](const ComplexEvent& c) { return std::conj(c.z1); }, "conj(z1)");
}

ComplexField abs2_z1() {
  return ComplexField::on_complex([](const ComplexEvent& c) { return c.z1 * std::conj(c.z1); },
                                  "|z1|^2");
}

ComplexField constant(cplx value) {
  return ComplexField::on_complex([value](const ComplexEvent&) { return value; }, "constant");
}

ComplexField polynomial(std::vector<cplx> coeffs, Plane plane) {
  return ComplexField::on_complex(
      [coeffs = std::move(coeffs), plane](const ComplexEvent& c) {
        const cplx w = coordinate_of(c, plane);
        cplx acc{};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * w + *it;
        return acc;
      },
      "polynomial(" + std::string(to_string(plane)) + ")");
}

ComplexField monomial(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("monomial exponents must be >= 0");
  return ComplexField::on_complex(
      [a, b, c](const ComplexEvent& e) {
        cplx v{1.0, 0.0};
        for (int i = 0; i < a; ++i) v *= e.z1;
        for (int i = 0; i < b; ++i) v *= e.z2;
        for (int i = 0; i < c; ++i) v *= e.z3;
        return v;
      },
      "monomial");
}

ComplexField time_phase(const PhysicalParams& p) {
  return ComplexField::on_complex([p](const ComplexEvent& c) { return cplanes::time_phase(p, c.tau); },
                                  "exp(-i E tau / hbar)");
}

ComplexField exponential(Plane plane) {
  return ComplexField::on_complex(
      [plane](const ComplexEvent& c) { return std::exp(coordinate_of(c, plane)); },
      "exp(" + std::string(to_string(plane)) + ")");
}

}  // namespace fields

}  // namespace cplanes
