#include "cplanes/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cplanes/calculus.hpp"
#include "cplanes/hydrogen.hpp"
#include "cplanes/units.hpp"

namespace cplanes {
namespace {

constexpr cplx kI{0.0, 1.0};

std::string label(const QuantumNumbers& qn) {
  return std::to_string(qn.n()) + "," + std::to_string(qn.l()) + "," + std::to_string(qn.k());
}

VerificationReport make_report(std::string check, double tolerance, std::string oracle,
                               std::optional<std::uint64_t> seed) {
  VerificationReport r;
  r.check = std::move(check);
  r.tolerance = tolerance;
  r.oracle = std::move(oracle);
  r.seed = seed;
  return r;
}

// Bound energy drawn log-uniformly over [-2, -0.01] Hartree.
PhysicalParams random_params(Sampler& s) {
  return PhysicalParams::bound(-s.log_uniform(0.01, 2.0));
}

RealEvent off_origin_box(Sampler& s, double half_width, double r_min) {
  RealEvent ev;
  do {
    ev = s.box_event(half_width);
  } while (ev.radius() < r_min);
  return ev;
}

// Angular test function P_l^k(z_theta) z_phi^k, valid for complex z_theta.
SphericalField angular_field(int l, int k) {
  return [l, k](const ComplexSpherical& cs) {
    const cplx z = cs.theta();
    cplx v = detail::legendre(l, k, z, std::sqrt((1.0 - z) * (1.0 + z)));
    const cplx w = cs.phi();
    for (int i = 0; i < std::abs(k); ++i) v *= k > 0 ? w : 1.0 / w;
    return v;
  };
}

ComplexSpherical unit_sample(Sampler& s) {
  const double c = s.uniform(-0.95, 0.95);
  const double phi = s.uniform(-std::numbers::pi, std::numbers::pi);
  return ComplexSpherical{1.0, cplx(c, 0.0), std::polar(1.0, phi)};
}

}  // namespace

VerificationReport isometry_check(std::size_t samples, std::uint64_t seed) {
  auto r = make_report("isometry", 1e-12, "x1^2 + x2^2 + x3^2", seed);
  r.param("relative", "|z1* z1 + z2* z2 + z3* z3 - r^2| / r^2");
  Sampler s(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const RealEvent ev = s.wide_event();
    const PhysicalParams p = random_params(s);
    const double sq = ev.x1 * ev.x1 + ev.x2 * ev.x2 + ev.x3 * ev.x3;
    r.add_sample(identity_residuals(ev, p).at("isometry").value / sq);
  }
  r.finalize();
  return r;
}

VerificationReport plane_correlation_check(std::size_t samples, std::uint64_t seed) {
  auto r = make_report("plane_correlation", 1e-12, "z1 / z2* = z2 / z1* = i", seed);
  Sampler s(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const RealEvent ev = s.wide_event();
    const ResidualReport rep = identity_residuals(ev, random_params(s));
    r.add_sample(std::max(rep.at("correlation_1").value, rep.at("correlation_2").value));
  }
  r.finalize();
  return r;
}

VerificationReport product_identity_check(std::size_t samples, std::uint64_t seed) {
  auto r = make_report("product_identity", 1e-12, "x1^2 + x2^2", seed);
  r.param("relative", "|-2i z1 z2 - (x1^2 + x2^2)| / (x1^2 + x2^2)");
  Sampler s(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const RealEvent ev = s.wide_event();
    const double planar = ev.x1 * ev.x1 + ev.x2 * ev.x2;
    r.add_sample(identity_residuals(ev, random_params(s)).at("product").value / planar);
  }
  r.finalize();
  return r;
}

VerificationReport round_trip_check(std::size_t samples, std::uint64_t seed) {
  auto r = make_report("round_trip", 1e-12, "identity map", seed);
  r.param("scale", "space by max(1, r), time by max(1, |t|)");
  Sampler s(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const RealEvent ev = s.wide_event();
    const PhysicalParams p = random_params(s);
    const RealEvent back = to_real(to_complex(ev, p), p);
    const double space = std::max(1.0, ev.radius());
    const double err = std::max({std::abs(back.x1 - ev.x1) / space,
                                 std::abs(back.x2 - ev.x2) / space,
                                 std::abs(back.x3 - ev.x3) / space,
                                 std::abs(back.t - ev.t) / std::max(1.0, std::abs(ev.t))});
    r.add_sample(err);
  }
  r.finalize();
  return r;
}

VerificationReport kronecker_check(std::size_t samples, std::uint64_t seed) {
  auto r = make_report("kronecker", 5e-8, "delta_ij", seed);
  r.param("relations", "dz_i/dz_j, dtau/dz_i, dz_i/dz_i*, dtau/dtau*");
  constexpr std::array<Plane, 3> space{Plane::z1, Plane::z2, Plane::z3};
  const ComplexField tau = fields::coordinate(Plane::tau);
  Sampler s(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const RealEvent ev = off_origin_box(s, 3.0, 0.1);
    const PhysicalParams p = random_params(s);
    double worst = 0.0;
    for (Plane a : space) {
      for (Plane b : space) {
        const double delta = a == b ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(d_z(fields::coordinate(b), ev, p, a) - delta));
      }
      worst = std::max(worst, std::abs(d_z(tau, ev, p, a)));
    }
    worst = std::max(worst, std::abs(d_z(tau, ev, p, Plane::tau) - 1.0));
    for (Plane a : {Plane::z1, Plane::z2}) {
      worst = std::max(worst, std::abs(conjugate_derivative(fields::coordinate(a), ev, p,
                                                            ConjugateForm::derivative_by_conjugate,
                                                            a)));
    }
    worst = std::max(worst, std::abs(d_tau_conjugate(tau, to_complex(ev, p))));
    r.add_sample(worst);
  }
  r.finalize();
  return r;
}

VerificationReport laplace_property_check(std::size_t polynomials, std::uint64_t seed) {
  auto r = make_report("laplace_property", 1e-6, "zero: holomorphic in z1", seed);
  r.param("max_degree", 5LL);
  Sampler s(seed);
  for (std::size_t i = 0; i < polynomials; ++i) {
    const int degree = 1 + static_cast<int>(s.uniform() * 5.0);
    std::vector<cplx> coeffs;
    for (int d = 0; d <= degree; ++d) coeffs.emplace_back(s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0));
    const ComplexField f = fields::polynomial(coeffs, Plane::z1);
    const RealEvent ev = s.box_event(1.5);
    const PhysicalParams p = random_params(s);
    r.add_sample(std::abs(constrained_laplacian(f, to_complex(ev, p), Plane::z1)));
  }
  r.finalize();
  return r;
}

VerificationReport holomorphy_check(const QuantumNumbers& qn, std::size_t samples,
                                    std::uint64_t seed) {
  auto r = make_report("holomorphy", kHolomorphyTolerance,
                       "Cauchy-Riemann residuals in the tau, z1 and z2 planes", seed);
  r.param("qn", label(qn));
  const Eigensolution sol(qn);
  const ComplexField f = psi_field(sol);
  Sampler s(seed);
  std::string worst_plane;
  double worst = -1.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const RealEvent ev = s.physical_event(0.1, 10.0);
    const ResidualReport rep = cr_residuals(f, ev, sol.params());
    for (const auto& e : rep.entries()) {
      if (e.status != ResidualStatus::pass && e.status != ResidualStatus::fail) continue;
      if (e.value > worst) {
        worst = e.value;
        worst_plane = e.name;
      }
    }
    r.add_sample(rep.max_checked());
  }
  r.param("worst_plane", worst_plane);
  r.finalize();
  return r;
}

VerificationReport l2_eigen_check(int l_max, std::uint64_t seed) {
  auto r = make_report("l2_eigenvalue", 1e-6, "l(l+1) hbar^2", seed);
  r.param("l_max", static_cast<long long>(l_max));
  r.param("residual", "|L^2 f - l(l+1) f| / max|f|, f = P_l^k(z_theta) z_phi^k");
  Sampler s(seed);
  double lminus1 = 0.0;
  for (int l = 0; l <= l_max; ++l) {
    for (int k = -l; k <= l; ++k) {
      const SphericalField f = angular_field(l, k);
      std::vector<ComplexSpherical> pts;
      for (int i = 0; i < 8; ++i) pts.push_back(unit_sample(s));
      double scale = 0.0;
      std::size_t best = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const double a = std::abs(f(pts[i]));
        if (a > scale) {
          scale = a;
          best = i;
        }
      }
      for (const auto& cs : pts)
        r.add_sample(std::abs(l2_apply(f, cs) - double(l * (l + 1)) * f(cs)) / scale);
      const cplx eig = l2_apply(f, pts[best]) / f(pts[best]);
      lminus1 = std::max(lminus1, std::abs(eig - double(l * (l - 1))));
    }
  }
  r.param("max_deviation_from_l_lminus1", lminus1);
  r.finalize();
  return r;
}

VerificationReport l3_eigen_check(int k_max, std::uint64_t seed) {
  auto r = make_report("l3_eigenvalue", 1e-7, "k hbar", seed);
  r.param("k_max", static_cast<long long>(k_max));
  r.param("residual", "|L3 f - k f| / max|f|, f = P_|k|^k(z_theta) z_phi^k");
  Sampler s(seed);
  for (int k = -k_max; k <= k_max; ++k) {
    const SphericalField f = angular_field(std::abs(k), k);
    std::vector<ComplexSpherical> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(unit_sample(s));
    double scale = 0.0;
    for (const auto& cs : pts) scale = std::max(scale, std::abs(f(cs)));
    for (const auto& cs : pts) r.add_sample(std::abs(l3_apply(f, cs) - double(k) * f(cs)) / scale);
  }
  r.finalize();
  return r;
}

VerificationReport separated_check(int n_max, std::uint64_t seed) {
  auto r = make_report("separated_equations", 1e-6,
                       "zero: Phi = z_phi^k, Theta = P_l^k, R = xi^l L_{n-l-1}^{2l+1}", seed);
  r.param("n_max", static_cast<long long>(n_max));
  Sampler s(seed);
  double printed_sign = 0.0, l_lminus1 = 0.0, coefficient_2l2 = 0.0;
  for (const auto& qn : states_up_to(n_max)) {
    const Eigensolution sol(qn);
    for (int i = 0; i < 10; ++i) {
      const RealEvent ev = s.physical_event();
      const ComplexSpherical cs = to_complex_spherical(to_complex(ev, sol.params()));
      const ResidualReport rep = separated_residuals(sol, cs, r.tolerance);
      r.add_sample(rep.max_checked());
      printed_sign = std::max(printed_sign, rep.at("theta_printed_sign").value);
      l_lminus1 = std::max(l_lminus1, rep.at("theta_l_lminus1").value);
      coefficient_2l2 = std::max(coefficient_2l2, rep.at("radial_coefficient_2l2").value);
    }
  }
  r.param("satisfied_radial_reading", "(2 - xi) on R = xi^l L; (2l + 2 - xi) on L");
  r.param("max_theta_printed_sign", printed_sign);
  r.param("max_theta_l_lminus1", l_lminus1);
  r.param("max_radial_coefficient_2l2_on_R", coefficient_2l2);
  r.finalize();
  return r;
}

VerificationReport spectrum_check(int n_max) {
  auto r = make_report("spectrum", 1e-15, "E_1 / n^2 with E_1 = -1/2 Hartree", std::nullopt);
  r.param("n_max", static_cast<long long>(n_max));
  const double e1 = energy(1).energy;
  r.param("E1_hartree", e1).param("E1_eV", hartree_to_ev(e1));
  r.add_sample(std::abs(e1 + 0.5) / 0.5);
  for (int n = 2; n <= n_max; ++n) {
    const double expected = e1 / (double(n) * double(n));
    r.add_sample(std::abs(energy(n).energy - expected) / std::abs(expected));
  }
  r.finalize();
  return r;
}

namespace {

struct ResidualSweep {
  std::vector<double> relative;
  std::size_t excluded = 0;
};

ResidualSweep sweep_residuals(const Eigensolution& sol, const std::vector<RealEvent>& events) {
  std::vector<SchrodingerResidual> raw;
  raw.reserve(events.size());
  double peak = 0.0;
  for (const auto& ev : events) {
    raw.push_back(schrodinger_residual(sol, ev, sol.params()));
    peak = std::max(peak, raw.back().psi_abs);
  }
  ResidualSweep out;
  for (const auto& res : raw) {
    if (res.psi_abs < 1e-12 * peak) {
      ++out.excluded;
      continue;
    }
    out.relative.push_back(res.relative);
  }
  return out;
}

std::vector<RealEvent> physical_events(std::size_t samples, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<RealEvent> events;
  for (std::size_t i = 0; i < samples; ++i) events.push_back(s.physical_event());
  return events;
}

}  // namespace

VerificationReport schrodinger_check(const QuantumNumbers& qn, std::size_t samples,
                                     std::uint64_t seed) {
  auto r = make_report("schrodinger_residual", 1e-5,
                       "zero: complex-coordinate Schrodinger equation at fixed tau", seed);
  r.param("qn", label(qn));
  const ResidualSweep sw = sweep_residuals(Eigensolution(qn), physical_events(samples, seed));
  for (double v : sw.relative) r.add_sample(v);
  r.param("excluded_small_psi", static_cast<long long>(sw.excluded));
  r.finalize();
  return r;
}

VerificationReport energy_sensitivity_check(const QuantumNumbers& qn, double perturbation,
                                            std::size_t samples, std::uint64_t seed) {
  auto r = make_report("energy_sensitivity", 1e-3,
                       "max residual of exact state / max residual of perturbed candidate", seed);
  r.param("qn", label(qn)).param("perturbation", perturbation);
  const std::vector<RealEvent> events = physical_events(samples, seed);
  const Eigensolution exact(qn);
  const Eigensolution candidate =
      Eigensolution::with_energy(qn, exact.level().energy * (1.0 + perturbation));
  const ResidualSweep a = sweep_residuals(exact, events);
  const ResidualSweep b = sweep_residuals(candidate, events);
  const double max_a = a.relative.empty() ? 0.0 : *std::max_element(a.relative.begin(), a.relative.end());
  const double max_b = b.relative.empty() ? 0.0 : *std::max_element(b.relative.begin(), b.relative.end());
  r.param("exact_max_residual", max_a).param("candidate_max_residual", max_b);
  r.n_samples = a.relative.size();
  r.max_residual = max_b > 0.0 ? max_a / max_b : INFINITY;
  r.mean_residual = r.max_residual;
  r.finalize();
  return r;
}

VerificationReport orthogonality_all_check(int n_max, const QuadratureSpec& spec) {
  auto r = make_report("orthogonality_all", 1e-8,
                       "product quadrature: Gauss-Laguerre x Gauss-Legendre x trapezoid",
                       std::nullopt);
  r.param("n_max", static_cast<long long>(n_max));
  const auto states = states_up_to(n_max);
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j)
      r.add_sample(std::abs(overlap(states[i], states[j], spec, &r.warnings)));
  r.param("pairs", static_cast<long long>(r.n_samples));
  r.finalize();
  return r;
}

std::vector<QuantumNumbers> states_up_to(int n_max) {
  std::vector<QuantumNumbers> out;
  for (int n = 1; n <= n_max; ++n)
    for (int l = 0; l < n; ++l)
      for (int k = -l; k <= l; ++k) out.emplace_back(n, l, k);
  return out;
}

std::vector<VerificationReport> run_suite(std::string_view suite, std::uint64_t seed) {
  const bool all = suite == "all";
  if (!all && std::find(std::begin(kSuiteNames), std::end(kSuiteNames), suite) ==
                  std::end(kSuiteNames))
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");

  std::vector<VerificationReport> out;
  if (all || suite == "identities") {
    out.push_back(isometry_check(10000, seed));
    out.push_back(plane_correlation_check(10000, seed));
    out.push_back(product_identity_check(10000, seed));
    out.push_back(round_trip_check(10000, seed));
  }
  if (all || suite == "holomorphy") {
    out.push_back(kronecker_check(100, seed));
    out.push_back(laplace_property_check(20, seed));
    for (const QuantumNumbers qn : {QuantumNumbers(1, 0, 0), QuantumNumbers(2, 1, 1),
                                    QuantumNumbers(3, 2, 1)})
      out.push_back(holomorphy_check(qn, 100, seed));
  }
  if (all || suite == "operators") {
    out.push_back(l2_eigen_check(4, seed));
    out.push_back(l3_eigen_check(4, seed));
    out.push_back(separated_check(3, seed));
  }
  if (all || suite == "eigen") {
    out.push_back(spectrum_check(10));
    for (const auto& qn : states_up_to(3)) out.push_back(schrodinger_check(qn, 100, seed));
    for (const QuantumNumbers qn : {QuantumNumbers(1, 0, 0), QuantumNumbers(2, 1, 1),
                                    QuantumNumbers(3, 2, 1)})
      out.push_back(energy_sensitivity_check(qn, 0.1, 100, seed));
    for (const auto& qn : states_up_to(4)) out.push_back(equivalence_sweep(qn, 1000, seed));
    for (const auto& qn : states_up_to(4)) out.push_back(norm_check(qn));
    out.push_back(orthogonality_all_check(3));
    for (int n = 1; n <= 4; ++n) out.push_back(tau_factorization_audit(n, 10000, seed));
  }
  return out;
}

}  // namespace cplanes
