#include "cplanes/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "json.hpp"

#include "cplanes/hydrogen.hpp"
#include "cplanes/quadrature.hpp"

namespace cplanes {
namespace {

constexpr const char* kQuadratureOracle =
    "product quadrature: Gauss-Laguerre (radial) x Gauss-Legendre (cos theta) x trapezoid (phi)";

std::string label(const QuantumNumbers& qn) {
  return std::to_string(qn.n()) + "," + std::to_string(qn.l()) + "," + std::to_string(qn.k());
}

void add_spec_params(VerificationReport& r, const QuadratureSpec& spec) {
  r.param("radial_nodes", static_cast<long long>(spec.radial_nodes))
      .param("polar_nodes", static_cast<long long>(spec.polar_nodes))
      .param("azimuthal_points", static_cast<long long>(spec.azimuthal_points));
}

// Exactness conditions for the polynomial parts of the integrand.
void check_adequacy(const QuantumNumbers& a, const QuantumNumbers& b, const QuadratureSpec& spec,
                    std::vector<std::string>* warnings) {
  if (!warnings) return;
  const int radial_degree = 2 + (a.n() - 1) + (b.n() - 1);
  if (2 * spec.radial_nodes - 1 < radial_degree)
    warnings->push_back("radial_nodes=" + std::to_string(spec.radial_nodes) +
                        " below exactness for radial degree " + std::to_string(radial_degree));
  const int polar_degree = a.l() + b.l();
  if (2 * spec.polar_nodes - 1 < polar_degree)
    warnings->push_back("polar_nodes=" + std::to_string(spec.polar_nodes) +
                        " below exactness for polar degree " + std::to_string(polar_degree));
  const int harmonic = std::abs(a.k() - b.k());
  if (spec.azimuthal_points <= harmonic)
    warnings->push_back("azimuthal_points=" + std::to_string(spec.azimuthal_points) +
                        " cannot resolve harmonic " + std::to_string(harmonic));
}

}  // namespace

VerificationReport& VerificationReport::param(std::string key, ParamValue value) {
  params.emplace_back(std::move(key), std::move(value));
  return *this;
}

void VerificationReport::add_sample(double residual) {
  ++n_samples;
  if (!(residual <= max_residual)) max_residual = residual;  // propagates NaN
  mean_residual += (residual - mean_residual) / static_cast<double>(n_samples);
}

void VerificationReport::finalize() { verdict = max_residual < tolerance; }

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.params)
    std::visit([&](const auto& v) { params[key] = v; }, value);
  j["params"] = std::move(params);
  j["n_samples"] = report.n_samples;
  j["max_residual"] = report.max_residual;
  j["mean_residual"] = report.mean_residual;
  j["tolerance"] = report.tolerance;
  j["verdict"] = report.verdict ? "pass" : "fail";
  if (report.seed)
    j["seed"] = *report.seed;
  else
    j["seed"] = nullptr;
  j["oracle"] = report.oracle;
  j["warnings"] = report.warnings;
  return j.dump();
}

double Sampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::log_uniform(double lo, double hi) {
  const double a = std::log(lo), b = std::log(hi);
  return std::exp(a + (b - a) * uniform());
}

RealEvent Sampler::wide_event() {
  auto component = [&] {
    const double sign = uniform() < 0.5 ? -1.0 : 1.0;
    return sign * std::pow(10.0, uniform(-3.0, 2.0));
  };
  RealEvent ev;
  ev.x1 = component();
  ev.x2 = component();
  ev.x3 = component();
  ev.t = uniform(-100.0, 100.0);
  return ev;
}

RealEvent Sampler::box_event(double half_width) {
  RealEvent ev;
  ev.x1 = uniform(-half_width, half_width);
  ev.x2 = uniform(-half_width, half_width);
  ev.x3 = uniform(-half_width, half_width);
  ev.t = uniform(-half_width, half_width);
  return ev;
}

RealEvent Sampler::physical_event(double r_lo, double r_hi) {
  RealSpherical sph;
  sph.r = log_uniform(r_lo, r_hi);
  double c = 0.0;
  do {
    c = uniform(-1.0, 1.0);
  } while (std::sqrt(1.0 - c * c) <= 1e-3);
  sph.theta = std::acos(c);
  sph.phi = uniform(-std::numbers::pi, std::numbers::pi);
  return from_spherical(sph, uniform(-10.0, 10.0));
}

cplx overlap(const QuantumNumbers& a, const QuantumNumbers& b, const QuadratureSpec& spec,
             std::vector<std::string>* warnings) {
  check_adequacy(a, b, spec, warnings);
  const Eigensolution sa(a), sb(b);
  // Radial decay exp(-r/alpha_a - r/alpha_b) is the Laguerre weight in x = c r.
  const double c = 1.0 / sa.alpha() + 1.0 / sb.alpha();
  const QuadratureRule radial = gauss_laguerre(spec.radial_nodes);
  const QuadratureRule polar = gauss_legendre(spec.polar_nodes);
  const QuadratureRule azimuthal = periodic_trapezoid(spec.azimuthal_points);

  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double r = radial.nodes[i] / c;
    const double wr = radial.weights[i] * r * r / c;
    for (std::size_t j = 0; j < polar.nodes.size(); ++j) {
      const double w_rt = wr * polar.weights[j];
      for (std::size_t m = 0; m < azimuthal.nodes.size(); ++m) {
        const ComplexSpherical cs{r, cplx(polar.nodes[j], 0.0), std::polar(1.0, azimuthal.nodes[m])};
        const cplx va = psi_complex(sa, cs, 0.0);
        const cplx vb = psi_complex(sb, cs, 0.0);
        sum += w_rt * azimuthal.weights[m] * std::conj(va) * vb;
      }
    }
  }
  return sum;
}

VerificationReport norm_check(const QuantumNumbers& qn, const QuadratureSpec& spec,
                              double amplitude) {
  VerificationReport r;
  r.check = "norm";
  r.param("qn", label(qn)).param("amplitude", amplitude);
  add_spec_params(r, spec);
  r.tolerance = 1e-8;
  r.oracle = kQuadratureOracle;
  const double value = amplitude * amplitude * overlap(qn, qn, spec, &r.warnings).real();
  r.param("integral", value);
  r.add_sample(std::abs(value - 1.0));
  r.finalize();
  return r;
}

VerificationReport orthogonality_check(const QuantumNumbers& a, const QuantumNumbers& b,
                                       const QuadratureSpec& spec) {
  if (a == b) return norm_check(a, spec);
  VerificationReport r;
  r.check = "orthogonality";
  r.param("qn_a", label(a)).param("qn_b", label(b));
  add_spec_params(r, spec);
  r.tolerance = 1e-8;
  r.oracle = kQuadratureOracle;
  r.add_sample(std::abs(overlap(a, b, spec, &r.warnings)));
  r.finalize();
  return r;
}

VerificationReport equivalence_sweep(const QuantumNumbers& qn, std::size_t samples,
                                     std::uint64_t seed) {
  VerificationReport r;
  r.check = "equivalence";
  r.param("qn", label(qn));
  r.seed = seed;
  r.tolerance = 1e-9;
  r.oracle = "textbook R_nl(r) Y_lk(theta, phi) exp(-i E_n t) in trigonometric coordinates";

  const Eigensolution sol(qn);
  Sampler sampler(seed);
  std::vector<double> diffs;
  diffs.reserve(samples);
  double scale = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const RealEvent ev = sampler.physical_event();
    const ComplexEvent cev = to_complex(ev, sol.params());
    const cplx complex_form = psi_complex(sol, to_complex_spherical(cev), cev.tau);
    const cplx textbook = psi_real_textbook(qn, real_spherical(ev), ev.t);
    diffs.push_back(std::abs(complex_form - textbook));
    scale = std::max(scale, std::abs(textbook));
  }
  r.param("max_abs_psi", scale);
  for (double d : diffs) r.add_sample(scale > 0.0 ? d / scale : d);
  r.finalize();
  return r;
}

VerificationReport tau_factorization_audit(int n, std::size_t samples, std::uint64_t seed) {
  VerificationReport r;
  r.check = "tau_factorization";
  r.param("n", static_cast<long long>(n));
  r.seed = seed;
  r.tolerance = 1e-12;
  r.oracle = "exp(-i E_n t / hbar) exp(-r / alpha_n)";

  const PhysicalParams p = PhysicalParams::for_level(n);
  Sampler sampler(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    RealSpherical sph;
    sph.r = sampler.log_uniform(1e-3, 50.0);
    sph.theta = std::acos(sampler.uniform(-1.0, 1.0));
    sph.phi = sampler.uniform(-std::numbers::pi, std::numbers::pi);
    const RealEvent ev = from_spherical(sph, sampler.uniform(-100.0, 100.0));
    const cplx lhs = time_phase(p, to_complex(ev, p).tau);
    const cplx rhs =
        std::polar(std::exp(-ev.radius() / p.alpha()), -p.energy() * ev.t / PhysicalParams::hbar);
    r.add_sample(std::abs(lhs - rhs) / std::abs(rhs));
  }
  r.finalize();
  return r;
}

}  // namespace cplanes
