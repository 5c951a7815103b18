#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cplanes/calculus.hpp"
#include "cplanes/errors.hpp"
#include "cplanes/finite_difference.hpp"
#include "cplanes/verify.hpp"

using namespace cplanes;

namespace {
const PhysicalParams kGround = PhysicalParams::bound(-0.5);
const RealEvent kPoint{1, 1, 1, 0};
constexpr cplx kI{0, 1};
}  // namespace

TEST_CASE("complex derivatives of the coordinates") {
  using fields::coordinate;
  CHECK(std::abs(d_z(coordinate(Plane::z1), kPoint, kGround, Plane::z1) - 1.0) < 5e-8);
  CHECK(std::abs(d_z(coordinate(Plane::z2), kPoint, kGround, Plane::z1)) < 5e-8);
  CHECK(std::abs(d_z(coordinate(Plane::tau), kPoint, kGround, Plane::z1)) < 5e-8);
  CHECK(std::abs(d_z(coordinate(Plane::tau), kPoint, kGround, Plane::tau) - 1.0) < 5e-8);
  CHECK_THROWS_AS(d_z(coordinate(Plane::z1), RealEvent{0, 0, 0, 1}, kGround, Plane::z1),
                  SingularPointError);
}

TEST_CASE("Kronecker property at random points") {
  Sampler s(21);
  const Plane planes[] = {Plane::z1, Plane::z2, Plane::z3};
  for (int i = 0; i < 100; ++i) {
    RealEvent ev;
    do ev = s.box_event(4.0);
    while (ev.radius() < 0.1);
    const PhysicalParams p = PhysicalParams::bound(-s.uniform(0.05, 2.0));
    for (Plane a : planes) {
      for (Plane b : planes)
        REQUIRE(std::abs(d_z(fields::coordinate(b), ev, p, a) - (a == b ? 1.0 : 0.0)) < 5e-8);
      REQUIRE(std::abs(d_z(fields::coordinate(Plane::tau), ev, p, a)) < 5e-8);
    }
  }
}

TEST_CASE("radial scaling and inverse relations") {
  const ComplexField f = fields::monomial(1, 1, 1);  // z1 z2 z3, homogeneous of degree 3
  const RealEvent ev{0.4, -0.7, 1.2, 0.3};
  CHECK(std::abs(radial_scaling(f, ev, kGround) - 3.0 * f(ev, kGround)) < 1e-7);

  // d/dx1 of z1 = 1/sqrt2, d/dx2 of z1 = i/sqrt2.
  const ComplexField z1 = fields::coordinate(Plane::z1);
  CHECK(std::abs(d_x_via_complex(z1, ev, kGround, 1) - 1 / std::sqrt(2.0)) < 5e-8);
  CHECK(std::abs(d_x_via_complex(z1, ev, kGround, 2) - kI / std::sqrt(2.0)) < 5e-8);
  CHECK(std::abs(d_x_via_complex(z1, ev, kGround, 4)) < 5e-8);
}

TEST_CASE("constrained derivatives") {
  const ComplexField sq = fields::monomial(2, 0, 0);
  const ComplexEvent cev = to_complex(kPoint, kGround);
  CHECK(std::abs(d_x_constrained(sq, cev, kGround, DerivativeSpec::constrained(Plane::z1, 2, 0)) -
                 1.0) < 1e-6);
  CHECK(std::abs(d_x_constrained(sq, cev, kGround, DerivativeSpec::constrained(Plane::z1, 0, 2)) +
                 1.0) < 1e-6);
  CHECK(std::abs(constrained_laplacian(fields::monomial(3, 0, 0), cev, Plane::z1)) < 1e-6);

  const auto held = DerivativeSpec::constrained(Plane::z1, 1, 1).held_constant();
  CHECK(held == std::vector<Plane>{Plane::z2, Plane::z3, Plane::tau});
  CHECK_THROWS_AS(DerivativeSpec::constrained(Plane::z1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(DerivativeSpec::constrained(Plane::z1, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(DerivativeSpec::constrained(Plane::z3, 1, 1), std::invalid_argument);
}

TEST_CASE("plane-prefactor form agrees with direct differentiation") {
  Sampler s(22);
  const std::vector<ComplexField> polys = {fields::monomial(3, 0, 0), fields::monomial(2, 1, 0),
                                           fields::monomial(1, 2, 1), fields::monomial(4, 0, 1)};
  for (const auto& f : polys) {
    for (int i = 0; i < 5; ++i) {
      const RealEvent ev = s.box_event(1.5);
      const ComplexEvent cev = to_complex(ev, kGround);
      for (Plane plane : {Plane::z1, Plane::z2}) {
        for (auto [m, n] : {std::pair{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}}) {
          const auto spec = DerivativeSpec::constrained(plane, m, n);
          const cplx a = d_x_constrained(f, cev, kGround, spec);
          const cplx b = d_x_direct(f, cev, spec);
          REQUIRE(std::abs(a - b) < 1e-6 * std::max(1.0, std::abs(b)));
        }
      }
    }
  }
}

TEST_CASE("Laplace property for random z1 polynomials") {
  Sampler s(23);
  for (int i = 0; i < 20; ++i) {
    std::vector<cplx> coeffs;
    for (int d = 0; d <= 5; ++d) coeffs.emplace_back(s.uniform(-1, 1), s.uniform(-1, 1));
    const ComplexEvent cev = to_complex(s.box_event(1.5), kGround);
    REQUIRE(std::abs(constrained_laplacian(fields::polynomial(coeffs), cev, Plane::z1)) < 1e-6);
    REQUIRE(std::abs(constrained_laplacian(fields::polynomial(coeffs, Plane::z2), cev,
                                           Plane::z2)) < 1e-6);
  }
}

TEST_CASE("conjugate derivative forms") {
  SUBCASE("time-independent field: forms agree") {
    const ComplexField f = fields::monomial(2, 1, 0);
    const cplx a = conjugate_derivative(f, kPoint, kGround, ConjugateForm::star_of_derivative);
    const cplx b = conjugate_derivative(f, kPoint, kGround, ConjugateForm::derivative_by_conjugate);
    CHECK(std::abs(a - b) < 5e-8);
  }
  SUBCASE("known time derivative: difference is twice the time term") {
    const double e = kGround.energy();
    const ComplexField f = ComplexField::on_real(
        [e](const RealEvent& ev) { return std::polar(1.0, -e * ev.t); }, "exp(-iEt)");
    const RealEvent ev{0.3, -1.1, 0.6, 2.5};
    const cplx a = conjugate_derivative(f, ev, kGround, ConjugateForm::star_of_derivative);
    const cplx b = conjugate_derivative(f, ev, kGround, ConjugateForm::derivative_by_conjugate);
    const double r = ev.radius();
    const cplx expected = 2.0 * cplx(ev.x1, ev.x2) / (std::sqrt(2.0) * kGround.alpha() * r) *
                          (kI / e) * (-kI * e) * f(ev, kGround);
    CHECK(std::abs((a - b) - expected) < 1e-6);
  }
  SUBCASE("coordinates are independent of their conjugates") {
    const RealEvent ev{0.8, 0.2, -0.5, 1.0};
    for (Plane p : {Plane::z1, Plane::z2})
      CHECK(std::abs(conjugate_derivative(fields::coordinate(p), ev, kGround,
                                          ConjugateForm::derivative_by_conjugate, p)) < 5e-8);
    CHECK(std::abs(d_tau_conjugate(fields::coordinate(Plane::tau), to_complex(ev, kGround))) <
          5e-8);
  }
}

TEST_CASE("Cauchy-Riemann residuals") {
  const RealEvent ev{0.7, -0.4, 0.9, 1.3};
  SUBCASE("time phase") {
    const ResidualReport r = cr_residuals(fields::time_phase(kGround), ev, kGround);
    CHECK(r.passed());
    for (const char* name : {"tau_plane", "z1_plane", "z2_plane"}) CHECK(r.at(name).value < 1e-6);
  }
  SUBCASE("conjugate of z1") {
    const ResidualReport r = cr_residuals(fields::conj_z1(), ev, kGround);
    CHECK_FALSE(r.passed());
    CHECK(r.at("z1_plane").value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  }
  SUBCASE("polynomials") {
    for (const auto& f : {fields::monomial(2, 1, 0), fields::monomial(0, 3, 2),
                          fields::polynomial({1.0, kI, 2.0})}) {
      const ResidualReport r = cr_residuals(f, ev, kGround);
      CHECK(r.at("z1_plane").value < 1e-6);
      CHECK(r.at("z2_plane").value < 1e-6);
    }
  }
  SUBCASE("constant is exactly holomorphic") {
    const ResidualReport r = cr_residuals(fields::constant(cplx(2, -1)), ev, kGround);
    for (const auto& e : r.entries()) CHECK(e.value == 0.0);
  }
  SUBCASE("real-only representation of a holomorphic field") {
    const ComplexField z1 = fields::coordinate(Plane::z1);
    const ComplexField real_z1 = ComplexField::on_real(
        [z1](const RealEvent& e) { return z1(e, PhysicalParams::bound(-0.5)); }, "z1 (real)");
    const ResidualReport r = cr_residuals(real_z1, ev, kGround);
    CHECK(r.at("tau_plane").value < 1e-6);
    CHECK(r.at("z1_plane").value < 1e-6);
    // Indistinguishable from i conj(z2) on real space.
    CHECK(r.at("z2_plane").value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  }
}

TEST_CASE("holomorphy report") {
  Sampler s(24);
  std::vector<RealEvent> pts;
  for (int i = 0; i < 20; ++i) pts.push_back(s.physical_event(0.1, 5.0));

  const HolomorphyVerdict good = holomorphy_report(fields::exponential(Plane::z1), pts, kGround);
  CHECK(good.holomorphic);
  CHECK(good.samples == pts.size());

  const HolomorphyVerdict bad = holomorphy_report(fields::abs2_z1(), pts, kGround);
  CHECK_FALSE(bad.holomorphic);
  REQUIRE_FALSE(bad.worst.empty());
  CHECK(bad.worst.size() <= 5);
  for (std::size_t i = 1; i < bad.worst.size(); ++i)
    CHECK(bad.worst[i - 1].residual >= bad.worst[i].residual);

  const HolomorphyVerdict flat = holomorphy_report(fields::constant(1.0), pts, kGround);
  CHECK(flat.holomorphic);
  CHECK(flat.max_residual == 0.0);

  CHECK_THROWS_AS(holomorphy_report(fields::constant(1.0), {}, kGround), std::invalid_argument);
}

TEST_CASE("finite-difference convergence") {
  auto g = [](double d) { return cplx(std::exp(0.3 + d), std::sin(0.3 + d)); };
  const cplx exact(std::exp(0.3), std::cos(0.3));
  const double e1 = std::abs(fd::derivative(g, 1, 1e-2, 2) - exact);
  const double e2 = std::abs(fd::derivative(g, 1, 5e-3, 2) - exact);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.02));
  const double f1 = std::abs(fd::derivative(g, 1, 4e-2, 4) - exact);
  const double f2 = std::abs(fd::derivative(g, 1, 2e-2, 4) - exact);
  CHECK(f1 / f2 == doctest::Approx(16.0).epsilon(0.05));
  CHECK_THROWS_AS(fd::central_weights(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(fd::central_weights(1, 3), std::invalid_argument);

  const double mixed_exact = std::cos(0.2) * std::cos(0.5);
  auto h = [](double a, double b) { return cplx(std::sin(0.2 + a) * std::sin(0.5 + b), 0.0); };
  CHECK(std::abs(fd::mixed_derivative(h, 1, 1, 1e-3, 1e-3) - mixed_exact) < 1e-9);
}

TEST_CASE("real-only fields cannot be probed off the image") {
  const ComplexField f = ComplexField::on_real([](const RealEvent& e) { return cplx(e.x1); }, "x1");
  CHECK_FALSE(f.has_complex_form());
  CHECK_THROWS_AS(f(to_complex(kPoint, kGround)), std::logic_error);
  CHECK_THROWS(d_x_direct(f, to_complex(kPoint, kGround), DerivativeSpec::constrained(Plane::z1, 1)));
}
