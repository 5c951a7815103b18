#include <cmath>
#include <numbers>

#include "doctest.h"

#include "cplanes/coords.hpp"
#include "cplanes/errors.hpp"
#include "cplanes/verify.hpp"

using namespace cplanes;

namespace {
const double kRt2 = std::sqrt(2.0);
const PhysicalParams kGround = PhysicalParams::bound(-0.5);

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) < tol; }
}  // namespace

TEST_CASE("physical params") {
  CHECK(PhysicalParams::bound(-0.5).alpha() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(PhysicalParams::bound(-0.125).alpha() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(PhysicalParams::for_level(3).alpha() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(PhysicalParams::bound(0.5), "bound state requires E < 0", DomainError);
  CHECK_THROWS_AS(PhysicalParams::bound(0.0), DomainError);
  CHECK_THROWS_AS(PhysicalParams::bound(NAN), DomainError);
  CHECK(length_scale(UnitSystem::atomic) == 1.0);
  CHECK(length_scale(UnitSystem::si) == codata::bohr_radius);
}

TEST_CASE("to_complex examples") {
  SUBCASE("unit x1") {
    const ComplexEvent c = to_complex({1, 0, 0, 0}, kGround);
    CHECK(close(c.z1, {1 / kRt2, 0}, 1e-15));
    CHECK(close(c.z2, {0, 1 / kRt2}, 1e-15));
    CHECK(close(c.z3, 0.0, 1e-15));
    CHECK(close(c.tau, {0, 2}, 1e-15));
  }
  SUBCASE("origin") {
    const ComplexEvent c = to_complex({0, 0, 0, 5}, kGround);
    CHECK(c.z1 == cplx(0));
    CHECK(c.z2 == cplx(0));
    CHECK(c.z3 == cplx(0));
    CHECK(close(c.tau, 5.0, 1e-15));
  }
  SUBCASE("planar point") {
    const ComplexEvent c = to_complex({3, 4, 0, 0}, kGround);
    CHECK(close(c.z1, cplx(3, 4) / kRt2, 1e-14));
    CHECK(close(c.z2, cplx(4, 3) / kRt2, 1e-14));
    CHECK(c.s() == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(std::norm(c.z1) + std::norm(c.z2) == doctest::Approx(25.0).epsilon(1e-14));
  }
  SUBCASE("imaginary time is positive for bound states") {
    Sampler s(3);
    for (int i = 0; i < 200; ++i) {
      const RealEvent ev = s.wide_event();
      CHECK(to_complex(ev, PhysicalParams::bound(-s.uniform(0.01, 3.0))).s() > 0.0);
    }
  }
  CHECK_THROWS_AS(to_complex({INFINITY, 0, 0, 0}, kGround), DomainError);
}

TEST_CASE("to_real") {
  const RealEvent back = to_real(to_complex({1, 2, 3, 4}, kGround), kGround);
  CHECK(back.x1 == doctest::Approx(1).epsilon(1e-12));
  CHECK(back.x2 == doctest::Approx(2).epsilon(1e-12));
  CHECK(back.x3 == doctest::Approx(3).epsilon(1e-12));
  CHECK(back.t == doctest::Approx(4).epsilon(1e-12));

  const RealEvent unit = to_real({1 / kRt2, cplx(0, 1 / kRt2), 0.0, cplx(0, 2)}, kGround);
  CHECK(std::abs(unit.x1 - 1) < 1e-15);
  CHECK(std::abs(unit.x2) < 1e-15);
  CHECK(std::abs(unit.x3) < 1e-15);
  CHECK(std::abs(unit.t) < 1e-15);

  ComplexEvent bad = to_complex({1, 2, 3, 0}, kGround);
  bad.z2 += 1e-3;
  try {
    to_real(bad, kGround);
    FAIL("expected InvariantViolation");
  } catch (const InvariantViolation& e) {
    CHECK(e.invariant() == "z2 = i*conj(z1)");
  }
  ComplexEvent lifted = to_complex({1, 2, 3, 0}, kGround);
  lifted.z3 += cplx(0, 1e-3);
  CHECK_THROWS_AS(to_real(lifted, kGround), InvariantViolation);
}

TEST_CASE("identity residuals") {
  const ResidualReport unit = identity_residuals({1, 0, 0, 0}, kGround);
  for (const auto& e : unit.entries()) CHECK(e.value < 1e-15);
  CHECK(unit.passed());

  const ResidualReport r345 = identity_residuals({3, 4, 5, 0}, kGround);
  CHECK(r345.at("isometry").value < 1e-13);

  const ResidualReport axis = identity_residuals({0, 0, 1, 0}, kGround);
  CHECK(axis.at("correlation_1").status == ResidualStatus::skipped);
  CHECK(axis.at("correlation_2").status == ResidualStatus::skipped);
  CHECK(axis.at("isometry").value < 1e-15);
  CHECK(axis.at("product").value < 1e-15);
  CHECK(axis.passed());
  CHECK_THROWS_AS(axis.at("missing"), std::out_of_range);
}

TEST_CASE("isometry, correlation and product hold over random events") {
  Sampler s(11);
  for (int i = 0; i < 10000; ++i) {
    const RealEvent ev = s.wide_event();
    const ResidualReport r = identity_residuals(ev, PhysicalParams::bound(-s.uniform(0.01, 2.0)));
    REQUIRE(r.passed());
  }
}

TEST_CASE("round trip over random events") {
  Sampler s(12);
  for (int i = 0; i < 10000; ++i) {
    const RealEvent ev = s.wide_event();
    const RealEvent back = to_real(to_complex(ev, kGround), kGround);
    const double scale = std::max(1.0, ev.radius());
    REQUIRE(std::abs(back.x1 - ev.x1) < 1e-12 * scale);
    REQUIRE(std::abs(back.x2 - ev.x2) < 1e-12 * scale);
    REQUIRE(std::abs(back.x3 - ev.x3) < 1e-12 * scale);
    REQUIRE(back.t == ev.t);
  }
}

TEST_CASE("complex spherical coordinates") {
  const ComplexSpherical pole = to_complex_spherical(to_complex({0, 0, 1, 0}, kGround));
  CHECK(pole.z_r == doctest::Approx(1.0));
  CHECK(close(pole.theta(), 1.0, 1e-15));
  CHECK(pole.on_axis());
  try {
    pole.phi();
    FAIL("expected SingularPointError");
  } catch (const SingularPointError& e) {
    CHECK(e.tag() == "on-axis");
  }

  const ComplexSpherical eq = to_complex_spherical(to_complex({1, 0, 0, 0}, kGround));
  CHECK(eq.z_r == doctest::Approx(1.0));
  CHECK(close(eq.theta(), 0.0, 1e-15));
  CHECK(close(eq.phi(), 1.0, 1e-15));

  const ComplexSpherical diag = to_complex_spherical(to_complex({1, 1, 0, 0}, kGround));
  CHECK(close(diag.phi(), std::polar(1.0, std::numbers::pi / 4), 1e-15));

  const ComplexSpherical origin = to_complex_spherical(to_complex({0, 0, 0, 2}, kGround));
  CHECK(origin.at_origin());
  try {
    origin.theta();
    FAIL("expected SingularPointError");
  } catch (const SingularPointError& e) {
    CHECK(e.tag() == "origin");
  }
}

TEST_CASE("complex to real spherical") {
  const RealSpherical a = complex_to_real_spherical({1.0, cplx(1.0), std::nullopt});
  CHECK(a.r == 1.0);
  CHECK(a.theta == doctest::Approx(0.0));
  CHECK(a.phi == 0.0);

  const RealSpherical b = complex_to_real_spherical({2.0, cplx(0.0), cplx(0, 1)});
  CHECK(b.theta == doctest::Approx(std::numbers::pi / 2));
  CHECK(b.phi == doctest::Approx(std::numbers::pi / 2));

  const RealSpherical c =
      complex_to_real_spherical(to_complex_spherical(to_complex({1, 1, 1, 0}, kGround)));
  CHECK(c.r == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(c.theta == doctest::Approx(std::acos(1 / std::sqrt(3.0))).epsilon(1e-14));
  CHECK(c.phi == doctest::Approx(std::numbers::pi / 4).epsilon(1e-14));

  CHECK_THROWS_AS(complex_to_real_spherical({1.0, cplx(0.5), cplx(2.0)}), DomainError);
}

TEST_CASE("spherical consistency off the axis") {
  Sampler s(13);
  for (int i = 0; i < 2000; ++i) {
    const RealEvent ev = s.physical_event();
    const RealSpherical direct = real_spherical(ev);
    const RealSpherical via =
        complex_to_real_spherical(to_complex_spherical(to_complex(ev, kGround)));
    REQUIRE(std::abs(via.r - direct.r) < 1e-12 * direct.r);
    REQUIRE(std::abs(via.theta - direct.theta) < 1e-12);
    REQUIRE(std::abs(via.phi - direct.phi) < 1e-12);
  }
}

TEST_CASE("time phase absorbs the radial decay") {
  const RealEvent ev{1, 0, 0, 0};
  CHECK(close(time_phase(kGround, to_complex(ev, kGround).tau), std::exp(-1.0), 1e-15));
  const PhysicalParams p2 = PhysicalParams::for_level(2);
  const double t = 3.7;
  const cplx at_origin = time_phase(p2, to_complex({0, 0, 0, t}, p2).tau);
  CHECK(std::abs(at_origin) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(close(at_origin, std::polar(1.0, 0.125 * t), 1e-15));

  const double m0 = std::abs(time_phase(p2, to_complex({1, 2, 0.5, 0}, p2).tau));
  for (double tt : {-50.0, 1.0, 99.0})
    CHECK(std::abs(time_phase(p2, to_complex({1, 2, 0.5, tt}, p2).tau)) ==
          doctest::Approx(m0).epsilon(1e-14));
}
