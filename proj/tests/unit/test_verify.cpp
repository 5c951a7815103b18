#include <cmath>
#include <set>

#include "doctest.h"
#include "json.hpp"

#include "cplanes/suites.hpp"
#include "cplanes/verify.hpp"

using namespace cplanes;

TEST_CASE("sampler") {
  Sampler a(5), b(5), c(6);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(a.uniform() != c.uniform());
  for (int i = 0; i < 1000; ++i) {
    const RealEvent ev = a.physical_event();
    const double r = ev.radius();
    REQUIRE(r >= 0.05 * (1 - 1e-12));
    REQUIRE(r <= 20.0 * (1 + 1e-12));
    REQUIRE(std::hypot(ev.x1, ev.x2) / r > 1e-3 * (1 - 1e-9));
    const double v = a.log_uniform(1e-3, 10.0);
    REQUIRE(v >= 1e-3 * (1 - 1e-12));
    REQUIRE(v <= 10.0 * (1 + 1e-12));
  }
}

TEST_CASE("verification report") {
  VerificationReport r;
  r.check = "demo";
  r.tolerance = 1.0;
  r.add_sample(0.5);
  r.add_sample(0.25);
  r.finalize();
  CHECK(r.n_samples == 2);
  CHECK(r.max_residual == 0.5);
  CHECK(r.mean_residual == doctest::Approx(0.375));
  CHECK(r.verdict);
  r.add_sample(1.0);
  r.finalize();
  CHECK_FALSE(r.verdict);  // pass iff strictly below tolerance
  r.add_sample(NAN);
  r.finalize();
  CHECK_FALSE(r.verdict);
}

TEST_CASE("json schema") {
  VerificationReport r = tau_factorization_audit(1, 10, 7);
  const auto j = nlohmann::ordered_json::parse(to_json(r));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"check", "params", "n_samples", "max_residual",
                                         "mean_residual", "tolerance", "verdict", "seed",
                                         "oracle", "warnings"});
  CHECK(j["check"] == "tau_factorization");
  CHECK(j["seed"] == 7);
  CHECK(j["verdict"] == "pass");
  CHECK(j["params"]["n"] == 1);
  CHECK(to_json(r).find('\n') == std::string::npos);
  CHECK(nlohmann::json::parse(to_json(spectrum_check(3)))["seed"].is_null());
}

TEST_CASE("norms") {
  const VerificationReport g = norm_check(QuantumNumbers(1, 0, 0));
  CHECK(g.verdict);
  CHECK(g.max_residual < 1e-10);
  CHECK(g.warnings.empty());

  const VerificationReport d = norm_check(QuantumNumbers(3, 2, -1));
  CHECK(d.verdict);
  CHECK(d.max_residual < 1e-8);

  const VerificationReport doubled = norm_check(QuantumNumbers(2, 1, 0), {}, 2.0);
  CHECK_FALSE(doubled.verdict);
  CHECK(doubled.max_residual == doctest::Approx(3.0).epsilon(1e-8));
}

TEST_CASE("norms survive doubling the node counts") {
  const QuadratureSpec fine{128, 64, 128};
  for (const auto& qn : states_up_to(4)) {
    if (qn.k() < 0) continue;
    const double a = overlap(qn, qn, {}).real();
    const double b = overlap(qn, qn, fine).real();
    REQUIRE(std::abs(a - b) < 1e-10);
  }
}

TEST_CASE("orthogonality") {
  const VerificationReport a = orthogonality_check(QuantumNumbers(1, 0, 0), QuantumNumbers(2, 0, 0));
  CHECK(a.verdict);
  CHECK(a.max_residual < 1e-8);
  const VerificationReport b = orthogonality_check(QuantumNumbers(2, 1, 1), QuantumNumbers(2, 1, -1));
  CHECK(b.max_residual < 1e-10);
  const VerificationReport same = orthogonality_check(QuantumNumbers(2, 1, 1), QuantumNumbers(2, 1, 1));
  CHECK(same.check == "norm");
  CHECK(same.verdict);
  CHECK(std::abs(overlap(QuantumNumbers(3, 1, 0), QuantumNumbers(3, 1, 0), {}) - 1.0) < 1e-10);
}

TEST_CASE("inadequate quadrature is reported") {
  const QuadratureSpec tiny{2, 1, 2};
  const VerificationReport r = norm_check(QuantumNumbers(3, 2, 2), tiny);
  CHECK_FALSE(r.warnings.empty());
  CHECK(orthogonality_check(QuantumNumbers(2, 1, 1), QuantumNumbers(2, 1, -1), tiny).warnings.size() >= 1);
}

TEST_CASE("textbook equivalence") {
  for (const QuantumNumbers qn : {QuantumNumbers(1, 0, 0), QuantumNumbers(4, 3, 2)}) {
    const VerificationReport r = equivalence_sweep(qn, 1000, 42);
    CHECK(r.verdict);
    CHECK(r.n_samples == 1000);
  }
  CHECK(to_json(equivalence_sweep(QuantumNumbers(3, 1, -1), 200, 9)) ==
        to_json(equivalence_sweep(QuantumNumbers(3, 1, -1), 200, 9)));
}

TEST_CASE("tau factorization") {
  for (int n = 1; n <= 4; ++n) CHECK(tau_factorization_audit(n, 10000, 1).verdict);

  const PhysicalParams p1 = PhysicalParams::for_level(1);
  CHECK(std::abs(time_phase(p1, to_complex({1, 0, 0, 0}, p1).tau) - std::exp(-1.0)) < 1e-15);
  const PhysicalParams p2 = PhysicalParams::for_level(2);
  const cplx at_origin = time_phase(p2, to_complex({0, 0, 0, 2.0}, p2).tau);
  CHECK(std::abs(at_origin - std::polar(1.0, 0.125 * 2.0)) < 1e-15);
}

TEST_CASE("suite checks") {
  CHECK(isometry_check(500, 1).verdict);
  CHECK(plane_correlation_check(500, 1).verdict);
  CHECK(product_identity_check(500, 1).verdict);
  CHECK(round_trip_check(500, 1).verdict);
  CHECK(kronecker_check(20, 1).verdict);
  CHECK(laplace_property_check(20, 1).verdict);
  CHECK(spectrum_check(10).verdict);
  CHECK(l3_eigen_check(4, 1).verdict);

  const VerificationReport l2 = l2_eigen_check(4, 1);
  CHECK(l2.verdict);
  const auto j = nlohmann::json::parse(to_json(l2));
  CHECK(j["params"]["max_deviation_from_l_lminus1"].get<double>() ==
        doctest::Approx(8.0).epsilon(1e-6));

  const VerificationReport sens = energy_sensitivity_check(QuantumNumbers(2, 1, 0), 0.1, 50, 3);
  CHECK(sens.verdict);
  CHECK(sens.max_residual < 1e-3);

  CHECK(states_up_to(3).size() == 14);
  CHECK(states_up_to(4).size() == 30);
}

TEST_CASE("suite dispatch") {
  const auto ids = run_suite("identities", 3);
  std::set<std::string> names;
  for (const auto& r : ids) names.insert(r.check);
  CHECK(names == std::set<std::string>{"isometry", "plane_correlation", "product_identity",
                                       "round_trip"});
  CHECK_THROWS_AS(run_suite("bogus", 1), std::invalid_argument);

  const auto a = run_suite("operators", 77);
  const auto b = run_suite("operators", 77);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]) == to_json(b[i]));
}
