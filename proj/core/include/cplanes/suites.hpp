#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cplanes/specfun.hpp"
#include "cplanes/verify.hpp"

namespace cplanes {

// Individual checks behind the `check` suites. Each constructs its own
// sampler from the seed, so results do not depend on call order.

VerificationReport isometry_check(std::size_t samples, std::uint64_t seed);
VerificationReport plane_correlation_check(std::size_t samples, std::uint64_t seed);
VerificationReport product_identity_check(std::size_t samples, std::uint64_t seed);
VerificationReport round_trip_check(std::size_t samples, std::uint64_t seed);

/// d z_i/d z_j = delta_ij, d tau/d z_i = 0, d z_i/d z_i* = 0, d tau/d tau* = 0.
VerificationReport kronecker_check(std::size_t samples, std::uint64_t seed);
/// Constrained 2-D Laplacian of random z1 polynomials (degree <= 5).
VerificationReport laplace_property_check(std::size_t polynomials, std::uint64_t seed);
VerificationReport holomorphy_check(const QuantumNumbers& qn, std::size_t samples,
                                    std::uint64_t seed);

/// Numeric L^2 eigenvalue of P_l^k z_phi^k against l(l+1) for l <= l_max;
/// the deviation from l(l-1) is recorded as a parameter.
VerificationReport l2_eigen_check(int l_max, std::uint64_t seed);
VerificationReport l3_eigen_check(int k_max, std::uint64_t seed);
/// Phi, Theta and the printed radial reading over all states n <= n_max.
VerificationReport separated_check(int n_max, std::uint64_t seed);

/// E_n n^2 against E_1 for n <= n_max (relative).
VerificationReport spectrum_check(int n_max);
VerificationReport schrodinger_check(const QuantumNumbers& qn, std::size_t samples,
                                     std::uint64_t seed);
/// Ratio of the exact-state residual to that of a candidate whose energy is
/// off by `perturbation` (relative); must be below 1e-3.
VerificationReport energy_sensitivity_check(const QuantumNumbers& qn, double perturbation,
                                            std::size_t samples, std::uint64_t seed);
/// Max |<a|b>| over all distinct pairs with n <= n_max.
VerificationReport orthogonality_all_check(int n_max, const QuadratureSpec& spec = {});

/// All admissible (n, l, k) with n <= n_max, ordered by n, l, k.
std::vector<QuantumNumbers> states_up_to(int n_max);

inline constexpr std::string_view kSuiteNames[] = {"identities", "holomorphy", "operators",
                                                   "eigen", "all"};

/// Throws std::invalid_argument for an unknown suite name.
std::vector<VerificationReport> run_suite(std::string_view suite, std::uint64_t seed);

}  // namespace cplanes
