#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cplanes/coords.hpp"
#include "cplanes/specfun.hpp"

namespace cplanes {

struct QuadratureSpec {
  int radial_nodes = 64;     // Gauss-Laguerre, decay absorbed into the weight
  int polar_nodes = 32;      // Gauss-Legendre in cos(theta)
  int azimuthal_points = 64; // trapezoid in phi
};

using ParamValue = std::variant<long long, double, std::string>;

/// Outcome of one verification check. verdict is pass iff max_residual < tolerance.
struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, ParamValue>> params;
  std::size_t n_samples = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double tolerance = 0.0;
  bool verdict = false;
  std::optional<std::uint64_t> seed;
  std::string oracle;
  std::vector<std::string> warnings;

  VerificationReport& param(std::string key, ParamValue value);
  /// Folds one residual into max/mean and the sample count.
  void add_sample(double residual);
  /// Recomputes verdict from max_residual and tolerance.
  void finalize();
};

/// Single-line JSON with keys in the order check, params, n_samples,
/// max_residual, mean_residual, tolerance, verdict, seed, oracle, warnings.
std::string to_json(const VerificationReport& report);

/// Deterministic sampler. Uniform deviates are built from raw mt19937_64
/// output so sequences do not depend on the standard library's distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double log_uniform(double lo, double hi);

  /// Random event with components of random sign and magnitude 10^U(-3, 2),
  /// t uniform in [-100, 100].
  RealEvent wide_event();
  /// Random event with |x_i|, |t| <= half_width.
  RealEvent box_event(double half_width);
  /// r log-uniform in [r_lo, r_hi], isotropic direction with |sin theta| > 1e-3,
  /// t uniform in [-10, 10].
  RealEvent physical_event(double r_lo = 0.05, double r_hi = 20.0);

 private:
  std::mt19937_64 engine_;
};

/// Inner product <a|b> over all space by product quadrature at t = 0.
/// Inadequate node counts for the pair are appended to warnings.
cplx overlap(const QuantumNumbers& a, const QuantumNumbers& b, const QuadratureSpec& spec,
             std::vector<std::string>* warnings = nullptr);

/// integral |amplitude * Psi|^2 dV; pass iff |result - 1| < 1e-8.
VerificationReport norm_check(const QuantumNumbers& qn, const QuadratureSpec& spec = {},
                              double amplitude = 1.0);

/// |<a|b>|; pass iff below 1e-8. For a == b this is the norm check.
VerificationReport orthogonality_check(const QuantumNumbers& a, const QuantumNumbers& b,
                                       const QuadratureSpec& spec = {});

/// max |psi_complex - psi_real_textbook| / max|psi| over random off-axis
/// events; pass iff below 1e-9.
VerificationReport equivalence_sweep(const QuantumNumbers& qn, std::size_t samples,
                                     std::uint64_t seed);

/// Relative |exp(-i E_n tau) - exp(-i E_n t) exp(-r/alpha_n)| over random
/// (r, t); pass iff below 1e-12.
VerificationReport tau_factorization_audit(int n, std::size_t samples, std::uint64_t seed = 0);

}  // namespace cplanes
