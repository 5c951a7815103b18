#pragma once

#include <numbers>

namespace cplanes {

enum class UnitSystem { atomic, si };

/// CODATA 2018 values used by the SI conversion layer.
namespace codata {
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double bohr_radius = 5.29177210903e-11;  // m
inline constexpr double hartree_energy = 4.3597447222071e-18;  // J
inline constexpr double hartree_in_ev = 27.211386245988;
inline constexpr double atomic_time = 2.4188843265857e-17;  // s
}  // namespace codata

/// Physical constants and the energy of the problem. All arithmetic happens in
/// atomic units; `units` only records how the caller wants values presented.
///
/// alpha is never set independently: it is always sqrt(-hbar^2 / (2 m_e E)).
class PhysicalParams {
 public:
  /// Throws DomainError unless energy < 0 and finite.
  static PhysicalParams bound(double energy, UnitSystem units = UnitSystem::atomic);

  /// Parameters for the n-th bound level, E_n = -1/(2n^2) Hartree.
  static PhysicalParams for_level(int n, UnitSystem units = UnitSystem::atomic);

  double energy() const noexcept { return energy_; }
  double alpha() const noexcept { return alpha_; }
  UnitSystem units() const noexcept { return units_; }

  // Atomic units: hbar = m_e = e = 4 pi eps0 = 1.
  static constexpr double hbar = 1.0;
  static constexpr double electron_mass = 1.0;
  static constexpr double elementary_charge = 1.0;
  static constexpr double vacuum_permittivity = 1.0 / (4.0 * std::numbers::pi);
  static constexpr double bohr_radius = 1.0;

 private:
  PhysicalParams(double energy, double alpha, UnitSystem units)
      : energy_(energy), alpha_(alpha), units_(units) {}

  double energy_;
  double alpha_;
  UnitSystem units_;
};

/// Length per atomic unit for the given system (a0 in metres for SI).
double length_scale(UnitSystem units) noexcept;
/// Time per atomic unit (seconds for SI).
double time_scale(UnitSystem units) noexcept;
/// Energy per Hartree (joules for SI).
double energy_scale(UnitSystem units) noexcept;

inline double hartree_to_ev(double e_hartree) noexcept {
  return e_hartree * codata::hartree_in_ev;
}

}  // namespace cplanes
