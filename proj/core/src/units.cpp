#include "cplanes/units.hpp"

#include <cmath>
#include <string>

#include "cplanes/errors.hpp"

namespace cplanes {

PhysicalParams PhysicalParams::bound(double energy, UnitSystem units) {
  if (!std::isfinite(energy)) throw DomainError("energy must be finite");
  if (energy >= 0.0) throw DomainError("bound state requires E < 0");
  const double alpha = std::sqrt(-hbar * hbar / (2.0 * electron_mass * energy));
  return PhysicalParams(energy, alpha, units);
}

double length_scale(UnitSystem units) noexcept {
  return units == UnitSystem::si ? codata::bohr_radius : 1.0;
}

double time_scale(UnitSystem units) noexcept {
  return units == UnitSystem::si ? codata::atomic_time : 1.0;
}

double energy_scale(UnitSystem units) noexcept {
  return units == UnitSystem::si ? codata::hartree_energy : 1.0;
}

}  // namespace cplanes
