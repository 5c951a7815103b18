#include "cplanes/residual_report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cplanes {

std::string_view to_string(ResidualStatus status) noexcept {
  switch (status) {
    case ResidualStatus::pass: return "pass";
    case ResidualStatus::fail: return "fail";
    case ResidualStatus::skipped: return "skipped";
    case ResidualStatus::info: return "info";
  }
  return "?";
}

ResidualEntry& ResidualReport::check(std::string name, double value, double tolerance,
                                     std::string note) {
  // NaN never passes.
  const bool ok = value < tolerance;
  entries_.push_back({std::move(name), value, tolerance,
                      ok ? ResidualStatus::pass : ResidualStatus::fail, std::move(note)});
  return entries_.back();
}

ResidualEntry& ResidualReport::skip(std::string name, std::string reason) {
  entries_.push_back({std::move(name), 0.0, 0.0, ResidualStatus::skipped, std::move(reason)});
  return entries_.back();
}

ResidualEntry& ResidualReport::info(std::string name, double value, std::string note) {
  entries_.push_back({std::move(name), value, 0.0, ResidualStatus::info, std::move(note)});
  return entries_.back();
}

bool ResidualReport::passed() const noexcept {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const ResidualEntry& e) { return e.status == ResidualStatus::fail; });
}

double ResidualReport::max_checked() const noexcept {
  double m = 0.0;
  for (const auto& e : entries_) {
    if (e.status == ResidualStatus::pass || e.status == ResidualStatus::fail) {
      m = std::isnan(e.value) ? e.value : std::max(m, e.value);
      if (std::isnan(m)) return m;
    }
  }
  return m;
}

const ResidualEntry& ResidualReport::at(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw std::out_of_range("no residual named " + std::string(name));
}

bool ResidualReport::contains(std::string_view name) const noexcept {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const ResidualEntry& e) { return e.name == name; });
}

}  // namespace cplanes
