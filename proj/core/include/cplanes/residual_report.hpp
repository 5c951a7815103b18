#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cplanes {

enum class ResidualStatus { pass, fail, skipped, info };

std::string_view to_string(ResidualStatus status) noexcept;

struct ResidualEntry {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  ResidualStatus status = ResidualStatus::info;
  std::string note;
};

/// Named residual magnitudes with a verdict for each. Skipped and info entries
/// never make a report fail.
class ResidualReport {
 public:
  /// Adds a checked residual; pass iff value < tolerance.
  ResidualEntry& check(std::string name, double value, double tolerance,
                       std::string note = {});
  ResidualEntry& skip(std::string name, std::string reason);
  /// Recorded for information only (e.g. an alternative reading of an equation).
  ResidualEntry& info(std::string name, double value, std::string note = {});

  bool passed() const noexcept;
  double max_checked() const noexcept;

  /// Throws std::out_of_range if no entry has this name.
  const ResidualEntry& at(std::string_view name) const;
  bool contains(std::string_view name) const noexcept;

  const std::vector<ResidualEntry>& entries() const noexcept { return entries_; }

 private:
  std::vector<ResidualEntry> entries_;
};

}  // namespace cplanes
