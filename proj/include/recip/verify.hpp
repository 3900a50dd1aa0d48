#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace recip {

enum class Status { exact, pass, fail, ambiguous };

std::string_view to_string(Status s);

struct VerificationEntry {
  std::string id;
  /// Short reference label carried alongside the id.
  std::string eq;
  std::size_t trials = 0;
  double max_residual = 0;
  double tolerance = 0;
  Status status = Status::pass;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  double c = 1;
  std::vector<VerificationEntry> entries;

  bool has_failures() const;
  const VerificationEntry* find(std::string_view id) const;
};

struct RunConfig {
  double c = 1;
  std::uint64_t seed = 42;
  /// Trials for the scalar and associativity suites; the smaller suites scale
  /// from it.
  std::size_t trials = 100000;
  std::map<std::string, double, std::less<>> tolerance_overrides;
};

/// Identity ids with their default tolerances, in report order.
std::vector<std::pair<std::string, double>> default_tolerances();

/// Runs every identity check. Each identity draws from its own seeded stream, so
/// entries do not depend on one another or on evaluation order.
VerificationReport run_verification(const RunConfig& config);

/// {seed, c, entries: [{id, eq, trials, max_residual, tolerance, status}]}
nlohmann::ordered_json to_json(const VerificationReport& report);

std::string to_text(const VerificationReport& report);

}  // namespace recip
