#pragma once

// The acceptance battery: one entry per acceptance criterion, plus the
// negative-control and starved-bounds profiles run by `hwkit suite`.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hwkit {

enum class CheckStatus { Pass, Fail, ExpectedFailure, Inconclusive };
std::string to_string(CheckStatus s);

struct CriterionResult {
  int id = 0;
  std::string title;
  CheckStatus status = CheckStatus::Fail;
  std::vector<std::string> details;
  double seconds = 0;
  double limit_seconds = 0;

  bool within_limit() const { return seconds < limit_seconds; }
  /// Timings are left out so that repeated runs serialize identically.
  nlohmann::ordered_json json() const;
};

/// Number of library-side criteria (the last one covers parse/print round
/// trips; CLI determinism is checked by the acceptance test itself).
inline constexpr int kCriteria = 10;

/// Runs criterion `id` (1..kCriteria) of the default profile.
CriterionResult run_criterion(int id);

enum class SuiteProfile { Default, CorruptedCandidate, BoundsStarved };
std::optional<SuiteProfile> parse_profile(std::string_view name);
std::string to_string(SuiteProfile p);

struct SuiteReport {
  SuiteProfile profile = SuiteProfile::Default;
  std::vector<CriterionResult> results;
  /// 0 when everything passed (or failed as expected), 3 when some check was
  /// inconclusive, 1 on any failure.
  int exit_code() const;
  nlohmann::ordered_json json() const;
};

SuiteReport run_suite(SuiteProfile profile, const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace hwkit
