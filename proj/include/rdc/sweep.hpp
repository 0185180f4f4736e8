#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rdc/formulas.hpp"

namespace rdc {

inline constexpr const char* kToolVersion = "0.1.0";

struct IntRange {
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Parses "a..b" or a single integer "a". Throws InvalidParameter.
IntRange parse_range(const std::string& text);

struct SweepConfig {
  Family family = Family::PathStar;
  /// Unused ranges are ignored for families that do not read them.
  IntRange l{2, 2};
  IntRange m{3, 3};
  IntRange n{3, 3};
  /// nullopt means auto: 1..max(1, Δ) per instance, plus one stability
  /// spot check at r = Δ+1 on the first instance with an edge.
  std::optional<IntRange> r;
  std::chrono::milliseconds budget{60'000};
  /// Instances above this order are constructed and validated only.
  std::size_t exact_cap = 30;
  int jobs = 1;
};

enum class ConstructionStatus { Valid, Invalid, NotConstructive };
enum class Agreement {
  Match,
  Mismatch,
  HypothesisConfirmed,
  HypothesisRefuted,
  Timeout,
  Uncovered,
  ValidatedOnly,
};

std::string_view construction_status_name(ConstructionStatus s);
std::string_view agreement_name(Agreement a);

struct SweepRow {
  Family family = Family::PathStar;
  FamilyParams params;
  int r = 0;
  std::string case_id;
  Prediction::Kind predicted_kind = Prediction::Kind::Uncovered;
  std::optional<int> predicted_value;
  std::optional<int> hypothesis_value;
  std::optional<int> exact_value;
  ConstructionStatus construction_status = ConstructionStatus::NotConstructive;
  /// Verdict on the repaired palette, for cases whose printed palette has
  /// a repair candidate.
  std::optional<ConstructionStatus> repair_status;
  Agreement agreement = Agreement::Uncovered;
  /// Claimed vs computed min/max degree; nullopt when nothing is claimed.
  std::optional<bool> degree_claim_ok;
  /// Companion lower bound (complete-path) held against the exact value.
  std::optional<bool> lower_bound_ok;
  /// Set on the stability spot-check row: chi at Δ+1 equals chi at Δ.
  std::optional<bool> stability_ok;
  std::uint64_t nodes_explored = 0;
  std::int64_t elapsed_ms = 0;

  /// Anything that contradicts a stated value or construction.
  bool discrepancy() const;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::map<std::string, int> summary;
  std::string tool_version = kToolVersion;
  nlohmann::json config;

  bool has_discrepancy() const;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Runs every (instance, r) of the config. Solver timeouts and uncovered
/// params still produce rows. Row order is lexicographic in (l, m, n, r).
SweepReport sweep(const SweepConfig& config);

/// Recomputes summary counts from rows.
void summarize(SweepReport& report);

nlohmann::json config_to_json(const SweepConfig& config);

enum class ReportFormat { Csv, Json, Markdown };
/// Throws InvalidParameter for unknown names.
ReportFormat parse_report_format(std::string_view name);

std::string report_to_csv(const SweepReport& report);
std::string report_to_markdown(const SweepReport& report);
nlohmann::json report_to_json(const SweepReport& report);
SweepReport report_from_json(const nlohmann::json& j);

/// Writes the report atomically. Throws IoError on failure.
void emit_report(const SweepReport& report, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace rdc
