#pragma once

#include "hecke/analysis.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// A grid tuple that was not analyzed, with the error code name as reason.
struct SkippedEntry {
  std::int64_t q = 0, k = 0, m = 0;
  std::string reason;
  bool operator==(const SkippedEntry&) const = default;
};

struct ReportDocument {
  int schema_version = 1;
  std::vector<AnalysisReport> entries;  // sorted by (q, k, m)
  std::vector<SkippedEntry> skipped;    // same order
  bool operator==(const ReportDocument&) const = default;
};

struct SweepSpec {
  std::vector<std::int64_t> q_list;
  std::int64_t k_min = 2, k_max = 2;
  std::optional<std::vector<std::int64_t>> m_list;  // nullopt: every type class
  std::optional<std::size_t> n_cap;
  unsigned jobs = 1;
};

/// Reason recorded for tuples above the n cap.
inline constexpr std::string_view kNCapExceeded = "NCapExceeded";

/// Throws InvalidArgument for empty or malformed grids.
void validate(const SweepSpec& spec);

/// Analyzes every tuple on up to spec.jobs threads; the result does not
/// depend on the number of threads. The first failing tuple (in grid
/// order) rethrows its error.
ReportDocument run_sweep(const SweepSpec& spec);

/// Single-tuple document: one entry, or one skipped record for parameter errors.
ReportDocument analyze_document(std::int64_t q, std::int64_t k, std::int64_t m);

struct SweepSummary {
  std::size_t analyzed = 0, skipped = 0;
  std::size_t tt_injective_false = 0, direct_sum_false = 0;
  std::size_t criterion_mismatches = 0, identity_failures = 0, theorem_violations = 0;
  std::string to_string() const;
};

SweepSummary summarize(const ReportDocument& doc);

enum class Format { Json, Csv };

/// Throws UnsupportedFormat.
Format parse_format(std::string_view name);
std::string serialize_report(const ReportDocument& doc, Format format);
/// Throws ParseError.
ReportDocument parse_report_json(std::string_view text);

}  // namespace hecke
