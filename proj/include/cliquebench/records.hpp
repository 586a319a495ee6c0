#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "cliquebench/advisor.hpp"
#include "cliquebench/harness.hpp"
#include "cliquebench/instance.hpp"

namespace cliquebench {

// Structured output: one JSON object per line. Vertex ids are 0-based.
// Wall-clock fields vary between runs, so they are written only on request;
// without them identical inputs give byte-identical output.
inline constexpr int kRecordSchemaVersion = 1;

using Record = nlohmann::ordered_json;

Record to_record(const PlantParams& params);
Record to_record(const AttackReport& report, bool timings = false);
Record to_record(const TrialRecord& trial, bool timings = false);
Record to_record(const ExperimentSummary& summary, bool timings = false);
Record to_record(const DistinguishingSummary& summary);
Record to_record(const Recommendation& rec);

/// Header plus one row per attack: params, attack, trials, success rate,
/// matches, mean/min/max size, and mean wall time when `timings` is set.
void write_summary_csv(std::ostream& out, const ExperimentSummary& summary, bool timings = false);

/// Per-trial CSV rows, one per (trial, attack).
void write_trials_csv(std::ostream& out, const ExperimentSummary& summary, bool timings = false);

/// Aligned text table with the columns Adversary, Value of n, Value of p,
/// Choice of k.
void write_advice_table(std::ostream& out, const std::vector<Recommendation>& rows);

std::string to_string(const BigInt& value);

}  // namespace cliquebench
