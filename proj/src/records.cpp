#include "cliquebench/records.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace cliquebench {
namespace {

Record vertex_list(const VertexSet& s) {
  Record out = Record::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

// Doubles are printed with a fixed precision so CSV output does not depend
// on shortest-round-trip formatting.
std::string csv_number(double x) {
  std::ostringstream out;
  out << std::setprecision(10) << x;
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(const BigInt& value) { return value.str(); }

Record to_record(const PlantParams& params) {
  Record r;
  r["n"] = params.n;
  r["p"] = params.p;
  r["k"] = params.k;
  const double eps = params.epsilon();
  r["epsilon"] = std::isnan(eps) ? Record(nullptr) : Record(eps);
  r["in_range"] = params.in_target_range();
  return r;
}

Record to_record(const AttackReport& report, bool timings) {
  Record r;
  r["schema"] = kRecordSchemaVersion;
  r["type"] = "attack_report";
  r["attack"] = report.attack_name;
  r["seed"] = report.seed;
  r["candidate"] = report.candidate ? vertex_list(*report.candidate) : Record(nullptr);
  r["is_valid_clique"] = report.is_valid_clique;
  r["size"] = report.size;
  r["inverted"] = report.inverted;
  r["matched_hidden"] = report.matched_hidden;
  r["steps"] = report.steps;
  r["budget_exceeded"] = report.budget_exceeded;
  r["error"] = report.error.empty() ? Record(nullptr) : Record(report.error);
  if (timings) r["wall_time"] = report.wall_time;
  return r;
}

Record to_record(const TrialRecord& trial, bool timings) {
  Record r;
  r["schema"] = kRecordSchemaVersion;
  r["type"] = "trial";
  r["trial"] = trial.trial;
  r["instance_seed"] = trial.instance_seed;
  r["best_size"] = trial.best_size;
  Record reports = Record::array();
  for (const auto& rep : trial.reports) reports.push_back(to_record(rep, timings));
  r["reports"] = std::move(reports);
  return r;
}

Record to_record(const ExperimentSummary& summary, bool timings) {
  Record r;
  r["schema"] = kRecordSchemaVersion;
  r["type"] = "summary";
  r["params"] = to_record(summary.params);
  r["trials"] = summary.trials;
  Record attacks = Record::array();
  for (const auto& a : summary.attacks) {
    Record e;
    e["attack"] = a.attack_name;
    e["inversions"] = a.inversions;
    e["matches"] = a.matches;
    e["success_rate"] = a.success_rate;
    e["mean_size"] = a.mean_size;
    e["min_size"] = a.min_size;
    e["max_size"] = a.max_size;
    if (timings) e["mean_wall_time"] = a.mean_wall_time;
    attacks.push_back(std::move(e));
  }
  r["attacks"] = std::move(attacks);
  r["best_attack"] = summary.best_attack;
  return r;
}

Record to_record(const DistinguishingSummary& s) {
  Record r;
  r["schema"] = kRecordSchemaVersion;
  r["type"] = "distinguishing_game";
  r["trials"] = s.trials;
  r["planted_trials"] = s.planted_trials;
  r["correct"] = s.correct;
  r["inversions"] = s.inversions;
  r["success_rate"] = s.success_rate;
  r["advantage"] = s.advantage;
  return r;
}

Record to_record(const Recommendation& rec) {
  Record r;
  r["schema"] = kRecordSchemaVersion;
  r["type"] = "recommendation";
  r["adversary"] = rec.adversary;
  // big integers travel as decimal strings
  r["min_n"] = rec.min_n ? Record(to_string(*rec.min_n)) : Record(nullptr);
  r["suggested_n"] = rec.suggested_n ? Record(to_string(*rec.suggested_n)) : Record(nullptr);
  r["p"] = rec.p_constraint;
  r["k"] = rec.k_constraint;
  r["formula"] = rec.formula;
  return r;
}

void write_summary_csv(std::ostream& out, const ExperimentSummary& summary, bool timings) {
  out << "n,p,k,attack,trials,success_rate,matches,mean_size,min_size,max_size";
  if (timings) out << ",mean_wall_time";
  out << '\n';
  for (const auto& a : summary.attacks) {
    out << summary.params.n << ',' << csv_number(summary.params.p) << ',' << summary.params.k
        << ',' << csv_field(a.attack_name) << ',' << summary.trials << ','
        << csv_number(a.success_rate) << ',' << a.matches << ',' << csv_number(a.mean_size) << ','
        << a.min_size << ',' << a.max_size;
    if (timings) out << ',' << csv_number(a.mean_wall_time);
    out << '\n';
  }
}

void write_trials_csv(std::ostream& out, const ExperimentSummary& summary, bool timings) {
  out << "trial,instance_seed,attack,seed,size,is_valid_clique,inverted,matched_hidden,steps";
  if (timings) out << ",wall_time";
  out << '\n';
  for (const auto& t : summary.records) {
    for (const auto& r : t.reports) {
      out << t.trial << ',' << t.instance_seed << ',' << csv_field(r.attack_name) << ',' << r.seed
          << ',' << r.size << ',' << r.is_valid_clique << ',' << r.inverted << ','
          << r.matched_hidden << ',' << r.steps;
      if (timings) out << ',' << csv_number(r.wall_time);
      out << '\n';
    }
  }
}

void write_advice_table(std::ostream& out, const std::vector<Recommendation>& rows) {
  const std::vector<std::string> header = {"Adversary", "Value of n", "Value of p", "Choice of k"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::string n = r.min_n ? to_string(*r.min_n) : "-";
    if (r.suggested_n && (!r.min_n || *r.suggested_n != *r.min_n)) {
      n += " (suggested " + to_string(*r.suggested_n) + ")";
    }
    cells.push_back({r.adversary, n, r.p_constraint, r.k_constraint});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c + 1 == row.size()) {
        out << row[c] << '\n';
      } else {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c] << "  ";
      }
    }
  };
  line(header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& row : cells) line(row);
}

}  // namespace cliquebench
