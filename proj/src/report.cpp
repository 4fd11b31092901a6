#include <sstream>

#include "gor/verify.hpp"

namespace gor {

nlohmann::json to_json(const Report& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : report.witnesses) {
    nlohmann::json item{{"kind", w.kind}, {"trial", w.trial}, {"seed", w.seed}, {"detail", w.detail}};
    if (!w.data.is_null()) item["data"] = w.data;
    witnesses.push_back(std::move(item));
  }
  return {
      {"schema_version", kReportSchemaVersion},
      {"tool", kToolName},
      {"version", kToolVersion},
      {"check", report.check},
      {"statement", report.statement},
      {"trials", report.trials},
      {"seed", report.seed},
      {"primes", report.primes},
      {"passed", report.passed},
      {"failed", report.failed},
      {"anomalies", report.anomalies},
      {"skipped", report.skipped},
      {"exit_code", report.exit_code()},
      {"witnesses", witnesses},
      {"details", report.details},
      {"field_note",
       "ranks are computed over Z/p; a rank over Z/p is at most the rank in characteristic 0, "
       "and agreement across the listed primes at random points is taken as verification"},
  };
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << "check: " << report.check << '\n'
     << "statement: " << report.statement << '\n'
     << "trials: " << report.trials << '\n'
     << "passed: " << report.passed << '\n'
     << "failed: " << report.failed << '\n'
     << "anomalies: " << report.anomalies << '\n'
     << "skipped: " << report.skipped << '\n';
  for (const auto& w : report.witnesses) {
    if (w.kind == "skip") continue;
    os << w.kind << " trial=" << w.trial << " seed=" << w.seed << ": " << w.detail;
    if (!w.data.is_null()) os << ' ' << w.data.dump();
    os << '\n';
  }
  if (report.details.contains("deficiency_table")) {
    os << "p i dim_prev dim max_rank deficiency\n";
    for (const auto& row : report.details["deficiency_table"])
      os << row["p"] << ' ' << row["i"] << ' ' << row["dim_prev"] << ' ' << row["dim"] << ' '
         << row["max_rank_seen"] << ' ' << row["deficiency"] << '\n';
  }
  os << "verdict: " << (report.failed ? "FAIL" : report.anomalies ? "ANOMALIES" : "PASS") << '\n';
  return os.str();
}

}  // namespace gor
