#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gor/apolarity.hpp"
#include "gor/ideal.hpp"

namespace gor {

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::vector<std::uint64_t> primes{PrimeField::kDefaultPrime, PrimeField::kSecondPrime};
};

struct Finding {
  std::string kind;  // failure | anomaly | skip
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string detail;
  nlohmann::json data;
};

struct Report {
  std::string check;
  std::string statement;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t anomalies = 0;
  std::size_t skipped = 0;
  std::vector<Finding> witnesses;  // ordered by trial
  nlohmann::json details = nlohmann::json::object();

  // 0 all pass, 1 a failure, 2 anomalies only.
  int exit_code() const { return failed ? 1 : anomalies ? 2 : 0; }
  void add(Finding f);
};

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolName = "gorcheck";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json to_json(const Report& report);
// Human-readable summary, one line per count plus witnesses.
std::string to_text(const Report& report);

// Rows of the restriction diagrams, all indexed by degree i:
//   h_i = h_{R/I}(i), b_i = h_{R/(I:L1)}(i-1), c_i = h_{R/(I,L1)}(i),
//   d_i = h_{S/(J:L2)}(i-1), f_i = h_{R/(I,L1,L2)}(i),
// where S = R/(L1) and J is the image of I in S. Vectors run over 0..e+1.
struct RestrictionTable {
  std::vector<std::int64_t> h, b, c, d, f;
  GradedPoly l1;
  GradedPoly l2;
  std::uint64_t seed = 0;

  int socle_degree() const { return static_cast<int>(h.size()) - 2; }
  // Derived views at the middle degree (even e only; -1 otherwise).
  std::int64_t m() const;
  std::int64_t n() const;

  // Every violated identity, as text; empty when the table is consistent.
  std::vector<std::string> violations(bool gorenstein) const;
  nlohmann::json to_json() const;
};

// `ideal` must be artinian (its top component full). Needs r >= 3.
RestrictionTable restriction_table(const GradedIdeal& ideal, std::uint64_t seed);
RestrictionTable restriction_table(const IdealPresentation& ideal, std::uint64_t seed);

Report check_prop_2_5(const SuiteConfig& config);
Report check_lemma_2_4(const SuiteConfig& config);
Report wlp_probe(std::uint64_t p, const SuiteConfig& config);
Report probe_multi_generator(const SuiteConfig& config);
Report theorem_forward_scan(const SuiteConfig& config, int e_min = 2, int e_max = 10);
Report check_restriction_tables(const SuiteConfig& config);

// Random nonzero linear form over the field.
GradedPoly random_linear_form(Rng& rng, const PrimeField& field, int r);
// Random form with coefficients drawn as integers in [-2^30, 2^30], so the
// same stream yields the same integer form over every prime.
GradedPoly random_form(Rng& rng, const PrimeField& field, int r, int d);

}  // namespace gor
