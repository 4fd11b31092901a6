// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gor/apolarity.hpp"
#include "gor/enumerate.hpp"
#include "gor/kernels.hpp"
#include "gor/seqcomb.hpp"
#include "gor/verify.hpp"

namespace {

using namespace gor;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

// Every symmetric vector (1, c, h_2, ..., c, 1) of socle degree e with the
// free half bounded by the full-ring dimensions.
void for_each_symmetric(int c, int e, const std::function<void(const HVector&)>& visit) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(e) + 1, 0);
  h[0] = h[static_cast<std::size_t>(e)] = 1;
  if (e >= 2) h[1] = h[static_cast<std::size_t>(e - 1)] = c;
  std::function<void(int)> rec = [&](int i) {
    if (i > e / 2) {
      if (e == 1 && c != 1) return;
      visit(HVector(h));
      return;
    }
    for (std::int64_t v = 1; v <= monomial_count(c, i); ++v) {
      h[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(e - i)] = v;
      rec(i + 1);
    }
  };
  rec(2);
}

Outcome ac1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  o.require(green_reduce(33, 4) == 13, "33_<4> != 13");
  o.require(green_reduce(13, 4) == 3, "13_<4> != 3");
  o.require(green_reduce(24, 4) == 8, "24_<4> != 8");
  o.require(green_reduce(8, 4) == 1, "8_<4> != 1");
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
  o.require(us < 1000, "took " + std::to_string(us) + " us");
  o.note = o.ok ? "chain 33->13->3 and 24->8->1 in " + std::to_string(us) + " us" : o.note;
  return o;
}

Outcome ac2() {
  Outcome o;
  for (std::int64_t s = 3; s <= 50; ++s) {
    const BigInt rhs = binomial(s + 2, s) + binomial(s + 1, s - 1) + binomial(s, s - 2) + binomial(s - 1, s - 3) - 1;
    o.require(rhs == 2 * s * s + 1, "2s^2+1 identity at s=" + std::to_string(s));
  }
  for (std::int64_t j = 1; j <= 50; ++j) {
    const BigInt rhs = binomial(j + 1, j) + binomial(j, j - 1) + binomial(j - 1, j - 2);
    o.require(rhs == 3 * j, "3j identity at j=" + std::to_string(j));
  }
  if (o.ok) o.note = "s = 3..50 and j = 1..50";
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (int i = 1; i <= 12; ++i) {
    for (std::int64_t n = 0; n <= 1000000; ++n) {
      const auto e = expand(n, i);
      if (e.evaluate() != n || !e.well_formed() || !(expand(e.evaluate(), i) == e)) ok = false;
    }
  }
  o.require(ok, "round trip broke");
  const auto s = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok) o.note = "n <= 10^6, i <= 12 in " + std::to_string(s) + " s";
  return o;
}

Outcome ac4() {
  Outcome o;
  const HVector stanley{1, 13, 12, 13, 1};
  o.require(!is_unimodal(stanley), "(1,13,12,13,1) reported unimodal");
  o.require(!is_si_sequence(stanley), "(1,13,12,13,1) reported SI");
  std::size_t checked = 0;
  for (int c = 1; c <= 4; ++c)
    for (int e = 1; e <= 8; ++e)
      for_each_symmetric(c, e, [&](const HVector& h) {
        ++checked;
        if (is_si_sequence(h)) o.require(is_unimodal(h), "SI but not unimodal: " + h.to_string());
      });
  if (o.ok) o.note = std::to_string(checked) + " symmetric vectors";
  return o;
}

Outcome ac5() {
  Outcome o;
  o.require(count_si(4, 3) == 1, "count_si(4,3)");
  o.require(count_si(4, 4) == 7, "count_si(4,4)");
  std::size_t total = 0;
  for (int c = 1; c <= 4; ++c)
    for (int e = 1; e <= 8; ++e) {
      std::vector<HVector> brute;
      for_each_symmetric(c, e, [&](const HVector& h) {
        if (is_si_sequence(h)) brute.push_back(h);
      });
      std::sort(brute.begin(), brute.end());
      auto listed = enumerate_si(c, e);
      o.require(BigInt(listed.size()) == count_si(c, e), "count mismatch at " + std::to_string(c) + "," + std::to_string(e));
      std::sort(listed.begin(), listed.end());
      o.require(listed == brute, "enumerator differs from brute force at codim " + std::to_string(c) + ", e " + std::to_string(e));
      total += brute.size();
    }
  if (o.ok) o.note = std::to_string(total) + " SI-sequences match brute force";
  return o;
}

Outcome ac6() {
  Outcome o;
  const PrimeField f;
  for (int e = 1; e <= 8; ++e) {
    const auto h = hvector_of_dual(DualForm::monomial({e, 0, 0, 0}), f);
    o.require(h == HVector(std::vector<std::int64_t>(static_cast<std::size_t>(e) + 1, 1)), "x1^e");
  }
  o.require(hvector_of_dual(DualForm::monomial({1, 1, 1, 1}), f) == HVector({1, 4, 6, 4, 1}), "x1x2x3x4");
  std::size_t cases = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (int s : {1, 2, 4, 7, 10, 15, 20}) {
      Rng rng(seed * 1000 + static_cast<std::uint64_t>(s));
      const auto form = random_power_sum(rng, 4, 6, s);
      HVector first;
      for (std::uint64_t p : {PrimeField::kDefaultPrime, PrimeField::kSecondPrime}) {
        const auto h = hvector_of_dual(form, PrimeField(p));
        for (int i = 0; i <= 6; ++i)
          o.require(h.value(i) == std::min<std::int64_t>({monomial_count(4, i), monomial_count(4, 6 - i), s}),
                    "power sum s=" + std::to_string(s) + " seed=" + std::to_string(seed));
        if (first.size() == 0) first = h;
        o.require(first == h, "cross-prime disagreement");
      }
      ++cases;
    }
  }
  if (o.ok) o.note = std::to_string(cases) + " power sums x 2 primes";
  return o;
}

Outcome ac7() {
  Outcome o;
  SuiteConfig cfg;
  cfg.seed = 1;
  cfg.trials = 100;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = check_prop_2_5(cfg);
  const auto s = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0).count();
  o.require(r.primes.size() >= 2, "fewer than two primes");
  o.require(r.failed == 0, std::to_string(r.failed) + " mismatches");
  for (const auto& [name, b] : r.details.at("branches").items()) {
    const auto pass = b.at("pass").get<std::size_t>();
    const auto anom = b.at("anomaly").get<std::size_t>();
    o.require(pass + anom >= 100, name + " has fewer than 100 instances");
    o.require(anom * 100 < pass + anom, name + " anomaly rate >= 1%");
  }
  o.require(s <= 600, "runtime over 10 minutes");
  if (o.ok) o.note = std::to_string(r.passed) + " instances over 4 branches, " + std::to_string(r.anomalies) + " anomalies, " + std::to_string(s) + " s";
  return o;
}

Outcome ac8() {
  Outcome o;
  SuiteConfig cfg;
  cfg.trials = 120;
  const auto r = check_lemma_2_4(cfg);
  o.require(r.failed == 0, std::to_string(r.failed) + " identity failures");
  o.require(r.passed >= 100, "only " + std::to_string(r.passed) + " instances checked");
  if (o.ok) o.note = std::to_string(r.passed) + " instances, " + std::to_string(r.skipped) + " degenerate d = t skipped";
  return o;
}

Outcome ac9() {
  Outcome o;
  SuiteConfig cfg;
  cfg.trials = 200;
  const auto r = check_restriction_tables(cfg);
  o.require(r.failed == 0, std::to_string(r.failed) + " tables violate an identity");
  o.require(r.passed == cfg.trials, "not every table checked");
  if (o.ok) o.note = std::to_string(r.passed) + " Gorenstein tables";
  return o;
}

Outcome ac10() {
  Outcome o;
  SuiteConfig cfg;
  cfg.trials = 5;
  const auto r = wlp_probe(0, cfg);
  o.require(r.failed == 0, "maximal rank observed");
  std::size_t rows = 0;
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t i = p; i <= 2 * p - 2; ++i) {
      bool seen = false;
      for (const auto& row : r.details.at("deficiency_table")) {
        if (row.at("p").get<std::int64_t>() != p || row.at("i").get<std::int64_t>() != i) continue;
        seen = true;
        ++rows;
        o.require(row.at("deficiency").get<std::int64_t>() > 0, "no deficiency at p=" + std::to_string(p));
        if (p == 5 && i == 5) o.require(row.at("max_rank_seen").get<std::int64_t>() <= 14, "p=5, i=5 rank > 14");
      }
      o.require(seen, "missing degree p=" + std::to_string(p) + " i=" + std::to_string(i));
    }
  }
  if (o.ok) o.note = std::to_string(rows) + " degrees deficient for p in {2,3,5,7}";
  return o;
}

Outcome ac11() {
  Outcome o;
  SuiteConfig cfg;
  cfg.seed = 42;
  cfg.trials = 1000;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = theorem_forward_scan(cfg);
  const auto s = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0).count();
  o.require(r.failed == 0, std::to_string(r.failed) + " violations");
  o.require(r.passed >= 1000, "only " + std::to_string(r.passed) + " in-scope samples");
  o.require(!to_json(r).empty(), "no report");
  o.require(s <= 1800, "runtime over 30 minutes");
  if (o.ok)
    o.note = std::to_string(r.passed) + " in-scope samples, " + std::to_string(r.details.at("distribution").size()) +
             " distinct h-vectors, " + std::to_string(s) + " s";
  return o;
}

Outcome ac12() {
  Outcome o;
  std::vector<HVector> targets = enumerate_si(4, 4);
  const auto e3 = enumerate_si(4, 3);
  targets.insert(targets.end(), e3.begin(), e3.end());
  o.require(targets.size() == 8, "expected 8 targets");
  std::size_t trials = 0;
  for (const auto& t : targets) {
    const auto res = realization_search(t, RealizationConfig{});
    o.require(res.found(), "NOT_FOUND " + t.to_string());
    if (!res.found()) continue;
    o.require(res.primes_checked.size() >= 2, "witness not re-verified");
    for (std::uint64_t p : res.primes_checked)
      o.require(hvector_of_dual(*res.witness, PrimeField(p)) == t, "witness mismatch " + t.to_string());
    trials += res.trials_used;
  }
  RealizationConfig stanley;
  stanley.experimental = true;
  const auto st = realization_search(HVector({1, 13, 12, 13, 1}), stanley);
  if (o.ok)
    o.note = "8 targets in " + std::to_string(trials) + " trials; Stanley stretch " +
             (st.found() ? "found" : "NOT_FOUND");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"green chain", ac1},      {"binomial identities", ac2}, {"expansion round trip", ac3},
      {"sequence predicates", ac4}, {"enumeration", ac5},     {"apolarity sanity", ac6},
      {"prop25 suite", ac7},     {"lemma24 identity", ac8},    {"restriction tables", ac9},
      {"wlp failure", ac10},     {"forward scan", ac11},       {"realization", ac12},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::printf("[%s] AC%zu %s: %s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first, o.note.c_str());
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
