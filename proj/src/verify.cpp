#include "gor/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gor/errors.hpp"
#include "gor/gcd.hpp"

namespace gor {

namespace {

constexpr int kVars = 4;
constexpr std::int64_t kCoeffRange = std::int64_t{1} << 30;
constexpr int kRedraws = 3;

struct Outcome {
  std::string kind = "pass";  // pass | failure | anomaly | skip
  std::string detail;
  nlohmann::json data;
};

Outcome outcome(std::string kind, std::string detail, nlohmann::json data = {}) {
  return {std::move(kind), std::move(detail), std::move(data)};
}

// Runs trial(k) for k in [0, n) across workers; results stay in index order.
std::vector<Outcome> run_trials(std::size_t n, const std::function<Outcome(std::size_t)>& trial) {
  std::vector<Outcome> out(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      out[i] = trial(i);
    } catch (const std::exception& ex) {
      out[i] = outcome("failure", std::string("exception: ") + ex.what());
    }
  }
  return out;
}

void merge(Report& report, std::vector<Outcome> outcomes, std::size_t first_trial) {
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    auto& o = outcomes[k];
    const std::size_t t = first_trial + k;
    report.add({o.kind, t, derive_seed(report.seed, t), std::move(o.detail), std::move(o.data)});
  }
}

Report make_report(std::string check, std::string statement, const SuiteConfig& config) {
  Report r;
  r.check = std::move(check);
  r.statement = std::move(statement);
  r.seed = config.seed;
  r.primes = config.primes;
  return r;
}

std::vector<PrimeField> fields_of(const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) throw Error("at least one prime is required");
  std::vector<PrimeField> out;
  for (auto p : primes) {
    if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
    out.emplace_back(p);
  }
  return out;
}

nlohmann::json seq_json(const std::vector<std::int64_t>& v) { return nlohmann::json(v); }

// (F)_d: all multiples of f in degree d.
Matrix multiples(const GradedPoly& f, int d) {
  const int shift = d - f.degree();
  const auto n = MonomialBasis::get(f.vars(), d).size();
  Matrix rows(0, n);
  if (shift < 0) return rows;
  const auto& mb = MonomialBasis::get(f.vars(), shift);
  for (std::size_t i = 0; i < mb.size(); ++i)
    rows.append_row(multiply(GradedPoly::monomial(f.field(), mb.exponents(i)), f).coeffs());
  return rows;
}

bool in_span(const Matrix& rows, const GradedPoly& g) {
  DegreeSpan s(g.field(), g.vars(), g.degree(), rows);
  return s.contains(g);
}

Matrix stack(Matrix base, std::initializer_list<const GradedPoly*> polys) {
  for (auto* p : polys) base.append_row(p->coeffs());
  return base;
}

// dim [R / (J, L1, L2)]_b for the forms of `gens`, restricting twice.
std::int64_t residual_dimension(const PrimeField& field, const std::vector<GradedPoly>& gens, int b, Rng& rng) {
  const int r = gens.front().vars();
  const IdealPresentation j(field, r, gens);
  const auto l1 = random_linear_form(rng, field, r);
  const LinearRestriction first(l1);
  GradedPoly l2bar(field, r - 1, 1);
  while (l2bar.is_zero()) l2bar = first.apply(random_linear_form(rng, field, r));
  const auto jj = restrict(restrict(j, l1), l2bar);
  return static_cast<std::int64_t>(MonomialBasis::get(r - 2, b).size() - degree_span(jj, b).dim());
}

}  // namespace

void Report::add(Finding f) {
  if (f.kind == "pass") {
    ++passed;
  } else {
    if (f.kind == "failure") ++failed;
    if (f.kind == "anomaly") ++anomalies;
    if (f.kind == "skip") ++skipped;
    witnesses.push_back(std::move(f));
  }
  ++trials;
}

GradedPoly random_form(Rng& rng, const PrimeField& field, int r, int d) {
  GradedPoly f(field, r, d);
  for (auto& c : f.coeffs()) c = field.from_int(rng.uniform(-kCoeffRange, kCoeffRange));
  return f;
}

GradedPoly random_linear_form(Rng& rng, const PrimeField& field, int r) {
  for (;;) {
    auto l = random_form(rng, field, r, 1);
    if (!l.is_zero()) return l;
  }
}

std::int64_t RestrictionTable::m() const {
  const int e = socle_degree();
  return e % 2 == 0 ? d[static_cast<std::size_t>(e / 2)] : -1;
}

std::int64_t RestrictionTable::n() const {
  const int e = socle_degree();
  return e % 2 == 0 ? b[static_cast<std::size_t>(e / 2)] : -1;
}

std::vector<std::string> RestrictionTable::violations(bool gorenstein) const {
  std::vector<std::string> out;
  const int e = socle_degree();
  auto at = [](const std::vector<std::int64_t>& v, int i) { return v[static_cast<std::size_t>(i)]; };
  auto fail = [&](const std::string& what, int i) { out.push_back(what + " at i=" + std::to_string(i)); };
  for (int i = 0; i <= e + 1; ++i) {
    if (at(c, i) != at(h, i) - at(b, i)) fail("c_i != h_i - b_i", i);
    if (at(f, i) != at(c, i) - at(d, i)) fail("f_i != c_i - d_i", i);
    if (i == 0) continue;
    if (at(b, i) > at(h, i - 1)) fail("b_i > h_{i-1}", i);
    if (at(b, i) > at(h, i)) fail("b_i > h_i", i);
    if (at(d, i) > at(c, i - 1)) fail("d_i > c_{i-1}", i);
    if (at(c, i) > at(c, i - 1) && at(f, i) <= 0) fail("c_i > c_{i-1} but f_i = 0", i);
  }
  if (gorenstein) {
    for (int i = 0; i <= e; ++i)
      if (at(h, i) != at(h, e - i)) fail("h not symmetric", i);
    for (int i = 1; i <= e; ++i)
      if (at(b, i) != at(b, e + 1 - i)) fail("b_i != b_{e+1-i}", i);
    HVector hv(std::vector<std::int64_t>(h.begin(), h.begin() + e + 1));
    if (hv.value(1) <= 4 && hv.value(4) <= 33 && !is_unimodal(hv))
      out.push_back("non-unimodal configuration with h_1 <= 4 and h_4 <= 33");
  }
  return out;
}

nlohmann::json RestrictionTable::to_json() const {
  return {{"h", seq_json(h)}, {"b", seq_json(b)}, {"c", seq_json(c)}, {"d", seq_json(d)},
          {"f", seq_json(f)}, {"L1", format_poly(l1)}, {"L2", format_poly(l2)}, {"seed", seed},
          {"m", m()}, {"n", n()}};
}

RestrictionTable restriction_table(const GradedIdeal& ideal, std::uint64_t seed) {
  if (!ideal.artinian()) throw Inconclusive("restriction tables need an artinian quotient");
  if (ideal.vars() < 3) throw DimensionError("restriction tables need at least three variables");
  const auto& field = ideal.field();
  const int r = ideal.vars();
  const auto hs = ideal.hilbert(ideal.top_degree());
  int e = 0;
  for (int i = 0; i < static_cast<int>(hs.size()); ++i)
    if (hs[static_cast<std::size_t>(i)] > 0) e = i;
  const int top = e + 1;

  Rng rng(seed);
  const auto l1 = random_linear_form(rng, field, r);
  const LinearRestriction first(l1);
  GradedPoly l2 = random_linear_form(rng, field, r);
  GradedPoly l2bar = first.apply(l2);
  while (l2bar.is_zero()) {
    l2 = random_linear_form(rng, field, r);
    l2bar = first.apply(l2);
  }

  auto shifted = [top](const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> out{0};
    for (int i = 0; i < top; ++i) out.push_back(v[static_cast<std::size_t>(i)]);
    return out;
  };
  const auto j = ideal.restrict(l1);
  RestrictionTable t{ideal.hilbert(top),
                     shifted(ideal.colon(l1).hilbert(top)),
                     j.hilbert(top),
                     shifted(j.colon(l2bar).hilbert(top)),
                     j.restrict(l2bar).hilbert(top),
                     l1,
                     l2,
                     seed};
  return t;
}

RestrictionTable restriction_table(const IdealPresentation& ideal, std::uint64_t seed) {
  const int bound = std::max(ideal.degree_sum(), ideal.max_generator_degree()) + 1;
  const auto gi = GradedIdeal::generate(ideal, bound);
  if (!gi.artinian()) throw Inconclusive("R/I is not artinian by degree " + std::to_string(bound));
  return restriction_table(gi, seed);
}

Report check_prop_2_5(const SuiteConfig& config) {
  auto report = make_report(
      "prop25",
      "For J = (F, G1, G2) minimally generated in k[x1..x4], deg F = a >= 2, deg G_i = b >= a, and "
      "generic L1, L2: dim [R/(J,L1,L2)]_b = a-1 iff F, G1, G2 have a GCD of degree a-1, otherwise a-2.",
      config);
  const auto fields = fields_of(config.primes);
  static const char* kBranches[] = {"gcd-degree-a-1", "gcd-degree-le-a-2", "regular-sequence", "codim-2-coprime"};

  auto instance = [&](std::size_t k) -> Outcome {
    const int branch = static_cast<int>(k % 4);
    const std::uint64_t seed = derive_seed(config.seed, k);
    Rng pick(seed);
    const int a = static_cast<int>(branch == 1 ? pick.uniform(3, 6) : pick.uniform(2, 6));
    const int b = static_cast<int>(pick.uniform(a, 8));
    const int k_gcd = branch == 0 ? a - 1 : branch == 1 ? static_cast<int>(pick.uniform(1, a - 2)) : 0;
    nlohmann::json data{{"branch", kBranches[branch]}, {"a", a}, {"b", b}, {"manufactured_gcd_degree", k_gcd}};
    std::vector<std::int64_t> dims;
    for (const auto& field : fields) {
      Rng rng(derive_seed(seed, 1));
      std::vector<GradedPoly> g;
      if (branch <= 1) {
        const auto dpoly = random_form(rng, field, kVars, k_gcd);
        for (int deg : {a, b, b}) g.push_back(multiply(dpoly, random_form(rng, field, kVars, deg - k_gcd)));
      } else if (branch == 2) {
        for (int deg : {a, b, b}) g.push_back(random_form(rng, field, kVars, deg));
      } else {
        const auto x1 = GradedPoly::variable(field, kVars, 0);
        const auto x2 = GradedPoly::variable(field, kVars, 1);
        for (int deg : {a, b, b})
          g.push_back(multiply(x1, random_form(rng, field, kVars, deg - 1)) +
                      multiply(x2, random_form(rng, field, kVars, deg - 1)));
      }
      const auto& f = g[0];
      const auto fb = multiples(f, b);
      const bool minimal = !in_span(stack(fb, {&g[2]}), g[1]) && !in_span(stack(fb, {&g[1]}), g[2]) &&
                           (a != b || !in_span(stack(Matrix(0, f.coeffs().size()), {&g[1], &g[2]}), f));
      if (!minimal) return outcome("skip", "not minimally generated", data);
      const int gdeg = span_gcd(g).degree();
      data["gcd_degree"] = gdeg;
      if (gdeg != k_gcd) return outcome("skip", "draw landed outside its branch (gcd degree " + std::to_string(gdeg) + ")", data);
      const std::int64_t expected = gdeg == a - 1 ? a - 1 : a - 2;
      data["expected"] = expected;
      Rng lrng(derive_seed(seed, 2));
      const auto dim = residual_dimension(field, g, b, lrng);
      dims.push_back(dim);
      if (dim != expected) {
        data["dimension"] = dim;
        data["prime"] = field.modulus();
        int good = 0;
        for (int j = 0; j < kRedraws; ++j) {
          Rng redraw(derive_seed(seed, 3 + static_cast<std::uint64_t>(j)));
          good += residual_dimension(field, g, b, redraw) == expected;
        }
        if (good == kRedraws) return outcome("anomaly", "non-generic L1, L2; fresh draws agree", data);
        return outcome("failure", "rank side disagrees with the GCD criterion", data);
      }
    }
    data["dimensions"] = dims;
    return outcome("pass", "", data);
  };

  auto outs = run_trials(config.trials * 4, instance);
  nlohmann::json per_branch = nlohmann::json::object();
  for (const char* br : kBranches) per_branch[br] = {{"pass", 0}, {"skip", 0}, {"anomaly", 0}, {"failure", 0}};
  for (std::size_t k = 0; k < outs.size(); ++k) {
    auto& entry = per_branch[kBranches[k % 4]][outs[k].kind];
    entry = entry.get<int>() + 1;
  }
  merge(report, std::move(outs), 0);
  report.details["branches"] = per_branch;
  report.details["instances_per_branch"] = config.trials;
  return report;
}

Report check_lemma_2_4(const SuiteConfig& config) {
  auto report = make_report(
      "lemma24",
      "If I_t has a GCD F of degree d > 0 and B = R/(I:F), then for i <= t: "
      "h_B(i-d) = h_A(i) - [C(i+r-1,r-1) - C(i-d+r-1,r-1)]; non-decreasing h_B up to t-d transfers to h_A up to t.",
      config);
  const auto fields = fields_of(config.primes);

  auto instance = [&](std::size_t k) -> Outcome {
    const std::uint64_t seed = derive_seed(config.seed, k);
    Rng pick(seed);
    const int d = 1 + static_cast<int>(k % 3);
    // One instance in ten exercises the degenerate d = t case.
    const int t = k % 10 == 9 ? d : static_cast<int>(pick.uniform(d + 1, 8));
    const int ngens = static_cast<int>(pick.uniform(2, 3));
    nlohmann::json data{{"d", d}, {"t", t}};
    if (t == d) return outcome("skip", "d = t: I_t is spanned by D, so D lies in I and the range is vacuous", data);
    std::vector<int> degs;
    for (int j = 0; j < ngens; ++j) degs.push_back(static_cast<int>(pick.uniform(1, t - d)));
    data["cofactor_degrees"] = degs;
    for (const auto& field : fields) {
      Rng rng(derive_seed(seed, 1));
      const auto dpoly = random_form(rng, field, kVars, d);
      std::vector<GradedPoly> gens;
      for (int deg : degs) gens.push_back(multiply(dpoly, random_form(rng, field, kVars, deg)));
      for (int j = 0; j < kVars; ++j) {
        std::vector<int> ex(kVars, 0);
        ex[static_cast<std::size_t>(j)] = t + 1;
        gens.push_back(GradedPoly::monomial(field, ex));
      }
      const IdealPresentation ideal(field, kVars, gens);
      const auto gi = GradedIdeal::generate(ideal, t);
      if (gi.component(d).contains(dpoly)) return outcome("skip", "D lies in I", data);
      const auto g = span_gcd(gi.component(t));
      if (g.degree() != d || !(g == dpoly.monic()))
        return outcome("skip", "manufactured GCD is not exact (degree " + std::to_string(g.degree()) + ")", data);
      const auto ha = gi.hilbert(t);
      std::vector<std::int64_t> hb;
      for (int j = 0; j <= t - d; ++j)
        hb.push_back(static_cast<std::int64_t>(gi.colon_component(dpoly, j).codim()));
      for (int i = 0; i <= t; ++i) {
        const std::int64_t lhs = i - d >= 0 ? hb[static_cast<std::size_t>(i - d)] : 0;
        const std::int64_t rhs = ha[static_cast<std::size_t>(i)] - (monomial_count(kVars, i) - monomial_count(kVars, i - d));
        if (lhs != rhs) {
          data["h_A"] = ha;
          data["h_B"] = hb;
          data["degree"] = i;
          data["prime"] = field.modulus();
          return outcome("failure", "identity fails in degree " + std::to_string(i), data);
        }
      }
      bool b_nondecreasing = true;
      for (int j = 1; j <= t - d; ++j) b_nondecreasing = b_nondecreasing && hb[static_cast<std::size_t>(j)] >= hb[static_cast<std::size_t>(j - 1)];
      if (b_nondecreasing) {
        for (int i = 1; i <= t; ++i) {
          if (ha[static_cast<std::size_t>(i)] < ha[static_cast<std::size_t>(i - 1)]) {
            data["h_A"] = ha;
            data["h_B"] = hb;
            return outcome("failure", "non-decreasing h_B does not transfer to h_A", data);
          }
        }
      }
      data["h_A"] = ha;
      data["h_B"] = hb;
      data["transfer_checked"] = b_nondecreasing;
    }
    return outcome("pass", "", data);
  };

  auto outs = run_trials(config.trials, instance);
  std::size_t transfers = 0;
  for (const auto& o : outs) transfers += o.kind == "pass" && o.data.value("transfer_checked", false);
  merge(report, std::move(outs), 0);
  report.details["transfer_hypothesis_met"] = transfers;
  return report;
}

Report wlp_probe(std::uint64_t p, const SuiteConfig& config) {
  auto report = make_report(
      "wlp",
      "In characteristic p, A = k[x1,x2,x3]/(x1^p,x2^p,x3^p) fails maximal rank for x L : A_{i-1} -> A_i "
      "for every i = p..2p-2.",
      config);
  std::vector<std::uint64_t> ps = p ? std::vector<std::uint64_t>{p} : std::vector<std::uint64_t>{2, 3, 5, 7};
  report.primes = ps;
  const std::size_t draws = std::max<std::size_t>(1, std::min<std::size_t>(config.trials, 20));
  nlohmann::json table = nlohmann::json::array();
  std::size_t trial = 0;
  for (auto q : ps) {
    if (!is_prime(q)) throw Error(std::to_string(q) + " is not prime");
    const PrimeField field(q);
    const int pi = static_cast<int>(q);
    std::vector<GradedPoly> gens;
    for (int j = 0; j < 3; ++j) {
      std::vector<int> ex(3, 0);
      ex[static_cast<std::size_t>(j)] = pi;
      gens.push_back(GradedPoly::monomial(field, ex));
    }
    const auto gi = GradedIdeal::generate(IdealPresentation(field, 3, gens), 2 * pi - 2);
    for (int i = pi; i <= 2 * pi - 2; ++i) {
      const auto prev = static_cast<std::int64_t>(gi.component(i - 1).codim());
      const auto cur = static_cast<std::int64_t>(gi.component(i).codim());
      const auto ii = gi.component(i);
      std::int64_t worst = 0;
      for (std::size_t k = 0; k < draws; ++k, ++trial) {
        const std::uint64_t seed = derive_seed(config.seed, trial);
        Rng rng(seed);
        const auto l = random_linear_form(rng, field, 3);
        Matrix rows = ii.basis();
        const auto lm = multiples(l, i);
        for (std::size_t row = 0; row < lm.rows(); ++row) rows.append_row(lm.row(row));
        const auto rk = static_cast<std::int64_t>(rank(std::move(rows), field)) - static_cast<std::int64_t>(ii.dim());
        worst = std::max(worst, rk);
        nlohmann::json data{{"p", q}, {"i", i}, {"L", format_poly(l)}, {"rank", rk}, {"dim_prev", prev}, {"dim", cur}};
        if (rk >= std::min(prev, cur)) {
          report.add({"failure", trial, seed, "multiplication map has maximal rank", data});
        } else {
          report.add({"pass", trial, seed, "", data});
        }
      }
      table.push_back({{"p", q}, {"i", i}, {"dim_prev", prev}, {"dim", cur}, {"max_rank_seen", worst},
                       {"deficiency", std::min(prev, cur) - worst}});
    }
  }
  report.details["deficiency_table"] = table;
  report.details["draws_per_degree"] = draws;
  return report;
}

Report probe_multi_generator(const SuiteConfig& config) {
  auto report = make_report(
      "multi",
      "Exploratory: for F of degree a and m generic forms G_j of degree b >= a in k[x1..x4], "
      "compare dim [R/(F,G_1..G_m,L1,L2)]_b with max{0, a-m}. Mismatches are findings, not failures.",
      config);
  const auto fields = fields_of(config.primes);
  auto instance = [&](std::size_t k) -> Outcome {
    const std::uint64_t seed = derive_seed(config.seed, k);
    Rng pick(seed);
    const int a = static_cast<int>(pick.uniform(2, 6));
    const int b = static_cast<int>(pick.uniform(a, 8));
    const int m = static_cast<int>(pick.uniform(1, a + 1));
    const std::int64_t expected = std::max(0, a - m);
    nlohmann::json data{{"a", a}, {"b", b}, {"m", m}, {"expected", expected}};
    for (const auto& field : fields) {
      Rng rng(derive_seed(seed, 1));
      std::vector<GradedPoly> g{random_form(rng, field, kVars, a)};
      for (int j = 0; j < m; ++j) g.push_back(random_form(rng, field, kVars, b));
      Rng lrng(derive_seed(seed, 2));
      const auto dim = residual_dimension(field, g, b, lrng);
      if (dim != expected) {
        data["dimension"] = dim;
        data["prime"] = field.modulus();
        int good = 0;
        for (int j = 0; j < kRedraws; ++j) {
          Rng redraw(derive_seed(seed, 3 + static_cast<std::uint64_t>(j)));
          good += residual_dimension(field, g, b, redraw) == expected;
        }
        return outcome("anomaly", good == kRedraws ? "non-generic L1, L2; fresh draws agree" : "formula mismatch", data);
      }
    }
    return outcome("pass", "", data);
  };
  merge(report, run_trials(config.trials, instance), 0);
  return report;
}

Report theorem_forward_scan(const SuiteConfig& config, int e_min, int e_max) {
  auto report = make_report(
      "forward",
      "Gorenstein h-vectors with h_1 = 4 and h_4 <= 33 are SI-sequences, hence unimodal; "
      "if h_s <= 2s^2+1 for some s with s+1 < e/2, h is unimodal.",
      config);
  if (e_min < 1 || e_max < e_min) throw InvalidDegree("bad socle degree range");
  const auto fields = fields_of(config.primes);
  struct Sample {
    bool in_scope = false;
    std::string h;
    Outcome result;
  };
  auto sample = [&](std::size_t k) {
    Sample s;
    const std::uint64_t seed = derive_seed(config.seed, k);
    Rng rng(seed);
    const int e = static_cast<int>(rng.uniform(e_min, e_max));
    const auto form = sample_dual_form(rng, kVars, e);
    std::vector<HVector> hs;
    for (const auto& field : fields) hs.push_back(hvector_of_dual(form, field));
    const auto& h = hs.front();
    s.in_scope = h.value(1) == 4 && h.value(4) <= 33;
    s.h = h.to_string();
    if (!s.in_scope) return s;
    nlohmann::json data{{"strategy", form.strategy}, {"description", form.description}, {"e", e}, {"h", s.h},
                        {"witness", format_poly(form.materialize(fields.front()))}};
    for (std::size_t j = 0; j < hs.size(); ++j) {
      const auto& hj = hs[j];
      std::vector<std::string> bad;
      if (!is_symmetric(hj) || hj.value(0) != 1) bad.push_back("not symmetric");
      if (!is_o_sequence(hj)) bad.push_back("not an O-sequence");
      if (hj.value(1) == 4 && hj.value(4) <= 33) {
        if (!is_si_sequence(hj)) bad.push_back("not SI");
        if (!is_unimodal(hj)) bad.push_back("not unimodal");
      }
      for (int q = 1; 2 * (q + 1) < e; ++q)
        if (hj.value(q) <= 2 * q * q + 1 && !is_unimodal(hj)) bad.push_back("growth hypothesis holds but not unimodal");
      if (!bad.empty()) {
        data["prime"] = fields[j].modulus();
        data["h_at_prime"] = hj.to_string();
        std::string what;
        for (const auto& b : bad) what += (what.empty() ? "" : "; ") + b;
        s.result = outcome("failure", what, data);
        return s;
      }
    }
    for (std::size_t j = 1; j < hs.size(); ++j) {
      if (hs[j] != h) {
        data["h_second"] = hs[j].to_string();
        s.result = outcome("anomaly", "h-vector differs between primes", data);
        return s;
      }
    }
    return s;
  };

  const std::size_t cap = std::max<std::size_t>(config.trials * 50, 64);
  constexpr std::size_t kBatch = 256;
  std::size_t attempts = 0;
  std::size_t in_scope = 0;
  std::map<std::string, std::size_t> seen;
  while (in_scope < config.trials && attempts < cap) {
    const std::size_t n = std::min(kBatch, cap - attempts);
    std::vector<Sample> batch(n);
    const auto count = static_cast<std::int64_t>(n);
    const std::size_t base = attempts;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
      const auto i = static_cast<std::size_t>(k);
      try {
        batch[i] = sample(base + i);
      } catch (const std::exception& ex) {
        batch[i].in_scope = true;
        batch[i].result = outcome("failure", std::string("exception: ") + ex.what());
      }
    }
    for (std::size_t i = 0; i < n && in_scope < config.trials; ++i) {
      ++attempts;
      auto& s = batch[i];
      if (!s.in_scope) continue;
      ++in_scope;
      ++seen[s.h];
      const std::size_t t = base + i;
      report.add({s.result.kind, t, derive_seed(config.seed, t), std::move(s.result.detail), std::move(s.result.data)});
    }
  }
  report.details["attempts"] = attempts;
  report.details["in_scope"] = in_scope;
  report.details["socle_degree_range"] = {e_min, e_max};
  report.details["sampling"] = "1/4 monomial, 1/4 coordinate-subspace power sums, 1/4 generic power sums (s in 1..40), 1/4 dense";
  nlohmann::json dist = nlohmann::json::object();
  for (const auto& [h, c] : seen) dist[h] = c;
  report.details["distribution"] = dist;
  if (in_scope < config.trials) {
    report.add({"failure", attempts, 0, "attempt cap reached before enough in-scope samples", {}});
  }
  return report;
}

Report check_restriction_tables(const SuiteConfig& config) {
  auto report = make_report(
      "tables",
      "Restriction tables of Gorenstein quotients R/Ann(F): c = h - b, b_i <= min(h_{i-1}, h_i), f = c - d, "
      "d_i <= c_{i-1}, b_i = b_{e+1-i}, c_i > c_{i-1} => f_i > 0; (I:G) is Gorenstein of socle degree e - deg G; "
      "Green's bound c_i <= (h_i)_<i> for generic L1.",
      config);
  const auto fields = fields_of(config.primes);
  auto instance = [&](std::size_t k) -> Outcome {
    const std::uint64_t seed = derive_seed(config.seed, k);
    Rng pick(seed);
    const int e = static_cast<int>(pick.uniform(2, 8));
    const auto form = sample_dual_form(pick, kVars, e);
    nlohmann::json data{{"strategy", form.strategy}, {"description", form.description}, {"e", e}};
    for (const auto& field : fields) {
      const auto ideal = annihilator_ideal(form.materialize(field));
      const auto table = restriction_table(ideal, derive_seed(seed, 1));
      data["table"] = table.to_json();
      const auto bad = table.violations(true);
      if (!bad.empty()) {
        data["violations"] = bad;
        data["prime"] = field.modulus();
        return outcome("failure", bad.front(), data);
      }
      Rng grng(derive_seed(seed, 2));
      const int dg = static_cast<int>(grng.uniform(1, e));
      const auto g = random_form(grng, field, kVars, dg);
      if (!ideal.component(dg).contains(g)) {
        const auto colon = ideal.colon(g);
        const auto soc = colon.socle();
        const auto hc = colon.hilbert(colon.top_degree());
        std::int64_t total = 0;
        for (auto v : soc) total += v;
        int top = 0;
        for (int i = 0; i < static_cast<int>(hc.size()); ++i)
          if (hc[static_cast<std::size_t>(i)] > 0) top = i;
        if (total != 1 || top != e - dg) {
          data["colon_degree"] = dg;
          data["colon_socle"] = soc;
          data["prime"] = field.modulus();
          return outcome("failure", "(I:G) is not Gorenstein of socle degree e - deg G", data);
        }
      }
      for (int i = 1; i <= e; ++i) {
        const auto hi = table.h[static_cast<std::size_t>(i)];
        if (table.c[static_cast<std::size_t>(i)] > green_reduce(hi, i)) {
          data["degree"] = i;
          data["prime"] = field.modulus();
          return outcome("anomaly", "Green's bound fails for this L1", data);
        }
      }
    }
    return outcome("pass", "", data);
  };
  merge(report, run_trials(config.trials, instance), 0);
  return report;
}

}  // namespace gor
