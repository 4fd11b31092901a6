#include "gor/apolarity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <omp.h>

#include "gor/errors.hpp"

namespace gor {

namespace {

constexpr std::int64_t kCoeffRange = std::int64_t{1} << 30;

std::string exponent_string(std::span<const int> a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k]) continue;
    os << (first ? "" : "*") << 'x' << k + 1;
    if (a[k] > 1) os << '^' << a[k];
    first = false;
  }
  return first ? "1" : os.str();
}

}  // namespace

GradedPoly DualForm::materialize(const PrimeField& field) const {
  if (r < 1 || e < 0) throw DimensionError("dual form needs r >= 1 and e >= 0");
  GradedPoly f(field, r, e);
  const auto& basis = MonomialBasis::get(r, e);
  std::vector<Elem> pw(static_cast<std::size_t>(r) * static_cast<std::size_t>(e + 1));
  for (const auto& t : terms) {
    const Elem c = field.from_int(t.coeff);
    if (t.kind == DualTerm::Kind::kMonomial) {
      if (t.exponents.size() != static_cast<std::size_t>(r) ||
          std::accumulate(t.exponents.begin(), t.exponents.end(), 0) != e)
        throw DimensionError("dual term has the wrong shape");
      const auto idx = monomial_index(t.exponents);
      f[idx] = field.add(f[idx], c);
      continue;
    }
    if (t.linear.size() != static_cast<std::size_t>(r)) throw DimensionError("linear form has the wrong length");
    for (int k = 0; k < r; ++k) {
      const Elem l = field.from_int(t.linear[static_cast<std::size_t>(k)]);
      Elem acc = 1;
      for (int j = 0; j <= e; ++j) {
        pw[static_cast<std::size_t>(k * (e + 1) + j)] = acc;
        acc = field.mul(acc, l);
      }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto a = basis.exponents(i);
      Elem v = c;
      for (int k = 0; k < r && v; ++k) v = field.mul(v, pw[static_cast<std::size_t>(k * (e + 1) + a[static_cast<std::size_t>(k)])]);
      f[i] = field.add(f[i], v);
    }
  }
  return f;
}

DualForm DualForm::from_poly(const GradedPoly& f, std::string strategy) {
  DualForm out;
  out.r = f.vars();
  out.e = f.degree();
  out.strategy = std::move(strategy);
  const auto& basis = f.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!f[i]) continue;
    auto a = basis.exponents(i);
    out.terms.push_back({DualTerm::Kind::kMonomial, f.field().to_signed(f[i]), {a.begin(), a.end()}, {}});
  }
  out.description = format_poly(f);
  return out;
}

DualForm DualForm::monomial(std::vector<int> exponents) {
  DualForm out;
  out.r = static_cast<int>(exponents.size());
  out.e = std::accumulate(exponents.begin(), exponents.end(), 0);
  out.strategy = "monomial";
  out.description = exponent_string(exponents);
  out.terms.push_back({DualTerm::Kind::kMonomial, 1, std::move(exponents), {}});
  return out;
}

DualForm DualForm::power_sum(int e, const std::vector<std::vector<std::int64_t>>& linear_forms,
                             std::string strategy) {
  if (linear_forms.empty()) throw Error("power sum needs at least one linear form");
  DualForm out;
  out.r = static_cast<int>(linear_forms.front().size());
  out.e = e;
  out.strategy = std::move(strategy);
  out.description = "s=" + std::to_string(linear_forms.size());
  for (const auto& l : linear_forms) out.terms.push_back({DualTerm::Kind::kDividedPower, 1, {}, l});
  return out;
}

Matrix catalecticant(const GradedPoly& f, int i) {
  const int e = f.degree();
  const int r = f.vars();
  if (i < 0 || i > e) throw InvalidDegree("catalecticant degree out of range");
  const auto& rows = MonomialBasis::get(r, i);
  const auto& cols = MonomialBasis::get(r, e - i);
  Matrix m(rows.size(), cols.size());
  std::vector<int> sum(static_cast<std::size_t>(r));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    auto ea = rows.exponents(a);
    for (std::size_t b = 0; b < cols.size(); ++b) {
      auto eb = cols.exponents(b);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ea[k] + eb[k];
      m(a, b) = f[monomial_index(sum)];
    }
  }
  return m;
}

HVector hvector_of_dual(const GradedPoly& f) {
  if (f.is_zero()) throw Error("the zero form has no annihilator algebra");
  std::vector<std::int64_t> h;
  for (int i = 0; i <= f.degree(); ++i)
    h.push_back(static_cast<std::int64_t>(rank(catalecticant(f, i), f.field())));
  return HVector(std::move(h));
}

HVector hvector_of_dual(const DualForm& form, const PrimeField& field) {
  return hvector_of_dual(form.materialize(field));
}

DegreeSpan annihilator(const GradedPoly& f, int d) {
  if (d < 0 || d > f.degree() + 1) throw InvalidDegree("annihilator degree out of range");
  if (d == f.degree() + 1) return DegreeSpan::full(f.field(), f.vars(), d);
  return DegreeSpan(f.field(), f.vars(), d, left_kernel(catalecticant(f, d), f.field()));
}

GradedIdeal annihilator_ideal(const GradedPoly& f) {
  if (f.is_zero()) throw Error("the zero form has no annihilator algebra");
  std::vector<DegreeSpan> comps;
  for (int d = 0; d <= f.degree() + 1; ++d) comps.push_back(annihilator(f, d));
  return GradedIdeal(f.field(), f.vars(), std::move(comps));
}

IdealPresentation annihilator_presentation(const GradedPoly& f) {
  const auto ideal = annihilator_ideal(f);
  const int r = f.vars();
  std::vector<GradedPoly> gens;
  for (int d = 1; d <= ideal.top_degree(); ++d) {
    const auto prev = ideal.component(d - 1);
    const auto& pb = MonomialBasis::get(r, d - 1);
    const auto n = MonomialBasis::get(r, d).size();
    Matrix rows(0, n);
    std::vector<Elem> buf(n);
    for (std::size_t i = 0; i < prev.dim(); ++i) {
      auto src = prev.basis().row(i);
      for (int j = 0; j < r; ++j) {
        std::fill(buf.begin(), buf.end(), 0);
        for (std::size_t c = 0; c < src.size(); ++c)
          if (src[c]) buf[pb.times_variable(c, j)] = src[c];
        rows.append_row(buf);
      }
    }
    DegreeSpan lower(f.field(), r, d, std::move(rows));
    for (auto& g : ideal.component(d).basis_polys()) {
      if (lower.contains(g)) continue;
      lower = lower.with({g});
      gens.push_back(std::move(g));
    }
  }
  return IdealPresentation(f.field(), r, std::move(gens));
}

std::vector<std::int64_t> random_linear(Rng& rng, int r) {
  std::vector<std::int64_t> l(static_cast<std::size_t>(r));
  for (auto& c : l) c = rng.uniform(-kCoeffRange, kCoeffRange);
  return l;
}

DualForm random_power_sum(Rng& rng, int r, int e, int s) {
  std::vector<std::vector<std::int64_t>> forms;
  for (int j = 0; j < s; ++j) forms.push_back(random_linear(rng, r));
  return DualForm::power_sum(e, forms);
}

DualForm random_dense(Rng& rng, int r, int e) {
  DualForm out;
  out.r = r;
  out.e = e;
  out.strategy = "random";
  out.description = "dense";
  const auto& basis = MonomialBasis::get(r, e);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto a = basis.exponents(i);
    out.terms.push_back({DualTerm::Kind::kMonomial, rng.uniform(-kCoeffRange, kCoeffRange), {a.begin(), a.end()}, {}});
  }
  return out;
}

namespace {

std::vector<int> random_monomial(Rng& rng, int r, int e) {
  const auto& basis = MonomialBasis::get(r, e);
  auto a = basis.exponents(rng.below(basis.size()));
  return {a.begin(), a.end()};
}

DualForm random_subspace_power_sum(Rng& rng, int r, int e, int s) {
  std::vector<std::vector<std::int64_t>> forms;
  std::vector<std::size_t> sizes;
  for (int j = 0; j < s; ++j) {
    std::vector<std::int64_t> l(static_cast<std::size_t>(r), 0);
    bool any = false;
    while (!any) {
      for (auto& c : l) {
        c = rng.chance(1, 2) ? rng.uniform(1, kCoeffRange) * (rng.chance(1, 2) ? 1 : -1) : 0;
        any = any || c != 0;
      }
    }
    sizes.push_back(static_cast<std::size_t>(std::count_if(l.begin(), l.end(), [](auto c) { return c != 0; })));
    forms.push_back(std::move(l));
  }
  auto out = DualForm::power_sum(e, forms, "subspace-power-sum");
  std::ostringstream os;
  os << "s=" << s << " supports=";
  for (std::size_t j = 0; j < sizes.size(); ++j) os << (j ? "," : "") << sizes[j];
  out.description = os.str();
  return out;
}

// F = sum_j x_{b_j} * P_j(x_A) over a split of the variables into A and B,
// plus s generic divided powers.
DualForm random_structured(Rng& rng, int r, int e, int max_s) {
  DualForm out;
  out.r = r;
  out.e = e;
  out.strategy = "structured";
  if (r < 2 || e < 2) return random_power_sum(rng, r, e, static_cast<int>(rng.uniform(1, std::max(1, max_s))));
  const int a = static_cast<int>(rng.uniform(1, r - 1));
  const auto& sub = MonomialBasis::get(a, e - 1);
  const bool monomial_parts = rng.chance(1, 2);
  std::vector<std::size_t> order(sub.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  for (int j = a; j < r; ++j) {
    const auto slot = static_cast<std::size_t>(j - a);
    for (std::size_t m = 0; m < sub.size(); ++m) {
      std::int64_t c = 0;
      if (monomial_parts) {
        c = m == order[slot % order.size()] ? 1 : 0;
      } else if (rng.chance(1, 2)) {
        c = rng.uniform(-kCoeffRange, kCoeffRange);
      }
      if (!c) continue;
      std::vector<int> exps(static_cast<std::size_t>(r), 0);
      auto ea = sub.exponents(m);
      std::copy(ea.begin(), ea.end(), exps.begin());
      exps[static_cast<std::size_t>(j)] += 1;
      out.terms.push_back({DualTerm::Kind::kMonomial, c, std::move(exps), {}});
    }
  }
  const int s = rng.chance(1, 2) ? 0 : static_cast<int>(rng.uniform(1, std::max(1, max_s)));
  for (int j = 0; j < s; ++j) out.terms.push_back({DualTerm::Kind::kDividedPower, 1, {}, random_linear(rng, r)});
  std::ostringstream os;
  os << "split=" << a << "+" << r - a << (monomial_parts ? " monomial-parts" : " dense-parts") << " s=" << s;
  out.description = os.str();
  if (out.terms.empty()) out.terms.push_back({DualTerm::Kind::kDividedPower, 1, {}, random_linear(rng, r)});
  return out;
}

}  // namespace

DualForm sample_dual_form(Rng& rng, int r, int e) {
  switch (rng.below(4)) {
    case 0:
      return DualForm::monomial(random_monomial(rng, r, e));
    case 1:
      return random_subspace_power_sum(rng, r, e, static_cast<int>(rng.uniform(1, 40)));
    case 2:
      return random_power_sum(rng, r, e, static_cast<int>(rng.uniform(1, 40)));
    default:
      return random_dense(rng, r, e);
  }
}

namespace {

// h-vector of R/Ann(x^a): number of divisors of x^a in each degree.
HVector monomial_hvector(std::span<const int> a) {
  std::vector<std::int64_t> poly{1};
  for (int ak : a) {
    std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(ak), 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (int j = 0; j <= ak; ++j) next[i + static_cast<std::size_t>(j)] += poly[i];
    poly = std::move(next);
  }
  return HVector(std::move(poly));
}

// Compares catalecticant ranks against the target up to the middle degree;
// returns the first mismatching degree, or -1.
int first_mismatch(const GradedPoly& f, const HVector& target, std::int64_t& got) {
  const int e = f.degree();
  for (int i = 1; i <= e / 2; ++i) {
    got = static_cast<std::int64_t>(rank(catalecticant(f, i), f.field()));
    if (got != target.value(i)) return i;
  }
  return -1;
}

struct Candidate {
  DualForm form;
  std::uint64_t seed = 0;
  int mismatch = -1;
  std::int64_t got = 0;
};

}  // namespace

RealizationResult realization_search(const HVector& target, const RealizationConfig& config) {
  if (!config.experimental && !is_si_sequence(target))
    throw NotSiSequence("target " + target.to_string() + " is not an SI-sequence");
  const int e = target.socle_degree();
  const int h1 = static_cast<int>(target.value(1));
  const int r = config.vars > 0 ? config.vars : std::max(1, h1);
  if (h1 > r) throw DimensionError("target has h_1 = " + std::to_string(h1) + " > r = " + std::to_string(r));
  if (config.primes.empty()) throw Error("realization search needs at least one prime");
  std::vector<PrimeField> fields;
  for (auto p : config.primes) {
    if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
    fields.emplace_back(p);
  }

  RealizationResult res;
  res.target = target;
  res.vars = r;
  auto& log = res.transcript;
  std::int64_t max_h = 1;
  for (auto v : target.entries()) max_h = std::max(max_h, v);

  auto verify = [&](const DualForm& form) {
    for (const auto& fd : fields)
      if (hvector_of_dual(form, fd) != target) return false;
    return true;
  };
  auto accept = [&](DualForm form, std::uint64_t seed) {
    res.witness = std::move(form);
    res.trial_seed = seed;
    res.primes_checked = config.primes;
  };

  if (e == 0) {
    accept(DualForm::monomial(std::vector<int>(static_cast<std::size_t>(r), 0)), 0);
    log.push_back("trivial target");
    return res;
  }

  // Monomials, exhaustively, counting only those whose support matches h_1.
  if (!config.experimental) {
    const auto& basis = MonomialBasis::get(r, e);
    std::size_t screened = 0;
    for (std::size_t i = 0; i < basis.size() && res.trials_used < config.budget; ++i) {
      auto a = basis.exponents(i);
      if (std::count_if(a.begin(), a.end(), [](int x) { return x > 0; }) != h1) continue;
      ++screened;
      ++res.trials_used;
      if (monomial_hvector(a) != target) continue;
      auto form = DualForm::monomial({a.begin(), a.end()});
      if (verify(form)) {
        log.push_back("trial " + std::to_string(res.trials_used - 1) + " monomial " + form.description + " -> match");
        accept(std::move(form), 0);
        return res;
      }
    }
    log.push_back("monomial phase: " + std::to_string(screened) + " candidates, no match");
  }

  // Randomized phases share one trial schedule, evaluated in parallel chunks;
  // the earliest matching trial in schedule order wins.
  const std::size_t remaining = config.budget - res.trials_used;
  const std::size_t subspace_end = res.trials_used + (config.experimental ? 0 : remaining / 4);
  const std::size_t generic_end = subspace_end + (config.experimental ? 0 : static_cast<std::size_t>(max_h));
  auto make = [&](std::size_t t) {
    Candidate c;
    c.seed = derive_seed(config.seed, t);
    Rng rng(c.seed);
    if (t < subspace_end) {
      c.form = random_subspace_power_sum(rng, r, e, static_cast<int>(rng.uniform(1, max_h)));
    } else if (t < generic_end) {
      c.form = random_power_sum(rng, r, e, static_cast<int>(t - subspace_end) + 1);
    } else {
      c.form = random_structured(rng, r, e, static_cast<int>(max_h));
    }
    return c;
  };

  constexpr std::size_t kChunk = 32;
  const PrimeField& f0 = fields.front();
  while (res.trials_used < config.budget) {
    const std::size_t begin = res.trials_used;
    const std::size_t end = std::min(config.budget, begin + kChunk);
    std::vector<Candidate> batch;
    for (std::size_t t = begin; t < end; ++t) batch.push_back(make(t));
    const auto n = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < n; ++k) {
      auto& c = batch[static_cast<std::size_t>(k)];
      c.mismatch = first_mismatch(c.form.materialize(f0), target, c.got);
    }
    for (std::size_t k = 0; k < batch.size(); ++k) {
      auto& c = batch[k];
      const std::size_t t = begin + k;
      res.trials_used = t + 1;
      std::string line = "trial " + std::to_string(t) + " " + c.form.strategy + " " + c.form.description + " -> ";
      if (c.mismatch >= 0) {
        log.push_back(line + "h_" + std::to_string(c.mismatch) + "=" + std::to_string(c.got));
        continue;
      }
      if (!verify(c.form)) {
        log.push_back(line + "match on first prime only");
        continue;
      }
      log.push_back(line + "match");
      accept(std::move(c.form), c.seed);
      return res;
    }
  }
  log.push_back("NOT_FOUND after " + std::to_string(res.trials_used) + " trials");
  return res;
}

}  // namespace gor
