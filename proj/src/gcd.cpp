#include "gor/gcd.hpp"

#include <algorithm>

#include "gor/errors.hpp"

namespace gor {

namespace {

// Dense recursive polynomial in y_1..y_level; level 0 is a constant. The
// coefficients of a level-k polynomial are level-(k-1) polynomials in the
// powers of y_k, with no trailing zeros.
struct Rec {
  int level = 0;
  Elem c = 0;
  std::vector<Rec> cs;
};

class RecArith {
 public:
  explicit RecArith(const PrimeField& f) : f_(f) {}

  static Rec zero(int level) { return Rec{level, 0, {}}; }
  Rec one(int level) const {
    if (level == 0) return Rec{0, 1, {}};
    Rec r{level, 0, {}};
    r.cs.push_back(one(level - 1));
    return r;
  }
  static bool is_zero(const Rec& a) { return a.level == 0 ? a.c == 0 : a.cs.empty(); }
  static int deg(const Rec& a) { return static_cast<int>(a.cs.size()) - 1; }
  static bool is_constant(const Rec& a) {
    if (a.level == 0) return true;
    return a.cs.size() <= 1 && (a.cs.empty() || is_constant(a.cs[0]));
  }
  // Coefficient of the leading monomial in lexicographic order y_level > ... > y_1.
  static Elem base_lead(const Rec& a) { return a.level == 0 ? a.c : base_lead(a.cs.back()); }

  static void trim(Rec& a) {
    while (!a.cs.empty() && is_zero(a.cs.back())) a.cs.pop_back();
  }

  Rec add(const Rec& a, const Rec& b, bool subtract = false) const {
    if (a.level == 0) return Rec{0, subtract ? f_.sub(a.c, b.c) : f_.add(a.c, b.c), {}};
    Rec r{a.level, 0, {}};
    const std::size_t n = std::max(a.cs.size(), b.cs.size());
    r.cs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < a.cs.size() && i < b.cs.size()) {
        r.cs.push_back(add(a.cs[i], b.cs[i], subtract));
      } else if (i < a.cs.size()) {
        r.cs.push_back(a.cs[i]);
      } else {
        r.cs.push_back(subtract ? scale(b.cs[i], f_.neg(1)) : b.cs[i]);
      }
    }
    trim(r);
    return r;
  }
  Rec sub(const Rec& a, const Rec& b) const { return add(a, b, true); }

  Rec scale(const Rec& a, Elem s) const {
    if (s == 0) return zero(a.level);
    Rec r = a;
    scale_in_place(r, s);
    return r;
  }
  void scale_in_place(Rec& a, Elem s) const {
    if (a.level == 0) {
      a.c = f_.mul(a.c, s);
      return;
    }
    for (auto& x : a.cs) scale_in_place(x, s);
  }

  Rec mul(const Rec& a, const Rec& b) const {
    if (a.level == 0) return Rec{0, f_.mul(a.c, b.c), {}};
    if (is_zero(a) || is_zero(b)) return zero(a.level);
    Rec r{a.level, 0, {}};
    r.cs.assign(a.cs.size() + b.cs.size() - 1, zero(a.level - 1));
    for (std::size_t i = 0; i < a.cs.size(); ++i) {
      if (is_zero(a.cs[i])) continue;
      for (std::size_t j = 0; j < b.cs.size(); ++j) {
        if (is_zero(b.cs[j])) continue;
        r.cs[i + j] = add(r.cs[i + j], mul(a.cs[i], b.cs[j]));
      }
    }
    trim(r);
    return r;
  }

  // Multiplies every coefficient (level - 1) of a by c.
  Rec mul_coeffs(const Rec& a, const Rec& c) const {
    Rec r{a.level, 0, {}};
    for (const auto& x : a.cs) r.cs.push_back(mul(x, c));
    trim(r);
    return r;
  }

  // y^shift * a
  static Rec shift(const Rec& a, int k) {
    if (is_zero(a)) return a;
    Rec r{a.level, 0, {}};
    r.cs.assign(static_cast<std::size_t>(k), zero(a.level - 1));
    r.cs.insert(r.cs.end(), a.cs.begin(), a.cs.end());
    return r;
  }

  std::optional<Rec> exact_div(const Rec& a, const Rec& b) const {
    if (is_zero(b)) return std::nullopt;
    if (a.level == 0) return Rec{0, f_.mul(a.c, f_.inv(b.c)), {}};
    Rec q = zero(a.level);
    Rec rem = a;
    while (!is_zero(rem) && deg(rem) >= deg(b)) {
      auto t = exact_div(rem.cs.back(), b.cs.back());
      if (!t) return std::nullopt;
      Rec mono{a.level, 0, {}};
      const int k = deg(rem) - deg(b);
      mono.cs.assign(static_cast<std::size_t>(k), zero(a.level - 1));
      mono.cs.push_back(*t);
      q = add(q, mono);
      const int before = deg(rem);
      rem = sub(rem, mul(mono, b));
      if (!is_zero(rem) && deg(rem) >= before) return std::nullopt;
    }
    if (!is_zero(rem)) return std::nullopt;
    return q;
  }

  Rec exact_div_coeffs(const Rec& a, const Rec& c) const {
    Rec r{a.level, 0, {}};
    for (const auto& x : a.cs) {
      auto q = exact_div(x, c);
      if (!q) throw Error("internal: content does not divide coefficient");
      r.cs.push_back(std::move(*q));
    }
    trim(r);
    return r;
  }

  // Scales so that base_lead is 1.
  Rec normalized(const Rec& a) const {
    if (is_zero(a)) return a;
    return scale(a, f_.inv(base_lead(a)));
  }

  Rec content(const Rec& a) const {
    Rec g = zero(a.level - 1);
    for (const auto& x : a.cs) {
      g = gcd(g, x);
      if (is_constant(g) && !is_zero(g)) return one(a.level - 1);
    }
    return g;
  }

  Rec pseudo_rem(Rec a, const Rec& b) const {
    const Rec& lb = b.cs.back();
    while (!is_zero(a) && deg(a) >= deg(b)) {
      const int k = deg(a) - deg(b);
      Rec la = a.cs.back();
      Rec next = sub(mul_coeffs(a, lb), shift(mul_coeffs(b, la), k));
      a = std::move(next);
    }
    return a;
  }

  Rec primitive_part(const Rec& a) const {
    if (deg(a) == 0) return one(a.level);
    return normalized(exact_div_coeffs(a, content(a)));
  }

  Rec gcd(const Rec& a, const Rec& b) const {
    if (is_zero(a)) return normalized(b);
    if (is_zero(b)) return normalized(a);
    if (a.level == 0) return one(0);
    const Rec ca = content(a);
    const Rec cb = content(b);
    const Rec c = gcd(ca, cb);
    Rec pa = normalized(exact_div_coeffs(a, ca));
    Rec pb = normalized(exact_div_coeffs(b, cb));
    if (deg(pa) < deg(pb)) std::swap(pa, pb);
    while (!is_zero(pb)) {
      Rec r = pseudo_rem(pa, pb);
      pa = std::move(pb);
      pb = is_zero(r) ? std::move(r) : primitive_part(r);
    }
    return normalized(mul_coeffs(pa, c));
  }

 private:
  const PrimeField& f_;
};

// x1-adic valuation of a nonzero form.
int x1_valuation(const GradedPoly& f) {
  const auto& b = f.basis();
  int v = f.degree();
  for (std::size_t i = 0; i < b.size(); ++i)
    if (f[i]) v = std::min(v, b.exponents(i)[0]);
  return v;
}

Rec& slot(Rec& root, std::span<const int> exps) {
  // exps holds exponents of x2..xr; the outermost level is the last variable.
  Rec* cur = &root;
  for (std::size_t k = exps.size(); k-- > 0;) {
    const auto e = static_cast<std::size_t>(exps[k]);
    if (cur->cs.size() <= e) cur->cs.resize(e + 1, RecArith::zero(cur->level - 1));
    cur = &cur->cs[e];
  }
  return *cur;
}

Rec dehomogenize(const GradedPoly& f) {
  const int level = f.vars() - 1;
  Rec root = RecArith::zero(level);
  const auto& b = f.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!f[i]) continue;
    slot(root, b.exponents(i).subspan(1)).c = f[i];
  }
  return root;
}

void collect_terms(const Rec& a, std::vector<int>& exps, int pos,
                   std::vector<std::pair<std::vector<int>, Elem>>& out) {
  if (a.level == 0) {
    if (a.c) out.emplace_back(exps, a.c);
    return;
  }
  for (std::size_t e = 0; e < a.cs.size(); ++e) {
    exps[static_cast<std::size_t>(pos)] = static_cast<int>(e);
    collect_terms(a.cs[e], exps, pos - 1, out);
  }
  exps[static_cast<std::size_t>(pos)] = 0;
}

// Homogenizes to degree `degree` (or the natural degree when negative) and
// multiplies by x1^extra.
GradedPoly homogenize(const Rec& a, const PrimeField& field, int r, int extra, int degree = -1) {
  std::vector<std::pair<std::vector<int>, Elem>> terms;
  std::vector<int> exps(static_cast<std::size_t>(r - 1), 0);
  if (r > 1) {
    collect_terms(a, exps, r - 2, terms);
  } else if (a.c) {
    terms.emplace_back(exps, a.c);
  }
  int natural = 0;
  for (const auto& [e, c] : terms) {
    int s = 0;
    for (int x : e) s += x;
    natural = std::max(natural, s);
  }
  const int d = degree >= 0 ? degree : natural;
  GradedPoly out(field, r, d + extra);
  std::vector<int> full(static_cast<std::size_t>(r));
  for (const auto& [e, c] : terms) {
    int s = 0;
    for (int x : e) s += x;
    full[0] = d - s + extra;
    std::copy(e.begin(), e.end(), full.begin() + 1);
    out[monomial_index(full)] = c;
  }
  return out;
}

void check_pair(const GradedPoly& f, const GradedPoly& g) {
  if (!(f.field() == g.field())) throw FieldMismatch("gcd of polynomials over different fields");
  if (f.vars() != g.vars()) throw FieldMismatch("gcd of polynomials in different numbers of variables");
}

// Rows m * f for every monomial m of degree d, negated when asked.
void append_multiples(Matrix& rows, const GradedPoly& f, int d, bool negate) {
  const auto& mb = MonomialBasis::get(f.vars(), d);
  for (std::size_t i = 0; i < mb.size(); ++i) {
    auto p = multiply(GradedPoly::monomial(f.field(), mb.exponents(i)), f);
    if (negate) p = p.scaled(f.field().neg(1));
    rows.append_row(p.coeffs());
  }
}

// Rows (u, v) -> u f - v g with deg u = deg g - k, deg v = deg f - k.
Matrix syzygy_map(const GradedPoly& f, const GradedPoly& g, int k) {
  Matrix rows(0, MonomialBasis::get(f.vars(), f.degree() + g.degree() - k).size());
  append_multiples(rows, f, g.degree() - k, false);
  append_multiples(rows, g, f.degree() - k, true);
  return rows;
}

}  // namespace

GradedPoly gcd_euclidean(const GradedPoly& f, const GradedPoly& g) {
  check_pair(f, g);
  if (f.is_zero() && g.is_zero()) throw UndefinedGcd("gcd of two zero polynomials");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  const auto& field = f.field();
  const int r = f.vars();
  const int v = std::min(x1_valuation(f), x1_valuation(g));
  if (r == 1) {
    std::vector<int> e{v};
    return GradedPoly::monomial(field, e);
  }
  RecArith ar(field);
  Rec h = ar.gcd(dehomogenize(f), dehomogenize(g));
  return homogenize(h, field, r, v).monic();
}

GradedPoly gcd(const GradedPoly& f, const GradedPoly& g) {
  check_pair(f, g);
  if (f.is_zero() && g.is_zero()) throw UndefinedGcd("gcd of two zero polynomials");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  const auto& field = f.field();
  // A nonzero pair (u, v) with u f = v g in degrees (deg g - k, deg f - k)
  // exists exactly when deg gcd >= k, so binary search the largest such k.
  auto has_syzygy = [&](int k) {
    auto m = syzygy_map(f, g, k);
    const auto rows = m.rows();
    return rank(std::move(m), field) < rows;
  };
  int lo = 0;
  int hi = std::min(f.degree(), g.degree());
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (has_syzygy(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (lo == 0) return GradedPoly::constant(field, f.vars(), 1);
  const auto kernel = left_kernel(syzygy_map(f, g, lo), field);
  const auto nu = MonomialBasis::get(f.vars(), g.degree() - lo).size();
  auto row = kernel.row(0);
  const GradedPoly u(field, f.vars(), g.degree() - lo, std::vector<Elem>(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(nu)));
  auto d = exact_quotient(g, u);
  if (!d) throw Error("gcd: cofactor does not divide");
  return d->monic();
}

GradedPoly span_gcd(const std::vector<GradedPoly>& forms) {
  std::optional<GradedPoly> acc;
  for (const auto& p : forms) {
    if (p.is_zero()) continue;
    acc = acc ? gcd(*acc, p) : p.monic();
    if (acc->degree() == 0) break;
  }
  if (!acc) throw UndefinedGcd("gcd of the zero space");
  return *acc;
}

GradedPoly span_gcd(const DegreeSpan& v) {
  if (v.is_zero()) throw UndefinedGcd("gcd of the zero space");
  return span_gcd(v.basis_polys());
}

std::optional<GradedPoly> exact_quotient(const GradedPoly& f, const GradedPoly& g) {
  check_pair(f, g);
  if (g.is_zero()) throw UndefinedGcd("division by the zero polynomial");
  const int qd = f.degree() - g.degree();
  if (f.is_zero()) {
    if (qd < 0) return std::nullopt;
    return GradedPoly(f.field(), f.vars(), qd);
  }
  if (qd < 0) return std::nullopt;
  const int vf = x1_valuation(f);
  const int vg = x1_valuation(g);
  if (vg > vf) return std::nullopt;
  const int r = f.vars();
  if (r == 1) {
    const auto& F = f.field();
    return GradedPoly(F, 1, qd, {F.mul(f[0], F.inv(g[0]))});
  }
  RecArith ar(f.field());
  auto q = ar.exact_div(dehomogenize(f), dehomogenize(g));
  if (!q) return std::nullopt;
  // deg of the x1-free part of the quotient is (deg f - vf) - (deg g - vg).
  const int core = (f.degree() - vf) - (g.degree() - vg);
  return homogenize(*q, f.field(), r, vf - vg, core);
}

}  // namespace gor
