#include "gor/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gor/errors.hpp"

namespace gor {

IdealPresentation::IdealPresentation(const PrimeField& f, int nvars, std::vector<GradedPoly> gens)
    : field(f), r(nvars), generators(std::move(gens)) {
  if (r < 1) throw DimensionError("an ideal needs at least one variable");
  for (const auto& g : generators) {
    if (g.is_zero()) throw Error("zero generator in ideal presentation");
    if (g.vars() != r) throw DimensionError("generator in the wrong number of variables");
    if (!(g.field() == field)) throw FieldMismatch("generator over a different field");
  }
}

int IdealPresentation::initial_degree() const {
  int a = -1;
  for (const auto& g : generators) a = a < 0 ? g.degree() : std::min(a, g.degree());
  return a;
}

int IdealPresentation::max_generator_degree() const {
  int a = 0;
  for (const auto& g : generators) a = std::max(a, g.degree());
  return a;
}

int IdealPresentation::degree_sum() const {
  int s = 0;
  for (const auto& g : generators) s += g.degree();
  return s;
}

GradedIdeal::GradedIdeal(const PrimeField& field, int r, std::vector<DegreeSpan> components)
    : field_(field), r_(r), components_(std::move(components)) {
  if (components_.empty()) throw Error("graded ideal needs at least one component");
  for (std::size_t d = 0; d < components_.size(); ++d) {
    if (components_[d].degree() != static_cast<int>(d) || components_[d].vars() != r_)
      throw DimensionError("graded ideal components out of order");
  }
}

GradedIdeal GradedIdeal::generate(const IdealPresentation& ideal, int top) {
  if (top < 0) throw InvalidDegree("negative truncation degree");
  const int r = ideal.r;
  std::vector<DegreeSpan> comps;
  comps.reserve(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    if (d > 0 && comps.back().is_full()) {
      comps.push_back(DegreeSpan::full(ideal.field, r, d));
      continue;
    }
    const auto n = MonomialBasis::get(r, d).size();
    Matrix rows(0, n);
    for (const auto& g : ideal.generators)
      if (g.degree() == d) rows.append_row(g.coeffs());
    if (d > 0) {
      const auto& prev = comps.back();
      const auto& pb = MonomialBasis::get(r, d - 1);
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
    }
    comps.emplace_back(ideal.field, r, d, std::move(rows));
  }
  return GradedIdeal(ideal.field, r, std::move(comps));
}

DegreeSpan GradedIdeal::component(int d) const {
  if (d < 0) throw InvalidDegree("negative degree");
  if (d <= top_degree()) return components_[static_cast<std::size_t>(d)];
  if (artinian()) return DegreeSpan::full(field_, r_, d);
  throw Inconclusive("ideal is only known through degree " + std::to_string(top_degree()) +
                     ", degree " + std::to_string(d) + " requested");
}

std::vector<std::int64_t> GradedIdeal::hilbert(int upto) const {
  std::vector<std::int64_t> out;
  for (int d = 0; d <= upto; ++d) {
    if (d <= top_degree()) {
      out.push_back(static_cast<std::int64_t>(components_[static_cast<std::size_t>(d)].codim()));
    } else if (artinian()) {
      out.push_back(0);
    } else {
      throw Inconclusive("Hilbert function requested past the known degrees");
    }
  }
  return out;
}

HilbertProfile GradedIdeal::profile() const {
  HilbertProfile p;
  p.truncation = top_degree();
  p.values = hilbert(p.truncation);
  p.artinian_certified = p.values.back() == 0;
  return p;
}

DegreeSpan GradedIdeal::colon_component(const GradedPoly& f, int d) const {
  if (f.is_zero()) throw Error("colon by the zero polynomial");
  const int t = d + f.degree();
  const DegreeSpan target = component(t);
  if (target.is_full()) return DegreeSpan::full(field_, r_, d);
  const auto& src = MonomialBasis::get(r_, d);
  const auto& fb = f.basis();
  Matrix products(src.size(), target.ambient_dim());
  std::vector<int> sum(static_cast<std::size_t>(r_));
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto ei = src.exponents(i);
    for (std::size_t j = 0; j < fb.size(); ++j) {
      if (!f[j]) continue;
      auto ej = fb.exponents(j);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ei[k] + ej[k];
      products(i, monomial_index(sum)) = f[j];
    }
  }
  return DegreeSpan(field_, r_, d, left_kernel(target.quotient_coordinates(products), field_));
}

GradedIdeal GradedIdeal::colon(const GradedPoly& f) const {
  const int upto = artinian() ? top_degree() : top_degree() - f.degree();
  if (upto < 0) throw Inconclusive("ideal not known far enough to form the colon");
  std::vector<DegreeSpan> comps;
  for (int d = 0; d <= upto; ++d) comps.push_back(colon_component(f, d));
  return GradedIdeal(field_, r_, std::move(comps));
}

GradedIdeal GradedIdeal::plus(const GradedPoly& f) const {
  std::vector<DegreeSpan> comps;
  for (int d = 0; d <= top_degree(); ++d) {
    const auto& cur = components_[static_cast<std::size_t>(d)];
    const int shift = d - f.degree();
    if (shift < 0 || cur.is_full()) {
      comps.push_back(cur);
      continue;
    }
    Matrix rows = cur.basis();
    const auto& mb = MonomialBasis::get(r_, shift);
    for (std::size_t i = 0; i < mb.size(); ++i) {
      auto m = GradedPoly::monomial(field_, mb.exponents(i));
      rows.append_row(multiply(m, f).coeffs());
    }
    comps.emplace_back(field_, r_, d, std::move(rows));
  }
  return GradedIdeal(field_, r_, std::move(comps));
}

GradedIdeal GradedIdeal::restrict(const GradedPoly& linear) const {
  LinearRestriction sub(linear);
  std::vector<DegreeSpan> comps;
  for (int d = 0; d <= top_degree(); ++d) {
    const auto& cur = components_[static_cast<std::size_t>(d)];
    if (cur.is_full()) {
      comps.push_back(DegreeSpan::full(field_, r_ - 1, d));
    } else if (cur.is_zero()) {
      comps.emplace_back(field_, r_ - 1, d);
    } else {
      comps.emplace_back(field_, r_ - 1, d, gor::multiply(cur.basis(), sub.matrix(d), field_));
    }
  }
  return GradedIdeal(field_, r_ - 1, std::move(comps));
}

std::vector<std::int64_t> GradedIdeal::socle() const {
  std::vector<std::int64_t> out;
  for (int d = 0; d < top_degree(); ++d) {
    const auto& cur = components_[static_cast<std::size_t>(d)];
    const auto& next = components_[static_cast<std::size_t>(d + 1)];
    if (cur.is_full()) {
      out.push_back(0);
      continue;
    }
    const auto& src = MonomialBasis::get(r_, d);
    const auto q = next.codim();
    if (q == 0) {
      out.push_back(static_cast<std::int64_t>(cur.codim()));
      continue;
    }
    // Row m: coordinates of (x_1 m, ..., x_r m) in (R_{d+1} / I_{d+1})^r.
    Matrix map(src.size(), q * static_cast<std::size_t>(r_));
    Matrix units(src.size(), next.ambient_dim());
    for (int j = 0; j < r_; ++j) {
      units = Matrix(src.size(), next.ambient_dim());
      for (std::size_t i = 0; i < src.size(); ++i) units(i, src.times_variable(i, j)) = 1;
      auto coords = next.quotient_coordinates(units);
      for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t k = 0; k < q; ++k) map(i, static_cast<std::size_t>(j) * q + k) = coords(i, k);
    }
    const auto kernel_dim = src.size() - rank(std::move(map), field_);
    out.push_back(static_cast<std::int64_t>(kernel_dim) - static_cast<std::int64_t>(cur.dim()));
  }
  return out;
}

LinearRestriction::LinearRestriction(const GradedPoly& linear)
    : field_(linear.field()), r_(linear.vars()), k_(-1), image_(linear.field(), std::max(1, linear.vars() - 1), 1) {
  if (linear.degree() != 1) throw InvalidDegree("restriction needs a linear form");
  if (linear.is_zero()) throw Error("restriction by the zero linear form");
  if (r_ < 2) throw DimensionError("cannot eliminate the only variable");
  for (int j = r_ - 1; j >= 0; --j) {
    if (linear[static_cast<std::size_t>(j)]) {
      k_ = j;
      break;
    }
  }
  const Elem scale = field_.neg(field_.inv(linear[static_cast<std::size_t>(k_)]));
  for (int j = 0; j < r_; ++j) {
    if (j == k_) continue;
    const int target = j < k_ ? j : j - 1;
    image_[static_cast<std::size_t>(target)] = field_.mul(scale, linear[static_cast<std::size_t>(j)]);
  }
}

Matrix LinearRestriction::matrix(int d) const {
  const auto& src = MonomialBasis::get(r_, d);
  const auto& dst = MonomialBasis::get(r_ - 1, d);
  Matrix out(src.size(), dst.size());
  std::vector<GradedPoly> powers{GradedPoly::constant(field_, r_ - 1, 1)};
  for (int t = 1; t <= d; ++t) powers.push_back(multiply(powers.back(), image_));
  std::vector<int> rest(static_cast<std::size_t>(r_ - 1));
  std::vector<int> sum(static_cast<std::size_t>(r_ - 1));
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto e = src.exponents(i);
    for (int j = 0, t = 0; j < r_; ++j) {
      if (j == k_) continue;
      rest[static_cast<std::size_t>(t++)] = e[static_cast<std::size_t>(j)];
    }
    const auto& pw = powers[static_cast<std::size_t>(e[static_cast<std::size_t>(k_)])];
    const auto& pb = pw.basis();
    for (std::size_t m = 0; m < pb.size(); ++m) {
      if (!pw[m]) continue;
      auto em = pb.exponents(m);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = rest[k] + em[k];
      const auto idx = monomial_index(sum);
      out(i, idx) = field_.add(out(i, idx), pw[m]);
    }
  }
  return out;
}

GradedPoly LinearRestriction::apply(const GradedPoly& f) const {
  if (f.vars() != r_) throw DimensionError("form in the wrong number of variables");
  const Matrix m = matrix(f.degree());
  Matrix row(1, f.coeffs().size());
  std::copy(f.coeffs().begin(), f.coeffs().end(), row.row(0).begin());
  const Matrix img = gor::multiply(row, m, field_);
  auto r = img.row(0);
  return GradedPoly(field_, r_ - 1, f.degree(), std::vector<Elem>(r.begin(), r.end()));
}

DegreeSpan degree_span(const IdealPresentation& ideal, int d) {
  return GradedIdeal::generate(ideal, d).component(d);
}

HilbertProfile hilbert(const IdealPresentation& ideal, int truncation) {
  return GradedIdeal::generate(ideal, truncation).profile();
}

std::vector<DegreeSpan> colon(const IdealPresentation& ideal, const GradedPoly& f, int upto) {
  if (f.is_zero()) throw Error("colon by the zero polynomial");
  const auto gi = GradedIdeal::generate(ideal, upto + f.degree());
  std::vector<DegreeSpan> out;
  for (int d = 0; d <= upto; ++d) out.push_back(gi.colon_component(f, d));
  return out;
}

IdealPresentation restrict(const IdealPresentation& ideal, const GradedPoly& linear) {
  LinearRestriction sub(linear);
  std::vector<GradedPoly> gens;
  for (const auto& g : ideal.generators) {
    auto img = sub.apply(g);
    if (!img.is_zero()) gens.push_back(std::move(img));
  }
  return IdealPresentation(ideal.field, ideal.r - 1, std::move(gens));
}

HilbertProfile socle_profile(const IdealPresentation& ideal, int truncation) {
  const auto gi = GradedIdeal::generate(ideal, truncation);
  if (!gi.artinian())
    throw Inconclusive("R/I is not artinian by degree " + std::to_string(truncation));
  HilbertProfile p;
  p.truncation = truncation;
  p.values = gi.socle();
  p.values.push_back(0);
  p.artinian_certified = true;
  return p;
}

bool is_gorenstein(const IdealPresentation& ideal, int truncation) {
  const auto p = socle_profile(ideal, truncation);
  std::int64_t total = 0;
  for (auto v : p.values) total += v;
  return total == 1;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

IdealPresentation parse_ideal(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int r = -1;
  std::uint64_t p = PrimeField::kDefaultPrime;
  bool have_header = false;
  std::vector<std::pair<int, std::string>> lines;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!have_header) {
      std::istringstream hs(t);
      std::string tok;
      while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("malformed header token '" + tok + "'", lineno, 1);
        auto key = tok.substr(0, eq);
        auto val = tok.substr(eq + 1);
        try {
          if (key == "r") {
            r = std::stoi(val);
          } else if (key == "p") {
            p = std::stoull(val);
          } else {
            throw ParseError("unknown header key '" + key + "'", lineno, 1);
          }
        } catch (const std::logic_error&) {
          throw ParseError("malformed header value '" + val + "'", lineno, 1);
        }
      }
      if (r < 1) throw ParseError("header must declare r=<variables>", lineno, 1);
      have_header = true;
      continue;
    }
    lines.emplace_back(lineno, line);
  }
  if (!have_header) throw ParseError("missing header line 'r=<int> p=<prime>'", std::max(lineno, 1), 1);
  PrimeField field(p);
  std::vector<GradedPoly> gens;
  for (const auto& [no, l] : lines) {
    auto g = parse_poly(l, field, r, no);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  return IdealPresentation(field, r, std::move(gens));
}

IdealPresentation read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal(ss.str());
}

std::string format_ideal(const IdealPresentation& ideal) {
  std::ostringstream os;
  os << "r=" << ideal.r << " p=" << ideal.field.modulus() << '\n';
  for (const auto& g : ideal.generators) os << format_poly(g) << '\n';
  return os.str();
}

}  // namespace gor
