#include "gor/poly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "gor/errors.hpp"

namespace gor {

GradedPoly::GradedPoly(const PrimeField& field, int r, int d)
    : field_(field), r_(r), d_(d), coeffs_(MonomialBasis::get(r, d).size(), 0) {}

GradedPoly::GradedPoly(const PrimeField& field, int r, int d, std::vector<Elem> coeffs)
    : field_(field), r_(r), d_(d), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != MonomialBasis::get(r, d).size())
    throw DimensionError("coefficient vector has length " + std::to_string(coeffs_.size()) +
                         ", expected " + std::to_string(MonomialBasis::get(r, d).size()));
  for (auto c : coeffs_)
    if (c >= field.modulus()) throw Error("coefficient is not a canonical residue");
}

GradedPoly GradedPoly::monomial(const PrimeField& field, std::span<const int> exps, Elem coeff) {
  int d = 0;
  for (int a : exps) d += a;
  GradedPoly out(field, static_cast<int>(exps.size()), d);
  out.coeffs_[monomial_index(exps)] = coeff;
  return out;
}

GradedPoly GradedPoly::variable(const PrimeField& field, int r, int var) {
  std::vector<int> e(static_cast<std::size_t>(r), 0);
  e[static_cast<std::size_t>(var)] = 1;
  return monomial(field, e);
}

GradedPoly GradedPoly::constant(const PrimeField& field, int r, Elem c) {
  GradedPoly out(field, r, 0);
  out.coeffs_[0] = c;
  return out;
}

GradedPoly GradedPoly::linear(const PrimeField& field, std::span<const Elem> coeffs) {
  // Degree-1 monomial x_j has index j.
  return GradedPoly(field, static_cast<int>(coeffs.size()), 1,
                    std::vector<Elem>(coeffs.begin(), coeffs.end()));
}

bool GradedPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c == 0; });
}

std::size_t GradedPoly::leading_index() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i]) return i;
  return coeffs_.size();
}

std::size_t GradedPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c != 0; }));
}

void GradedPoly::check_compatible(const GradedPoly& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
  if (r_ != o.r_) throw FieldMismatch("polynomials in different numbers of variables");
  if (d_ != o.d_) throw InvalidDegree("adding forms of degrees " + std::to_string(d_) + " and " + std::to_string(o.d_));
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
  return *this;
}

GradedPoly GradedPoly::scaled(Elem c) const {
  GradedPoly out = *this;
  for (auto& x : out.coeffs_) x = field_.mul(x, c);
  return out;
}

GradedPoly GradedPoly::monic() const {
  const auto lead = leading_index();
  if (lead == coeffs_.size()) return *this;
  return scaled(field_.inv(coeffs_[lead]));
}

GradedPoly multiply(const GradedPoly& f, const GradedPoly& g) {
  if (!(f.field() == g.field())) throw FieldMismatch("multiplying polynomials over different fields");
  if (f.vars() != g.vars()) throw FieldMismatch("multiplying polynomials in different numbers of variables");
  const auto& F = f.field();
  const int r = f.vars();
  GradedPoly out(F, r, f.degree() + g.degree());
  const auto& bf = f.basis();
  const auto& bg = g.basis();
  std::vector<int> sum(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < bf.size(); ++i) {
    if (!f[i]) continue;
    auto ei = bf.exponents(i);
    for (std::size_t j = 0; j < bg.size(); ++j) {
      if (!g[j]) continue;
      auto ej = bg.exponents(j);
      for (int k = 0; k < r; ++k) sum[static_cast<std::size_t>(k)] = ei[static_cast<std::size_t>(k)] + ej[static_cast<std::size_t>(k)];
      auto idx = monomial_index(sum);
      out[idx] = F.add(out[idx], F.mul(f[i], g[j]));
    }
  }
  return out;
}

GradedPoly power(const GradedPoly& f, int k) {
  GradedPoly out = GradedPoly::constant(f.field(), f.vars(), 1);
  for (int i = 0; i < k; ++i) out = multiply(out, f);
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PrimeField& field, int r, int line)
      : text_(text), field_(field), r_(r), line_(line) {}

  GradedPoly parse() {
    struct Term {
      Elem coeff;
      std::vector<int> exps;
    };
    std::vector<Term> terms;
    std::optional<int> degree;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      const int term_col = column();
      if (consume_minus()) {
        negative = true;
      } else if (peek() == '+') {
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      skip_ws();
      Term t{1, std::vector<int>(static_cast<std::size_t>(r_), 0)};
      parse_factor(t.coeff, t.exps);
      skip_ws();
      while (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        parse_factor(t.coeff, t.exps);
        skip_ws();
      }
      if (negative) t.coeff = field_.neg(t.coeff);
      int deg = 0;
      for (int a : t.exps) deg += a;
      if (!degree) {
        degree = deg;
      } else if (*degree != deg) {
        throw DegreeMismatch(*degree, deg, line_, term_col);
      }
      terms.push_back(std::move(t));
      first = false;
    }
    GradedPoly out(field_, r_, *degree);
    for (const auto& t : terms) {
      auto idx = monomial_index(t.exps);
      out[idx] = field_.add(out[idx], t.coeff);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  int column() const { return static_cast<int>(pos_) + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column()); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool consume_minus() {
    if (!at_end() && peek() == '-') {
      ++pos_;
      return true;
    }
    // U+2212 MINUS SIGN
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  std::uint64_t parse_uint() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::uint64_t{1} << 60)) fail("number too large");
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  void parse_factor(Elem& coeff, std::vector<int>& exps) {
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto v = parse_uint();
      coeff = field_.mul(coeff, static_cast<Elem>(v % field_.modulus()));
      return;
    }
    if (peek() != 'x') fail(std::string("unexpected character '") + peek() + "'");
    const int var_col = column();
    ++pos_;
    const auto var = parse_uint();
    if (var < 1 || var > static_cast<std::uint64_t>(r_))
      throw ParseError("variable x" + std::to_string(var) + " out of range x1..x" + std::to_string(r_), line_, var_col);
    std::uint64_t exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      exponent = parse_uint();
      if (exponent > 10000) fail("exponent too large");
    }
    exps[var - 1] += static_cast<int>(exponent);
  }

  std::string_view text_;
  const PrimeField& field_;
  int r_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedPoly parse_poly(std::string_view text, const PrimeField& field, int r, int line) {
  return PolyParser(text, field, r, line).parse();
}

std::string format_poly(const GradedPoly& f) {
  const auto& b = f.basis();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!f[i]) continue;
    std::int64_t c = f.field().to_signed(f[i]);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    auto e = b.exponents(i);
    bool wrote = false;
    if (c != 1 || f.degree() == 0) {
      os << c;
      wrote = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (wrote) os << '*';
      os << 'x' << (k + 1);
      if (e[k] > 1) os << '^' << e[k];
      wrote = true;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace gor
