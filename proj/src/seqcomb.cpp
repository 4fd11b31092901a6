#include "gor/seqcomb.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "gor/errors.hpp"

namespace gor {

HVector::HVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
  if (entries_.empty()) throw InvalidHVector("h-vector is empty or all zero");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0)
      throw InvalidHVector("negative entry in degree " + std::to_string(i));
    if (entries_[i] == 0)
      throw InvalidHVector("zero entry in degree " + std::to_string(i) +
                           " followed by positive entries");
  }
}

HVector HVector::parse(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos < text.size() && (text[pos] == '(' || text[pos] == '[')) ++pos;
  while (true) {
    skip_ws();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc()) {
      throw InvalidHVector("malformed h-vector literal at position " + std::to_string(pos + 1));
    }
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos < text.size() && (text[pos] == ')' || text[pos] == ']')) ++pos;
  skip_ws();
  if (pos != text.size())
    throw InvalidHVector("unexpected character at position " + std::to_string(pos + 1));
  return HVector(std::move(out));
}

std::int64_t HVector::value(int i) const {
  if (i < 0 || i >= static_cast<int>(entries_.size())) return 0;
  return entries_[static_cast<std::size_t>(i)];
}

std::string HVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  return os.str();
}

std::int64_t BinomialExpansion::evaluate() const {
  std::int64_t sum = 0;
  for (const auto& t : terms) sum += binomial(t.top, t.bottom).convert_to<std::int64_t>();
  return sum;
}

bool BinomialExpansion::well_formed() const {
  int expected_bottom = degree;
  std::int64_t prev_top = std::numeric_limits<std::int64_t>::max();
  for (const auto& t : terms) {
    if (t.bottom != expected_bottom || t.bottom < 1) return false;
    if (t.top < t.bottom || t.top >= prev_top) return false;
    prev_top = t.top;
    --expected_bottom;
  }
  return true;
}

BigInt binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0 || top < bottom) return 0;
  bottom = std::min(bottom, top - bottom);
  BigInt c = 1;
  for (std::int64_t j = 1; j <= bottom; ++j) {
    c *= top - bottom + j;
    c /= j;
  }
  return c;
}

std::int64_t binomial_capped(std::int64_t top, std::int64_t bottom, std::int64_t cap) {
  if (bottom < 0 || top < bottom) return 0;
  bottom = std::min(bottom, top - bottom);
  // C(top-bottom+j, j) is nondecreasing in j, so once the running value passes
  // the cap the final value does too.
  unsigned __int128 c = 1;
  const auto limit = static_cast<unsigned __int128>(cap);
  for (std::int64_t j = 1; j <= bottom; ++j) {
    c = c * static_cast<unsigned __int128>(top - bottom + j) / static_cast<unsigned __int128>(j);
    if (c > limit) return cap + 1;
  }
  return static_cast<std::int64_t>(c);
}

std::int64_t monomial_count(int r, int d) {
  if (d < 0 || r <= 0) return d == 0 && r == 0 ? 1 : 0;
  return binomial(d + r - 1, r - 1).convert_to<std::int64_t>();
}

BinomialExpansion expand(std::int64_t n, int i) {
  if (i < 1) throw InvalidDegree("binomial expansion degree must be >= 1, got " + std::to_string(i));
  if (n < 0) throw Error("binomial expansion of a negative integer: " + std::to_string(n));
  BinomialExpansion out;
  out.n = n;
  out.degree = i;
  std::int64_t rest = n;
  for (int k = i; k >= 1 && rest > 0; --k) {
    // Largest t with C(t, k) <= rest; C(k, k) = 1 <= rest and C(rest + k, k) > rest.
    std::int64_t lo = k;
    std::int64_t hi = rest + k;
    while (hi - lo > 1) {
      std::int64_t mid = lo + (hi - lo) / 2;
      if (binomial_capped(mid, k, rest) <= rest) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out.terms.push_back({lo, k});
    rest -= binomial_capped(lo, k, rest);
  }
  return out;
}

std::int64_t green_reduce(std::int64_t n, int i) {
  const auto e = expand(n, i);
  std::int64_t sum = 0;
  for (const auto& t : e.terms) sum += binomial_capped(t.top - 1, t.bottom, n);
  return sum;
}

BigInt macaulay_bound(std::int64_t n, int i) {
  const auto e = expand(n, i);
  BigInt sum = 0;
  for (const auto& t : e.terms) sum += binomial(t.top + 1, t.bottom + 1);
  return sum;
}

bool is_o_sequence(std::span<const std::int64_t> seq) {
  if (seq.empty() || seq[0] != 1) return false;
  bool ended = false;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] < 0) return false;
    if (ended && seq[i] != 0) return false;
    if (seq[i] == 0) ended = true;
  }
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i] == 0) break;
    if (BigInt(seq[i + 1]) > macaulay_bound(seq[i], static_cast<int>(i))) return false;
  }
  return true;
}

std::vector<std::int64_t> first_difference(std::span<const std::int64_t> seq, int upto) {
  std::vector<std::int64_t> out;
  for (int i = 0; i <= upto && i < static_cast<int>(seq.size()); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out.push_back(i == 0 ? seq[0] : seq[idx] - seq[idx - 1]);
  }
  return out;
}

bool is_o_sequence(const HVector& h) { return is_o_sequence(std::span(h.entries())); }

bool is_symmetric(const HVector& h) {
  const auto& v = h.entries();
  return std::equal(v.begin(), v.end(), v.rbegin());
}

bool is_unimodal(const HVector& h) {
  const auto& v = h.entries();
  bool decreased = false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > v[i + 1]) decreased = true;
    if (decreased && v[i] < v[i + 1]) return false;
  }
  return true;
}

bool is_si_sequence(const HVector& h) {
  if (h[0] != 1 || !is_symmetric(h)) return false;
  const auto diff = first_difference(std::span(h.entries()), h.socle_degree() / 2);
  return is_o_sequence(std::span(diff));
}

std::string Certificate::tag() const {
  switch (kind) {
    case Kind::kStanleyCodimLe3:
      return "STANLEY_CODIM_LE_3";
    case Kind::kQuarticUnimodal:
      return "THM_3_1_UNIMODAL";
    case Kind::kGrowthUnimodal:
      return "THM_3_3_UNIMODAL(" + std::to_string(s) + ")";
    case Kind::kQuarticSi:
      return "THM_4_1_SI";
  }
  return "?";
}

std::vector<Certificate> guarantees(const HVector& h) {
  if (h[0] != 1 || !is_symmetric(h))
    throw NotGorensteinCandidate("h-vector " + h.to_string() +
                                 " is not symmetric with h_0 = 1");
  std::vector<Certificate> out;
  const std::int64_t codim = h.value(1);
  const int e = h.socle_degree();
  const bool quartic_ok = e < 4 || h.value(4) <= 33;
  if (codim <= 3) out.push_back({Certificate::Kind::kStanleyCodimLe3});
  if (codim <= 4 && quartic_ok) out.push_back({Certificate::Kind::kQuarticUnimodal});
  for (int s = 1; 2 * (s + 1) < e; ++s) {
    if (h.value(s) <= 2LL * s * s + 1) out.push_back({Certificate::Kind::kGrowthUnimodal, s});
  }
  if (codim <= 4 && quartic_ok) out.push_back({Certificate::Kind::kQuarticSi});
  return out;
}

}  // namespace gor
