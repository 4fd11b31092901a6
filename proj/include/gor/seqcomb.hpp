#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gor {

using BigInt = boost::multiprecision::cpp_int;

// Finite sequence of positive integers indexed by degree. Trailing zeros are
// trimmed on construction; a zero followed by a positive entry is rejected.
// h_0 = 1 is not enforced here so the rows of restriction tables fit too.
class HVector {
 public:
  HVector() = default;
  explicit HVector(std::vector<std::int64_t> entries);
  HVector(std::initializer_list<std::int64_t> entries)
      : HVector(std::vector<std::int64_t>(entries)) {}

  // Comma separated literal such as "1,4,10,4,1".
  static HVector parse(std::string_view text);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int socle_degree() const { return static_cast<int>(entries_.size()) - 1; }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  // Entry in degree i, or 0 outside 0..e.
  std::int64_t value(int i) const;

  std::string to_string() const;

  friend bool operator==(const HVector&, const HVector&) = default;
  friend auto operator<=>(const HVector&, const HVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

struct BinomialTerm {
  std::int64_t top;
  int bottom;
  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

// The i-binomial expansion n = C(top_i, i) + C(top_{i-1}, i-1) + ... + C(top_j, j)
// with top_i > top_{i-1} > ... > top_j >= j >= 1.
struct BinomialExpansion {
  std::int64_t n = 0;
  int degree = 1;
  std::vector<BinomialTerm> terms;

  std::int64_t evaluate() const;
  // Strict descent of tops, consecutive bottoms from `degree`, top >= bottom >= 1.
  bool well_formed() const;

  friend bool operator==(const BinomialExpansion&, const BinomialExpansion&) = default;
};

// Exact binomial coefficient; zero when bottom < 0 or top < bottom.
BigInt binomial(std::int64_t top, std::int64_t bottom);

// min(C(top, bottom), cap + 1), computed without overflow for any int64 cap.
std::int64_t binomial_capped(std::int64_t top, std::int64_t bottom, std::int64_t cap);

// Number of monomials of degree d in r variables, C(d+r-1, r-1); 0 for d < 0.
std::int64_t monomial_count(int r, int d);

BinomialExpansion expand(std::int64_t n, int i);

// n_{<i>}: every top lowered by one, bottoms kept.
std::int64_t green_reduce(std::int64_t n, int i);

// n^{<i>}: every top and bottom raised by one (Macaulay's growth bound).
BigInt macaulay_bound(std::int64_t n, int i);

// Raw-sequence forms. Zero entries terminate the sequence; negative entries
// and positive entries after a zero make the sequence invalid.
bool is_o_sequence(std::span<const std::int64_t> seq);
// (h_0, h_1 - h_0, ..., h_upto - h_{upto-1}).
std::vector<std::int64_t> first_difference(std::span<const std::int64_t> seq, int upto);

bool is_o_sequence(const HVector& h);
bool is_symmetric(const HVector& h);
bool is_unimodal(const HVector& h);
bool is_si_sequence(const HVector& h);

struct Certificate {
  enum class Kind {
    kStanleyCodimLe3,   // h_1 <= 3
    kQuarticUnimodal,   // h_1 <= 4 and h_4 <= 33
    kGrowthUnimodal,    // exists s with s + 1 < e/2 and h_s <= 2 s^2 + 1
    kQuarticSi,         // h_1 <= 4 and h_4 <= 33
  };
  Kind kind;
  int s = 0;  // only for kGrowthUnimodal

  std::string tag() const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Certificates whose hypotheses h satisfies. Only hypotheses are inspected.
// A missing h_4 (socle degree < 4) counts as h_4 <= 33.
// Throws NotGorensteinCandidate unless h is symmetric with h_0 = 1.
std::vector<Certificate> guarantees(const HVector& h);

}  // namespace gor
