#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gor/errors.hpp"
#include "gor/seqcomb.hpp"

namespace gor {
namespace {

// Pascal's triangle in 128-bit arithmetic, independent of binomial().
unsigned __int128 pascal(int n, int k) {
  static std::map<std::pair<int, int>, unsigned __int128> memo;
  if (k < 0 || k > n) return 0;
  if (k == 0 || k == n) return 1;
  auto key = std::make_pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  return memo[key] = pascal(n - 1, k - 1) + pascal(n - 1, k);
}

// Brute-force i-binomial expansion: try every strictly descending top chain.
bool find_expansion(std::int64_t n, int k, std::int64_t max_top, std::vector<BinomialTerm>& out) {
  if (n == 0) return true;
  if (k == 0) return false;
  for (std::int64_t top = max_top; top >= k; --top) {
    const auto c = static_cast<std::int64_t>(pascal(static_cast<int>(top), k));
    if (c > n) continue;
    out.push_back({top, k});
    if (find_expansion(n - c, k - 1, top - 1, out)) return true;
    out.pop_back();
    return false;  // the largest admissible top is forced
  }
  return false;
}

// Monomials of degree d in r variables, as exponent vectors in lex order (x1 first).
std::vector<std::vector<int>> lex_monomials(int r, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(r), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == r - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[static_cast<std::size_t>(pos)] = a;
      rec(pos + 1, left - a);
    }
  };
  rec(0, d);
  return out;
}

// Size of R_1 * L for the lex segment L of the first n degree-i monomials.
std::int64_t lex_segment_growth(std::int64_t n, int i, int r) {
  const auto mons = lex_monomials(r, i);
  std::set<std::vector<int>> up;
  for (std::int64_t k = 0; k < n; ++k) {
    for (int j = 0; j < r; ++j) {
      auto m = mons[static_cast<std::size_t>(k)];
      ++m[static_cast<std::size_t>(j)];
      up.insert(m);
    }
  }
  return static_cast<std::int64_t>(up.size());
}

TEST(HVector, TrimsTrailingZerosAndRejectsBadInput) {
  EXPECT_EQ(HVector({1, 4, 4, 1, 0, 0}).size(), 4u);
  EXPECT_THROW(HVector({1, 0, 1}), InvalidHVector);
  EXPECT_THROW(HVector({1, -2, 1}), InvalidHVector);
  EXPECT_THROW(HVector({0, 0}), InvalidHVector);
  EXPECT_EQ(HVector::parse("1,4,10,4,1"), HVector({1, 4, 10, 4, 1}));
  EXPECT_EQ(HVector::parse("(1, 4, 4, 1)"), HVector({1, 4, 4, 1}));
  EXPECT_THROW(HVector::parse("1,,4"), InvalidHVector);
  EXPECT_THROW(HVector::parse("1;4"), InvalidHVector);
  EXPECT_EQ(HVector({1, 4, 4, 1}).socle_degree(), 3);
  EXPECT_EQ(HVector({1, 4, 4, 1}).value(7), 0);
}

TEST(Binomial, MatchesPascal) {
  for (int n = 0; n <= 60; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), BigInt(pascal(n, k))) << n << " " << k;
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial_capped(60, 30, 1000), 1001);
  EXPECT_EQ(binomial_capped(10, 3, 1000), 120);
}

TEST(Expand, KnownExpansions) {
  const auto e = expand(33, 4);
  const std::vector<BinomialTerm> want{{6, 4}, {5, 3}, {4, 2}, {2, 1}};
  EXPECT_EQ(e.terms, want);
  EXPECT_TRUE(expand(0, 3).terms.empty());
  const std::vector<BinomialTerm> fifteen{{6, 5}, {5, 4}, {4, 3}};
  EXPECT_EQ(expand(15, 5).terms, fifteen);
  EXPECT_THROW(expand(5, 0), InvalidDegree);
}

TEST(Expand, AgreesWithBruteForce) {
  for (int i = 1; i <= 6; ++i) {
    for (std::int64_t n = 0; n <= 400; ++n) {
      std::vector<BinomialTerm> brute;
      ASSERT_TRUE(find_expansion(n, i, n + i, brute)) << n << " " << i;
      EXPECT_EQ(expand(n, i).terms, brute) << n << " " << i;
    }
  }
}

TEST(Expand, RoundTripProperty) {
  for (int i = 1; i <= 12; ++i) {
    for (std::int64_t n = 0; n <= 20000; n += (n < 2000 ? 1 : 7)) {
      const auto e = expand(n, i);
      ASSERT_EQ(e.evaluate(), n);
      ASSERT_TRUE(e.well_formed());
      ASSERT_EQ(expand(e.evaluate(), i), e);
    }
  }
}

TEST(GreenReduce, QuarticChain) {
  EXPECT_EQ(green_reduce(33, 4), 13);
  EXPECT_EQ(green_reduce(13, 4), 3);
  EXPECT_EQ(green_reduce(24, 4), 8);
  EXPECT_EQ(green_reduce(8, 4), 1);
  EXPECT_EQ(green_reduce(0, 4), 0);
}

TEST(MacaulayBound, Examples) {
  EXPECT_EQ(macaulay_bound(20, 3), 35);
  EXPECT_EQ(macaulay_bound(3, 1), 6);
  for (int i = 1; i <= 10; ++i) EXPECT_EQ(macaulay_bound(1, i), 1);
  EXPECT_EQ(macaulay_bound(0, 2), 0);
}

TEST(MacaulayBound, EqualsLexSegmentGrowth) {
  // A lex ideal whose quotient has n monomials in degree i leaves exactly
  // n^<i> standard monomials in degree i + 1.
  constexpr int kVars = 7;
  for (int i = 1; i <= 4; ++i) {
    const auto total = static_cast<std::int64_t>(lex_monomials(kVars, i).size());
    const auto next = static_cast<std::int64_t>(lex_monomials(kVars, i + 1).size());
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(total, 60); ++n)
      EXPECT_EQ(macaulay_bound(n, i), next - lex_segment_growth(total - n, i, kVars)) << n << " " << i;
  }
}

TEST(MacaulayBound, FullRingGrowth) {
  for (int r = 1; r <= 6; ++r)
    for (int i = 1; i <= 12; ++i)
      EXPECT_EQ(macaulay_bound(binomial(i + r - 1, i).convert_to<std::int64_t>(), i), binomial(i + r, i + 1));
}

TEST(Bounds, Monotone) {
  for (int i = 1; i <= 8; ++i) {
    for (std::int64_t n = 0; n < 3000; ++n) {
      ASSERT_LE(green_reduce(n, i), green_reduce(n + 1, i));
      ASSERT_LE(macaulay_bound(n, i), macaulay_bound(n + 1, i));
    }
  }
}

TEST(Identities, TwoSSquaredPlusOne) {
  for (std::int64_t s = 3; s <= 50; ++s) {
    const BigInt rhs = binomial(s + 2, s) + binomial(s + 1, s - 1) + binomial(s, s - 2) + binomial(s - 1, s - 3) - 1;
    EXPECT_EQ(BigInt(2 * s * s + 1), rhs) << s;
  }
}

TEST(Identities, ThreeJ) {
  for (std::int64_t j = 1; j <= 50; ++j)
    EXPECT_EQ(BigInt(3 * j), binomial(j + 1, j) + binomial(j, j - 1) + binomial(j - 1, j - 2)) << j;
}

TEST(Predicates, OSequence) {
  EXPECT_TRUE(is_o_sequence(HVector({1, 4, 10, 20, 35})));
  EXPECT_FALSE(is_o_sequence(HVector({1, 2, 4})));
  EXPECT_FALSE(is_o_sequence(HVector({1, 3, 1, 3})));
  EXPECT_FALSE(is_o_sequence(HVector({2, 3})));
  const std::vector<std::int64_t> ended{1, 3, 0, 0};
  EXPECT_TRUE(is_o_sequence(std::span(ended)));
  const std::vector<std::int64_t> revived{1, 3, 0, 2};
  EXPECT_FALSE(is_o_sequence(std::span(revived)));
}

TEST(Predicates, SequenceShapes) {
  const HVector stanley{1, 13, 12, 13, 1};
  EXPECT_FALSE(is_si_sequence(stanley));
  EXPECT_FALSE(is_unimodal(stanley));
  EXPECT_TRUE(is_symmetric(stanley));
  EXPECT_TRUE(is_si_sequence(HVector({1, 4, 4, 1})));
  EXPECT_FALSE(is_si_sequence(HVector({1, 4, 5, 8, 5, 4, 1})));
  EXPECT_TRUE(is_unimodal(HVector({1, 4, 5, 8, 5, 4, 1})));
  EXPECT_TRUE(is_unimodal(HVector({1, 1, 1})));
  EXPECT_TRUE(is_unimodal(HVector({1, 4, 10, 20, 10, 4, 1})));
  EXPECT_TRUE(is_symmetric(HVector({1, 4, 4, 1})));
  EXPECT_FALSE(is_symmetric(HVector({1, 4, 5, 1})));
}

// Every symmetric h with h_0 = 1, h_1 <= 5, e <= 8 and entries <= 40.
TEST(Predicates, SiImpliesUnimodalExhaustive) {
  std::size_t si_count = 0;
  for (int e = 1; e <= 8; ++e) {
    const int half = e / 2;
    std::vector<std::int64_t> free(static_cast<std::size_t>(half), 1);  // h_1..h_half
    for (;;) {
      std::vector<std::int64_t> h(static_cast<std::size_t>(e) + 1);
      h[0] = h[static_cast<std::size_t>(e)] = 1;
      for (int i = 1; i <= half; ++i) h[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(e - i)] = free[static_cast<std::size_t>(i - 1)];
      const HVector v(h);
      if (is_si_sequence(v)) {
        ++si_count;
        ASSERT_TRUE(is_unimodal(v)) << v.to_string();
        ASSERT_TRUE(is_o_sequence(v)) << v.to_string();
      }
      std::size_t k = 0;
      while (k < free.size()) {
        const std::int64_t cap = k == 0 ? 5 : 40;
        if (++free[k] <= cap) break;
        free[k++] = 1;
      }
      if (k == free.size()) break;
    }
  }
  EXPECT_GT(si_count, 0u);
}

TEST(Guarantees, Examples) {
  auto tags = [](const HVector& h) {
    std::vector<std::string> out;
    for (const auto& c : guarantees(h)) out.push_back(c.tag());
    return out;
  };
  EXPECT_EQ(tags({1, 4, 10, 20, 33, 20, 10, 4, 1}),
            (std::vector<std::string>{"THM_3_1_UNIMODAL", "THM_4_1_SI"}));
  EXPECT_EQ(tags({1, 3, 5, 3, 1}),
            (std::vector<std::string>{"STANLEY_CODIM_LE_3", "THM_3_1_UNIMODAL", "THM_4_1_SI"}));
  std::vector<std::int64_t> long_h{1, 5, 15, 35, 51};
  for (int i = 5; i <= 10; ++i) long_h.push_back(51);
  for (std::int64_t v : {35, 15, 5, 1}) long_h.push_back(v);
  ASSERT_EQ(long_h.size(), 15u);
  const auto t = tags(HVector(long_h));
  EXPECT_NE(std::find(t.begin(), t.end(), "THM_3_3_UNIMODAL(5)"), t.end());
  EXPECT_TRUE(tags({1, 5, 20, 5, 1}).empty());
  EXPECT_THROW(guarantees(HVector({1, 4, 5, 1})), NotGorensteinCandidate);
}

// Guarantees inspect hypotheses only: a non-unimodal vector still gets the tag.
TEST(Guarantees, HypothesesOnly) {
  const auto g = guarantees(HVector({1, 4, 3, 4, 1}));
  ASSERT_FALSE(g.empty());
  EXPECT_EQ(g.front().kind, Certificate::Kind::kQuarticUnimodal);
}

}  // namespace
}  // namespace gor
