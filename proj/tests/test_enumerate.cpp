#include <gtest/gtest.h>

#include "gor/enumerate.hpp"
#include "gor/errors.hpp"

namespace gor {
namespace {

// Independent generation: every symmetric vector with h_0 = 1, h_1 = codim
// and h_i at most the number of degree-i monomials in codim variables,
// filtered by is_si_sequence.
std::vector<HVector> brute_force_si(int codim, int e) {
  std::vector<HVector> out;
  const int half = e / 2;
  if (e == 1) {
    if (codim == 1) out.push_back(HVector({1, 1}));
    return out;
  }
  std::vector<std::int64_t> caps(static_cast<std::size_t>(half) + 1);
  for (int i = 0; i <= half; ++i) caps[static_cast<std::size_t>(i)] = monomial_count(codim, i);
  std::vector<std::int64_t> mid(static_cast<std::size_t>(half) + 1, 1);  // h_2..h_half used
  for (;;) {
    std::vector<std::int64_t> h(static_cast<std::size_t>(e) + 1);
    for (int i = 0; i <= half; ++i) {
      const std::int64_t v = i == 0 ? 1 : i == 1 ? codim : mid[static_cast<std::size_t>(i)];
      h[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(e - i)] = v;
    }
    HVector v(h);
    if (is_si_sequence(v)) out.push_back(v);
    int k = half;
    while (k >= 2) {
      if (++mid[static_cast<std::size_t>(k)] <= caps[static_cast<std::size_t>(k)]) break;
      mid[static_cast<std::size_t>(k)] = 1;
      --k;
    }
    if (k < 2) break;
  }
  std::sort(out.begin(), out.end(), [half](const HVector& a, const HVector& b) {
    for (int i = 2; i <= half; ++i)
      if (a.value(i) != b.value(i)) return a.value(i) < b.value(i);
    return false;
  });
  return out;
}

TEST(EnumerateSi, SmallCases) {
  EXPECT_EQ(enumerate_si(4, 3), std::vector<HVector>{HVector({1, 4, 4, 1})});
  const auto four = enumerate_si(4, 4);
  ASSERT_EQ(four.size(), 7u);
  for (std::size_t k = 0; k < four.size(); ++k) EXPECT_EQ(four[k].value(2), 4 + static_cast<std::int64_t>(k));
  for (int e = 1; e <= 8; ++e) EXPECT_EQ(enumerate_si(1, e), std::vector<HVector>{HVector(std::vector<std::int64_t>(static_cast<std::size_t>(e) + 1, 1))});
  EXPECT_THROW(enumerate_si(0, 3), InvalidDegree);
}

TEST(EnumerateSi, MatchesBruteForce) {
  for (int codim = 1; codim <= 4; ++codim) {
    for (int e = 1; e <= 8; ++e) {
      const auto got = enumerate_si(codim, e);
      EXPECT_EQ(got, brute_force_si(codim, e)) << codim << " " << e;
      EXPECT_EQ(count_si(codim, e), BigInt(got.size())) << codim << " " << e;
      for (const auto& h : got) ASSERT_TRUE(is_si_sequence(h));
    }
  }
}

TEST(CountSi, Examples) {
  EXPECT_EQ(count_si(4, 3), 1);
  EXPECT_EQ(count_si(4, 4), 7);
  EXPECT_EQ(count_si(3, 4), BigInt(brute_force_si(3, 4).size()));
}

TEST(CountSi, LargeSocleDegreeStaysFeasible) {
  const auto n = count_si(4, 20);
  EXPECT_GT(n, 0);
  SiEnumerator it(4, 20);
  std::size_t seen = 0;
  while (it.next() && seen < 1000) ++seen;
  EXPECT_EQ(seen, 1000u);
}

// Reported rather than asserted: nothing in the theory forces it.
TEST(CountSi, MonotoneInCodimensionIsRecorded) {
  for (int e = 1; e <= 8; ++e) {
    for (int c = 1; c < 5; ++c) {
      if (count_si(c, e) > count_si(c + 1, e))
        std::cout << "note: count_si(" << c << "," << e << ") > count_si(" << c + 1 << "," << e << ")\n";
    }
  }
  SUCCEED();
}

TEST(GorensteinCodim4, QuarticFilter) {
  const auto all = enumerate_gorenstein_codim4(8, false);
  const auto kept = enumerate_gorenstein_codim4(8, true);
  const HVector h33{1, 4, 10, 20, 33, 20, 10, 4, 1};
  const HVector h34{1, 4, 10, 20, 34, 20, 10, 4, 1};
  const HVector h35{1, 4, 10, 20, 35, 20, 10, 4, 1};
  for (const auto& h : {h33, h34, h35}) ASSERT_TRUE(is_si_sequence(h));
  auto has = [](const std::vector<HVector>& v, const HVector& h) { return std::find(v.begin(), v.end(), h) != v.end(); };
  EXPECT_TRUE(has(kept, h33));
  EXPECT_FALSE(has(kept, h34));
  EXPECT_FALSE(has(kept, h35));
  EXPECT_TRUE(has(all, h34));
  std::size_t excluded = 0;
  for (const auto& h : all) excluded += h.value(4) >= 34;
  EXPECT_EQ(kept.size() + excluded, all.size());
  EXPECT_EQ(classify_codim4(h34), Codim4Status::kUndetermined);
  EXPECT_EQ(classify_codim4(h33), Codim4Status::kCharacterized);
  EXPECT_STREQ(to_string(Codim4Status::kUndetermined), "UNDETERMINED");
}

TEST(GorensteinCodim4, FilterNeverBitesBelowDegreeFive) {
  EXPECT_EQ(enumerate_gorenstein_codim4(3, true), std::vector<HVector>{HVector({1, 4, 4, 1})});
  EXPECT_EQ(enumerate_gorenstein_codim4(4, true), enumerate_si(4, 4));
}

}  // namespace
}  // namespace gor
