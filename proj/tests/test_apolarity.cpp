#include <gtest/gtest.h>

#include <algorithm>

#include "gor/apolarity.hpp"
#include "gor/enumerate.hpp"
#include "gor/errors.hpp"
#include "gor/kernels.hpp"

namespace gor {
namespace {

const PrimeField kF;

GradedPoly P(const std::string& text, int r = 4) { return parse_poly(text, kF, r); }

TEST(Catalecticant, ShapeAndEntries) {
  const auto f = P("x1^2*x2 + 5*x3^3");
  const auto c1 = catalecticant(f, 1);
  EXPECT_EQ(c1.rows(), 4u);
  EXPECT_EQ(c1.cols(), 10u);
  // x1 o F = x1*x2; the column of x1*x2 in degree 2 is index 1.
  EXPECT_EQ(c1(0, 1), 1u);
  EXPECT_EQ(c1(2, MonomialBasis::get(4, 2).index_of(std::vector<int>{0, 0, 2, 0})), 5u);
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const int e = static_cast<int>(rng.uniform(1, 7));
    const auto g = random_dense(rng, 3, e).materialize(kF);
    for (int i = 0; i <= e; ++i) {
      const auto a = catalecticant(g, i);
      const auto b = catalecticant(g, e - i);
      ASSERT_EQ(a.rows(), b.cols());
      for (std::size_t x = 0; x < a.rows(); ++x)
        for (std::size_t y = 0; y < a.cols(); ++y) ASSERT_EQ(a(x, y), b(y, x));
    }
  }
}

TEST(HVectorOfDual, Examples) {
  for (int e = 1; e <= 8; ++e) {
    std::vector<int> exps{e, 0, 0, 0};
    EXPECT_EQ(hvector_of_dual(GradedPoly::monomial(kF, exps)), HVector(std::vector<std::int64_t>(static_cast<std::size_t>(e) + 1, 1)));
  }
  EXPECT_EQ(hvector_of_dual(P("x1*x2*x3*x4")), HVector({1, 4, 6, 4, 1}));
  EXPECT_EQ(hvector_of_dual(DualForm::monomial({2, 1, 0}), kF), HVector({1, 2, 2, 1}));
}

// Divisor counting oracle: Ann of a monomial x^a has h_i = #{b <= a : |b| = i}.
TEST(HVectorOfDual, MonomialsMatchDivisorCounts) {
  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> a(3);
    for (auto& v : a) v = static_cast<int>(rng.uniform(0, 3));
    if (a[0] + a[1] + a[2] == 0) continue;
    const int e = a[0] + a[1] + a[2];
    std::vector<std::int64_t> count(static_cast<std::size_t>(e) + 1, 0);
    for (int i = 0; i <= a[0]; ++i)
      for (int j = 0; j <= a[1]; ++j)
        for (int k = 0; k <= a[2]; ++k) ++count[static_cast<std::size_t>(i + j + k)];
    EXPECT_EQ(hvector_of_dual(DualForm::monomial(a), kF), HVector(count));
  }
}

TEST(HVectorOfDual, GenericPowerSums) {
  for (std::uint64_t p : {PrimeField::kDefaultPrime, PrimeField::kSecondPrime}) {
    const PrimeField field(p);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      Rng rng(seed);
      for (int s : {1, 3, 5, 8, 12}) {
        const int r = 4, e = 5;
        const auto h = hvector_of_dual(random_power_sum(rng, r, e, s), field);
        for (int i = 0; i <= e; ++i)
          EXPECT_EQ(h.value(i), std::min<std::int64_t>({monomial_count(r, i), monomial_count(r, e - i), s}))
              << "p " << p << " seed " << seed << " s " << s << " i " << i;
      }
    }
  }
}

TEST(HVectorOfDual, RandomFormsAreSymmetricOSequences) {
  Rng rng(33);
  for (int t = 0; t < 1000; ++t) {
    const int r = static_cast<int>(rng.uniform(2, 4));
    const int e = static_cast<int>(rng.uniform(1, 8));
    const auto form = sample_dual_form(rng, r, e);
    const auto h = hvector_of_dual(form, kF);
    ASSERT_EQ(h.socle_degree(), e);
    ASSERT_EQ(h[0], 1);
    ASSERT_TRUE(is_symmetric(h)) << h.to_string();
    ASSERT_TRUE(is_o_sequence(h)) << h.to_string();
  }
}

TEST(HVectorOfDual, AnnihilatorIdealIsGorenstein) {
  Rng rng(34);
  for (int t = 0; t < 60; ++t) {
    const int r = static_cast<int>(rng.uniform(2, 4));
    const int e = static_cast<int>(rng.uniform(1, 6));
    const auto F = sample_dual_form(rng, r, e).materialize(kF);
    const auto pres = annihilator_presentation(F);
    const auto prof = hilbert(pres, e + 1);
    EXPECT_TRUE(prof.artinian_certified);
    ASSERT_EQ(prof.values.back(), 0);
    std::vector<std::int64_t> h(prof.values.begin(), prof.values.end() - 1);
    EXPECT_EQ(HVector(h), hvector_of_dual(F));
    EXPECT_TRUE(is_gorenstein(pres, e + 1));
  }
}

TEST(Annihilator, Dimensions) {
  const auto x1e = P("x1^3");
  const auto ann1 = annihilator(x1e, 1);
  EXPECT_EQ(ann1, DegreeSpan::of(kF, 4, 1, {P("x2"), P("x3"), P("x4")}));
  EXPECT_TRUE(annihilator(x1e, 4).is_full());
  EXPECT_EQ(annihilator(x1e, 0).dim(), 0u);
  Rng rng(35);
  for (int t = 0; t < 30; ++t) {
    const int e = static_cast<int>(rng.uniform(2, 6));
    const auto F = random_dense(rng, 4, e).materialize(kF);
    const auto h = hvector_of_dual(F);
    for (int d = 0; d <= e; ++d) {
      const auto ann = annihilator(F, d);
      EXPECT_EQ(static_cast<std::int64_t>(ann.dim()), monomial_count(4, d) - h.value(d));
      // Every annihilator contracts F to zero: Ann_d is the kernel of Cat_d.
      const auto cat = catalecticant(F, d);
      const auto prod = multiply(ann.basis(), cat, kF);
      for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j) ASSERT_EQ(prod(i, j), 0u);
    }
  }
}

TEST(DualFormRecipe, SameIntegerFormOverEveryPrime) {
  Rng rng(36);
  const auto form = random_power_sum(rng, 3, 4, 3);
  const PrimeField q(PrimeField::kSecondPrime);
  EXPECT_EQ(hvector_of_dual(form, kF), hvector_of_dual(form, q));
  const auto f = P("2*x1^2 - x2*x3", 3);
  EXPECT_EQ(DualForm::from_poly(f).materialize(kF), f);
  // Divided power of x1 + x2 in degree 2: x1^2 + x1 x2 + x2^2.
  EXPECT_EQ(DualForm::power_sum(2, {{1, 1}}).materialize(kF), P("x1^2 + x1*x2 + x2^2", 2));
}

TEST(Realization, AllCodimFourQuarticTargets) {
  std::vector<HVector> targets;
  SiEnumerator it(4, 4);
  while (auto h = it.next()) targets.push_back(*h);
  targets.push_back(HVector({1, 4, 4, 1}));
  targets.push_back(HVector({1, 1, 1, 1}));
  ASSERT_EQ(targets.size(), 9u);
  for (const auto& target : targets) {
    RealizationConfig cfg;
    cfg.vars = 4;
    const auto res = realization_search(target, cfg);
    ASSERT_TRUE(res.found()) << target.to_string();
    EXPECT_EQ(res.primes_checked.size(), 2u);
    for (std::uint64_t p : cfg.primes) EXPECT_EQ(hvector_of_dual(*res.witness, PrimeField(p)), target);
  }
}

TEST(Realization, Deterministic) {
  RealizationConfig cfg;
  cfg.seed = 99;
  const auto a = realization_search(HVector({1, 4, 7, 4, 1}), cfg);
  const auto b = realization_search(HVector({1, 4, 7, 4, 1}), cfg);
  ASSERT_TRUE(a.found());
  EXPECT_EQ(a.trial_seed, b.trial_seed);
  EXPECT_EQ(a.witness->materialize(kF), b.witness->materialize(kF));
  EXPECT_EQ(a.transcript, b.transcript);
}

TEST(Realization, Rejections) {
  EXPECT_THROW(realization_search(HVector({1, 13, 12, 13, 1}), {}), NotSiSequence);
  EXPECT_THROW(realization_search(HVector({1, 4, 5, 8, 5, 4, 1}), {}), NotSiSequence);
  RealizationConfig cfg;
  cfg.vars = 3;
  EXPECT_THROW(realization_search(HVector({1, 4, 4, 1}), cfg), DimensionError);
  cfg.vars = 4;
  cfg.budget = 0;
  const auto none = realization_search(HVector({1, 4, 10, 4, 1}), cfg);
  EXPECT_FALSE(none.found());
  EXPECT_FALSE(none.transcript.empty());
}

}  // namespace
}  // namespace gor
