#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gor/ideal.hpp"
#include "gor/rng.hpp"
#include "gor/seqcomb.hpp"

namespace gor {

// Dual forms act on R = k[x1..xr] by contraction: x^a o x^b = x^(b-a) when
// a <= b, else 0. No factorials appear, so every prime works.
//
// A dual form is kept as an integer recipe so the same form can be
// materialized over several primes.
struct DualTerm {
  enum class Kind { kMonomial, kDividedPower };
  Kind kind = Kind::kMonomial;
  std::int64_t coeff = 1;
  std::vector<int> exponents;        // kMonomial
  std::vector<std::int64_t> linear;  // kDividedPower: L^[e], coefficient of x^a is L^a
};

struct DualForm {
  int r = 0;
  int e = 0;
  std::string strategy;  // monomial | power-sum | subspace-power-sum | structured | random | input
  std::string description;
  std::vector<DualTerm> terms;

  GradedPoly materialize(const PrimeField& field) const;

  static DualForm from_poly(const GradedPoly& f, std::string strategy = "input");
  static DualForm monomial(std::vector<int> exponents);
  // Sum of divided powers of the given linear forms.
  static DualForm power_sum(int e, const std::vector<std::vector<std::int64_t>>& linear_forms,
                            std::string strategy = "power-sum");
};

// Rows: degree-i monomials; columns: degree-(e-i) monomials;
// entry = coefficient of m_i * m_{e-i} in F.
Matrix catalecticant(const GradedPoly& f, int i);

HVector hvector_of_dual(const GradedPoly& f);
HVector hvector_of_dual(const DualForm& form, const PrimeField& field);

// Ann(F)_d for 0 <= d <= e + 1.
DegreeSpan annihilator(const GradedPoly& f, int d);
// Ann(F) in degrees 0..e+1 (artinian: the top component is full).
GradedIdeal annihilator_ideal(const GradedPoly& f);
// Generators of Ann(F) of degree <= e + 1, minimal degree by degree.
IdealPresentation annihilator_presentation(const GradedPoly& f);

// Sampling mixture used by the randomized suites: 1/4 monomial, 1/4 power
// sums on random coordinate subspaces, 1/4 generic power sums (s in 1..40),
// 1/4 dense random.
DualForm sample_dual_form(Rng& rng, int r, int e);
DualForm random_power_sum(Rng& rng, int r, int e, int s);
DualForm random_dense(Rng& rng, int r, int e);
std::vector<std::int64_t> random_linear(Rng& rng, int r);

struct RealizationConfig {
  std::uint64_t seed = 1;
  std::size_t budget = 4000;
  int vars = 0;  // 0: use h_1
  // Accept non-SI targets and search the structured family only.
  bool experimental = false;
  std::vector<std::uint64_t> primes{PrimeField::kDefaultPrime, PrimeField::kSecondPrime};
};

struct RealizationResult {
  HVector target;
  int vars = 0;
  std::optional<DualForm> witness;
  std::uint64_t trial_seed = 0;
  std::size_t trials_used = 0;
  std::vector<std::uint64_t> primes_checked;
  std::vector<std::string> transcript;

  bool found() const { return witness.has_value(); }
};

// Throws NotSiSequence for non-SI targets (unless experimental) and DimensionError when h_1 > vars.
RealizationResult realization_search(const HVector& target, const RealizationConfig& config);

}  // namespace gor
