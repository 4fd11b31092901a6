#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gor/span.hpp"

namespace gor {

// Generators of a homogeneous ideal in k[x1..xr] (mixed degrees allowed).
struct IdealPresentation {
  PrimeField field;
  int r;
  std::vector<GradedPoly> generators;

  IdealPresentation(const PrimeField& field, int r, std::vector<GradedPoly> generators);

  // min { j : I_j != 0 }, or -1 for the zero ideal.
  int initial_degree() const;
  int max_generator_degree() const;
  int degree_sum() const;
};

struct HilbertProfile {
  std::vector<std::int64_t> values;  // h(0..truncation)
  int truncation = 0;
  bool artinian_certified = false;   // h(truncation) = 0
};

// An ideal known degree by degree in 0..top. If the top component is the
// whole space the ideal is artinian and every higher component is full too.
class GradedIdeal {
 public:
  GradedIdeal(const PrimeField& field, int r, std::vector<DegreeSpan> components);

  static GradedIdeal generate(const IdealPresentation& ideal, int top);

  const PrimeField& field() const { return field_; }
  int vars() const { return r_; }
  int top_degree() const { return static_cast<int>(components_.size()) - 1; }
  bool artinian() const { return components_.back().is_full(); }

  // Degree d component; past the top only available when artinian.
  DegreeSpan component(int d) const;
  bool known(int d) const { return d <= top_degree() || artinian(); }

  std::vector<std::int64_t> hilbert(int upto) const;
  HilbertProfile profile() const;

  // (I : F) in degrees 0..top - deg F (0..top when artinian).
  GradedIdeal colon(const GradedPoly& f) const;
  // (I : F)_d for a single degree.
  DegreeSpan colon_component(const GradedPoly& f, int d) const;
  // I + (F).
  GradedIdeal plus(const GradedPoly& f) const;
  // Image of I in k[x1..xr]/(L), presented in r - 1 variables.
  GradedIdeal restrict(const GradedPoly& linear) const;
  // Degree-wise dimension of the socle of R/I in degrees 0..top - 1.
  std::vector<std::int64_t> socle() const;

 private:
  PrimeField field_;
  int r_;
  std::vector<DegreeSpan> components_;
};

// Elimination of the largest-index variable with a nonzero coefficient in L:
// x_k = -(1/l_k) * sum_{j != k} l_j x_j, the other variables renumbered in order.
class LinearRestriction {
 public:
  explicit LinearRestriction(const GradedPoly& linear);

  int eliminated() const { return k_; }
  int source_vars() const { return r_; }
  GradedPoly apply(const GradedPoly& f) const;
  // Matrix of the substitution on degree-d forms (rows: source monomials).
  Matrix matrix(int d) const;

 private:
  PrimeField field_;
  int r_;
  int k_;
  GradedPoly image_;  // image of x_k in r - 1 variables
};

DegreeSpan degree_span(const IdealPresentation& ideal, int d);
HilbertProfile hilbert(const IdealPresentation& ideal, int truncation);
std::vector<DegreeSpan> colon(const IdealPresentation& ideal, const GradedPoly& f, int upto);
IdealPresentation restrict(const IdealPresentation& ideal, const GradedPoly& linear);
// Throws Inconclusive when R/I is not artinian by `truncation`.
HilbertProfile socle_profile(const IdealPresentation& ideal, int truncation);
bool is_gorenstein(const IdealPresentation& ideal, int truncation);

// File format: a header line "r=<int> p=<prime>" followed by one polynomial
// per line. Blank lines and lines starting with '#' are skipped.
IdealPresentation parse_ideal(std::string_view text);
IdealPresentation read_ideal_file(const std::string& path);
std::string format_ideal(const IdealPresentation& ideal);

}  // namespace gor
