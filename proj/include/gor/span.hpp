#pragma once

#include <vector>

#include "gor/kernels.hpp"
#include "gor/poly.hpp"

namespace gor {

// A subspace of the degree-d forms in r variables, stored as a basis in
// reduced row-echelon form over the canonical monomial order.
class DegreeSpan {
 public:
  DegreeSpan(const PrimeField& field, int r, int d);  // zero subspace
  DegreeSpan(const PrimeField& field, int r, int d, Matrix rows);

  static DegreeSpan full(const PrimeField& field, int r, int d);
  static DegreeSpan of(const PrimeField& field, int r, int d, const std::vector<GradedPoly>& polys);

  const PrimeField& field() const { return field_; }
  int vars() const { return r_; }
  int degree() const { return d_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return MonomialBasis::get(r_, d_).size(); }
  std::size_t codim() const { return ambient_dim() - dim(); }
  bool is_full() const { return dim() == ambient_dim(); }
  bool is_zero() const { return dim() == 0; }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<GradedPoly> basis_polys() const;
  // Columns that are not pivots: coordinates of the quotient R_d / span.
  const std::vector<std::size_t>& free_columns() const { return free_; }

  // v minus its projection on the span (zero in every pivot column).
  std::vector<Elem> reduce(std::span<const Elem> v) const;
  // Coordinates of each row of `vectors` in R_d / span (one column per free column).
  Matrix quotient_coordinates(const Matrix& vectors) const;

  bool contains(const GradedPoly& f) const;
  bool contains(const DegreeSpan& other) const;
  DegreeSpan sum(const DegreeSpan& other) const;
  DegreeSpan with(const std::vector<GradedPoly>& polys) const;

  friend bool operator==(const DegreeSpan& a, const DegreeSpan& b) {
    return a.field_ == b.field_ && a.r_ == b.r_ && a.d_ == b.d_ && a.basis_ == b.basis_;
  }

 private:
  void set_basis(Echelon e);

  PrimeField field_;
  int r_;
  int d_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
};

}  // namespace gor
