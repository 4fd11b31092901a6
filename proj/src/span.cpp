#include "gor/span.hpp"

#include "gor/errors.hpp"

namespace gor {

DegreeSpan::DegreeSpan(const PrimeField& field, int r, int d)
    : field_(field), r_(r), d_(d), basis_(0, MonomialBasis::get(r, d).size()) {
  const auto n = ambient_dim();
  free_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) free_.push_back(i);
}

DegreeSpan::DegreeSpan(const PrimeField& field, int r, int d, Matrix rows)
    : field_(field), r_(r), d_(d) {
  if (rows.rows() > 0 && rows.cols() != ambient_dim())
    throw DimensionError("span rows have " + std::to_string(rows.cols()) + " columns, expected " +
                         std::to_string(ambient_dim()));
  if (rows.rows() == 0) rows = Matrix(0, ambient_dim());
  set_basis(rref(std::move(rows), field_));
}

void DegreeSpan::set_basis(Echelon e) {
  basis_ = std::move(e.reduced);
  pivots_ = std::move(e.pivots);
  free_.clear();
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      free_.push_back(c);
    }
  }
}

DegreeSpan DegreeSpan::full(const PrimeField& field, int r, int d) {
  const auto n = MonomialBasis::get(r, d).size();
  Matrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return DegreeSpan(field, r, d, std::move(id));
}

DegreeSpan DegreeSpan::of(const PrimeField& field, int r, int d, const std::vector<GradedPoly>& polys) {
  return DegreeSpan(field, r, d).with(polys);
}

std::vector<GradedPoly> DegreeSpan::basis_polys() const {
  std::vector<GradedPoly> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    auto r = basis_.row(i);
    out.emplace_back(field_, r_, d_, std::vector<Elem>(r.begin(), r.end()));
  }
  return out;
}

std::vector<Elem> DegreeSpan::reduce(std::span<const Elem> v) const {
  std::vector<Elem> w(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Elem c = w[pivots_[k]];
    if (!c) continue;
    auto b = basis_.row(k);
    for (std::size_t j = pivots_[k]; j < w.size(); ++j) w[j] = field_.sub(w[j], field_.mul(c, b[j]));
  }
  return w;
}

Matrix DegreeSpan::quotient_coordinates(const Matrix& vectors) const {
  Matrix out(vectors.rows(), free_.size());
  const auto n = static_cast<std::ptrdiff_t>(vectors.rows());
#pragma omp parallel for schedule(static) if (n * static_cast<std::ptrdiff_t>(ambient_dim()) > 65536)
  for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    auto w = reduce(vectors.row(i));
    for (std::size_t k = 0; k < free_.size(); ++k) out(i, k) = w[free_[k]];
  }
  return out;
}

bool DegreeSpan::contains(const GradedPoly& f) const {
  if (f.vars() != r_ || f.degree() != d_) return false;
  auto w = reduce(f.coeffs());
  for (auto c : w)
    if (c) return false;
  return true;
}

bool DegreeSpan::contains(const DegreeSpan& other) const {
  for (const auto& p : other.basis_polys())
    if (!contains(p)) return false;
  return true;
}

DegreeSpan DegreeSpan::sum(const DegreeSpan& other) const {
  if (other.r_ != r_ || other.d_ != d_) throw DimensionError("sum of spans in different degrees");
  Matrix rows = basis_;
  for (std::size_t i = 0; i < other.basis_.rows(); ++i) rows.append_row(other.basis_.row(i));
  return DegreeSpan(field_, r_, d_, std::move(rows));
}

DegreeSpan DegreeSpan::with(const std::vector<GradedPoly>& polys) const {
  Matrix rows = basis_;
  for (const auto& p : polys) {
    if (p.vars() != r_ || p.degree() != d_) throw DimensionError("form does not live in this degree");
    if (!(p.field() == field_)) throw FieldMismatch("form over a different field");
    rows.append_row(p.coeffs());
  }
  return DegreeSpan(field_, r_, d_, std::move(rows));
}

}  // namespace gor
