#include "gor/kernels.hpp"

#include <algorithm>
#include <cassert>

#include <omp.h>

#include "gor/errors.hpp"

namespace gor {

void Matrix::append_row(std::span<const Elem> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw DimensionError("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void Matrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

namespace {

// row -= factor * pivot_row, over columns [from, cols).
inline void axpy_row(Elem* row, const Elem* piv, Elem factor, std::size_t from, std::size_t cols,
                     std::uint64_t p) {
  const std::uint64_t neg = p - factor;
  for (std::size_t k = from; k < cols; ++k) {
    row[k] = static_cast<Elem>((row[k] + neg * piv[k]) % p);
  }
}

inline void scale_row(Elem* row, Elem s, std::size_t from, std::size_t cols, std::uint64_t p) {
  for (std::size_t k = from; k < cols; ++k) row[k] = static_cast<Elem>(std::uint64_t{row[k]} * s % p);
}

template <bool Parallel>
Echelon rref_impl(Matrix m, const PrimeField& f) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::uint64_t p = f.modulus();
  Echelon out;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, rank);
    Elem* prow = m.row(rank).data();
    scale_row(prow, f.inv(prow[c]), c, cols, p);
    const auto n = static_cast<std::ptrdiff_t>(rows);
    const auto prank = static_cast<std::ptrdiff_t>(rank);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (i == prank) continue;
        Elem* r = m.row(static_cast<std::size_t>(i)).data();
        if (r[c]) axpy_row(r, prow, r[c], c, cols, p);
      }
    } else {
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (i == prank) continue;
        Elem* r = m.row(static_cast<std::size_t>(i)).data();
        if (r[c]) axpy_row(r, prow, r[c], c, cols, p);
      }
    }
    out.pivots.push_back(c);
    ++rank;
  }
  m.truncate_rows(rank);
  out.reduced = std::move(m);
  return out;
}

template <bool Parallel>
Matrix multiply_impl(const Matrix& a, const Matrix& b, const PrimeField& f) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  const std::uint64_t p = f.modulus();
  Matrix out(a.rows(), b.cols());
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
  auto body = [&](std::ptrdiff_t ii) {
    const auto i = static_cast<std::size_t>(ii);
    // Accumulate in 64 bits; each product is < 2^62, so reduce every step.
    std::vector<std::uint64_t> acc(b.cols(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t x = a(i, k);
      if (!x) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + x * brow[j]) % p;
    }
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = static_cast<Elem>(acc[j]);
  };
  if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
  }
  return out;
}

bool worth_parallel(std::size_t rows, std::size_t cols) {
  return rows * cols >= 64 * 1024 && omp_get_max_threads() > 1 && !omp_in_parallel();
}

}  // namespace

namespace kernels {
namespace serial {
Echelon rref(Matrix m, const PrimeField& f) { return rref_impl<false>(std::move(m), f); }
Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& f) { return multiply_impl<false>(a, b, f); }
}  // namespace serial
namespace omp {
Echelon rref(Matrix m, const PrimeField& f) { return rref_impl<true>(std::move(m), f); }
Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& f) { return multiply_impl<true>(a, b, f); }
}  // namespace omp
}  // namespace kernels

Echelon rref(Matrix m, const PrimeField& f) {
  if (worth_parallel(m.rows(), m.cols())) return kernels::omp::rref(std::move(m), f);
  return kernels::serial::rref(std::move(m), f);
}

Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& f) {
  if (worth_parallel(a.rows(), a.cols() * b.cols() / std::max<std::size_t>(1, a.cols())))
    return kernels::omp::multiply(a, b, f);
  return kernels::serial::multiply(a, b, f);
}

std::size_t rank(Matrix m, const PrimeField& f) { return rref(std::move(m), f).rank(); }

Matrix left_kernel(const Matrix& a, const PrimeField& f) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix aug(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    auto src = a.row(i);
    std::copy(src.begin(), src.end(), aug.row(i).begin());
    aug(i, n + i) = 1;
  }
  auto ech = rref(std::move(aug), f);
  Matrix out(0, m);
  for (std::size_t k = 0; k < ech.rank(); ++k) {
    if (ech.pivots[k] < n) continue;
    auto r = ech.reduced.row(k);
    out.append_row(r.subspan(n));
  }
  return out;
}

void set_worker_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace gor
