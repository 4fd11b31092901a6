#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gor/field.hpp"

namespace gor {

// Dense row-major matrix over Z/p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void append_row(std::span<const Elem> r);
  // Keeps the first n rows.
  void truncate_rows(std::size_t n);
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

// Reduced row echelon form: `reduced` holds exactly rank() nonzero rows,
// row k has a 1 in column pivots[k] and zeros in every other pivot column.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

namespace kernels {

// Reference implementations, kept single-threaded for testing.
namespace serial {
Echelon rref(Matrix m, const PrimeField& f);
Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& f);
}  // namespace serial

// OpenMP implementations; results are identical to serial ones.
namespace omp {
Echelon rref(Matrix m, const PrimeField& f);
Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& f);
}  // namespace omp

}  // namespace kernels

// Dispatch: parallel kernels for large matrices outside parallel regions.
Echelon rref(Matrix m, const PrimeField& f);
Matrix multiply(const Matrix& a, const Matrix& b, const PrimeField& f);
std::size_t rank(Matrix m, const PrimeField& f);

// Basis (in RREF) of { x : x * a = 0 }.
Matrix left_kernel(const Matrix& a, const PrimeField& f);

// Sets the number of OpenMP workers used by the kernels and trial loops.
void set_worker_count(int n);

}  // namespace gor
