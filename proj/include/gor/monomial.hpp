#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gor {

// The monomials of degree d in r variables, in graded-lexicographic order
// with x1 > x2 > ... > xr (so x1^d has index 0). Every matrix layout and
// every file format depends on this order.
class MonomialBasis {
 public:
  // Shared, immutable, thread-safe cache.
  static const MonomialBasis& get(int r, int d);

  int vars() const { return r_; }
  int degree() const { return d_; }
  std::size_t size() const { return count_; }

  std::span<const int> exponents(std::size_t idx) const {
    return {exps_.data() + idx * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
  }

  // Inverse of exponents(); the exponent vector must have degree d.
  std::size_t index_of(std::span<const int> exps) const;

  // Index in degree d+1 of x_var * m_idx (var is 0-based).
  std::size_t times_variable(std::size_t idx, int var) const {
    return up_[idx * static_cast<std::size_t>(r_) + static_cast<std::size_t>(var)];
  }

 private:
  MonomialBasis(int r, int d);

  int r_;
  int d_;
  std::size_t count_;
  std::vector<int> exps_;
  std::vector<std::size_t> up_;
};

// Rank of an exponent vector among monomials of its degree.
std::size_t monomial_index(std::span<const int> exps);

}  // namespace gor
