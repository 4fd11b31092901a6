#include "gor/monomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "gor/errors.hpp"
#include "gor/seqcomb.hpp"

namespace gor {

namespace {

// Pascal table C(n, k) for the index formula.
struct Pascal {
  static constexpr int kMaxN = 512;
  static constexpr int kMaxK = 64;
  std::vector<std::uint64_t> table;
  Pascal() : table(static_cast<std::size_t>(kMaxN) * kMaxK, 0) {
    for (int n = 0; n < kMaxN; ++n) {
      at(n, 0) = 1;
      for (int k = 1; k < kMaxK && k <= n; ++k) at(n, k) = at(n - 1, k - 1) + (k <= n - 1 ? at(n - 1, k) : 0);
    }
  }
  std::uint64_t& at(int n, int k) { return table[static_cast<std::size_t>(n) * kMaxK + static_cast<std::size_t>(k)]; }
  std::uint64_t operator()(int n, int k) const {
    if (k < 0 || n < k) return 0;
    if (n >= kMaxN || k >= kMaxK) return binomial(n, k).convert_to<std::uint64_t>();
    return table[static_cast<std::size_t>(n) * kMaxK + static_cast<std::size_t>(k)];
  }
};

const Pascal& pascal() {
  static const Pascal p;
  return p;
}

void fill_exponents(int r, int d, std::vector<int>& cur, int pos, std::vector<int>& out) {
  if (pos == r - 1) {
    cur[static_cast<std::size_t>(pos)] = d;
    out.insert(out.end(), cur.begin(), cur.end());
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur[static_cast<std::size_t>(pos)] = a;
    fill_exponents(r, d - a, cur, pos + 1, out);
  }
}

}  // namespace

std::size_t monomial_index(std::span<const int> exps) {
  const int r = static_cast<int>(exps.size());
  int rem = std::accumulate(exps.begin(), exps.end(), 0);
  const auto& c = pascal();
  std::size_t idx = 0;
  // Monomials sharing the prefix a_0..a_{k-1} with a larger k-th exponent
  // come first: there are C(rem - a_k - 1 + r - k - 1, r - k - 1) of them.
  for (int k = 0; k + 1 < r; ++k) {
    const int a = exps[static_cast<std::size_t>(k)];
    idx += c(rem - a - 1 + r - k - 1, r - k - 1);
    rem -= a;
  }
  return idx;
}

MonomialBasis::MonomialBasis(int r, int d) : r_(r), d_(d) {
  if (r < 1) throw DimensionError("monomial basis needs at least one variable");
  if (d < 0) throw InvalidDegree("negative degree " + std::to_string(d));
  count_ = static_cast<std::size_t>(monomial_count(r, d));
  exps_.reserve(count_ * static_cast<std::size_t>(r));
  std::vector<int> cur(static_cast<std::size_t>(r), 0);
  fill_exponents(r, d, cur, 0, exps_);
  up_.resize(count_ * static_cast<std::size_t>(r));
  std::vector<int> tmp(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < count_; ++i) {
    auto e = exponents(i);
    for (int j = 0; j < r; ++j) {
      std::copy(e.begin(), e.end(), tmp.begin());
      ++tmp[static_cast<std::size_t>(j)];
      up_[i * static_cast<std::size_t>(r) + static_cast<std::size_t>(j)] = monomial_index(tmp);
    }
  }
}

const MonomialBasis& MonomialBasis::get(int r, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{r, d}];
  if (!slot) slot.reset(new MonomialBasis(r, d));
  return *slot;
}

std::size_t MonomialBasis::index_of(std::span<const int> exps) const {
  return monomial_index(exps);
}

}  // namespace gor
