#include "gor/field.hpp"

#include <string>

#include "gor/errors.hpp"

namespace gor {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (k) {
    if (k & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    k >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all 64-bit n.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 31)) throw Error("field modulus must be below 2^31: " + std::to_string(p));
  if (!is_prime(p)) throw Error("field modulus is not prime: " + std::to_string(p));
}

Elem PrimeField::pow(Elem a, std::uint64_t k) const {
  return static_cast<Elem>(powmod(a, k, p_));
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error("inverse of zero");
  return pow(a, p_ - 2);
}

Elem PrimeField::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

std::int64_t PrimeField::to_signed(Elem a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)
                    : static_cast<std::int64_t>(a);
}

}  // namespace gor
