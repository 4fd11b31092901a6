#pragma once

#include <cstdint>

namespace gor {

using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

// Z/p for a prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1
  static constexpr std::uint64_t kSecondPrime = 2147483629;   // 2^31 - 19

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const {
    return static_cast<Elem>(a >= b ? a - b : a + p_ - b);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : static_cast<Elem>(p_ - a); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p_); }
  Elem pow(Elem a, std::uint64_t k) const;
  Elem inv(Elem a) const;  // a != 0
  Elem from_int(std::int64_t v) const;
  // Representative in (-p/2, p/2].
  std::int64_t to_signed(Elem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

}  // namespace gor
