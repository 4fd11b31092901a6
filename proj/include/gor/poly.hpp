#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gor/field.hpp"
#include "gor/monomial.hpp"

namespace gor {

// Dense homogeneous polynomial of a single degree d in r variables over Z/p.
// Coefficients are indexed by MonomialBasis::get(r, d).
class GradedPoly {
 public:
  GradedPoly(const PrimeField& field, int r, int d);
  GradedPoly(const PrimeField& field, int r, int d, std::vector<Elem> coeffs);

  static GradedPoly monomial(const PrimeField& field, std::span<const int> exps, Elem coeff = 1);
  // x_{var+1}; var is 0-based.
  static GradedPoly variable(const PrimeField& field, int r, int var);
  static GradedPoly constant(const PrimeField& field, int r, Elem c);
  static GradedPoly linear(const PrimeField& field, std::span<const Elem> coeffs);

  const PrimeField& field() const { return field_; }
  int vars() const { return r_; }
  int degree() const { return d_; }
  const MonomialBasis& basis() const { return MonomialBasis::get(r_, d_); }

  std::span<const Elem> coeffs() const { return coeffs_; }
  std::span<Elem> coeffs() { return coeffs_; }
  Elem operator[](std::size_t i) const { return coeffs_[i]; }
  Elem& operator[](std::size_t i) { return coeffs_[i]; }
  Elem coeff(std::span<const int> exps) const { return coeffs_[monomial_index(exps)]; }

  bool is_zero() const;
  // Index of the graded-lex leading monomial; size() for the zero polynomial.
  std::size_t leading_index() const;
  std::size_t term_count() const;

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly scaled(Elem c) const;
  // Scaled so the leading coefficient is 1; zero stays zero.
  GradedPoly monic() const;

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

 private:
  void check_compatible(const GradedPoly& o) const;

  PrimeField field_;
  int r_;
  int d_;
  std::vector<Elem> coeffs_;
};

GradedPoly multiply(const GradedPoly& f, const GradedPoly& g);
GradedPoly power(const GradedPoly& f, int k);

// Text grammar: signed integer coefficients, variables x1..xr, '^' exponents,
// '*' products, '+'/'-' between terms, whitespace ignored, e.g.
// "3*x1^2*x2 - x3*x4^2". Inhomogeneous input raises DegreeMismatch.
// `line` is only used for error locations.
GradedPoly parse_poly(std::string_view text, const PrimeField& field, int r, int line = 1);

// Canonical text in graded-lex order with coefficients in (-p/2, p/2].
std::string format_poly(const GradedPoly& f);

}  // namespace gor
