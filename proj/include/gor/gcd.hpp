#pragma once

#include <optional>

#include "gor/poly.hpp"
#include "gor/span.hpp"

namespace gor {

// Greatest common divisor of two forms (of possibly different degrees),
// normalized monic for the graded-lex leading monomial. Its degree is the
// largest k for which u f = v g has a nonzero solution with deg u = deg g - k,
// found by rank computations; the cofactor u then gives gcd = g / u.
// Throws UndefinedGcd if both are zero.
GradedPoly gcd(const GradedPoly& f, const GradedPoly& g);
// Same result by a primitive Euclidean sequence on the forms dehomogenized at
// x1, in a recursive dense representation with content removal. Exponential
// in the degree; kept as an independent reference for small inputs.
GradedPoly gcd_euclidean(const GradedPoly& f, const GradedPoly& g);

// GCD of all basis elements of a nonzero span; degree 0 means none.
GradedPoly span_gcd(const DegreeSpan& v);
GradedPoly span_gcd(const std::vector<GradedPoly>& forms);

// f / g when g divides f exactly, by multivariate trial division.
std::optional<GradedPoly> exact_quotient(const GradedPoly& f, const GradedPoly& g);

}  // namespace gor
