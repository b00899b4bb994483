#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "tcores/partition.hpp"
#include "tcores/report.hpp"
#include "tcores/squares.hpp"

namespace tcores {

/// Positive definite binary quadratic form a u^2 + b uv + c v^2.
struct BQF {
  Int a = 0;
  Int b = 0;
  Int c = 0;

  Int discriminant() const noexcept { return b * b - 4 * a * c; }

  friend bool operator==(const BQF&, const BQF&) = default;
  friend auto operator<=>(const BQF&, const BQF&) = default;
};

/// "(a,b,c)"
std::string to_string(const BQF& q);

/// Gaussian reduction to |b| <= a <= c, b >= 0 when |b| = a or a = c.
/// Throws DomainError unless the form is positive definite.
BQF reduce(const BQF& q);
bool is_reduced(const BQF& q);

/// Reduced forms of discriminant D (D < 0, D = 0 or 1 mod 4), ordered by (a, b).
std::vector<BQF> reduced_forms(Int D);
Int class_count(Int D);
/// Reduced forms whose gcd(a, b, c) is not divisible by 7.
Int class_count_7primitive(Int D);

struct Rational {
  Int num = 0;
  Int den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};
std::string to_string(const Rational& r);

/// Class count with weight 1/2 on forms equivalent to a(u^2 + v^2) and 1/3
/// on a(u^2 + uv + v^2).
Rational class_count_hurwitz(Int D);

/// (m, n) with m x n = (x, y, z).
struct GaussLift {
  std::array<Int, 3> m{};
  std::array<Int, 3> n{};
  friend bool operator==(const GaussLift&, const GaussLift&) = default;
};

std::array<Int, 3> cross(const std::array<Int, 3>& m, const std::array<Int, 3>& n);

/// Bounded search for a lift with |m_i| <= bound. bound = 0 grows the radius
/// geometrically up to 2(1 + ceil(sqrt(x^2+y^2+z^2))). Candidates m are
/// tried by increasing |m|^2, ties in descending lexicographic order, and n
/// is the solution with the smallest non-negative n_i at the first nonzero
/// m_i. Throws ResourceError when the radius is exhausted.
GaussLift gauss_lift(Int x, Int y, Int z, Int bound = 0);

/// (sum m_i^2, 2 sum m_i n_i, sum n_i^2), discriminant -4(x^2+y^2+z^2).
BQF form_from_lift(const GaussLift& l);

/// Reduced form with b replaced by |b|, so a class and its inverse agree.
BQF canonical_class(const BQF& q);

/// Self-conjugate 6-core -> reduced form of discriminant -96n-140, with a
/// class and its inverse identified.
BQF phi_sc6(const Partition& p);

/// Every member of SC_6(n) maps to discriminant -96n-140, every signed
/// permutation of its triple gives the same class up to inverse, and the
/// image is counted against the reduced forms of that discriminant.
ReportRecord sc6_forms_check(Int n);

}  // namespace tcores
