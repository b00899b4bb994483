#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcores/ncoding.hpp"
#include "tcores/report.hpp"

namespace tcores {

using Triple = std::array<Int, 3>;

/// An integer vector together with the congruence data it was built for.
struct SquaresRep {
  std::vector<Int> values;
  Int modulus = 1;
  /// Residue of each coordinate, reduced into [0, modulus).
  std::vector<Int> residues;
  Int target = 0;

  friend bool operator==(const SquaresRep&, const SquaresRep&) = default;
};

std::string to_string(std::span<const Int> v);
std::string to_string(const Triple& v);

Int sum_of_squares(std::span<const Int> v);

enum class Equivalence { OS, BKM };

/// Canonical triple class. `values` are absolute values sorted descending.
/// Under OS the parity of negative entries is kept, unless an entry is
/// zero, in which case the OS and BKM classes coincide.
struct TripleClass {
  Triple values{};
  std::optional<int> sign_parity;
  Equivalence relation = Equivalence::BKM;

  friend bool operator==(const TripleClass&, const TripleClass&) = default;
  friend auto operator<=>(const TripleClass& a, const TripleClass& b) {
    if (auto c = a.values <=> b.values; c != 0) return c;
    return a.sign_parity.value_or(-1) <=> b.sign_parity.value_or(-1);
  }
};

std::string to_string(const TripleClass& c);

/// Absolute values sorted descending (any length).
std::vector<Int> canonical_bkm(std::span<const Int> v);
TripleClass canonical_bkm(const Triple& v);
TripleClass canonical_os(const Triple& v);
/// The projection p: forget the sign parity.
TripleClass project_to_bkm(const TripleClass& c);

// Sums-of-squares images of N-codings ---------------------------------------

/// x_j = t n_j + j. Lands in sum x_j = t(t-1)/2,
/// sum x_j^2 = 2tn + t(t-1)(2t-1)/6, x_j = j (mod t).
SquaresRep tcore_to_squares(const NCoding& n);
/// Inverse of tcore_to_squares; t is the vector length. Throws DomainError
/// on a residue or sum violation.
NCoding squares_to_tcore(std::span<const Int> x);
inline NCoding squares_to_tcore(const SquaresRep& x) { return squares_to_tcore(x.values); }

/// w_k = 2t n_k + 2k + 1 - t.
SquaresRep alpha_map(const NCoding& n);
/// Inverse of alpha_map; t is the vector length. Throws DomainError unless
/// w sums to zero, w_k = 2k + 1 - t (mod 2t) and the square sum has the
/// form 8tn + t(t^2-1)/3 with n >= 0.
NCoding alpha_inverse(std::span<const Int> w);
inline NCoding alpha_inverse(const SquaresRep& w) { return alpha_inverse(w.values); }

/// First floor(t/2) coordinates of an anti-symmetric alpha image. Throws
/// DomainError("not self-conjugate") otherwise.
SquaresRep sc_truncate(const SquaresRep& w);
/// Halves every coordinate of a truncated image for odd t.
SquaresRep sc_halve(const SquaresRep& truncated, int t);

/// Odd t: halve(truncate(alpha(N))) in reverse order, a vector of (t-1)/2
/// squares summing to tn + t(t^2-1)/24 whose coordinate j is -(j+1) mod t.
SquaresRep sc_odd_squares(const NCoding& n);
/// Even t: truncate(alpha(N)) in reverse order, t/2 squares summing to
/// 4tn + t(t^2-1)/6 whose coordinate j is -(2j+1) mod 2t.
SquaresRep sc_even_squares(const NCoding& n);

// Constrained representation enumeration -------------------------------------

struct RepConstraints {
  Int modulus = 1;
  /// Allowed residues per coordinate (mod modulus). An empty list, or an
  /// empty outer vector, means unconstrained.
  std::vector<std::vector<Int>> residues;
  std::optional<Int> sum;
};

/// Every integer vector of the given length with sum of squares `target`
/// that satisfies the constraints, in lexicographically ascending order.
std::vector<SquaresRep> enumerate_reps(Int target, int length, const RepConstraints& c = {});

/// BKM classes of all triples summing to `target`.
std::vector<TripleClass> triple_classes(Int target);
/// Number of ordered integer triples with x^2 + y^2 + z^2 = target.
Int count_triples(Int target);

// Theorem-level checks --------------------------------------------------------

enum class Theorem { Squares11, Squares12, Squares13, Alpha14, Alpha15 };

std::string to_string(Theorem th);
/// Parses "1.1" ... "1.5".
Theorem parse_theorem(const std::string& id);

/// The represented integer for (theorem, t, n).
Int theorem_target(Theorem th, int t, Int n);
/// Number of squares in the theorem's solution vectors.
int theorem_length(Theorem th, int t);
/// Congruence and linear data of the theorem's solution set.
RepConstraints theorem_constraints(Theorem th, int t);

/// Counts both sides and checks the explicit maps. Theorems 1.1-1.3 compare
/// the number of BKM classes of the solution set to c_t(n) resp. sc_t(n);
/// 1.4 and 1.5 compare the solution set to the image of alpha elementwise.
/// Throws DomainError when t < 3 or has the wrong parity for 1.2 / 1.3.
ReportRecord verify_theorem_counts(Theorem th, int t, Int n);

/// Theorem 1.1 one family at a time, the family of a t-core being the bead
/// count of its normalized abacus mod t: within every family, distinct cores
/// give distinct BKM classes. lhs sums the per-family class counts, rhs is c_t(n).
ReportRecord theorem11_family_check(int t, Int n);

}  // namespace tcores
