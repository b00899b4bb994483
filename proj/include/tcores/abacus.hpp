#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tcores/partition.hpp"

namespace tcores {

/// Compact t-abacus of a t-core: counts[j] beads stacked from the top of
/// runner j. Bead positions are j, j + t, ..., j + t(counts[j] - 1).
struct Abacus {
  int t = 0;
  std::vector<Int> counts;

  Abacus() = default;
  /// Throws DomainError on t < 2, a wrong length or a negative count.
  Abacus(int t, std::vector<Int> counts);

  Int beads() const noexcept;
  friend bool operator==(const Abacus&, const Abacus&) = default;
  friend auto operator<=>(const Abacus& a, const Abacus& b) { return a.counts <=> b.counts; }
};

/// "0,2,0,1".
std::string to_string(const Abacus& a);

/// B_j = lambda_j - j + s for j = 1..s, s the number of parts.
std::vector<Int> structure_numbers(const Partition& p);
/// Structure numbers after padding with zero parts up to `beads` parts.
std::vector<Int> structure_numbers(const Partition& p, int beads);

/// Column counts of the abacus built from the structure numbers with
/// s = number of parts. Throws DomainError naming a hook length divisible
/// by t when `p` is not a t-core.
Abacus abacus_from_partition(const Partition& p, int t);
/// Same, with `beads` >= p.length() beads (zero parts padded).
Abacus abacus_from_partition(const Partition& p, int t, int beads);

Partition partition_from_abacus(const Abacus& a);

/// The unique abacus of shape (0, a_1, ..., a_{t-1}) representing `p`.
/// Searches the window of t bead counts starting at p.length() and throws
/// InvariantViolation if the number of hits is not exactly one.
Abacus normalize_abacus(const Partition& p, int t);

}  // namespace tcores
