#pragma once

#include <string>
#include <vector>

#include "tcores/abacus.hpp"
#include "tcores/partition.hpp"

namespace tcores {

/// Lattice coordinates [n_0, ..., n_{t-1}] of a t-core. Valid codings sum
/// to zero; operations that need that check it.
struct NCoding {
  int t = 0;
  std::vector<Int> entries;

  NCoding() = default;
  explicit NCoding(std::vector<Int> entries);

  Int sum() const noexcept;
  friend bool operator==(const NCoding&, const NCoding&) = default;
  friend auto operator<=>(const NCoding& a, const NCoding& b) { return a.entries <=> b.entries; }
};

/// "[-1,0,0,1]" with ASCII minus.
std::string to_string(const NCoding& n);

/// Reads maximal exposed regions off the extended t-residue diagram. Rows
/// below the last part end in column 0 and count as exposed there.
NCoding ncoding_from_partition(const Partition& p, int t);

/// t|N|^2/2 + [0,1,...,t-1].N. Throws DomainError on a nonzero sum.
Int size_from_ncoding(const NCoding& n);

/// [n_0..n_{t-1}] -> [-n_{t-1}, ..., -n_0].
NCoding conjugate_ncoding(const NCoding& n);
bool is_self_conjugate(const NCoding& n);

/// With l + s = alpha_l t + beta_l, runner beta_l holds n_l + alpha_l beads.
/// Throws DomainError ("s too small") if any runner would be negative.
Abacus abacus_from_ncoding(const NCoding& n, Int beads);
NCoding ncoding_from_abacus(const Abacus& a);

Partition partition_from_ncoding(const NCoding& n);

/// Upper bound on |N|^2 over all zero-sum N of size n. Completing the
/// square with the centred weight vector B - (t-1)/2 gives
///   |N| <= (sqrt(u) + sqrt(u + 2tn)) / t,  u = t(t^2-1)/12.
double lattice_norm_bound(int t, Int n);

/// All zero-sum integer vectors of size n, sorted lexicographically.
std::vector<NCoding> enumerate_t_cores_lattice(int t, Int n);
/// Self-conjugate codings only (n_k = -n_{t-1-k}), searched over the
/// floor(t/2) free coordinates. Sorted lexicographically.
std::vector<NCoding> enumerate_sc_t_cores_lattice(int t, Int n);

Int count_t_cores(int t, Int n);
Int count_sc_t_cores(int t, Int n);

}  // namespace tcores
