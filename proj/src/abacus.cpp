#include "tcores/abacus.hpp"

#include <algorithm>
#include <numeric>

#include "tcores/errors.hpp"

namespace tcores {

namespace {

void require_t_core(const Partition& p, int t) {
  if (t < 2) throw DomainError("t must be at least 2");
  for (int j = 1; j <= p.length(); ++j)
    for (int k = 1; k <= p.part(j); ++k) {
      const Int h = hook_length(p, j, k);
      if (h % t == 0)
        throw DomainError(to_string(p) + " is not a " + std::to_string(t) + "-core: hook length " + std::to_string(h) +
                          " at cell (" + std::to_string(j) + "," + std::to_string(k) + ")");
    }
}

Abacus column_counts(const std::vector<Int>& structure, int t) {
  std::vector<Int> counts(static_cast<size_t>(t), 0);
  for (Int b : structure) ++counts[static_cast<size_t>(b % t)];
  return Abacus(t, std::move(counts));
}

}  // namespace

Abacus::Abacus(int t_, std::vector<Int> counts_) : t(t_), counts(std::move(counts_)) {
  if (t < 2) throw DomainError("abacus needs t >= 2");
  if (counts.size() != static_cast<size_t>(t))
    throw DomainError("abacus has " + std::to_string(counts.size()) + " runners, expected " + std::to_string(t));
  if (std::any_of(counts.begin(), counts.end(), [](Int c) { return c < 0; }))
    throw DomainError("abacus runner counts must be non-negative");
}

Int Abacus::beads() const noexcept { return std::accumulate(counts.begin(), counts.end(), Int{0}); }

std::string to_string(const Abacus& a) {
  std::string out;
  for (size_t i = 0; i < a.counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.counts[i]);
  }
  return out;
}

std::vector<Int> structure_numbers(const Partition& p) { return structure_numbers(p, p.length()); }

std::vector<Int> structure_numbers(const Partition& p, int beads) {
  if (beads < p.length()) throw DomainError("bead count smaller than the number of parts");
  std::vector<Int> b;
  b.reserve(static_cast<size_t>(beads));
  for (int j = 1; j <= beads; ++j) b.push_back(p.part(j) - j + beads);
  return b;
}

Abacus abacus_from_partition(const Partition& p, int t) { return abacus_from_partition(p, t, p.length()); }

Abacus abacus_from_partition(const Partition& p, int t, int beads) {
  require_t_core(p, t);
  return column_counts(structure_numbers(p, beads), t);
}

Partition partition_from_abacus(const Abacus& a) {
  std::vector<Int> b;
  for (int j = 0; j < a.t; ++j)
    for (Int row = 0; row < a.counts[static_cast<size_t>(j)]; ++row) b.push_back(a.t * row + j);
  std::sort(b.begin(), b.end(), std::greater<>());
  const auto s = static_cast<Int>(b.size());
  std::vector<Int> parts;
  for (Int j = 1; j <= s; ++j) {
    const Int part = b[static_cast<size_t>(j - 1)] + j - s;
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Abacus normalize_abacus(const Partition& p, int t) {
  require_t_core(p, t);
  std::vector<Abacus> hits;
  for (int s = p.length(); s < p.length() + t; ++s) {
    auto a = column_counts(structure_numbers(p, s), t);
    if (a.counts.front() == 0) hits.push_back(std::move(a));
  }
  if (hits.size() != 1)
    throw InvariantViolation("expected exactly one abacus with an empty first runner for " + to_string(p) + ", found " +
                             std::to_string(hits.size()));
  return hits.front();
}

}  // namespace tcores
