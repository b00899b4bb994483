#include "tcores/partition.hpp"

#include <algorithm>
#include <numeric>

#include "tcores/errors.hpp"

namespace tcores {

namespace {

// Column lengths of the Ferrers diagram, i.e. the conjugate's parts.
std::vector<Int> column_lengths(const std::vector<Int>& parts) {
  std::vector<Int> cols(parts.empty() ? 0 : static_cast<size_t>(parts.front()), 0);
  for (Int p : parts)
    for (Int k = 0; k < p; ++k) ++cols[static_cast<size_t>(k)];
  return cols;
}

bool has_hook_divisible_by(const std::vector<Int>& parts, int t) {
  const auto cols = column_lengths(parts);
  for (size_t j = 0; j < parts.size(); ++j)
    for (Int k = 0; k < parts[j]; ++k)
      if ((parts[j] + cols[static_cast<size_t>(k)] - k - static_cast<Int>(j) - 1) % t == 0) return true;
  return false;
}

void check_cap(int n, int cap) {
  if (n < 0) throw DomainError("partition size must be non-negative, got " + std::to_string(n));
  if (n > cap)
    throw ResourceError("n = " + std::to_string(n) + " exceeds the partition oracle cap of " + std::to_string(cap) +
                        "; use the N-coding lattice enumerator instead");
}

}  // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be non-increasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Int Partition::part(int row) const noexcept {
  if (row < 1 || row > length()) return 0;
  return parts_[static_cast<size_t>(row - 1)];
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out + ')';
}

Int hook_length(const Partition& p, int row, int col) {
  if (row < 1 || row > p.length() || col < 1 || col > p.part(row))
    throw DomainError("cell (" + std::to_string(row) + "," + std::to_string(col) + ") is not in the diagram of " +
                      to_string(p));
  Int col_len = 0;
  for (Int x : p.parts()) col_len += (x >= col);
  return p.part(row) + col_len - col - row + 1;
}

std::vector<Int> hook_multiset(const Partition& p) {
  const auto cols = column_lengths(p.parts());
  std::vector<Int> hooks;
  hooks.reserve(static_cast<size_t>(p.size()));
  for (int j = 1; j <= p.length(); ++j)
    for (int k = 1; k <= p.part(j); ++k) hooks.push_back(p.part(j) + cols[static_cast<size_t>(k - 1)] - k - j + 1);
  return hooks;
}

Partition conjugate(const Partition& p) { return Partition(column_lengths(p.parts())); }

bool is_t_core(const Partition& p, int t) {
  if (t < 1) throw DomainError("t must be positive");
  return !has_hook_divisible_by(p.parts(), t);
}

bool is_self_conjugate(const Partition& p) { return column_lengths(p.parts()) == p.parts(); }

void for_each_partition(int n, const std::function<void(const std::vector<Int>&)>& visit) {
  if (n < 0) throw DomainError("partition size must be non-negative");
  std::vector<Int> cur;
  if (n > 0) cur.push_back(n);
  for (;;) {
    visit(cur);
    // Rightmost part larger than one.
    auto it = std::find_if(cur.rbegin(), cur.rend(), [](Int x) { return x > 1; });
    if (it == cur.rend()) return;
    const auto idx = static_cast<size_t>(std::distance(it, cur.rend()) - 1);
    Int rest = static_cast<Int>(cur.size() - idx - 1);  // trailing ones
    const Int m = --cur[idx];
    rest += 1;
    cur.resize(idx + 1);
    while (rest > 0) {
      const Int take = std::min(m, rest);
      cur.push_back(take);
      rest -= take;
    }
  }
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
  check_cap(n, cap);
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<Int>& parts) { out.emplace_back(parts); });
  return out;
}

std::vector<Partition> enumerate_t_cores_bruteforce(int t, int n, int cap) {
  check_cap(n, cap);
  if (t < 2) throw DomainError("t must be at least 2");
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<Int>& parts) {
    if (!has_hook_divisible_by(parts, t)) out.emplace_back(parts);
  });
  return out;
}

std::vector<Partition> enumerate_sc_t_cores_bruteforce(int t, int n, int cap) {
  check_cap(n, cap);
  if (t < 2) throw DomainError("t must be at least 2");
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<Int>& parts) {
    if (column_lengths(parts) == parts && !has_hook_divisible_by(parts, t)) out.emplace_back(parts);
  });
  return out;
}

}  // namespace tcores
