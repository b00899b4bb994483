#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tcores {

using Int = std::int64_t;

/// Default upper bound on n for the all-partitions oracles.
inline constexpr int kDefaultPartitionCap = 60;

/// An integer partition: a non-increasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless `parts` is non-increasing with no zero or
  /// negative entries.
  explicit Partition(std::vector<Int> parts);
  Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

  const std::vector<Int>& parts() const noexcept { return parts_; }
  Int size() const noexcept { return size_; }
  /// Number of nonzero parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// 1-based access; rows beyond length() are zero.
  Int part(int row) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<Int> parts_;
  Int size_ = 0;
};

/// "(3,2,1)"; the empty partition prints as "()".
std::string to_string(const Partition& p);

Int hook_length(const Partition& p, int row, int col);
/// Hook lengths in row-major cell order.
std::vector<Int> hook_multiset(const Partition& p);
Partition conjugate(const Partition& p);
bool is_t_core(const Partition& p, int t);
bool is_self_conjugate(const Partition& p);

/// Calls `visit` on every partition of n in lexicographically descending
/// order, reusing one buffer. No cap is applied.
void for_each_partition(int n, const std::function<void(const std::vector<Int>&)>& visit);

/// All partitions of n, lexicographically descending. Throws ResourceError
/// when n exceeds `cap`.
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultPartitionCap);
std::vector<Partition> enumerate_t_cores_bruteforce(int t, int n, int cap = kDefaultPartitionCap);
std::vector<Partition> enumerate_sc_t_cores_bruteforce(int t, int n, int cap = kDefaultPartitionCap);

}  // namespace tcores
