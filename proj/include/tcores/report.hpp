#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tcores/partition.hpp"

namespace tcores {

/// One verification cell. `relation` says how lhs and rhs are compared
/// ("=", "<=", or a check-specific word); `ok` is the outcome of that
/// comparison together with any elementwise checks the cell runs.
struct ReportRecord {
  std::string check;
  std::vector<std::pair<std::string, Int>> params;
  Int lhs = 0;
  Int rhs = 0;
  std::string relation = "=";
  bool ok = false;
  std::vector<std::string> witnesses;
  double elapsed_ms = 0;

  Int param(const std::string& key, Int fallback = 0) const;
  /// Records a failure; keeps at most `kMaxWitnesses` witnesses.
  void fail(std::string witness);

  static constexpr size_t kMaxWitnesses = 16;
};

}  // namespace tcores
