#include "tcores/report.hpp"

namespace tcores {

Int ReportRecord::param(const std::string& key, Int fallback) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return fallback;
}

void ReportRecord::fail(std::string witness) {
  ok = false;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

}  // namespace tcores
