#include "tcores/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "tcores/bqf.hpp"
#include "tcores/errors.hpp"
#include "tcores/families.hpp"
#include "tcores/map47.hpp"
#include "tcores/squares.hpp"

namespace tcores {

namespace {

using Cell = std::function<std::vector<ReportRecord>()>;

std::vector<Cell> plan(const SuiteSpec& s) {
  std::vector<Cell> cells;
  const auto each_n = [&](auto make) {
    for (Int n = s.n_min; n <= s.n_max; ++n) cells.push_back([make, n] { return std::vector<ReportRecord>{make(n)}; });
  };
  if (s.suite.rfind("theorem", 0) == 0 && s.suite.size() == 9) {
    const auto th = parse_theorem(s.suite.substr(7, 1) + "." + s.suite.substr(8, 1));
    for (int t = s.t_min; t <= s.t_max; ++t) {
      if (th == Theorem::Squares12 && t % 2 == 0) continue;
      if (th == Theorem::Squares13 && t % 2 == 1) continue;
      for (Int n = s.n_min; n <= s.n_max; ++n)
        cells.push_back([th, t, n] { return std::vector<ReportRecord>{verify_theorem_counts(th, t, n)}; });
    }
  } else if (s.suite == "theorem11_family") {
    for (int t = s.t_min; t <= s.t_max; ++t)
      for (Int n = s.n_min; n <= s.n_max; ++n)
        cells.push_back([t, n] { return std::vector<ReportRecord>{theorem11_family_check(t, n)}; });
  } else if (s.suite == "sc6") {
    for (Int n = s.n_min; n <= s.n_max; ++n)
      cells.push_back([n] {
        std::vector<ReportRecord> out{sc6_forms_check(n)};
        if (n == 1) out.push_back(sc6_strictness_check(1, canonical_bkm(Triple{5, 5, 3})));
        if (n == 4) out.push_back(sc6_strictness_check(4, canonical_bkm(Triple{11, 3, 1})));
        return out;
      });
  } else if (s.suite == "s9") {
    each_n([](Int n) { return s9_identity_check(n); });
  } else if (s.suite == "governance") {
    const auto kind = parse_governance_kind(s.kind.empty() ? "sc2t_sc2t1" : s.kind);
    if (kind == GovernanceKind::C4Sc7Union) {
      each_n([kind](Int n) { return governance_check(kind, 0, n); });
    } else {
      for (int t = s.t_min; t <= s.t_max; ++t)
        for (Int n = s.n_min; n <= s.n_max; ++n)
          cells.push_back([kind, t, n] { return std::vector<ReportRecord>{governance_check(kind, t, n)}; });
    }
  } else if (s.suite == "sc7cover") {
    each_n([](Int n) { return sc6_sc7_cover_check(n); });
  } else if (s.suite == "map47") {
    each_n([](Int n) { return verify_two_to_one(n); });
  } else if (s.suite == "kbkm") {
    each_n([](Int m) { return kbkm_identity(m); });
  } else if (s.suite == "hnumbers") {
    cells.push_back([] { return h_number_consistency(); });
  } else {
    throw DomainError("unknown suite '" + s.suite + "'");
  }
  return cells;
}

std::string params_string(const ReportRecord& r) {
  std::string out;
  for (const auto& [k, v] : r.params) {
    if (!out.empty()) out += ",";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string ms_string(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem11", "theorem12", "theorem13", "theorem14", "theorem15", "theorem11_family", "sc6",
                                              "s9",        "governance", "sc7cover", "map47",    "kbkm",      "hnumbers"};
  return names;
}

std::vector<ReportRecord> run_suite(const SuiteSpec& spec) {
  const auto cells = plan(spec);
  std::vector<std::vector<ReportRecord>> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < cells.size();) {
      try {
        results[i] = cells[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::clamp(spec.jobs, 1, static_cast<int>(std::max<size_t>(cells.size(), 1)));
  std::vector<std::jthread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<ReportRecord> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

bool all_ok(const std::vector<ReportRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const ReportRecord& r) { return r.ok; });
}

ReportFormat parse_report_format(const std::string& s) {
  if (s == "table") return ReportFormat::Table;
  if (s == "json") return ReportFormat::Json;
  if (s == "tsv") return ReportFormat::Tsv;
  throw DomainError("unknown format '" + s + "'");
}

std::string format_records(const std::vector<ReportRecord>& records, ReportFormat f, bool timings) {
  std::ostringstream os;
  switch (f) {
    case ReportFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["check"] = r.check;
        j["params"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) j["params"][k] = v;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["relation"] = r.relation;
        j["ok"] = r.ok;
        j["witnesses"] = r.witnesses;
        if (timings) j["elapsed_ms"] = r.elapsed_ms;
        arr.push_back(std::move(j));
      }
      os << arr.dump(2) << "\n";
      break;
    }
    case ReportFormat::Tsv:
      os << "check\tparams\tlhs\trelation\trhs\tok\twitnesses" << (timings ? "\telapsed_ms" : "") << "\n";
      for (const auto& r : records) {
        std::string w;
        for (const auto& s : r.witnesses) w += (w.empty() ? "" : "; ") + s;
        os << r.check << '\t' << params_string(r) << '\t' << r.lhs << '\t' << r.relation << '\t' << r.rhs << '\t'
           << (r.ok ? "ok" : "FAIL") << '\t' << w;
        if (timings) os << '\t' << ms_string(r.elapsed_ms);
        os << "\n";
      }
      break;
    case ReportFormat::Table: {
      size_t wc = 5, wp = 6;
      for (const auto& r : records) {
        wc = std::max(wc, r.check.size());
        wp = std::max(wp, params_string(r).size());
      }
      os << std::left << std::setw(static_cast<int>(wc)) << "check" << "  " << std::setw(static_cast<int>(wp))
         << "params" << "  result\n";
      for (const auto& r : records) {
        os << std::left << std::setw(static_cast<int>(wc)) << r.check << "  " << std::setw(static_cast<int>(wp))
           << params_string(r) << "  " << r.lhs << ' ' << r.relation << ' ' << r.rhs << "  " << (r.ok ? "ok" : "FAIL");
        if (timings) os << "  " << ms_string(r.elapsed_ms) << " ms";
        os << "\n";
        for (const auto& w : r.witnesses) os << "    " << w << "\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace tcores
