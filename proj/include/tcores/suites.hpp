#pragma once

#include <string>
#include <vector>

#include "tcores/report.hpp"

namespace tcores {

/// One verification sweep: every (t, n) cell of the ranges, in order.
struct SuiteSpec {
  /// theorem11..theorem15, sc6, s9, governance, map47, kbkm, hnumbers.
  std::string suite;
  int t_min = 3;
  int t_max = 3;
  Int n_min = 0;
  Int n_max = 0;
  /// Governance kind name; empty means sc2t_sc2t1.
  std::string kind;
  /// Worker threads; records keep cell order regardless.
  int jobs = 1;
};

const std::vector<std::string>& suite_names();

/// Throws DomainError on an unknown suite.
std::vector<ReportRecord> run_suite(const SuiteSpec& spec);

bool all_ok(const std::vector<ReportRecord>& records);

enum class ReportFormat { Table, Json, Tsv };
ReportFormat parse_report_format(const std::string& s);

/// elapsed_ms is emitted only when `timings` is set, so that repeated runs
/// produce identical bytes.
std::string format_records(const std::vector<ReportRecord>& records, ReportFormat f, bool timings);

}  // namespace tcores
