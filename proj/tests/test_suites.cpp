#include <doctest.h>

#include "tcores/errors.hpp"
#include "tcores/suites.hpp"

using namespace tcores;

TEST_CASE("suites run in cell order whatever the thread count") {
  SuiteSpec s{"theorem12", 3, 7, 0, 6};
  const auto serial = run_suite(s);
  s.jobs = 4;
  const auto parallel = run_suite(s);
  REQUIRE(serial.size() == 21);
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].params == parallel[i].params);
    CHECK(serial[i].lhs == parallel[i].lhs);
  }
  CHECK(serial.front().param("t") == 3);
  CHECK(serial.back().param("t") == 7);
  CHECK(all_ok(serial));
}

TEST_CASE("formats") {
  const auto recs = run_suite({"kbkm", 4, 4, 0, 2});
  const auto json = format_records(recs, ReportFormat::Json, false);
  CHECK(json.find("\"check\": \"kbkm\"") != std::string::npos);
  CHECK(json.find("elapsed_ms") == std::string::npos);
  CHECK(format_records(recs, ReportFormat::Json, true).find("elapsed_ms") != std::string::npos);
  CHECK(json == format_records(run_suite({"kbkm", 4, 4, 0, 2}), ReportFormat::Json, false));
  const auto tsv = format_records(recs, ReportFormat::Tsv, false);
  CHECK(tsv.rfind("check\tparams\tlhs\trelation\trhs\tok\twitnesses\n", 0) == 0);
  CHECK(tsv.find("kbkm\tm=2\t") != std::string::npos);
  CHECK(parse_report_format("tsv") == ReportFormat::Tsv);
  CHECK_THROWS_AS(parse_report_format("xml"), DomainError);
}

TEST_CASE("failures carry witnesses") {
  const auto recs = run_suite({"hnumbers"});
  REQUIRE(recs.size() == 2);
  CHECK_FALSE(all_ok(recs));
  for (const auto& r : recs) CHECK(r.ok == r.witnesses.empty());
  CHECK_THROWS_AS(run_suite({"nosuch"}), DomainError);
}
