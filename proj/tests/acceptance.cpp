// One PASS/FAIL line per acceptance criterion; failures list their witnesses.
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "tcores/bqf.hpp"
#include "tcores/families.hpp"
#include "tcores/map47.hpp"
#include "tcores/suites.hpp"

using namespace tcores;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void absorb(const std::vector<ReportRecord>& recs, const std::string& label) {
    size_t bad = 0;
    for (const auto& r : recs)
      if (!r.ok) ++bad;
    if (bad == 0) return;
    ok = false;
    notes.push_back(label + ": " + std::to_string(bad) + " of " + std::to_string(recs.size()) + " cells fail");
    size_t shown = 0;
    for (const auto& r : recs) {
      if (r.ok || shown == 3) continue;
      ++shown;
      std::string params;
      for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ",") + k + "=" + std::to_string(v);
      notes.push_back("  " + r.check + " " + params + ": " + (r.witnesses.empty() ? "" : r.witnesses.front()));
    }
  }
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::vector<ReportRecord> suite(const std::string& name, int t_min, int t_max, Int n_min, Int n_max,
                                const std::string& kind = "") {
  return run_suite({name, t_min, t_max, n_min, n_max, kind, jobs()});
}

Outcome oracle_agreement() {
  Outcome o;
  for (int t = 2; t <= 8; ++t)
    for (int n = 0; n <= 40; ++n) {
      const auto c = count_t_cores(t, n), b = static_cast<Int>(enumerate_t_cores_bruteforce(t, n).size());
      const auto sc = count_sc_t_cores(t, n), sb = static_cast<Int>(enumerate_sc_t_cores_bruteforce(t, n).size());
      o.expect(c == b, "c_" + std::to_string(t) + "(" + std::to_string(n) + "): lattice " + std::to_string(c) +
                           ", oracle " + std::to_string(b));
      o.expect(sc == sb, "sc_" + std::to_string(t) + "(" + std::to_string(n) + "): lattice " + std::to_string(sc) +
                             ", oracle " + std::to_string(sb));
    }
  return o;
}

Outcome point_values() {
  Outcome o;
  o.expect(count_t_cores(4, 1) == 1, "c_4(1) != 1");
  o.expect(count_sc_t_cores(7, 89) == 3, "sc_7(89) != 3");
  o.expect(class_count(-52) == 2, "H(52) != 2");
  o.expect(class_count_7primitive(-2548) == 12, "H_7(2548) != 12");
  const auto r61 = static_cast<Int>(enumerate_reps(61, 2).size());
  o.expect(r61 == 8 && 8 * count_sc_t_cores(4, 7) == 8, "#{x^2+y^2=61} = " + std::to_string(r61));
  return o;
}

Outcome chain_321() {
  Outcome o;
  const Partition p{3, 2, 1};
  o.expect(hook_multiset(p) == std::vector<Int>{5, 3, 1, 3, 1, 1}, "hooks");
  o.expect(structure_numbers(p) == std::vector<Int>{5, 3, 1}, "structure numbers");
  o.expect(abacus_from_partition(p, 4).counts == std::vector<Int>{0, 2, 0, 1}, "abacus");
  const auto n = ncoding_from_partition(p, 4);
  o.expect(n.entries == std::vector<Int>{1, -1, 1, -1}, "N-coding " + to_string(n));
  o.expect(size_from_ncoding(n) == 6, "size");
  return o;
}

Outcome chain_4111() {
  Outcome o;
  const Partition p{4, 1, 1, 1};
  o.expect(normalize_abacus(p, 4).counts == std::vector<Int>{0, 1, 1, 2}, "abacus");
  const auto n = ncoding_from_partition(p, 4);
  o.expect(n.entries == std::vector<Int>{-1, 0, 0, 1}, "N-coding " + to_string(n));
  o.expect(sc4_to_squares(classify_sc4(n), 7) == std::pair<Int, Int>{6, 5}, "61 = 6^2 + 5^2");
  const auto w = sc_even_squares(n);
  o.expect(canonical_bkm(w.values) == std::vector<Int>{11, 1} && sum_of_squares(w.values) == 122,
           "122 = 11^2 + 1^2, got " + to_string(w.values));
  return o;
}

Outcome alpha_bijectivity() {
  Outcome o;
  o.absorb(suite("theorem14", 3, 8, 0, 40), "theorem 1.4");
  o.absorb(suite("theorem15", 3, 8, 0, 40), "theorem 1.5");
  return o;
}

Outcome class_counts() {
  Outcome o;
  o.absorb(suite("theorem11", 3, 7, 0, 30), "theorem 1.1");
  o.absorb(suite("theorem12", 3, 7, 0, 30), "theorem 1.2");
  o.absorb(suite("theorem13", 3, 7, 0, 30), "theorem 1.3");
  return o;
}

Outcome two_to_one() {
  Outcome o;
  std::vector<ReportRecord> recs;
  for (const auto& r : suite("map47", 4, 4, 0, 25))
    if (r.param("n") % 7 != 4) recs.push_back(r);
  o.absorb(recs, "phi47");
  for (const auto& r : recs)
    o.expect(r.lhs == r.rhs, "c_4(7n+2) != 2 sc_7(8n+1) at n = " + std::to_string(r.param("n")));
  return o;
}

Outcome sc6_strictness() {
  Outcome o;
  o.absorb(suite("sc6", 6, 6, 0, 10), "sc6");
  o.absorb({sc6_strictness_check(1, canonical_bkm(Triple{5, 5, 3})),
            sc6_strictness_check(4, canonical_bkm(Triple{1, 3, 11}))},
           "missing classes");
  return o;
}

Outcome s9() {
  Outcome o;
  o.absorb(suite("s9", 9, 9, 0, 30), "S_9");
  return o;
}

Outcome governance() {
  Outcome o;
  const auto recs = suite("governance", 3, 3, 0, 15, "sc2t_sc2t1");
  o.absorb(recs, "sc_6(7n) <= sc_7(24n+3), targets 168n+35");
  for (const auto& r : recs)
    if (r.param("n") <= 10) o.expect(r.param("target") == 168 * r.param("n") + 35, "target");
  const auto u = governance_check(GovernanceKind::C4Sc7Union, 0, 1);
  o.absorb({u}, "c4_sc7_union at 637");
  const Int k = static_cast<Int>(triple_classes(637).size());
  o.expect(k == 4 && count_t_cores(4, 1) + count_sc_t_cores(7, 89) == 4,
           "|K_BKM(637)| = " + std::to_string(k));
  return o;
}

Outcome kbkm() {
  Outcome o;
  o.absorb(suite("kbkm", 4, 4, 0, 60), "|K_BKM(8m+5)|");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"oracle agreement, t <= 8, n <= 40", oracle_agreement},
      {"point values c_4(1), sc_7(89), H(52), H_7(2548), r_2(61)", point_values},
      {"worked example (3,2,1)", chain_321},
      {"worked example (4,1,1,1)", chain_4111},
      {"theorems 1.4/1.5 elementwise, t <= 8, n <= 40", alpha_bijectivity},
      {"theorems 1.1/1.2/1.3 class counts, t <= 7, n <= 30", class_counts},
      {"c_4(7n+2) = 2 sc_7(8n+1) through phi47, n <= 25", two_to_one},
      {"SC_6 forms and strictness, n <= 10", sc6_strictness},
      {"16 sc_9(n) = |S_9(n)|, n <= 30", s9},
      {"governance, n <= 15", governance},
      {"|K_BKM(8m+5)| = (c_4(m) + sc_4(m))/2, m <= 60", kbkm},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto o = criteria[i].second();
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << "\n";
    for (const auto& n : o.notes) std::cout << "        " << n << "\n";
    failed += o.ok ? 0 : 1;
  }
  std::cout << criteria.size() - failed << " of " << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
