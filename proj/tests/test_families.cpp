#include <doctest.h>

#include <set>

#include "tcores/errors.hpp"
#include "tcores/families.hpp"

using namespace tcores;

TEST_CASE("(4,1,1,1) is type I with r = a = 1 and gives 61 = 6^2 + 5^2") {
  const auto c = classify_sc4(NCoding({-1, 0, 0, 1}));
  CHECK(c == FamilyClassification{FamilyType::I, 1, 1, 0});
  CHECK(sc4_beads(c) == 4);
  CHECK(sc4_to_squares(c, 7) == std::pair<Int, Int>{6, 5});
}

TEST_CASE("every self-conjugate 4-core has exactly one family") {
  for (Int n = 0; n <= 50; ++n)
    for (const auto& code : enumerate_sc_t_cores_lattice(4, n)) {
      const auto c = classify_sc4(code);
      CHECK(sc4_ncoding(c) == code);
      CHECK(normalize_abacus(partition_from_ncoding(code), 4).beads() == sc4_beads(c));
      const auto [x, y] = sc4_to_squares(c, n);
      CHECK(x * x + y * y == 8 * n + 5);
    }
  CHECK_THROWS_AS(classify_sc4(NCoding({1, -1, 0, 0})), DomainError);
}

TEST_CASE("self-conjugate 6-cores: constraints, families and triples") {
  for (Int n = 0; n <= 30; ++n) {
    std::set<TripleClass> seen;
    for (const auto& code : enumerate_sc_t_cores_lattice(6, n)) {
      const auto abacus = normalize_abacus(partition_from_ncoding(code), 6);
      const auto c = sc6_constraints_check(abacus);
      CHECK(sc6_ncoding(c) == code);
      CHECK(sc6_abacus(c) == abacus);
      const auto v = sc6_to_triple(c, n);
      CHECK(sum_of_squares(v) == 24 * n + 35);
      std::multiset<Int> residues;
      for (Int x : v) residues.insert(std::min(((x % 12) + 12) % 12, ((-x % 12) + 12) % 12));
      CHECK(residues == std::multiset<Int>{1, 3, 5});
      CHECK(seen.insert(canonical_bkm(v)).second);
    }
    CHECK(sc6_image_classes(n).size() == seen.size());
  }
}

TEST_CASE("sc6 family parameters round trip") {
  for (int type = 1; type <= 6; ++type)
    for (Int r = 0; r <= 3; ++r)
      for (Int a = 0; a <= 2 * r + 2; ++a)
        for (Int b = 0; b <= 2 * r + 2; ++b) {
          const FamilyClassification c{static_cast<FamilyType>(type), r, a, b};
          Abacus abacus;
          try {
            abacus = sc6_abacus(c);
          } catch (const DomainError&) {
            continue;
          }
          if (abacus.counts.front() != 0) continue;
          const auto p = partition_from_abacus(abacus);
          CHECK(is_t_core(p, 6));
          CHECK(is_self_conjugate(p));
          CHECK(sc6_constraints_check(abacus) == c);
        }
}

TEST_CASE("a violated constraint is reported") {
  CHECK_THROWS_AS(sc6_constraints_check(Abacus(6, {0, 0, 1, 0, 0, 0})), DomainError);
  CHECK_THROWS_AS(sc6_constraints_check(Abacus(6, {1, 1, 0, 0, 0, 0})), DomainError);
}

TEST_CASE("the sc6 image misses {5,5,3} and {11,3,1}") {
  const auto one = sc6_strictness_check(1, canonical_bkm(Triple{5, 5, 3}));
  CHECK(one.ok);
  CHECK(one.lhs < one.rhs);
  CHECK(sc6_strictness_check(4, canonical_bkm(Triple{11, 3, 1})).ok);
  CHECK_FALSE(sc6_strictness_check(0, canonical_bkm(Triple{5, 3, 1})).ok);
}

TEST_CASE("S_9 identity") {
  for (Int n = 0; n <= 10; ++n) {
    const auto r = s9_identity_check(n);
    CHECK(r.ok);
    CHECK(r.lhs == 16 * count_sc_t_cores(9, n));
  }
}

TEST_CASE("governance lemmas") {
  for (Int n = 0; n <= 6; ++n) {
    const auto r = governance_check(GovernanceKind::Sc2tSc2t1, 3, n);
    CHECK(r.ok);
    CHECK(r.param("target") == 168 * n + 35);
    for (int t = 3; t <= 5; ++t) CHECK(governance_check(GovernanceKind::CtSc2t1, t, n).ok);
    CHECK(governance_check(GovernanceKind::Sc2tSc2t1, 4, n).ok);
  }
  const auto u = governance_check(GovernanceKind::C4Sc7Union, 0, 1);
  CHECK(u.ok);
  CHECK(u.lhs == 4);
  // The C_t side lands t above the stated target.
  const auto ct = governance_check(GovernanceKind::CtSc2t, 5, 0);
  CHECK_FALSE(ct.ok);
  REQUIRE_FALSE(ct.witnesses.empty());
  CHECK(ct.witnesses.front().find("square sum 170, stated target 165") != std::string::npos);
  CHECK_THROWS_AS(governance_check(GovernanceKind::CtSc2t, 3, 0), DomainError);
  CHECK(parse_governance_kind("c4_sc7_union") == GovernanceKind::C4Sc7Union);
}

TEST_CASE("SC_7 cover claim") {
  CHECK(sc6_sc7_cover_check(2).ok);
  const auto r = sc6_sc7_cover_check(3);
  CHECK_FALSE(r.ok);
  CHECK(r.witnesses.front().find("{21,7,7}") != std::string::npos);
}

TEST_CASE("H-number display at 637") {
  const auto recs = h_number_consistency();
  REQUIRE(recs.size() == 2);
  CHECK_FALSE(recs[0].ok);
  CHECK(recs[0].rhs == 168);
  CHECK(recs[1].ok);
  CHECK(recs[1].rhs == 192);
}
