#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tcores/errors.hpp"
#include "tcores/squares.hpp"

using namespace tcores;

TEST_CASE("tcore_to_squares lands in the exact-residue set and inverts") {
  for (int t = 3; t <= 6; ++t)
    for (Int n = 0; n <= 15; ++n) {
      std::set<std::vector<Int>> images;
      for (const auto& c : enumerate_t_cores_lattice(t, n)) {
        const auto x = tcore_to_squares(c);
        Int sum = 0;
        for (int j = 0; j < t; ++j) {
          CHECK(((x.values[j] - j) % t + t) % t == 0);
          sum += x.values[j];
        }
        CHECK(sum == t * (t - 1) / 2);
        CHECK(sum_of_squares(x.values) == 2 * t * n + t * (t - 1) * (2 * t - 1) / 6);
        CHECK(squares_to_tcore(x) == c);
        images.insert(x.values);
      }
      RepConstraints rc;
      rc.modulus = t;
      for (int j = 0; j < t; ++j) rc.residues.push_back({j});
      rc.sum = t * (t - 1) / 2;
      const auto all = enumerate_reps(2 * t * n + t * (t - 1) * (2 * t - 1) / 6, t, rc);
      CHECK(all.size() == images.size());
    }
}

TEST_CASE("alpha map") {
  for (int t = 3; t <= 7; ++t)
    for (Int n = 0; n <= 18; ++n)
      for (const auto& c : enumerate_t_cores_lattice(t, n)) {
        const auto w = alpha_map(c);
        Int s = 0;
        for (Int v : w.values) s += v;
        CHECK(s == 0);
        CHECK(sum_of_squares(w.values) == 8 * t * n + t * (t * t - 1) / 3);
        CHECK(alpha_inverse(w) == c);
        bool anti = true;
        for (int k = 0; k < t; ++k) anti = anti && w.values[k] == -w.values[t - 1 - k];
        CHECK(anti == is_self_conjugate(c));
      }
  CHECK_THROWS_AS(alpha_inverse(std::vector<Int>{1, 1, -2}), DomainError);
}

TEST_CASE("(4,1,1,1) gives 122 = 11^2 + 1^2") {
  const NCoding c({-1, 0, 0, 1});
  const auto w = sc_even_squares(c);
  REQUIRE(w.values.size() == 2);
  CHECK(canonical_bkm(w.values) == std::vector<Int>{11, 1});
  CHECK(sum_of_squares(w.values) == 122);
  CHECK_THROWS_AS(sc_even_squares(NCoding({1, -1, 0, 0})), DomainError);
}

TEST_CASE("self-conjugate images carry positional residues") {
  for (int t : {3, 5, 7, 9})
    for (Int n = 0; n <= 20; ++n)
      for (const auto& c : enumerate_sc_t_cores_lattice(t, n)) {
        const auto x = sc_odd_squares(c);
        CHECK(sum_of_squares(x.values) == t * n + t * (t * t - 1) / 24);
        for (int j = 0; j < (t - 1) / 2; ++j) {
          const Int r = ((x.values[j] % t) + t) % t;
          CHECK((r == (j + 1) % t || r == (t - j - 1) % t));
        }
      }
  for (int t : {4, 6, 8})
    for (Int n = 0; n <= 20; ++n)
      for (const auto& c : enumerate_sc_t_cores_lattice(t, n)) {
        const auto x = sc_even_squares(c);
        for (int j = 0; j < t / 2; ++j) {
          const Int r = ((x.values[j] % (2 * t)) + 2 * t) % (2 * t);
          CHECK((r == 2 * j + 1 || r == 2 * t - 2 * j - 1));
        }
      }
}

TEST_CASE("triple classes") {
  CHECK(count_triples(637) == 168);
  CHECK(count_triples(637) == oracle::count_triples_bruteforce(637));
  CHECK(triple_classes(637).size() == 4);
  CHECK(enumerate_reps(61, 2).size() == 8);
  for (Int m = 0; m <= 80; ++m) CHECK(count_triples(m) == oracle::count_triples_bruteforce(m));
}

TEST_CASE("canonical classes") {
  CHECK(to_string(canonical_bkm(Triple{-2, 5, 1})) == "{5,2,1}");
  const auto a = canonical_os(Triple{-2, 1, 4}), b = canonical_os(Triple{2, -1, 4}), c = canonical_os(Triple{2, 1, 4});
  CHECK(a == b);
  CHECK(a != c);
  CHECK(project_to_bkm(a) == project_to_bkm(c));
  CHECK(canonical_os(Triple{0, -1, 2}) == canonical_os(Triple{0, 1, 2}));
}

TEST_CASE("theorem checks") {
  for (Int n = 0; n <= 12; ++n) {
    CHECK(verify_theorem_counts(Theorem::Squares12, 5, n).ok);
    CHECK(verify_theorem_counts(Theorem::Squares13, 6, n).ok);
    CHECK(verify_theorem_counts(Theorem::Alpha14, 4, n).ok);
    CHECK(verify_theorem_counts(Theorem::Alpha15, 6, n).ok);
    CHECK(verify_theorem_counts(Theorem::Squares11, 3, n).ok);
  }
  // Two 4-cores of 6 from different families share one class.
  const auto r = verify_theorem_counts(Theorem::Squares11, 4, 6);
  CHECK_FALSE(r.ok);
  CHECK(r.lhs == 3);
  CHECK(r.rhs == 2);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front().find("(3,2,1)") != std::string::npos);
  CHECK_THROWS_AS(verify_theorem_counts(Theorem::Squares12, 4, 1), DomainError);
  CHECK_THROWS_AS(verify_theorem_counts(Theorem::Squares11, 2, 1), DomainError);
  CHECK(parse_theorem("1.4") == Theorem::Alpha14);
  CHECK_THROWS_AS(parse_theorem("1.6"), DomainError);
}
