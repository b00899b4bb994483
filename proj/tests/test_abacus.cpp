#include <doctest.h>

#include "tcores/abacus.hpp"
#include "tcores/errors.hpp"

using namespace tcores;

TEST_CASE("worked example (3,2,1)") {
  const Partition p{3, 2, 1};
  CHECK(structure_numbers(p) == std::vector<Int>{5, 3, 1});
  const auto a = abacus_from_partition(p, 4);
  CHECK(a.counts == std::vector<Int>{0, 2, 0, 1});
  CHECK(to_string(a) == "0,2,0,1");
  CHECK(partition_from_abacus(a) == p);
}

TEST_CASE("(4,1,1,1) normalizes to (0,1,1,2)") {
  CHECK(normalize_abacus(Partition{4, 1, 1, 1}, 4).counts == std::vector<Int>{0, 1, 1, 2});
}

TEST_CASE("padding shifts structure numbers") {
  CHECK(structure_numbers(Partition{2}, 3) == std::vector<Int>{4, 1, 0});
  CHECK(abacus_from_partition(Partition{}, 3, 3).counts == std::vector<Int>{1, 1, 1});
}

TEST_CASE("abacus round trips over small t-cores") {
  for (int t = 2; t <= 6; ++t)
    for (int n = 0; n <= 20; ++n)
      for (const auto& p : enumerate_t_cores_bruteforce(t, n)) {
        const auto a = abacus_from_partition(p, t);
        CHECK(a.beads() == p.length());
        CHECK(partition_from_abacus(a) == p);
        const auto norm = normalize_abacus(p, t);
        CHECK(norm.counts.front() == 0);
        CHECK(partition_from_abacus(norm) == p);
      }
}

TEST_CASE("non-cores and malformed abaci are rejected") {
  CHECK_THROWS_AS(abacus_from_partition(Partition{2}, 2), DomainError);
  CHECK_THROWS_AS(Abacus(3, {1, 2}), DomainError);
  CHECK_THROWS_AS(Abacus(3, {1, -2, 0}), DomainError);
  CHECK_THROWS_AS(Abacus(1, {0}), DomainError);
}
