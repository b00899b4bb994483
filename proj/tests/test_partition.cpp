#include <doctest.h>

#include "oracles.hpp"
#include "tcores/errors.hpp"
#include "tcores/partition.hpp"

using namespace tcores;

TEST_CASE("partition counts follow the pentagonal recurrence") {
  const auto p = oracle::partition_numbers(40);
  for (int n = 0; n <= 40; ++n) CHECK(static_cast<Int>(enumerate_partitions(n).size()) == p[n]);
}

TEST_CASE("partitions come out in descending lexicographic order") {
  const auto ps = enumerate_partitions(6);
  REQUIRE(ps.size() == 11);
  CHECK(ps.front() == Partition{6});
  CHECK(ps.back() == Partition{1, 1, 1, 1, 1, 1});
  CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
}

TEST_CASE("hook lengths") {
  const Partition p{3, 2, 1};
  CHECK(hook_multiset(p) == std::vector<Int>{5, 3, 1, 3, 1, 1});
  CHECK(hook_length(p, 1, 1) == 5);
  CHECK(hook_length(p, 2, 2) == 1);
  CHECK_THROWS_AS(hook_length(p, 3, 2), DomainError);
  CHECK_THROWS_AS(hook_length(p, 0, 1), DomainError);
  CHECK(hook_multiset(Partition{}).empty());
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition{4, 1, 1, 1}) == Partition{4, 1, 1, 1});
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  for (int n = 0; n <= 14; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(is_self_conjugate(p) == (conjugate(p) == p));
    }
}

TEST_CASE("t-core test agrees with the beta-set oracle") {
  for (int n = 0; n <= 16; ++n)
    for (const auto& p : enumerate_partitions(n))
      for (int t = 2; t <= 6; ++t) CHECK(is_t_core(p, t) == oracle::beta_set_is_t_core(p, t));
}

TEST_CASE("invalid partitions and caps") {
  CHECK_THROWS_AS(Partition({2, 3}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
  CHECK_THROWS_AS(Partition({-1}), DomainError);
  CHECK_THROWS_AS(enumerate_partitions(61), ResourceError);
  CHECK_NOTHROW(enumerate_partitions(20, 20));
  CHECK(to_string(Partition{3, 2, 1}) == "(3,2,1)");
  CHECK(to_string(Partition{}) == "()");
}
