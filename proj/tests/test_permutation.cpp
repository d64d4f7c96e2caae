#include <numeric>
#include <random>

#include "doctest.h"
#include "girthsearch/permutation.hpp"
#include "oracles.hpp"

using namespace girthsearch;

TEST_CASE("identity") {
  CHECK(to_string(identity(1)) == "1");
  CHECK(to_string(identity(4)) == "1 2 3 4");
  CHECK_THROWS_AS(identity(0), DomainError);
  for (const auto& p : test::all_permutations(3)) CHECK(compose(identity(3), p) == p);
}

TEST_CASE("permutation construction rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
  CHECK_THROWS_AS(Permutation({0, 1}), DomainError);
  CHECK_THROWS_AS(Permutation({1, 4, 2}), DomainError);
  CHECK_THROWS_AS(Permutation(std::vector<Permutation::value_type>{}), DomainError);
}

TEST_CASE("compose and invert") {
  CHECK(compose(Permutation{2, 1}, Permutation{2, 1}) == identity(2));
  CHECK(invert(Permutation{2, 3, 1}) == Permutation{3, 1, 2});
  CHECK(invert(identity(5)) == identity(5));
  CHECK_THROWS_AS(compose(identity(2), identity(3)), DomainError);

  // result(i) = p(q(i))
  const Permutation p{2, 3, 1};
  const Permutation q{3, 1, 2};
  const Permutation pq = compose(p, q);
  for (std::size_t i = 1; i <= 3; ++i) CHECK(pq(i) == p(q(i)));

  for (const auto& x : test::all_permutations(4)) {
    CHECK(compose(x, invert(x)) == identity(4));
    CHECK(invert(invert(x)) == x);
  }
}

TEST_CASE("compatibility") {
  CHECK(is_compatible(identity(3), Permutation{2, 3, 1}));
  CHECK_FALSE(is_compatible(identity(3), Permutation{2, 1, 3}));
  for (const auto& p : test::all_permutations(3)) CHECK_FALSE(is_compatible(p, p));
  CHECK_FALSE(is_compatible(identity(1), identity(1)));
  CHECK_THROWS_AS(is_compatible(identity(2), identity(3)), DomainError);
}

TEST_CASE("union cycle partition") {
  CHECK(union_cycle_partition(identity(4), circular_rotation(4, 1)) == Partition({4}));
  CHECK(union_cycle_partition(identity(6), circular_rotation(6, 2)) == Partition({3, 3}));
  // Alternating-cycle traversal: rows {1,2} and {3,4} close separately.
  CHECK(test::alternating_cycle_halves(identity(4), Permutation{2, 1, 4, 3}) ==
        std::vector<std::uint64_t>{2, 2});
  CHECK(union_cycle_partition(identity(4), Permutation{2, 1, 4, 3}) == Partition({2, 2}));
  CHECK_THROWS_AS(union_cycle_partition(identity(3), Permutation{2, 1, 3}), DomainError);
  CHECK_THROWS_AS(union_cycle_partition(identity(1), identity(1)), DomainError);
}

TEST_CASE("union cycle partition agrees with alternating traversal on all compatible pairs") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto perms = test::all_permutations(n);
    for (const auto& p : perms) {
      for (const auto& q : perms) {
        if (!is_compatible(p, q)) continue;
        const Partition beta = union_cycle_partition(p, q);
        CHECK(std::vector<std::uint64_t>(beta.parts().begin(), beta.parts().end()) ==
              test::alternating_cycle_halves(p, q));
        CHECK(beta == union_cycle_partition(q, p));
        CHECK(beta.total() == n);
        CHECK(beta.smallest() >= 2);
        CHECK(is_compatible(q, p));
      }
    }
  }
}

TEST_CASE("circular rotation") {
  CHECK(circular_rotation(4, 1) == Permutation{4, 1, 2, 3});
  CHECK(circular_rotation(4, 2) == Permutation{3, 4, 1, 2});
  CHECK_THROWS_AS(circular_rotation(4, 0), DomainError);
  CHECK_THROWS_AS(circular_rotation(4, 4), DomainError);
  CHECK_THROWS_AS(circular_rotation(1, 1), DomainError);

  for (std::size_t n = 2; n <= 12; ++n) {
    for (std::size_t j = 1; j < n; ++j) {
      const Permutation c = circular_rotation(n, j);
      CHECK(is_compatible(c, identity(n)));
      const std::uint64_t g = std::gcd(j, n);
      CHECK(union_cycle_partition(identity(n), c) ==
            Partition(std::vector<std::uint64_t>(g, n / g)));
    }
  }
}

TEST_CASE("scale permutation") {
  CHECK(scale_permutation(Permutation{3, 4, 1, 2}, 2) == Permutation{3, 4, 1, 2, 7, 8, 5, 6});
  CHECK(scale_permutation(Permutation{2, 1}, 2) == Permutation{2, 1, 4, 3});
  CHECK(scale_permutation(identity(3), 4) == identity(12));
  CHECK(scale_permutation(Permutation{2, 3, 1}, 1) == Permutation{2, 3, 1});
  CHECK_THROWS_AS(scale_permutation(identity(2), 0), DomainError);
}

TEST_CASE("scaling laws") {
  std::mt19937 rng(7);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Permutation p = test::random_permutation(n, rng);
      const Permutation q = test::random_permutation(n, rng);
      for (std::size_t k = 1; k <= 3; ++k) {
        const Permutation kp = scale_permutation(p, k);
        const Permutation kq = scale_permutation(q, k);
        CHECK(is_compatible(kp, kq) == is_compatible(p, q));
        if (is_compatible(p, q)) {
          const Partition base = union_cycle_partition(p, q);
          std::vector<std::uint64_t> replicated;
          for (std::size_t t = 0; t < k; ++t) {
            for (auto part : base.parts()) replicated.push_back(part);
          }
          CHECK(union_cycle_partition(kp, kq) == Partition(replicated));
        }
        for (std::size_t k2 = 1; k2 <= 3; ++k2) {
          CHECK(scale_permutation(kq, k2) == scale_permutation(q, k * k2));
        }
      }
    }
  }
}

TEST_CASE("text forms") {
  CHECK(parse_permutation("3 4 1 2") == Permutation{3, 4, 1, 2});
  CHECK(parse_permutation(" 2 1 ") == Permutation{2, 1});
  CHECK_THROWS_AS(parse_permutation("1 x"), DomainError);
  CHECK_THROWS_AS(parse_permutation("1 1"), DomainError);
  CHECK(to_string(Partition({3, 3})) == "3+3");
  CHECK(to_string(Partition({2, 6, 4})) == "6+4+2");
  CHECK(parse_partition("2+6+4") == Partition({6, 4, 2}));
  CHECK_THROWS_AS(Partition({3, 0}), DomainError);
}
