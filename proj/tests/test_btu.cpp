#include <random>
#include <set>

#include "doctest.h"
#include "girthsearch/btu.hpp"
#include "oracles.hpp"

using namespace girthsearch;

namespace {

bool is_simple_cycle(const Btu& btu, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 4 || cycle.size() % 2 != 0) return false;
  std::set<std::pair<bool, std::uint32_t>> seen;
  const auto mat = to_biadjacency<int>(btu);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex& a = cycle[i];
    const Vertex& b = cycle[(i + 1) % cycle.size()];
    if (a.right == b.right) return false;
    const Vertex& row = a.right ? b : a;
    const Vertex& col = a.right ? a : b;
    if (mat(row.index - 1, col.index - 1) != 1) return false;
    if (!seen.insert({a.right, a.index}).second) return false;
  }
  return true;
}

// Relabel rows by sigma and columns by tau: edge (i, j) -> (sigma(i), tau(j)).
Btu relabel(const Btu& btu, const Permutation& sigma, const Permutation& tau) {
  std::vector<Permutation> perms;
  for (const auto& p : btu.perms()) {
    std::vector<Permutation::value_type> images(p.degree());
    for (std::size_t i = 1; i <= p.degree(); ++i) images[sigma(i) - 1] = tau(p(i));
    perms.emplace_back(std::move(images));
  }
  return make_btu(std::move(perms));
}

}  // namespace

TEST_CASE("make_btu validation") {
  const Btu k33 = make_btu({identity(3), Permutation{2, 3, 1}, Permutation{3, 1, 2}});
  CHECK(k33.m() == 3);
  CHECK(k33.r() == 3);
  CHECK(to_biadjacency(k33) == BiadjacencyMatrix<int>::Ones(3, 3));

  try {
    make_btu({identity(3), Permutation{2, 1, 3}});
    FAIL("expected a conflict");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("slots 1 and 2 conflict at position 3") != std::string::npos);
  }

  CHECK_NOTHROW(make_btu({identity(4), Permutation{2, 1, 4, 3}, Permutation{3, 4, 2, 1}}));
  CHECK_THROWS_AS(make_btu({}), DomainError);
  CHECK_THROWS_AS(make_btu({identity(3), identity(4)}), DomainError);
}

TEST_CASE("biadjacency matrix") {
  CHECK(to_biadjacency(make_btu({identity(2), Permutation{2, 1}})) ==
        BiadjacencyMatrix<int>::Ones(2, 2));

  BiadjacencyMatrix<int> figure(8, 8);
  figure << 0, 0, 1, 0, 0, 0, 0, 0,
            0, 0, 0, 1, 0, 0, 0, 0,
            1, 0, 0, 0, 0, 0, 0, 0,
            0, 1, 0, 0, 0, 0, 0, 0,
            0, 0, 0, 0, 0, 0, 1, 0,
            0, 0, 0, 0, 0, 0, 0, 1,
            0, 0, 0, 0, 1, 0, 0, 0,
            0, 0, 0, 0, 0, 1, 0, 0;
  CHECK(to_biadjacency(make_btu({Permutation{3, 4, 1, 2, 7, 8, 5, 6}})) == figure);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Btu btu = test::random_btu(6, 3, rng);
    const BiadjacencyMatrix<int> mat = to_biadjacency<std::uint8_t>(btu).cast<int>();
    CHECK((mat.rowwise().sum().array() == 3).all());
    CHECK((mat.colwise().sum().array() == 3).all());
  }
}

TEST_CASE("decompose matrix") {
  const Btu from_ones = decompose_matrix(BiadjacencyMatrix<int>::Ones(3, 3));
  CHECK(from_ones.r() == 3);
  CHECK(decompose_matrix(to_biadjacency(from_ones)) == from_ones);
  CHECK(to_biadjacency(from_ones) == BiadjacencyMatrix<int>::Ones(3, 3));

  const Btu from_identity = decompose_matrix(BiadjacencyMatrix<int>::Identity(5, 5));
  CHECK(from_identity.r() == 1);
  CHECK(from_identity.slot(1) == identity(5));

  BiadjacencyMatrix<int> irregular = BiadjacencyMatrix<int>::Identity(3, 3);
  irregular(0, 1) = 1;
  CHECK_THROWS_AS(decompose_matrix(irregular), DomainError);
  CHECK_THROWS_AS(decompose_matrix(BiadjacencyMatrix<int>::Ones(2, 3)), DomainError);
  CHECK_THROWS_AS(decompose_matrix(BiadjacencyMatrix<int>::Constant(2, 2, 2)), DomainError);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Btu btu = test::random_btu(7, 1 + trial % 4, rng);
    const auto mat = to_biadjacency(btu);
    const Btu back = decompose_matrix(mat);
    CHECK(to_biadjacency(back) == mat);
    CHECK_NOTHROW(make_btu(std::vector<Permutation>(back.perms().begin(), back.perms().end())));
  }
}

TEST_CASE("girth examples") {
  for (std::size_t m = 3; m <= 8; ++m) {
    const Btu btu = make_btu({identity(m), circular_rotation(m, 1)});
    CHECK(girth(btu).girth == std::optional<std::uint32_t>(2 * m));
  }
  const Btu k33 = make_btu({identity(3), Permutation{2, 3, 1}, Permutation{3, 1, 2}});
  CHECK(girth(k33).girth == std::optional<std::uint32_t>(4));

  // Every (4,3) BTU is K_{4,4} minus a perfect matching, i.e. the 3-cube.
  const Btu cube = make_btu({Permutation{2, 1, 4, 3}, identity(4), Permutation{3, 4, 2, 1}});
  CHECK(test::girth_by_edge_deletion(cube) == 4);
  CHECK(girth(cube).girth == std::optional<std::uint32_t>(4));

  CHECK_FALSE(girth(make_btu({identity(4)})).girth.has_value());
}

TEST_CASE("girth agrees with edge-deletion oracle and is even") {
  std::mt19937 rng(3);
  for (std::size_t m = 3; m <= 8; ++m) {
    for (std::size_t r = 2; r <= std::min<std::size_t>(m, 4); ++r) {
      for (int trial = 0; trial < 8; ++trial) {
        const Btu btu = test::random_btu(m, r, rng);
        const GirthReport report = girth(btu, true);
        REQUIRE(report.girth.has_value());
        CHECK(*report.girth == test::girth_by_edge_deletion(btu));
        CHECK(*report.girth % 2 == 0);
        CHECK(*report.girth >= 4);
        CHECK(report.witness_cycle.size() == *report.girth);
        CHECK(is_simple_cycle(btu, report.witness_cycle));
        CHECK(girth_below(btu, 4) == 4);
        CHECK(girth_below(btu, kNoCycle) == *report.girth);
      }
    }
  }
}

TEST_CASE("girth of 2-regular BTUs equals twice the smallest part") {
  for (std::size_t m = 2; m <= 8; ++m) {
    for (const auto& q : test::all_permutations(m)) {
      if (!is_compatible(identity(m), q)) continue;
      const Btu btu = make_btu({identity(m), q});
      CHECK(girth(btu).girth ==
            std::optional<std::uint32_t>(2 * adjacent_partitions(btu)[0].smallest()));
    }
  }
}

TEST_CASE("rebase") {
  const Btu with_identity = make_btu({identity(4), Permutation{2, 1, 4, 3}});
  CHECK(rebase(with_identity, 1) == with_identity);
  CHECK_THROWS_AS(rebase(with_identity, 0), DomainError);
  CHECK_THROWS_AS(rebase(with_identity, 3), DomainError);

  const Btu shifted = make_btu({circular_rotation(4, 1), identity(4)});
  const Btu rebased = rebase(shifted, 1);
  CHECK(rebased.slot(1) == identity(4));
  CHECK(rebased.slot(2) == invert(circular_rotation(4, 1)));
  CHECK(girth(rebased).girth == girth(shifted).girth);

  std::mt19937 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 4 + trial % 3;
    const Btu btu = test::random_btu(m, 3, rng);
    for (std::size_t slot = 1; slot <= 3; ++slot) {
      const Btu moved = rebase(btu, slot);
      CHECK(moved.slot(slot).is_identity());
      CHECK(girth(moved).girth == girth(btu).girth);
      for (std::size_t a = 1; a <= 3; ++a) {
        for (std::size_t b = a + 1; b <= 3; ++b) {
          CHECK(union_cycle_partition(moved.slot(a), moved.slot(b)) ==
                union_cycle_partition(btu.slot(a), btu.slot(b)));
        }
      }
    }
    const Btu relabelled =
        relabel(btu, test::random_permutation(m, rng), test::random_permutation(m, rng));
    CHECK(girth(relabelled).girth == girth(btu).girth);
  }
}

TEST_CASE("adjacent partitions and phi membership") {
  CHECK(adjacent_partitions(make_btu({identity(4), circular_rotation(4, 1)})) ==
        std::vector<Partition>{Partition({4})});
  CHECK(adjacent_partitions(make_btu({Permutation{2, 1, 4, 3}, identity(4),
                                      Permutation{3, 4, 2, 1}})) ==
        std::vector<Partition>{Partition({2, 2}), Partition({4})});
  CHECK(adjacent_partitions(make_btu({identity(6), circular_rotation(6, 2)})) ==
        std::vector<Partition>{Partition({3, 3})});

  const std::vector<Partition> optimal{Partition({2, 2}), Partition({4})};
  CHECK(in_phi(make_btu({Permutation{3, 4, 1, 2}, identity(4), Permutation{2, 3, 4, 1}}),
               optimal));
  const std::vector<Partition> single{Partition({4})};
  CHECK_FALSE(in_phi(make_btu({identity(4), circular_rotation(4, 2)}), single));
  CHECK_FALSE(in_phi(make_btu({identity(4), circular_rotation(4, 1)}), optimal));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Btu btu = test::random_btu(6, 2, rng);
    CHECK(in_phi(btu, adjacent_partitions(btu)));
  }
}

TEST_CASE("canonical order sorts by first image") {
  const Btu btu = make_btu({Permutation{3, 1, 2}, identity(3), Permutation{2, 3, 1}});
  const Btu sorted = canonicalize_order(btu);
  CHECK(sorted.slot(1) == identity(3));
  CHECK(sorted.slot(2) == Permutation{2, 3, 1});
  CHECK(sorted.slot(3) == Permutation{3, 1, 2});
}

TEST_CASE("Z membership") {
  const Factorization f{4, 3, 1, 2, false};
  const Btu z = make_btu({Permutation{2, 1, 4, 3}, identity(4), Permutation{3, 4, 2, 1}});
  CHECK(is_block_scaling(z.slot(1), 2));
  CHECK(in_z(z, f));
  CHECK(in_phi(z, optimal_partitions(f).betas));

  const Btu not_scaled =
      make_btu({Permutation{3, 4, 1, 2}, identity(4), Permutation{2, 3, 4, 1}});
  CHECK_FALSE(is_block_scaling(not_scaled.slot(1), 2));
  CHECK_FALSE(in_z(not_scaled, f));

  const Btu moved_identity =
      make_btu({identity(4), Permutation{2, 1, 4, 3}, Permutation{3, 4, 2, 1}});
  CHECK_FALSE(in_z(moved_identity, f));

  CHECK(is_block_scaling(Permutation{3, 4, 1, 2, 7, 8, 5, 6}, 2));
  CHECK(is_block_scaling(Permutation{2, 1, 4, 3, 6, 5, 8, 7}, 4));
  CHECK_FALSE(is_block_scaling(Permutation{2, 1, 4, 3, 6, 5, 8, 7}, 3));
}
