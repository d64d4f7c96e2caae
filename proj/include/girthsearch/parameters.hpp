#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "girthsearch/permutation.hpp"

namespace girthsearch {

/// m = b * k^(r-1) with b minimal. k == 1 (b == m) is the degenerate case.
struct Factorization {
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  std::uint64_t b = 0;
  std::uint64_t k = 0;
  bool degenerate = false;

  /// Outside the r < m/2 regime the search assumes.
  bool dense() const { return 2 * r >= m; }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// betas[i-1] is the partition required between slots i and i+1.
struct OptimalPartitionSet {
  Factorization factorization;
  std::vector<Partition> betas;
};

/// base^exponent, or nullopt on uint64 overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent);

/// The integer k with k^exponent == value exactly, if one exists.
std::optional<std::uint64_t> exact_root(std::uint64_t value, std::uint64_t exponent);

/// Requires r >= 2 and m > r.
Factorization factorize(std::uint64_t m, std::uint64_t r);

/// k copies of every part of beta.
Partition scale_partition(const Partition& beta, std::uint64_t k);

/// Built by the staged scale-and-append loop, then checked against the closed
/// form (k^(r-1-i) parts of size b*k^i).
OptimalPartitionSet optimal_partitions(const Factorization& f);

/// Closed form only; used to cross-check the loop.
std::vector<Partition> optimal_partitions_closed_form(const Factorization& f);

}  // namespace girthsearch
