#pragma once

// The candidate set A_(n)(base): permutations q compatible with `base` whose
// union with it is a single alternating cycle of length 2n. It is in
// bijection with S_{n-1}: a word (a_1..a_{n-1}) names the n-cycle
// n -> a_1 -> ... -> a_{n-1} -> n, and the candidate is base * that cycle.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "girthsearch/parameters.hpp"
#include "girthsearch/permutation.hpp"

namespace girthsearch {

struct CandidateWord {
  std::size_t n = 0;
  Permutation word;  // degree n - 1
};

struct CayleyStats {
  std::uint64_t degree_sym = 0;
  std::uint64_t order = 0;
  std::uint64_t node_degree = 0;
  std::uint64_t transition_bound = 0;
};

/// n!, throwing past 20! (the largest that fits in 64 bits).
std::uint64_t factorial(std::uint64_t n);

/// The index-th permutation of degree n in lexicographic order (0-based).
Permutation lex_unrank(std::size_t n, std::uint64_t index);
std::uint64_t lex_rank(const Permutation& p);

/// (n-1)!
std::uint64_t candidate_count(std::size_t n);

Permutation unrank_candidate(const CandidateWord& w, const Permutation& base);
CandidateWord rank_candidate(const Permutation& q, const Permutation& base);

/// Candidates whose words have lexicographic index in [first, last).
/// Stops early if `visit` returns false.
void for_each_candidate(const Permutation& base, std::uint64_t first, std::uint64_t last,
                        const std::function<bool(std::uint64_t, const Permutation&)>& visit);

/// All candidates in word order, truncated to `limit` if given.
std::vector<Permutation> enumerate_candidates(const Permutation& base,
                                              std::optional<std::uint64_t> limit = {});

/// Size statistics of the per-stage search space, 1 <= stage <= r-2.
CayleyStats cayley_stats(const Factorization& f, std::uint64_t stage);

}  // namespace girthsearch
