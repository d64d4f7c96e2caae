#include "girthsearch/searchspace.hpp"

#include <algorithm>
#include <string>

namespace girthsearch {

std::uint64_t factorial(std::uint64_t n) {
  if (n > 20) throw DomainError("factorial: " + std::to_string(n) + "! overflows 64 bits");
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

Permutation lex_unrank(std::size_t n, std::uint64_t index) {
  if (index >= factorial(n)) throw DomainError("lex_unrank: index out of range");
  std::vector<Permutation::value_type> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Permutation::value_type>(i + 1);
  std::vector<Permutation::value_type> images;
  images.reserve(n);
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    const std::uint64_t block = factorial(remaining - 1);
    const auto digit = static_cast<std::size_t>(index / block);
    index %= block;
    images.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(images));
}

std::uint64_t lex_rank(const Permutation& p) {
  const std::size_t n = p.degree();
  std::uint64_t rank = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    std::uint64_t smaller_later = 0;
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (p(j) < p(i)) ++smaller_later;
    }
    rank += smaller_later * factorial(n - i);
  }
  return rank;
}

std::uint64_t candidate_count(std::size_t n) {
  if (n < 2) throw DomainError("candidate_count: n must be at least 2");
  return factorial(n - 1);
}

namespace {

Permutation cycle_from_word(std::span<const Permutation::value_type> word) {
  const std::size_t n = word.size() + 1;
  std::vector<Permutation::value_type> sigma(n);
  auto prev = static_cast<Permutation::value_type>(n);
  for (auto a : word) {
    sigma[prev - 1] = a;
    prev = a;
  }
  sigma[prev - 1] = static_cast<Permutation::value_type>(n);
  return Permutation(std::move(sigma));
}

}  // namespace

Permutation unrank_candidate(const CandidateWord& w, const Permutation& base) {
  if (base.degree() != w.n || w.word.degree() + 1 != w.n) {
    throw DomainError("unrank_candidate: degree mismatch");
  }
  return compose(base, cycle_from_word(w.word.images()));
}

CandidateWord rank_candidate(const Permutation& q, const Permutation& base) {
  const std::size_t n = base.degree();
  if (q.degree() != n) throw DomainError("rank_candidate: degree mismatch");
  if (n < 2) throw DomainError("rank_candidate: not a candidate (degree < 2)");
  const Permutation sigma = compose(invert(base), q);
  std::vector<Permutation::value_type> word;
  word.reserve(n - 1);
  for (auto x = sigma(n); x != n; x = sigma(x)) {
    word.push_back(x);
    if (word.size() >= n) break;
  }
  if (word.size() != n - 1) {
    throw DomainError("rank_candidate: not a candidate (partition with base is " +
                      to_string(cycle_type(sigma)) + ", not (" + std::to_string(n) + "))");
  }
  return CandidateWord{n, Permutation(std::move(word))};
}

void for_each_candidate(const Permutation& base, std::uint64_t first, std::uint64_t last,
                        const std::function<bool(std::uint64_t, const Permutation&)>& visit) {
  const std::size_t n = base.degree();
  const std::uint64_t total = candidate_count(n);
  last = std::min(last, total);
  if (first >= last) return;
  const Permutation start = lex_unrank(n - 1, first);
  std::vector<Permutation::value_type> word(start.images().begin(), start.images().end());
  for (std::uint64_t index = first; index < last; ++index) {
    if (!visit(index, compose(base, cycle_from_word(word)))) return;
    std::next_permutation(word.begin(), word.end());
  }
}

std::vector<Permutation> enumerate_candidates(const Permutation& base,
                                              std::optional<std::uint64_t> limit) {
  std::vector<Permutation> out;
  const std::uint64_t total = candidate_count(base.degree());
  const std::uint64_t last = limit ? std::min(*limit, total) : total;
  for_each_candidate(base, 0, last, [&](std::uint64_t, const Permutation& q) {
    out.push_back(q);
    return true;
  });
  return out;
}

CayleyStats cayley_stats(const Factorization& f, std::uint64_t stage) {
  if (f.degenerate) throw DomainError("cayley_stats: degenerate factorization (k=1)");
  if (stage < 1 || stage + 2 > f.r) {
    throw DomainError("cayley_stats: stage " + std::to_string(stage) + " outside 1.." +
                      std::to_string(f.r < 2 ? 0 : f.r - 2));
  }
  const auto power = checked_pow(f.k, stage);
  if (!power) throw DomainError("cayley_stats: parameters overflow");
  const std::uint64_t n = f.b * *power;
  return CayleyStats{n - 1, factorial(n - 1), n - 2, n};
}

}  // namespace girthsearch
