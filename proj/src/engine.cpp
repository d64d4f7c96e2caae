#include "girthsearch/engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

namespace girthsearch {

std::vector<std::size_t> admissible_rotations(std::size_t n, std::size_t threshold) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < n; ++j) {
    if (std::min(j, n - j) > threshold && std::gcd(j, n) == 1) out.push_back(j);
  }
  return out;
}

const char* to_string(SearchMode mode) {
  return mode == SearchMode::best ? "best" : "exhaustive";
}

const char* to_string(RotationPolicy policy) {
  return policy == RotationPolicy::strict ? "strict" : "relaxed";
}

const char* to_string(StageFallback fallback) {
  switch (fallback) {
    case StageFallback::none:
      return "none";
    case StageFallback::any_coprime_rotation:
      return "any_coprime_rotation";
    case StageFallback::single_cycle_slot:
      return "single_cycle_slot";
  }
  return "none";
}

namespace {

constexpr std::uint64_t kNoIndex = std::numeric_limits<std::uint64_t>::max();

std::vector<std::size_t> coprime_rotations(std::size_t n) { return admissible_rotations(n, 0); }

// The set the final slot of a stage ranges over.
struct FinalSlots {
  StageFallback level = StageFallback::none;
  std::size_t n = 0;
  std::vector<std::size_t> rotations;

  std::uint64_t size() const {
    return level == StageFallback::single_cycle_slot ? candidate_count(n) : rotations.size();
  }
  Permutation at(std::uint64_t index) const {
    if (level == StageFallback::single_cycle_slot) {
      return unrank_candidate(CandidateWord{n, lex_unrank(n - 1, index)}, identity(n));
    }
    return circular_rotation(n, rotations[index]);
  }
};

// Everything a stage needs besides the (final, candidate) pair.
struct Stage {
  std::size_t index = 0;
  std::size_t n = 0;
  std::size_t k = 1;
  // Degree of the unscaled candidate in slot index-2; 0 at stage 2.
  std::size_t candidate_degree = 0;
  std::vector<Permutation> prefix;
  std::vector<Partition> betas;

  std::uint64_t candidates_per_final() const {
    return candidate_degree == 0 ? 1 : candidate_count(candidate_degree);
  }

  Permutation candidate(std::uint64_t word_index) const {
    const Permutation word = lex_unrank(candidate_degree - 1, word_index);
    return unrank_candidate(CandidateWord{candidate_degree, word}, identity(candidate_degree));
  }

  // The stage BTU for one configuration, or nullopt if it is not a BTU with
  // the stage's optimal partitions.
  std::optional<Btu> assemble(const Permutation& final_slot, std::uint64_t word_index) const {
    std::vector<Permutation> perms = prefix;
    if (candidate_degree != 0) {
      perms.push_back(scale_permutation(candidate(word_index), k));
    }
    perms.push_back(identity(n));
    perms.push_back(final_slot);
    for (std::size_t a = 0; a < perms.size(); ++a) {
      for (std::size_t b = a + 1; b < perms.size(); ++b) {
        if (!is_compatible(perms[a], perms[b])) return std::nullopt;
      }
    }
    Btu btu = make_btu(std::move(perms));
    if (!in_phi(btu, betas)) return std::nullopt;
    return btu;
  }
};

struct Partial {
  std::uint32_t best_girth = 0;
  std::uint64_t best_index = kNoIndex;
  std::uint64_t comaximal = 0;
  std::uint64_t feasible = 0;

  void merge(const Partial& other) {
    feasible += other.feasible;
    if (other.best_girth > best_girth) {
      best_girth = other.best_girth;
      best_index = other.best_index;
      comaximal = other.comaximal;
    } else if (other.best_girth == best_girth && other.best_girth != 0) {
      best_index = std::min(best_index, other.best_index);
      comaximal += other.comaximal;
    }
  }
};

Partial evaluate_range(const Stage& stage, const FinalSlots& finals, SearchMode mode,
                       std::uint64_t first, std::uint64_t last) {
  Partial out;
  const std::uint64_t per_final = stage.candidates_per_final();
  std::uint64_t cached_final = kNoIndex;
  std::optional<Permutation> final_slot;
  for (std::uint64_t index = first; index < last; ++index) {
    const std::uint64_t final_index = index / per_final;
    if (final_index != cached_final) {
      final_slot = finals.at(final_index);
      cached_final = final_index;
    }
    const auto btu = stage.assemble(*final_slot, index % per_final);
    if (!btu) continue;
    ++out.feasible;
    if (mode == SearchMode::best) {
      // Only a strictly longer girth can displace the incumbent.
      if (out.best_girth != 0 && girth_below(*btu, out.best_girth + 1) <= out.best_girth) {
        continue;
      }
      out.best_girth = girth_below(*btu, kNoCycle);
      out.best_index = index;
    } else {
      const std::uint32_t g = girth_below(*btu, kNoCycle);
      if (g > out.best_girth) {
        out.best_girth = g;
        out.best_index = index;
        out.comaximal = 1;
      } else if (g == out.best_girth) {
        ++out.comaximal;
      }
    }
  }
  return out;
}

Partial evaluate(const Stage& stage, const FinalSlots& finals, const SearchConfig& config,
                 std::uint64_t total) {
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(config.worker_count, total));
  if (workers == 1) return evaluate_range(stage, finals, config.mode, 0, total);

  std::vector<Partial> partials(workers);
  {
    std::vector<std::jthread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = std::min(total, w * chunk);
      const std::uint64_t last = std::min(total, first + chunk);
      threads.emplace_back([&, w, first, last] {
        partials[w] = evaluate_range(stage, finals, config.mode, first, last);
      });
    }
  }
  Partial out;
  for (const auto& p : partials) out.merge(p);
  return out;
}

std::vector<FinalSlots> final_slot_ladder(std::size_t n, std::size_t threshold,
                                          RotationPolicy policy) {
  std::vector<FinalSlots> ladder;
  ladder.push_back(FinalSlots{StageFallback::none, n, admissible_rotations(n, threshold)});
  if (policy == RotationPolicy::relaxed) {
    ladder.push_back(FinalSlots{StageFallback::any_coprime_rotation, n, coprime_rotations(n)});
    ladder.push_back(FinalSlots{StageFallback::single_cycle_slot, n, {}});
  }
  return ladder;
}

// Runs one stage down the ladder; returns the winning BTU and its trace.
std::pair<Btu, StageTrace> run_stage(const Stage& stage, std::size_t threshold,
                                     const SearchConfig& config) {
  for (const auto& finals : final_slot_ladder(stage.n, threshold, config.policy)) {
    if (finals.size() == 0) continue;
    std::uint64_t total = finals.size() * stage.candidates_per_final();
    if (config.candidate_cap) total = std::min(total, *config.candidate_cap);

    const Partial result = evaluate(stage, finals, config, total);
    if (result.best_index == kNoIndex) continue;

    const std::uint64_t per_final = stage.candidates_per_final();
    const std::uint64_t final_index = result.best_index / per_final;
    const std::uint64_t word_index = result.best_index % per_final;
    auto btu = stage.assemble(finals.at(final_index), word_index);

    StageTrace trace;
    trace.stage = stage.index;
    trace.n = stage.n;
    trace.fallback = finals.level;
    trace.candidates_evaluated = total;
    trace.candidates_feasible = result.feasible;
    trace.comaximal = config.mode == SearchMode::exhaustive ? result.comaximal : 0;
    trace.final_slot_choices = finals.size();
    trace.best_girth = result.best_girth;
    if (finals.level == StageFallback::single_cycle_slot) {
      trace.final_slot_word = CandidateWord{stage.n, lex_unrank(stage.n - 1, final_index)};
    } else {
      trace.rotation_j = finals.rotations[final_index];
    }
    if (stage.candidate_degree != 0) {
      trace.best_candidate_word =
          CandidateWord{stage.candidate_degree, lex_unrank(stage.candidate_degree - 1, word_index)};
    }
    return {std::move(*btu), std::move(trace)};
  }
  throw StageDeadEnd(stage.index, std::string("no compatible configuration under ") +
                                      to_string(config.policy) + " policy (n=" +
                                      std::to_string(stage.n) + ")");
}

std::vector<Partition> stage_betas(std::uint64_t b, std::uint64_t k, std::uint64_t stage) {
  const auto power = checked_pow(k, stage - 1);
  if (!power) throw DomainError("search: parameters overflow");
  return optimal_partitions_closed_form(Factorization{b * *power, stage, b, k, false});
}

}  // namespace

SearchResult search(std::uint64_t m, std::uint64_t r, const SearchConfig& config) {
  if (config.worker_count < 1) throw DomainError("search: worker_count must be at least 1");
  if (config.candidate_cap && *config.candidate_cap < 1) {
    throw DomainError("search: candidate_cap must be at least 1");
  }
  const Factorization f = factorize(m, r);
  if (f.degenerate) throw DomainError("k=1: enumeration search inapplicable");
  const std::size_t b = f.b;
  const std::size_t k = f.k;

  std::vector<StageTrace> traces;

  Stage first;
  first.index = 2;
  first.n = b * k;
  first.k = k;
  first.betas = stage_betas(b, k, 2);
  auto [current, trace] = run_stage(first, b, config);
  traces.push_back(std::move(trace));

  std::size_t n = b * k;
  for (std::size_t i = 3; i <= r; ++i) {
    const std::size_t prev_n = n;
    n *= k;
    std::vector<Permutation> scaled;
    for (const auto& p : current.perms()) scaled.push_back(scale_permutation(p, k));
    const Btu rebased = rebase(make_btu(std::move(scaled)), i - 1);

    Stage stage;
    stage.index = i;
    stage.n = n;
    stage.k = k;
    stage.candidate_degree = prev_n;
    stage.prefix.assign(rebased.perms().begin(), rebased.perms().begin() + (i - 3));
    stage.betas = stage_betas(b, k, i);
    auto [next, next_trace] = run_stage(stage, prev_n, config);
    current = std::move(next);
    traces.push_back(std::move(next_trace));
  }

  if (!in_phi(current, optimal_partitions(f).betas) || !current.slot(r - 1).is_identity()) {
    throw std::logic_error("search: result violates the optimal partition structure");
  }
  const std::uint32_t g = girth_below(current, kNoCycle);
  return SearchResult{f, std::move(current), g, std::move(traces), config};
}

std::uint64_t for_each_z(std::uint64_t m, std::uint64_t r, std::optional<std::uint64_t> cap,
                         const std::function<bool(const Btu&)>& visit) {
  const Factorization f = factorize(m, r);
  if (f.degenerate) throw DomainError("enumerate_z: degenerate factorization (k=1)");
  const auto betas = optimal_partitions(f).betas;

  // Choices for slots 1..r-2 (scaled candidates) and slot r.
  std::vector<std::vector<Permutation>> choices;
  for (std::uint64_t j = 1; j + 2 <= r; ++j) {
    const auto block = f.b * *checked_pow(f.k, j);
    const auto folds = *checked_pow(f.k, r - 1 - j);
    std::vector<Permutation> slot;
    for (const auto& q : enumerate_candidates(identity(block))) {
      slot.push_back(scale_permutation(q, folds));
    }
    choices.push_back(std::move(slot));
  }

  std::vector<Permutation> perms;
  const Permutation id = identity(m);
  std::uint64_t yielded = 0;
  bool stop = false;

  auto compatible_with_all = [&](const Permutation& p) {
    return std::all_of(perms.begin(), perms.end(),
                       [&](const Permutation& other) { return is_compatible(p, other); });
  };
  auto partition_ok = [&](const Permutation& next) {
    return perms.empty() ||
           union_cycle_partition(perms.back(), next) == betas[perms.size() - 1];
  };

  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (depth < choices.size()) {
      for (const auto& p : choices[depth]) {
        if (!compatible_with_all(p) || !partition_ok(p)) continue;
        perms.push_back(p);
        self(self, depth + 1);
        perms.pop_back();
        if (stop) return;
      }
      return;
    }
    if (!compatible_with_all(id) || !partition_ok(id)) return;
    perms.push_back(id);
    // Last slot: the cycle m -> a1 -> ... -> a(m-1) -> m, built word-first in
    // lexicographic order and cut as soon as an assigned image clashes.
    std::vector<Permutation::value_type> images(m, 0);
    std::vector<bool> used(m + 1, false);
    auto clashes = [&](std::size_t pos, std::size_t image) {
      return std::any_of(perms.begin(), perms.end(),
                         [&](const Permutation& p) { return p(pos) == image; });
    };
    auto extend = [&](auto&& next, std::size_t prev, std::size_t depth) -> void {
      if (depth == m - 1) {
        if (clashes(prev, m)) return;
        images[prev - 1] = static_cast<Permutation::value_type>(m);
        perms.push_back(Permutation(images));
        const Btu btu = make_btu(perms);
        perms.pop_back();
        ++yielded;
        if (!visit(btu) || (cap && yielded >= *cap)) stop = true;
        return;
      }
      for (std::size_t a = 1; a < m && !stop; ++a) {
        if (used[a] || clashes(prev, a)) continue;
        used[a] = true;
        images[prev - 1] = static_cast<Permutation::value_type>(a);
        next(next, a, depth + 1);
        used[a] = false;
      }
    };
    extend(extend, m, 0);
    perms.pop_back();
  };
  recurse(recurse, 0);
  return yielded;
}

std::vector<Btu> enumerate_z(std::uint64_t m, std::uint64_t r, std::optional<std::uint64_t> cap) {
  std::vector<Btu> out;
  for_each_z(m, r, cap, [&](const Btu& btu) {
    out.push_back(btu);
    return true;
  });
  return out;
}

}  // namespace girthsearch
