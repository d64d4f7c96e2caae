#pragma once

// Staged enumeration search for a girth-maximum (m, r) BTU inside the
// scaled family Z(m, r), and exhaustive enumeration of that family.
//
// Stage 2 pairs the identity with a coprime rotation on b*k points. Each
// later stage i scales the previous BTU by k, relabels so slot i-1 is the
// identity, and jointly searches the rotation in slot i and the k-scaled
// single-cycle candidate in slot i-2 for maximum girth.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "girthsearch/btu.hpp"
#include "girthsearch/parameters.hpp"
#include "girthsearch/searchspace.hpp"

namespace girthsearch {

enum class SearchMode { best, exhaustive };
enum class RotationPolicy { strict, relaxed };

/// Which rung of the relaxed ladder produced a stage's final slot.
enum class StageFallback {
  none,                  // admissible rotation, threshold respected
  any_coprime_rotation,  // threshold dropped, gcd(j, n) = 1 kept
  single_cycle_slot,     // final slot drawn from all of A_(n)(I_n)
};

struct SearchConfig {
  SearchMode mode = SearchMode::best;
  RotationPolicy policy = RotationPolicy::relaxed;
  unsigned worker_count = 1;
  std::optional<std::uint64_t> candidate_cap;
};

struct StageTrace {
  std::size_t stage = 0;
  std::size_t n = 0;
  /// nullopt when the final slot is not a rotation.
  std::optional<std::size_t> rotation_j;
  StageFallback fallback = StageFallback::none;
  std::uint64_t candidates_evaluated = 0;
  /// Configurations that formed a BTU with the stage's optimal partitions.
  std::uint64_t candidates_feasible = 0;
  /// Configurations attaining best_girth (exhaustive mode only; else 0).
  std::uint64_t comaximal = 0;
  /// Size of the final-slot set searched at this stage.
  std::uint64_t final_slot_choices = 0;
  std::uint32_t best_girth = 0;
  std::optional<CandidateWord> best_candidate_word;
  std::optional<CandidateWord> final_slot_word;
};

struct SearchResult {
  Factorization factorization;
  Btu btu;
  std::uint32_t girth = 0;
  std::vector<StageTrace> traces;
  SearchConfig config;
};

/// The search cannot proceed at some stage under the configured policy.
class StageDeadEnd : public DomainError {
 public:
  StageDeadEnd(std::size_t stage, const std::string& detail)
      : DomainError("stage " + std::to_string(stage) + " dead end: " + detail), stage_(stage) {}
  std::size_t stage() const { return stage_; }

 private:
  std::size_t stage_;
};

/// Ascending j in [1, n-1] with min(j, n-j) > threshold and gcd(j, n) = 1.
std::vector<std::size_t> admissible_rotations(std::size_t n, std::size_t threshold);

SearchResult search(std::uint64_t m, std::uint64_t r, const SearchConfig& config = {});

/// Visits Z(m, r) in lexicographic slot order; stops after `cap` yields or
/// when `visit` returns false. Returns the number of BTUs yielded.
std::uint64_t for_each_z(std::uint64_t m, std::uint64_t r, std::optional<std::uint64_t> cap,
                         const std::function<bool(const Btu&)>& visit);

std::vector<Btu> enumerate_z(std::uint64_t m, std::uint64_t r,
                             std::optional<std::uint64_t> cap = {});

const char* to_string(SearchMode mode);
const char* to_string(RotationPolicy policy);
const char* to_string(StageFallback fallback);

}  // namespace girthsearch
