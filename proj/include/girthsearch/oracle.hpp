#pragma once

// Brute-force ground truth for small (m, r): every labeled BTU, its girth,
// and comparisons against the staged search.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "girthsearch/btu.hpp"
#include "girthsearch/engine.hpp"

namespace girthsearch {

inline constexpr double kOracleCheckBudget = 1e7;

/// The requested enumeration would exceed the compatibility-check budget.
class BudgetExceeded : public DomainError {
 public:
  BudgetExceeded(std::uint64_t m, std::uint64_t r, double estimate);
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

/// Heuristic count of compatibility checks for enumerate_btus.
double estimated_checks(std::uint64_t m, std::uint64_t r, bool fix_first_identity);

/// Every ordered tuple of r pairwise-compatible permutations of degree m in
/// lexicographic order, slot 1 pinned to the identity if requested. Returns
/// the number of tuples visited; stops early if `visit` returns false.
std::uint64_t for_each_btu(std::uint64_t m, std::uint64_t r, bool fix_first_identity,
                           const std::function<bool(const Btu&)>& visit);

std::vector<Btu> enumerate_btus(std::uint64_t m, std::uint64_t r, bool fix_first_identity);

struct OracleReport {
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  std::uint32_t max_girth = 0;
  std::uint64_t maximizer_count = 0;
  std::optional<Btu> witness;
  std::uint64_t enumerated = 0;
  bool first_slot_fixed = true;
};

OracleReport max_girth(std::uint64_t m, std::uint64_t r, bool fix_first_identity = true);

using PartitionSignature = std::vector<Partition>;

std::map<PartitionSignature, std::uint64_t> phi_census(std::uint64_t m, std::uint64_t r,
                                                       bool fix_first_identity = true);

struct VerifyReport {
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  std::optional<std::uint32_t> engine_girth;
  /// Empty when the engine ran; otherwise why it could not.
  std::string engine_status;
  std::optional<Btu> engine_witness;
  OracleReport oracle;
  bool equal = false;
};

/// Never throws on disagreement; inequality is reported, not raised.
VerifyReport verify_search(std::uint64_t m, std::uint64_t r, const SearchConfig& config = {});

}  // namespace girthsearch
