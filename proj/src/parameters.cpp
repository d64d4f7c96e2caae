#include "girthsearch/parameters.hpp"

#include <string>

namespace girthsearch {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t e = 0; e < exponent; ++e) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

std::optional<std::uint64_t> exact_root(std::uint64_t value, std::uint64_t exponent) {
  if (exponent == 0) return std::nullopt;
  if (exponent == 1 || value <= 1) return value;
  // Largest k with k^exponent <= value, by bisection on integers.
  std::uint64_t lo = 1;
  std::uint64_t hi = value;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    const auto p = checked_pow(mid, exponent);
    if (p && *p <= value) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const auto p = checked_pow(lo, exponent);
  if (p && *p == value) return lo;
  return std::nullopt;
}

Factorization factorize(std::uint64_t m, std::uint64_t r) {
  if (r < 2) throw DomainError("factorize: r must be at least 2 (got " + std::to_string(r) + ")");
  if (m <= r) {
    throw DomainError("factorize: m must exceed r (m=" + std::to_string(m) +
                      ", r=" + std::to_string(r) + ")");
  }
  for (std::uint64_t b = 1; b <= m; ++b) {
    if (m % b != 0) continue;
    if (auto k = exact_root(m / b, r - 1)) {
      return Factorization{m, r, b, *k, *k == 1};
    }
  }
  // b == m always succeeds with k == 1.
  return Factorization{m, r, m, 1, true};
}

Partition scale_partition(const Partition& beta, std::uint64_t k) {
  if (k == 0) throw DomainError("scale_partition: factor must be positive");
  std::vector<std::uint64_t> parts;
  parts.reserve(beta.size() * k);
  for (auto part : beta.parts()) parts.insert(parts.end(), k, part);
  return Partition(std::move(parts));
}

std::vector<Partition> optimal_partitions_closed_form(const Factorization& f) {
  std::vector<Partition> betas;
  for (std::uint64_t i = 1; i + 1 <= f.r; ++i) {
    const auto count = checked_pow(f.k, f.r - 1 - i);
    const auto size = checked_pow(f.k, i);
    if (!count || !size) throw DomainError("optimal_partitions: parameters overflow");
    betas.emplace_back(std::vector<std::uint64_t>(*count, f.b * *size));
  }
  return betas;
}

OptimalPartitionSet optimal_partitions(const Factorization& f) {
  if (f.degenerate || f.k < 2) {
    throw DomainError("optimal_partitions: degenerate factorization (k=1)");
  }
  if (f.r < 2) throw DomainError("optimal_partitions: r must be at least 2");

  std::vector<Partition> betas;
  std::uint64_t z = f.b * f.k;
  for (std::uint64_t i = 1; i <= f.r - 1; ++i) {
    for (auto& earlier : betas) earlier = scale_partition(earlier, f.k);
    betas.emplace_back(std::vector<std::uint64_t>{z});
    z *= f.k;
  }

  if (betas != optimal_partitions_closed_form(f)) {
    throw std::logic_error("optimal_partitions: staged loop disagrees with closed form");
  }
  return OptimalPartitionSet{f, std::move(betas)};
}

}  // namespace girthsearch
