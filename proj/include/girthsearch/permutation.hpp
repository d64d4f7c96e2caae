#pragma once

// Permutation algebra over {1..n}: one-line form, composition, compatibility,
// union-cycle partitions, circulant rotations and block scaling.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace girthsearch {

/// Raised for malformed or mismatched inputs to the combinatorial core.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of S_n in one-line form. Positions and images are 1-based.
class Permutation {
 public:
  using value_type = std::uint32_t;

  /// Validates that `images` is a bijection on {1..n}.
  explicit Permutation(std::vector<value_type> images);
  Permutation(std::initializer_list<value_type> images)
      : Permutation(std::vector<value_type>(images)) {}

  std::size_t degree() const { return images_.size(); }

  /// Image of 1-based position `i`.
  value_type operator()(std::size_t i) const { return images_[i - 1]; }

  std::span<const value_type> images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<value_type> images_;
};

/// Multiset of positive parts summing to total(), kept non-increasing.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::uint64_t> parts);

  std::uint64_t total() const { return total_; }
  std::span<const std::uint64_t> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::uint64_t smallest() const { return parts_.empty() ? 0 : parts_.back(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint64_t> parts_;
  std::uint64_t total_ = 0;
};

Permutation identity(std::size_t n);

/// result(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation invert(const Permutation& p);

/// True iff p(i) != q(i) at every position, i.e. the permutation matrices
/// share no 1-cell.
bool is_compatible(const Permutation& p, const Permutation& q);

/// Cycle type of invert(p) * q. Each part l corresponds to an alternating
/// cycle of length 2l in the union of the two matchings.
Partition union_cycle_partition(const Permutation& p, const Permutation& q);

/// Cycle lengths of a single permutation, as a partition of its degree.
Partition cycle_type(const Permutation& p);

/// Identity matrix of order n with its last j rows moved to the top.
Permutation circular_rotation(std::size_t n, std::size_t j);

/// k block-diagonal copies of q: result(t*n + i) = q(i) + t*n.
Permutation scale_permutation(const Permutation& q, std::size_t k);

/// Space-separated images, e.g. "3 4 1 2".
std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view text);

/// Parts joined by '+', e.g. "3+3".
std::string to_string(const Partition& beta);
Partition parse_partition(std::string_view text);

}  // namespace girthsearch
