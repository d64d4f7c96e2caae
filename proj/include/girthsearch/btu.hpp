#pragma once

// A Balanced Tanner Unit: an ordered set of r pairwise-compatible
// permutations of degree m, equivalently an r-regular m x m 0/1 matrix.

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "girthsearch/parameters.hpp"
#include "girthsearch/permutation.hpp"

namespace girthsearch {

class Btu {
 public:
  std::size_t m() const { return perms_.front().degree(); }
  std::size_t r() const { return perms_.size(); }

  /// Slots are 1-based, matching p_1..p_r.
  const Permutation& slot(std::size_t i) const { return perms_.at(i - 1); }
  std::span<const Permutation> perms() const { return perms_; }

  friend bool operator==(const Btu&, const Btu&) = default;
  friend auto operator<=>(const Btu&, const Btu&) = default;

 private:
  friend Btu make_btu(std::vector<Permutation> perms);
  explicit Btu(std::vector<Permutation> perms) : perms_(std::move(perms)) {}
  std::vector<Permutation> perms_;
};

/// Validates degrees and pairwise compatibility. The error message names the
/// first conflicting slot pair and position.
Btu make_btu(std::vector<Permutation> perms);

template <typename Scalar>
using BiadjacencyMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Cell (i, p_t(i)) is 1 for every slot t.
template <typename Scalar = int>
BiadjacencyMatrix<Scalar> to_biadjacency(const Btu& btu) {
  const auto m = static_cast<Eigen::Index>(btu.m());
  BiadjacencyMatrix<Scalar> mat = BiadjacencyMatrix<Scalar>::Zero(m, m);
  for (const auto& p : btu.perms()) {
    for (std::size_t i = 1; i <= p.degree(); ++i) {
      mat(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(p(i) - 1)) = Scalar(1);
    }
  }
  return mat;
}

/// Row-major dense 0/1 cells, the common currency of the matrix importers.
struct CellGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> cells;

  bool at(std::size_t i, std::size_t j) const { return cells[i * cols + j] != 0; }
};

Btu decompose_cells(const CellGrid& grid);

/// Peels r perfect matchings off a regular 0/1 matrix (lowest-index
/// augmenting paths, so the slot order is reproducible).
template <typename Derived>
Btu decompose_matrix(const Eigen::MatrixBase<Derived>& mat) {
  CellGrid grid;
  grid.rows = static_cast<std::size_t>(mat.rows());
  grid.cols = static_cast<std::size_t>(mat.cols());
  grid.cells.resize(grid.rows * grid.cols);
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    for (Eigen::Index j = 0; j < mat.cols(); ++j) {
      const auto v = mat(i, j);
      if (v != 0 && v != 1) throw DomainError("decompose_matrix: entries must be 0 or 1");
      grid.cells[static_cast<std::size_t>(i) * grid.cols + static_cast<std::size_t>(j)] =
          v != 0 ? 1 : 0;
    }
  }
  return decompose_cells(grid);
}

/// A vertex of the bipartite graph: row (left) or column (right), 1-based.
struct Vertex {
  bool right = false;
  std::uint32_t index = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct GirthReport {
  /// nullopt when the graph is a forest.
  std::optional<std::uint32_t> girth;
  /// A shortest cycle as a closed vertex sequence (first vertex not repeated).
  std::vector<Vertex> witness_cycle;
};

inline constexpr std::uint32_t kNoCycle = std::numeric_limits<std::uint32_t>::max();

/// Shortest cycle length, or `cutoff` if none shorter than `cutoff` exists.
/// Lets callers that only need "is it longer than x" stop early.
std::uint32_t girth_below(const Btu& btu, std::uint32_t cutoff);

GirthReport girth(const Btu& btu, bool want_witness = false);

/// perms'[t] = perms[t] * invert(perms[slot]); an isomorphic relabelling with
/// slot `slot` mapped to the identity.
Btu rebase(const Btu& btu, std::size_t slot);

/// Slots sorted by first image.
Btu canonicalize_order(const Btu& btu);

/// union_cycle_partition of each consecutive pair of slots.
std::vector<Partition> adjacent_partitions(const Btu& btu);

bool in_phi(const Btu& btu, std::span<const Partition> betas);

/// True iff p is the k-fold block replication of a permutation of degree
/// p.degree() / k.
bool is_block_scaling(const Permutation& p, std::size_t k);

bool in_z(const Btu& btu, const Factorization& f);

}  // namespace girthsearch
