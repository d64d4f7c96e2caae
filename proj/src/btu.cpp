#include "girthsearch/btu.hpp"

#include <algorithm>
#include <string>

namespace girthsearch {

Btu make_btu(std::vector<Permutation> perms) {
  if (perms.empty()) throw DomainError("make_btu: at least one permutation required");
  const std::size_t m = perms.front().degree();
  for (std::size_t t = 0; t < perms.size(); ++t) {
    if (perms[t].degree() != m) {
      throw DomainError("make_btu: slot " + std::to_string(t + 1) + " has degree " +
                        std::to_string(perms[t].degree()) + ", expected " + std::to_string(m));
    }
  }
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = i + 1; j < perms.size(); ++j) {
      for (std::size_t pos = 1; pos <= m; ++pos) {
        if (perms[i](pos) == perms[j](pos)) {
          throw DomainError("make_btu: slots " + std::to_string(i + 1) + " and " +
                            std::to_string(j + 1) + " conflict at position " +
                            std::to_string(pos));
        }
      }
    }
  }
  return Btu(std::move(perms));
}

Btu decompose_cells(const CellGrid& grid) {
  const std::size_t m = grid.rows;
  if (m == 0 || grid.cols != m) throw DomainError("decompose_matrix: matrix must be square");

  std::size_t r = 0;
  for (std::size_t j = 0; j < m; ++j) r += grid.at(0, j) ? 1 : 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t row_sum = 0;
    std::size_t col_sum = 0;
    for (std::size_t j = 0; j < m; ++j) {
      row_sum += grid.at(i, j) ? 1 : 0;
      col_sum += grid.at(j, i) ? 1 : 0;
    }
    if (row_sum != r || col_sum != r) {
      throw DomainError("decompose_matrix: matrix is not regular (row/column " +
                        std::to_string(i + 1) + " sums " + std::to_string(row_sum) + "/" +
                        std::to_string(col_sum) + ", expected " + std::to_string(r) + ")");
    }
  }
  if (r == 0) throw DomainError("decompose_matrix: matrix has no non-zero entries");

  std::vector<std::vector<std::uint8_t>> remaining(m, std::vector<std::uint8_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) remaining[i][j] = grid.at(i, j) ? 1 : 0;
  }

  std::vector<Permutation> perms;
  for (std::size_t round = 0; round < r; ++round) {
    // Kuhn's augmenting paths, rows in order, columns lowest index first.
    std::vector<std::size_t> col_owner(m, m);
    std::vector<bool> visited(m);
    auto augment = [&](auto&& self, std::size_t row) -> bool {
      for (std::size_t col = 0; col < m; ++col) {
        if (!remaining[row][col] || visited[col]) continue;
        visited[col] = true;
        if (col_owner[col] == m || self(self, col_owner[col])) {
          col_owner[col] = row;
          return true;
        }
      }
      return false;
    };
    for (std::size_t row = 0; row < m; ++row) {
      std::fill(visited.begin(), visited.end(), false);
      if (!augment(augment, row)) {
        // Unreachable for a regular bipartite graph (Hall's condition holds).
        throw std::logic_error("decompose_matrix: no perfect matching");
      }
    }
    std::vector<Permutation::value_type> images(m);
    for (std::size_t col = 0; col < m; ++col) {
      images[col_owner[col]] = static_cast<Permutation::value_type>(col + 1);
      remaining[col_owner[col]][col] = 0;
    }
    perms.emplace_back(std::move(images));
  }
  return make_btu(std::move(perms));
}

namespace {

// Vertices 0..m-1 are rows, m..2m-1 are columns; r neighbours each.
struct Adjacency {
  std::size_t m = 0;
  std::size_t r = 0;
  std::vector<std::uint32_t> next;

  explicit Adjacency(const Btu& btu) : m(btu.m()), r(btu.r()), next(2 * m * r) {
    for (std::size_t t = 0; t < r; ++t) {
      const auto& p = btu.slot(t + 1);
      for (std::size_t i = 1; i <= m; ++i) {
        const auto col = static_cast<std::uint32_t>(m + p(i) - 1);
        next[(i - 1) * r + t] = col;
        next[col * r + t] = static_cast<std::uint32_t>(i - 1);
      }
    }
  }
  std::span<const std::uint32_t> of(std::size_t v) const { return {next.data() + v * r, r}; }
};

struct CycleHit {
  std::uint32_t length = kNoCycle;
  std::uint32_t source = 0;
  std::uint32_t u = 0;
  std::uint32_t v = 0;
};

// Every cycle passes through a row vertex, so BFS from rows finds the girth.
// For a bipartite graph a non-tree edge u-v seen from u at depth d closes a
// cycle of length 2d+2 (through the source, shortest over sources).
CycleHit shortest_cycle(const Adjacency& adj, std::uint32_t cutoff,
                        std::vector<std::uint32_t>* parent_out) {
  const std::size_t n = 2 * adj.m;
  std::vector<std::uint32_t> dist(n);
  std::vector<std::uint32_t> parent(n);
  std::vector<std::uint32_t> queue(n);
  CycleHit best;
  best.length = cutoff;
  for (std::uint32_t s = 0; s < adj.m; ++s) {
    std::fill(dist.begin(), dist.end(), kNoCycle);
    dist[s] = 0;
    parent[s] = kNoCycle;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    bool done = false;
    while (head < tail && !done) {
      const std::uint32_t u = queue[head++];
      if (2 * dist[u] + 2 >= best.length) break;
      for (std::uint32_t w : adj.of(u)) {
        if (w == parent[u]) continue;
        if (dist[w] == kNoCycle) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else {
          const std::uint32_t len = dist[u] + dist[w] + 1;
          if (len < best.length) {
            best = CycleHit{len, s, u, w};
            if (parent_out) *parent_out = parent;
          }
          done = true;
          break;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::uint32_t girth_below(const Btu& btu, std::uint32_t cutoff) {
  if (btu.r() < 2) return cutoff;
  const Adjacency adj(btu);
  return shortest_cycle(adj, cutoff, nullptr).length;
}

GirthReport girth(const Btu& btu, bool want_witness) {
  GirthReport report;
  if (btu.r() < 2) return report;
  const Adjacency adj(btu);
  std::vector<std::uint32_t> parent;
  const CycleHit hit = shortest_cycle(adj, kNoCycle, want_witness ? &parent : nullptr);
  if (hit.length == kNoCycle) return report;
  report.girth = hit.length;
  if (want_witness) {
    // Tree paths source->u and source->v plus the edge u-v; disjoint apart
    // from the source because the cycle is globally shortest.
    auto to_vertex = [&](std::uint32_t x) {
      return x < adj.m ? Vertex{false, x + 1}
                       : Vertex{true, static_cast<std::uint32_t>(x - adj.m + 1)};
    };
    std::vector<std::uint32_t> left;
    for (std::uint32_t x = hit.u; x != kNoCycle; x = parent[x]) left.push_back(x);
    std::vector<std::uint32_t> right;
    for (std::uint32_t x = hit.v; x != kNoCycle; x = parent[x]) right.push_back(x);
    // left ends at the source; walk source -> u, then v -> (back toward source).
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
      report.witness_cycle.push_back(to_vertex(*it));
    }
    for (std::size_t i = 0; i + 1 < right.size(); ++i) {
      report.witness_cycle.push_back(to_vertex(right[i]));
    }
  }
  return report;
}

Btu rebase(const Btu& btu, std::size_t slot) {
  if (slot < 1 || slot > btu.r()) {
    throw DomainError("rebase: slot " + std::to_string(slot) + " outside 1.." +
                      std::to_string(btu.r()));
  }
  const Permutation pivot = invert(btu.slot(slot));
  std::vector<Permutation> perms;
  perms.reserve(btu.r());
  for (const auto& p : btu.perms()) perms.push_back(compose(p, pivot));
  return make_btu(std::move(perms));
}

Btu canonicalize_order(const Btu& btu) {
  std::vector<Permutation> perms(btu.perms().begin(), btu.perms().end());
  std::sort(perms.begin(), perms.end(),
            [](const Permutation& a, const Permutation& b) { return a(1) < b(1); });
  return make_btu(std::move(perms));
}

std::vector<Partition> adjacent_partitions(const Btu& btu) {
  std::vector<Partition> out;
  for (std::size_t i = 1; i < btu.r(); ++i) {
    out.push_back(union_cycle_partition(btu.slot(i), btu.slot(i + 1)));
  }
  return out;
}

bool in_phi(const Btu& btu, std::span<const Partition> betas) {
  if (betas.size() + 1 != btu.r()) return false;
  const auto actual = adjacent_partitions(btu);
  return std::equal(actual.begin(), actual.end(), betas.begin(), betas.end());
}

bool is_block_scaling(const Permutation& p, std::size_t k) {
  if (k == 0 || p.degree() % k != 0) return false;
  const std::size_t n = p.degree() / k;
  for (std::size_t i = 1; i <= n; ++i) {
    if (p(i) > n) return false;
  }
  for (std::size_t t = 1; t < k; ++t) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (p(t * n + i) != p(i) + t * n) return false;
    }
  }
  return true;
}

bool in_z(const Btu& btu, const Factorization& f) {
  if (f.degenerate || btu.m() != f.m || btu.r() != f.r || f.r < 2) return false;
  if (!btu.slot(f.r - 1).is_identity()) return false;
  for (std::size_t j = 1; j + 2 <= f.r; ++j) {
    const auto folds = checked_pow(f.k, f.r - 1 - j);
    if (!folds || !is_block_scaling(btu.slot(j), *folds)) return false;
  }
  const auto betas = optimal_partitions(f).betas;
  return in_phi(btu, betas);
}

}  // namespace girthsearch
