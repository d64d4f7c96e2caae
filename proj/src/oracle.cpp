#include "girthsearch/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "girthsearch/searchspace.hpp"

namespace girthsearch {

namespace {

std::string budget_message(std::uint64_t m, std::uint64_t r, double estimate) {
  std::ostringstream os;
  os << "oracle refused (" << m << "," << r << "): estimated " << estimate
     << " compatibility checks exceeds budget of " << kOracleCheckBudget;
  return os.str();
}

// All m! permutations in lexicographic order, stored flat.
struct PermTable {
  std::size_t m = 0;
  std::vector<std::uint8_t> images;

  explicit PermTable(std::size_t degree) : m(degree) {
    std::vector<std::uint8_t> p(m);
    std::iota(p.begin(), p.end(), std::uint8_t{1});
    images.reserve(factorial(m) * m);
    do {
      images.insert(images.end(), p.begin(), p.end());
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::size_t size() const { return images.size() / m; }
  const std::uint8_t* row(std::size_t index) const { return images.data() + index * m; }
  bool compatible(std::size_t a, std::size_t b) const {
    const auto* pa = row(a);
    const auto* pb = row(b);
    for (std::size_t i = 0; i < m; ++i) {
      if (pa[i] == pb[i]) return false;
    }
    return true;
  }
  Permutation permutation(std::size_t index) const {
    return Permutation(std::vector<Permutation::value_type>(row(index), row(index) + m));
  }
};

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t m, std::uint64_t r, double estimate)
    : DomainError(budget_message(m, r, estimate)), estimate_(estimate) {}

double estimated_checks(std::uint64_t m, std::uint64_t r, bool fix_first_identity) {
  if (r <= 1 || r > m) return 0.0;
  // A uniformly random permutation avoids t fixed ones at each position
  // independently with probability (m-t)/m.
  const double all = std::tgamma(static_cast<double>(m) + 1.0);
  auto list_size = [&](std::uint64_t t) {
    return t == 0 ? all : all * std::pow(static_cast<double>(m - t) / static_cast<double>(m),
                                         static_cast<double>(m));
  };
  double prefixes = fix_first_identity ? 1.0 : all;
  double checks = 0.0;
  for (std::uint64_t depth = 1; depth < r; ++depth) {
    checks += prefixes * list_size(depth - 1);
    prefixes *= list_size(depth);
  }
  return checks;
}

std::uint64_t for_each_btu(std::uint64_t m, std::uint64_t r, bool fix_first_identity,
                           const std::function<bool(const Btu&)>& visit) {
  if (m == 0 || r == 0) throw DomainError("enumerate_btus: m and r must be positive");
  if (r > m) return 0;
  const double estimate = estimated_checks(m, r, fix_first_identity);
  if (estimate > kOracleCheckBudget || m > 12) throw BudgetExceeded(m, r, estimate);

  const PermTable table(m);
  std::vector<std::size_t> chosen;
  std::uint64_t visited = 0;
  bool stop = false;

  auto emit = [&] {
    std::vector<Permutation> perms;
    perms.reserve(chosen.size());
    for (auto index : chosen) perms.push_back(table.permutation(index));
    ++visited;
    if (!visit(make_btu(std::move(perms)))) stop = true;
  };

  // `pool` holds the permutations compatible with every chosen slot.
  auto extend = [&](auto&& self, const std::vector<std::size_t>& pool) -> void {
    if (chosen.size() == r) {
      emit();
      return;
    }
    for (auto candidate : pool) {
      chosen.push_back(candidate);
      if (chosen.size() == r) {
        emit();
      } else {
        std::vector<std::size_t> next;
        for (auto other : pool) {
          if (table.compatible(candidate, other)) next.push_back(other);
        }
        self(self, next);
      }
      chosen.pop_back();
      if (stop) return;
    }
  };

  std::vector<std::size_t> everything(table.size());
  std::iota(everything.begin(), everything.end(), std::size_t{0});
  if (fix_first_identity) {
    chosen.push_back(0);  // lexicographically first is the identity
    if (r == 1) {
      emit();
      return visited;
    }
    std::vector<std::size_t> pool;
    for (auto other : everything) {
      if (table.compatible(0, other)) pool.push_back(other);
    }
    extend(extend, pool);
  } else {
    extend(extend, everything);
  }
  return visited;
}

std::vector<Btu> enumerate_btus(std::uint64_t m, std::uint64_t r, bool fix_first_identity) {
  std::vector<Btu> out;
  for_each_btu(m, r, fix_first_identity, [&](const Btu& btu) {
    out.push_back(btu);
    return true;
  });
  return out;
}

OracleReport max_girth(std::uint64_t m, std::uint64_t r, bool fix_first_identity) {
  if (r < 2) throw DomainError("max_girth: r must be at least 2");
  if (r > m) {
    throw DomainError("max_girth: no (" + std::to_string(m) + "," + std::to_string(r) +
                      ") BTU exists");
  }
  OracleReport report;
  report.m = m;
  report.r = r;
  report.first_slot_fixed = fix_first_identity;
  report.enumerated = for_each_btu(m, r, fix_first_identity, [&](const Btu& btu) {
    if (report.max_girth != 0 && girth_below(btu, report.max_girth) < report.max_girth) {
      return true;
    }
    const std::uint32_t g = girth_below(btu, kNoCycle);
    if (g > report.max_girth) {
      report.max_girth = g;
      report.maximizer_count = 1;
      report.witness = btu;
    } else if (g == report.max_girth) {
      ++report.maximizer_count;
    }
    return true;
  });
  return report;
}

std::map<PartitionSignature, std::uint64_t> phi_census(std::uint64_t m, std::uint64_t r,
                                                       bool fix_first_identity) {
  std::map<PartitionSignature, std::uint64_t> census;
  for_each_btu(m, r, fix_first_identity, [&](const Btu& btu) {
    ++census[adjacent_partitions(btu)];
    return true;
  });
  return census;
}

VerifyReport verify_search(std::uint64_t m, std::uint64_t r, const SearchConfig& config) {
  VerifyReport report;
  report.m = m;
  report.r = r;
  report.oracle = max_girth(m, r, true);
  try {
    SearchResult result = search(m, r, config);
    report.engine_girth = result.girth;
    report.engine_witness = std::move(result.btu);
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const DomainError& e) {
    report.engine_status = std::string("engine inapplicable: ") + e.what();
  }
  report.equal = report.engine_girth && *report.engine_girth == report.oracle.max_girth;
  return report;
}

}  // namespace girthsearch
