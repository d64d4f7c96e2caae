#include "girthsearch/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace girthsearch {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q, const char* op) {
  if (p.degree() != q.degree()) {
    throw DomainError(std::string(op) + ": degree mismatch (" + std::to_string(p.degree()) +
                      " vs " + std::to_string(q.degree()) + ")");
  }
}

template <typename T>
std::vector<T> parse_unsigned_list(std::string_view text, char sep, const char* what) {
  std::vector<T> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == sep || text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == ',' || text[pos] == '(' || text[pos] == ')')) {
      ++pos;
    }
    if (pos >= text.size()) break;
    T value{};
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos) {
      throw DomainError(std::string("cannot parse ") + what + ": '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<value_type> images) : images_(std::move(images)) {
  const std::size_t n = images_.size();
  if (n == 0) throw DomainError("permutation: degree must be at least 1");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const value_type v = images_[i];
    if (v < 1 || v > n) {
      throw DomainError("permutation: image " + std::to_string(v) + " at position " +
                        std::to_string(i + 1) + " outside 1.." + std::to_string(n));
    }
    if (seen[v]) throw DomainError("permutation: image " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Partition::Partition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("partition: no parts");
  for (auto part : parts_) {
    if (part == 0) throw DomainError("partition: parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

Permutation identity(std::size_t n) {
  if (n == 0) throw DomainError("identity: invalid degree 0");
  std::vector<Permutation::value_type> images(n);
  std::iota(images.begin(), images.end(), 1U);
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "compose");
  std::vector<Permutation::value_type> images(p.degree());
  for (std::size_t i = 1; i <= p.degree(); ++i) images[i - 1] = p(q(i));
  return Permutation(std::move(images));
}

Permutation invert(const Permutation& p) {
  std::vector<Permutation::value_type> images(p.degree());
  for (std::size_t i = 1; i <= p.degree(); ++i) {
    images[p(i) - 1] = static_cast<Permutation::value_type>(i);
  }
  return Permutation(std::move(images));
}

bool is_compatible(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "is_compatible");
  for (std::size_t i = 1; i <= p.degree(); ++i) {
    if (p(i) == q(i)) return false;
  }
  return true;
}

Partition cycle_type(const Permutation& p) {
  const std::size_t n = p.degree();
  std::vector<bool> visited(n + 1, false);
  std::vector<std::uint64_t> lengths;
  for (std::size_t start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t i = start; !visited[i]; i = p(i)) {
      visited[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

Partition union_cycle_partition(const Permutation& p, const Permutation& q) {
  if (!is_compatible(p, q)) {
    throw DomainError("union_cycle_partition: permutations are not compatible");
  }
  return cycle_type(compose(invert(p), q));
}

Permutation circular_rotation(std::size_t n, std::size_t j) {
  if (n < 2 || j < 1 || j >= n) {
    throw DomainError("circular_rotation: shift " + std::to_string(j) + " outside [1, " +
                      std::to_string(n == 0 ? 0 : n - 1) + "]");
  }
  std::vector<Permutation::value_type> images(n);
  for (std::size_t i = 1; i <= n; ++i) {
    images[i - 1] = static_cast<Permutation::value_type>((i + n - j - 1) % n + 1);
  }
  return Permutation(std::move(images));
}

Permutation scale_permutation(const Permutation& q, std::size_t k) {
  if (k == 0) throw DomainError("scale_permutation: factor must be positive");
  const std::size_t n = q.degree();
  std::vector<Permutation::value_type> images(n * k);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t i = 1; i <= n; ++i) {
      images[t * n + i - 1] = static_cast<Permutation::value_type>(q(i) + t * n);
    }
  }
  return Permutation(std::move(images));
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  for (std::size_t i = 1; i <= p.degree(); ++i) {
    if (i > 1) os << ' ';
    os << p(i);
  }
  return os.str();
}

Permutation parse_permutation(std::string_view text) {
  return Permutation(parse_unsigned_list<Permutation::value_type>(text, ' ', "permutation"));
}

std::string to_string(const Partition& beta) {
  std::string out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (i > 0) out += '+';
    out += std::to_string(beta.parts()[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  return Partition(parse_unsigned_list<std::uint64_t>(text, '+', "partition"));
}

}  // namespace girthsearch
