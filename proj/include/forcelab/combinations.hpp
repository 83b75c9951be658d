#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "forcelab/vertex_set.hpp"

namespace forcelab {

/// C(n, r), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

/// r-subsets of a pool of vertices, visited in lexicographic order of their
/// ascending id sequences.
///
///   Combinations c(pool, r);
///   for (bool more = c.valid(); more; more = c.next()) use(c.current());
class Combinations {
 public:
  Combinations(const VertexSet& pool, std::size_t r)
      : pool_(pool.to_vector()), index_(r) {
    valid_ = r <= pool_.size();
    for (std::size_t i = 0; i < r && valid_; ++i) {
      index_[i] = i;
      current_.insert(pool_[i]);
    }
  }

  bool valid() const { return valid_; }
  const VertexSet& current() const { return current_; }

  /// Advances to the next subset; false once exhausted.
  bool next() {
    const std::size_t r = index_.size();
    const std::size_t n = pool_.size();
    std::size_t i = r;
    while (i > 0 && index_[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) {
      valid_ = false;
      return false;
    }
    --i;
    for (std::size_t j = i; j < r; ++j) current_.erase(pool_[index_[j]]);
    ++index_[i];
    current_.insert(pool_[index_[i]]);
    for (std::size_t j = i + 1; j < r; ++j) {
      index_[j] = index_[j - 1] + 1;
      current_.insert(pool_[index_[j]]);
    }
    return true;
  }

 private:
  std::vector<Vertex> pool_;
  std::vector<std::size_t> index_;
  VertexSet current_;
  bool valid_ = false;
};

}  // namespace forcelab
