#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace forcelab {

using Vertex = std::uint32_t;

/// Largest vertex count any graph may have. Q_7 has 128 vertices.
inline constexpr std::size_t kMaxVertices = 128;

/// Fixed-capacity bitset over vertex ids 0..kMaxVertices-1.
///
/// All set algebra is word-level and branch-free. Iteration yields ids in
/// ascending order. Two sets are equal iff they hold the same ids.
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) {
    for (Vertex v : ids) insert(v);
  }
  explicit VertexSet(std::span<const Vertex> ids) {
    for (Vertex v : ids) insert(v);
  }

  /// {0, ..., n-1}
  static VertexSet range(std::size_t n) {
    VertexSet s;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  void insert(Vertex v) { words_[v >> 6] |= bit(v); }
  void erase(Vertex v) { words_[v >> 6] &= ~bit(v); }
  bool contains(Vertex v) const { return (words_[v >> 6] & bit(v)) != 0; }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest id in the set. Undefined on an empty set.
  Vertex front() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0)
        return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
    return static_cast<Vertex>(kMaxVertices);
  }

  /// Removes and returns the smallest id. Undefined on an empty set.
  Vertex pop_front() {
    for (std::size_t w = 0; w < kWords; ++w) {
      if (words_[w] != 0) {
        const int b = std::countr_zero(words_[w]);
        words_[w] &= words_[w] - 1;
        return static_cast<Vertex>(w * 64 + b);
      }
    }
    return static_cast<Vertex>(kMaxVertices);
  }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }

  /// {0..n-1} \ *this
  VertexSet complement(std::size_t n) const { return range(n) - *this; }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on the ascending id sequences, e.g. {0,3} < {1,2}
  /// and {0} < {0,1}.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff == 0) continue;
      const std::uint64_t low = diff & (~diff + 1);
      // The sequence holding the smallest differing id is smaller, unless the
      // other sequence ended right before it (it is then a proper prefix).
      const bool in_a = (a.words_[w] & low) != 0;
      VertexSet rest_a = a, rest_b = b;
      const Vertex pivot = static_cast<Vertex>(w * 64 + std::countr_zero(low));
      rest_a.clear_below(pivot);
      rest_b.clear_below(pivot);
      if (in_a) return !rest_b.empty();
      return rest_a.empty();
    }
    return false;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    explicit const_iterator(const std::array<std::uint64_t, kWords>& words)
        : rest_(words) {
      advance();
    }

    Vertex operator*() const { return current_; }
    const_iterator& operator++() {
      advance();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      advance();
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    void advance() {
      while (word_ < kWords && rest_[word_] == 0) ++word_;
      if (word_ == kWords) {
        done_ = true;
        return;
      }
      done_ = false;
      current_ = static_cast<Vertex>(word_ * 64 +
                                     std::countr_zero(rest_[word_]));
      rest_[word_] &= rest_[word_] - 1;
    }
    std::array<std::uint64_t, kWords> rest_{};
    std::size_t word_ = 0;
    Vertex current_ = 0;
    bool done_ = true;
  };

  const_iterator begin() const { return const_iterator(words_); }
  const_iterator end() const { return const_iterator(); }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

 private:
  static constexpr std::uint64_t bit(Vertex v) {
    return std::uint64_t{1} << (v & 63);
  }
  void clear_below(Vertex v) {
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * 64;
      if (v >= lo + 64) {
        words_[w] = 0;
      } else if (v > lo) {
        words_[w] &= ~((std::uint64_t{1} << (v - lo)) - 1);
      }
    }
  }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace forcelab
