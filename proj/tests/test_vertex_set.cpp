#include <gtest/gtest.h>

#include <random>
#include <set>

#include "forcelab/combinations.hpp"
#include "forcelab/vertex_set.hpp"

namespace forcelab {
namespace {

VertexSet random_set(std::mt19937_64& rng, std::size_t n) {
  VertexSet s;
  for (Vertex v = 0; v < n; ++v)
    if (rng() & 1u) s.insert(v);
  return s;
}

TEST(VertexSet, InsertEraseContainsAcrossWords) {
  VertexSet s;
  for (Vertex v : {0u, 63u, 64u, 127u}) s.insert(v);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(s.contains(63));
  EXPECT_TRUE(s.contains(64));
  s.erase(63);
  EXPECT_FALSE(s.contains(63));
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 64, 127}));
  EXPECT_EQ(s.front(), 0u);
}

TEST(VertexSet, ComplementExamples) {
  EXPECT_EQ(VertexSet({0, 1}).complement(4), VertexSet({2, 3}));
  EXPECT_EQ(VertexSet{}.complement(3), VertexSet({0, 1, 2}));
  EXPECT_TRUE(VertexSet({0, 1, 2}).complement(3).empty());
}

TEST(VertexSet, RangeCoversExactlyN) {
  for (std::size_t n : {0u, 1u, 63u, 64u, 65u, 128u}) {
    const VertexSet r = VertexSet::range(n);
    EXPECT_EQ(r.size(), n);
    if (n > 0) EXPECT_TRUE(r.contains(static_cast<Vertex>(n - 1)));
    if (n < 128) EXPECT_FALSE(r.contains(static_cast<Vertex>(n)));
  }
}

TEST(VertexSet, PopFrontDrainsInOrder) {
  VertexSet s{5, 70, 2};
  std::vector<Vertex> seen;
  while (!s.empty()) seen.push_back(s.pop_front());
  EXPECT_EQ(seen, (std::vector<Vertex>{2, 5, 70}));
}

TEST(VertexSet, AlgebraIdentitiesOnRandomSets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 128;
    const VertexSet a = random_set(rng, n), b = random_set(rng, n);
    EXPECT_EQ((a | b).complement(n), a.complement(n) & b.complement(n));
    EXPECT_EQ(a - b, a & b.complement(n));
    EXPECT_EQ((a - b) | (a & b), a);
    EXPECT_EQ((a | b).size() + (a & b).size(), a.size() + b.size());
    EXPECT_TRUE((a & b).is_subset_of(a));
    EXPECT_EQ(a.intersects(b), !(a & b).empty());
    EXPECT_EQ(a.complement(n).complement(n), a);
  }
}

TEST(VertexSet, IterationMatchesToVector) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const VertexSet s = random_set(rng, 128);
    std::vector<Vertex> iterated(s.begin(), s.end());
    EXPECT_EQ(iterated, s.to_vector());
  }
}

TEST(VertexSet, LexLessMatchesSequenceOrder) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 128;
    const VertexSet a = random_set(rng, n), b = random_set(rng, n);
    const auto va = a.to_vector(), vb = b.to_vector();
    EXPECT_EQ(lex_less(a, b), va < vb);
  }
  EXPECT_TRUE(lex_less(VertexSet{0, 5}, VertexSet{1}));
  EXPECT_TRUE(lex_less(VertexSet{0}, VertexSet{0, 1}));
  EXPECT_FALSE(lex_less(VertexSet{2}, VertexSet{2}));
}

TEST(Combinations, BinomialValues) {
  EXPECT_EQ(binomial(16, 2), 120u);
  EXPECT_EQ(binomial(64, 4), 635376u);
  EXPECT_EQ(binomial(32, 3), 4960u);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

TEST(Combinations, VisitsAllSubsetsInLexOrder) {
  const VertexSet pool{1, 3, 4, 8, 9, 70};
  for (std::size_t r = 0; r <= 7; ++r) {
    std::vector<VertexSet> seen;
    Combinations c(pool, r);
    for (bool more = c.valid(); more; more = c.next())
      seen.push_back(c.current());
    EXPECT_EQ(seen.size(), binomial(pool.size(), r)) << "r=" << r;
    for (std::size_t i = 1; i < seen.size(); ++i)
      EXPECT_TRUE(lex_less(seen[i - 1], seen[i]));
    for (const auto& s : seen) {
      EXPECT_EQ(s.size(), r);
      EXPECT_TRUE(s.is_subset_of(pool));
    }
  }
}

}  // namespace
}  // namespace forcelab
