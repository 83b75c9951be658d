#pragma once

// Closed-form values the verification suites compare against. All expected
// numbers live here and nowhere else.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace forcelab::claims {

/// Known exact values Z_(ℓ)(Q_d).
struct CubeValue {
  std::string id;
  std::size_t d;
  std::size_t leaks;
  std::size_t z;
};
const std::vector<CubeValue>& cube_values();

/// The half-cube of Q_d has 2^(d-1) vertices and tolerates d-2 leaks.
inline std::size_t halfcube_size(std::size_t d) { return std::size_t{1} << (d - 1); }
inline std::size_t halfcube_leaks(std::size_t d) { return d - 2; }

/// Z_(ℓ)(GP(n,1)) where the value is known exactly:
///   3   if ℓ ∈ {0,1} and n = 3
///   4   if ℓ ∈ {0,1} and n >= 4, or ℓ = 2 and n = 3
///   2n  if ℓ >= 3
/// nullopt for ℓ = 2, n >= 4, where only an upper bound is known.
std::optional<std::size_t> prism_value(std::size_t n, std::size_t leaks);

/// Upper bound on Z_(2)(GP(n,1)) for n >= 4: 6 when n = 4, n when n > 4.
std::size_t prism_two_leak_bound(std::size_t n);

/// Z_(ℓ)(K_{m,n}) with m >= n:
///   m+n-2  if ℓ <= n-1
///   m+n-1  if n-1 < ℓ <= m-1
///   m+n    if ℓ > m-1
std::size_t bipartite_value(std::size_t m, std::size_t n, std::size_t leaks);

/// Z_(ℓ)(W_n):
///   3          if ℓ ∈ {0,1}
///   ceil(2n/3) if ℓ = 2
///   n          if n > ℓ > 2
///   n+1        if ℓ ∈ {n, n+1}
/// nullopt for ℓ > n+1 (not covered).
std::optional<std::size_t> wheel_value(std::size_t n, std::size_t leaks);

}  // namespace forcelab::claims
