#include "forcelab/claims.hpp"

namespace forcelab::claims {

const std::vector<CubeValue>& cube_values() {
  static const std::vector<CubeValue> values = {
      {"Z1-Q3", 3, 1, 4},
      {"Z2-Q4", 4, 2, 8},
      {"Z3-Q5", 5, 3, 16},
  };
  return values;
}

std::optional<std::size_t> prism_value(std::size_t n, std::size_t leaks) {
  if (leaks >= 3) return 2 * n;
  if (leaks <= 1) return n == 3 ? 3 : 4;
  if (n == 3) return 4;
  return std::nullopt;
}

std::size_t prism_two_leak_bound(std::size_t n) { return n == 4 ? 6 : n; }

std::size_t bipartite_value(std::size_t m, std::size_t n, std::size_t leaks) {
  if (leaks + 1 <= n) return m + n - 2;
  if (leaks + 1 <= m) return m + n - 1;
  return m + n;
}

std::optional<std::size_t> wheel_value(std::size_t n, std::size_t leaks) {
  if (leaks <= 1) return 3;
  if (leaks == 2) return (2 * n + 2) / 3;
  if (leaks < n) return n;
  if (leaks <= n + 1) return n + 1;
  return std::nullopt;
}

}  // namespace forcelab::claims
