#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forcelab/solver.hpp"

namespace forcelab {

enum class ClaimStatus { kPass, kFail, kSkipped };

std::string to_string(ClaimStatus status);

/// Replayable evidence attached to a claim. Only the fields that apply are
/// set.
struct ClaimCertificate {
  /// A set that the engine re-validated as a forcing set.
  std::optional<VertexSet> witness;
  /// Leak placement that defeats the tested set.
  std::optional<LeakCertificate> counterexample;
  /// Exhaustiveness: the search size and how much it played out.
  std::optional<std::size_t> cardinality;
  std::optional<std::uint64_t> candidates_tested;
  std::optional<std::uint64_t> leak_sets_tested;
  /// Known interval when the exact value is out of reach.
  std::optional<std::pair<std::size_t, std::size_t>> bounds;
  /// (B, B_ℓ) for containment claims.
  std::optional<std::pair<VertexSet, VertexSet>> containment;
};

struct ClaimResult {
  std::string id;
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::kFail;
  ClaimCertificate certificate;
};

struct VerifyOptions {
  unsigned workers = 1;
  /// Run the Q_7 half-cube check (about 2.6e8 leak placements).
  bool include_d7 = false;
  SearchBudget budget;
  std::vector<std::uint64_t> tree_seeds = default_tree_seeds();

  static std::vector<std::uint64_t> default_tree_seeds();
};

/// The half-cube of Q_d against every placement of d-2 leaks, 2 <= d <= 7.
ClaimResult verify_halfcube(std::size_t d, unsigned workers = 1);

/// Z_(1)(Q_3), Z_(2)(Q_4) exactly; Q_5 sufficiency only, its minimality and
/// the d >= 6 lower bounds reported as skipped.
std::vector<ClaimResult> verify_cube_values(const VerifyOptions& options = {});

/// Exact Z_(ℓ)(GP(n,1)) for 3 <= n <= n_max and ℓ <= 3, plus the two-leak
/// constructions (X ∪ {u_1, u_2} at n = 4, X for n > 4) up to bound_n_max.
std::vector<ClaimResult> verify_prism(std::size_t n_max = 6,
                                      std::size_t bound_n_max = 10,
                                      const VerifyOptions& options = {});

/// Exact Z_(ℓ)(K_{m,n}) for 1 <= n <= m <= m_max, 0 <= ℓ <= m+1.
std::vector<ClaimResult> verify_bipartite(std::size_t m_max = 5,
                                          const VerifyOptions& options = {});

/// Exact Z_(ℓ)(W_n) for 3 <= n <= n_max, 0 <= ℓ <= n+1, and containment of
/// a minimum zero-forcing set for ℓ ∈ {1, 2}.
std::vector<ClaimResult> verify_wheel(std::size_t n_max = 8,
                                      const VerifyOptions& options = {});

/// Containment answers for random trees (ℓ ∈ {1,2}), K_{m,n} with
/// n <= m <= 4 (1 <= ℓ <= m-1) and wheels n <= 6 (ℓ ∈ {1,2}).
std::vector<ClaimResult> verify_containment_corollaries(
    const VerifyOptions& options = {});

/// New data for GP(n,2), n in {5,6}, ℓ <= 3: exact values with witnesses.
std::vector<ClaimResult> verify_gp_problem(const VerifyOptions& options = {});

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one suite ("cubes", "halfcube", "prism", "bipartite", "wheel",
/// "containment", "gp-problem") or "all". Results are sorted by claim id
/// (digit runs compare numerically) with duplicate ids dropped.
std::vector<ClaimResult> run_suite(const std::string& name,
                                   const VerifyOptions& options = {});

/// Claim-id order used for output.
bool claim_id_less(const std::string& a, const std::string& b);

bool any_failed(const std::vector<ClaimResult>& results);

}  // namespace forcelab
