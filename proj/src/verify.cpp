#include "forcelab/verify.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "forcelab/claims.hpp"
#include "forcelab/errors.hpp"
#include "forcelab/families.hpp"
#include "forcelab/parallel.hpp"

namespace forcelab {

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kSkipped:
      return "skipped-beyond-budget";
  }
  return "fail";
}

std::vector<std::uint64_t> VerifyOptions::default_tree_seeds() {
  std::vector<std::uint64_t> seeds(24);
  for (std::uint64_t i = 0; i < seeds.size(); ++i) seeds[i] = i;
  return seeds;
}

namespace {

using Task = std::function<ClaimResult()>;

std::string z_text(std::size_t z) { return "Z = " + std::to_string(z); }

SolveOptions solve_options(const VerifyOptions& options) {
  SolveOptions s;
  s.budget = options.budget;
  return s;
}

/// Solves exactly and re-validates the witness. With `expected` set, the
/// claim passes iff the value matches; otherwise (`bound` aside) it passes
/// iff the witness holds up.
ClaimResult exact_claim(std::string id, const Graph& g, std::size_t leaks,
                        std::optional<std::size_t> expected,
                        std::string expected_text,
                        const VerifyOptions& options,
                        std::optional<std::size_t> upper_bound = {}) {
  ClaimResult r;
  r.id = std::move(id);
  r.expected = std::move(expected_text);
  const SolveReport report =
      min_leaky_forcing(g, leaks, solve_options(options));
  if (!report.exact()) {
    r.computed = "budget exceeded; bounds [" +
                 std::to_string(report.lower_bound) + ", " +
                 std::to_string(report.upper_bound) + "]";
    r.certificate.bounds = {report.lower_bound, report.upper_bound};
    r.status = ClaimStatus::kFail;
    return r;
  }
  const std::size_t z = *report.z_value;
  r.computed = z_text(z);
  r.certificate.witness = report.witness;
  r.certificate.cardinality = z;
  r.certificate.candidates_tested = report.candidates_tested;
  r.certificate.leak_sets_tested = report.stats.leak_sets;

  const bool witness_ok =
      report.witness->size() == z &&
      is_leaky_forcing_set(g, *report.witness, leaks).ok();
  bool matches = true;
  if (expected) matches = z == *expected;
  if (upper_bound) matches = matches && z <= *upper_bound;
  r.status = witness_ok && matches ? ClaimStatus::kPass : ClaimStatus::kFail;
  return r;
}

/// `set` is an ℓ-leaky forcing set of g.
ClaimResult construction_claim(std::string id, const Graph& g,
                               const VertexSet& set, std::size_t leaks,
                               std::string expected_text, unsigned workers) {
  ClaimResult r;
  r.id = std::move(id);
  r.expected = std::move(expected_text);
  const LeakyCheck check = is_leaky_forcing_set(g, set, leaks, workers);
  r.certificate.cardinality = set.size();
  if (check.ok()) {
    r.status = ClaimStatus::kPass;
    r.computed = "forces under all " + std::to_string(check.stats.leak_sets) +
                 " placements of " + std::to_string(leaks) + " leaks";
    r.certificate.witness = set;
    r.certificate.leak_sets_tested = check.stats.leak_sets;
  } else {
    r.status = ClaimStatus::kFail;
    r.computed = "stalls under a leak placement";
    r.certificate.counterexample = check.certificate;
  }
  return r;
}

ClaimResult containment_claim(std::string id, const Graph& g,
                              std::size_t leaks, const VerifyOptions& options) {
  ClaimResult r;
  r.id = std::move(id);
  r.expected = "a minimum " + std::to_string(leaks) +
               "-leaky forcing set contains a minimum zero forcing set";
  try {
    const ContainmentReport report =
        containment_question(g, leaks, solve_options(options));
    r.computed = std::string(report.answer ? "yes" : "no") + " (Z0 = " +
                 std::to_string(report.z0) + ", Z" + std::to_string(leaks) +
                 " = " + std::to_string(report.z_leaky) + ", " +
                 std::to_string(report.count0) + " and " +
                 std::to_string(report.count_leaky) + " minimum sets)";
    r.certificate.containment = report.witness;
    bool ok = report.answer;
    if (ok) {
      const auto& [b, bl] = *report.witness;
      ok = b.is_subset_of(bl) && b.size() == report.z0 &&
           bl.size() == report.z_leaky && is_zero_forcing_set(g, b) &&
           is_leaky_forcing_set(g, bl, leaks).ok();
    }
    r.status = ok ? ClaimStatus::kPass : ClaimStatus::kFail;
  } catch (const BudgetExceeded& e) {
    r.computed = std::string("budget exceeded: ") + e.what();
    r.status = ClaimStatus::kFail;
  }
  return r;
}

ClaimResult skipped_claim(std::string id, std::string expected,
                          std::string why,
                          std::pair<std::size_t, std::size_t> bounds) {
  ClaimResult r;
  r.id = std::move(id);
  r.expected = std::move(expected);
  r.computed = std::move(why);
  r.status = ClaimStatus::kSkipped;
  r.certificate.bounds = bounds;
  return r;
}

std::vector<ClaimResult> run_tasks(const std::vector<Task>& tasks,
                                   unsigned workers) {
  std::vector<ClaimResult> out(tasks.size());
  parallel_for(tasks.size(), workers,
               [&](std::size_t i) { out[i] = tasks[i](); });
  return out;
}

std::string ell(std::size_t l) { return "-l" + std::to_string(l); }

std::vector<Task> cube_tasks(const VerifyOptions& options) {
  std::vector<Task> tasks;
  for (const auto& value : claims::cube_values()) {
    if (value.d <= 4) {
      tasks.push_back([value, options] {
        return exact_claim(value.id, hypercube(value.d), value.leaks,
                           value.z, z_text(value.z), options);
      });
      continue;
    }
    // Sufficiency only: the half-cube has the claimed size and passes.
    tasks.push_back([value, options] {
      return construction_claim(
          value.id + "-sufficiency", hypercube(value.d),
          half_cube_set(value.d), value.leaks,
          "half-cube of size " + std::to_string(value.z) + " is " +
              std::to_string(value.leaks) + "-leaky forcing",
          1);
    });
    tasks.push_back([value] {
      return skipped_claim(
          value.id + "-minimality", z_text(value.z),
          "no set of size " + std::to_string(value.z - 1) +
              " passes: about C(32,15) candidates, beyond desk scale",
          {0, value.z});
    });
  }
  for (std::size_t d : {6, 7}) {
    const std::size_t z = claims::halfcube_size(d);
    tasks.push_back([d, z] {
      return skipped_claim(
          "conj-Q" + std::to_string(d) + "-lower",
          "Z_(" + std::to_string(d - 2) + ")(Q_" + std::to_string(d) +
              ") = " + std::to_string(z) + " (conjectured lower bound)",
          "lower bound needs an exhaustive search over " +
              std::to_string(std::size_t{1} << d) +
              "-vertex candidates, beyond desk scale",
          {0, z});
    });
  }
  return tasks;
}

std::vector<Task> halfcube_tasks(const VerifyOptions& options) {
  std::vector<Task> tasks;
  const std::size_t top = options.include_d7 ? 7 : 6;
  for (std::size_t d = 2; d <= top; ++d)
    tasks.push_back([d] { return verify_halfcube(d, 1); });
  return tasks;
}

std::vector<Task> prism_tasks(std::size_t n_max, std::size_t bound_n_max,
                              const VerifyOptions& options) {
  std::vector<Task> tasks;
  for (std::size_t n = 3; n <= n_max; ++n) {
    for (std::size_t l = 0; l <= 3; ++l) {
      const std::string id = "thm2-n" + std::to_string(n) + ell(l);
      if (auto z = claims::prism_value(n, l)) {
        tasks.push_back([=] {
          return exact_claim(id, generalized_petersen(n, 1), l, *z,
                             z_text(*z), options);
        });
      } else {
        const std::size_t bound = claims::prism_two_leak_bound(n);
        tasks.push_back([=] {
          return exact_claim(id + "-exact", generalized_petersen(n, 1), l,
                             std::nullopt, "Z <= " + std::to_string(bound),
                             options, bound);
        });
      }
    }
  }
  for (std::size_t n = 4; n <= bound_n_max; ++n) {
    tasks.push_back([n] {
      VertexSet set = petersen_inner(n);
      std::string what = "X";
      if (n == 4) {
        set.insert(0);
        set.insert(1);
        what = "X + {u_1, u_2}";
      }
      return construction_claim(
          "thm2-bound-n" + std::to_string(n), generalized_petersen(n, 1), set,
          2,
          what + " (size " + std::to_string(set.size()) +
              ") is 2-leaky forcing",
          1);
    });
  }
  return tasks;
}

std::vector<Task> bipartite_tasks(std::size_t m_max,
                                  const VerifyOptions& options) {
  std::vector<Task> tasks;
  for (std::size_t m = 1; m <= m_max; ++m)
    for (std::size_t n = 1; n <= m; ++n)
      for (std::size_t l = 0; l <= m + 1; ++l) {
        const std::size_t z = claims::bipartite_value(m, n, l);
        tasks.push_back([=] {
          return exact_claim("prop42-m" + std::to_string(m) + "-n" +
                                 std::to_string(n) + ell(l),
                             complete_bipartite(m, n), l, z, z_text(z),
                             options);
        });
      }
  return tasks;
}

std::vector<Task> wheel_containment_tasks(std::size_t n_max,
                                          const VerifyOptions& options) {
  std::vector<Task> tasks;
  for (std::size_t n = 3; n <= n_max; ++n)
    for (std::size_t l = 1; l <= 2; ++l)
      tasks.push_back([=] {
        return containment_claim("cor45-n" + std::to_string(n) + ell(l),
                                 wheel(n), l, options);
      });
  return tasks;
}

std::vector<Task> wheel_tasks(std::size_t n_max,
                              const VerifyOptions& options) {
  std::vector<Task> tasks;
  for (std::size_t n = 3; n <= n_max; ++n)
    for (std::size_t l = 0; l <= n + 1; ++l) {
      const std::size_t z = *claims::wheel_value(n, l);
      tasks.push_back([=] {
        return exact_claim("prop44-n" + std::to_string(n) + ell(l), wheel(n),
                           l, z, z_text(z), options);
      });
    }
  auto more = wheel_containment_tasks(n_max, options);
  tasks.insert(tasks.end(), more.begin(), more.end());
  return tasks;
}

std::size_t tree_order(std::uint64_t seed) { return 4 + seed % 6; }

std::vector<Task> containment_tasks(const VerifyOptions& options) {
  std::vector<Task> tasks;
  for (std::uint64_t seed : options.tree_seeds)
    for (std::size_t l = 1; l <= 2; ++l)
      tasks.push_back([=] {
        return containment_claim("cor41-tree-s" + std::to_string(seed) +
                                     ell(l),
                                 random_tree(tree_order(seed), seed), l,
                                 options);
      });
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 1; n <= m; ++n)
      for (std::size_t l = 1; l + 1 <= m; ++l)
        tasks.push_back([=] {
          return containment_claim("cor43-m" + std::to_string(m) + "-n" +
                                       std::to_string(n) + ell(l),
                                   complete_bipartite(m, n), l, options);
        });
  auto wheels = wheel_containment_tasks(6, options);
  tasks.insert(tasks.end(), wheels.begin(), wheels.end());
  return tasks;
}

std::vector<Task> gp_problem_tasks(const VerifyOptions& options) {
  std::vector<Task> tasks;
  for (std::size_t n = 5; n <= 6; ++n)
    for (std::size_t l = 0; l <= 3; ++l)
      tasks.push_back([=] {
        return exact_claim("gpprob-n" + std::to_string(n) + "-k2" + ell(l),
                           generalized_petersen(n, 2), l, std::nullopt,
                           "exact value (open problem), witness re-validated",
                           options);
      });
  return tasks;
}

std::vector<ClaimResult> finish(std::vector<ClaimResult> results) {
  std::stable_sort(results.begin(), results.end(),
                   [](const ClaimResult& a, const ClaimResult& b) {
                     return claim_id_less(a.id, b.id);
                   });
  results.erase(std::unique(results.begin(), results.end(),
                            [](const ClaimResult& a, const ClaimResult& b) {
                              return a.id == b.id;
                            }),
                results.end());
  return results;
}

std::vector<Task> tasks_for(const std::string& name,
                            const VerifyOptions& options) {
  if (name == "cubes") return cube_tasks(options);
  if (name == "halfcube") return halfcube_tasks(options);
  if (name == "prism") return prism_tasks(6, 10, options);
  if (name == "bipartite") return bipartite_tasks(5, options);
  if (name == "wheel") return wheel_tasks(8, options);
  if (name == "containment") return containment_tasks(options);
  if (name == "gp-problem") return gp_problem_tasks(options);
  if (name == "all") {
    std::vector<Task> all;
    for (const auto& suite : suite_names()) {
      if (suite == "all") continue;
      auto part = tasks_for(suite, options);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace

ClaimResult verify_halfcube(std::size_t d, unsigned workers) {
  if (d < 2 || d > 7)
    throw UsageError("half-cube check needs 2 <= d <= 7, got " +
                     std::to_string(d));
  const std::size_t leaks = claims::halfcube_leaks(d);
  return construction_claim(
      "thm1-d" + std::to_string(d), hypercube(d), half_cube_set(d), leaks,
      "half-cube of size " + std::to_string(claims::halfcube_size(d)) +
          " is " + std::to_string(leaks) + "-leaky forcing",
      workers);
}

std::vector<ClaimResult> verify_cube_values(const VerifyOptions& options) {
  return finish(run_tasks(cube_tasks(options), options.workers));
}

std::vector<ClaimResult> verify_prism(std::size_t n_max,
                                      std::size_t bound_n_max,
                                      const VerifyOptions& options) {
  if (n_max < 3 || n_max > 7)
    throw UsageError("prism exact range needs 3 <= n_max <= 7");
  return finish(run_tasks(prism_tasks(n_max, bound_n_max, options),
                          options.workers));
}

std::vector<ClaimResult> verify_bipartite(std::size_t m_max,
                                          const VerifyOptions& options) {
  if (m_max < 1 || m_max > 5)
    throw UsageError("bipartite range needs 1 <= m_max <= 5");
  return finish(run_tasks(bipartite_tasks(m_max, options), options.workers));
}

std::vector<ClaimResult> verify_wheel(std::size_t n_max,
                                      const VerifyOptions& options) {
  if (n_max < 3 || n_max > 8)
    throw UsageError("wheel range needs 3 <= n_max <= 8");
  return finish(run_tasks(wheel_tasks(n_max, options), options.workers));
}

std::vector<ClaimResult> verify_containment_corollaries(
    const VerifyOptions& options) {
  return finish(run_tasks(containment_tasks(options), options.workers));
}

std::vector<ClaimResult> verify_gp_problem(const VerifyOptions& options) {
  return finish(run_tasks(gp_problem_tasks(options), options.workers));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "cubes", "halfcube",    "prism",      "bipartite",
      "wheel", "containment", "gp-problem", "all"};
  return names;
}

std::vector<ClaimResult> run_suite(const std::string& name,
                                   const VerifyOptions& options) {
  return finish(run_tasks(tasks_for(name, options), options.workers));
}

bool claim_id_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie])))
        ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je])))
        ++je;
      const auto na = std::stoull(a.substr(i, ie - i));
      const auto nb = std::stoull(b.substr(j, je - j));
      if (na != nb) return na < nb;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

bool any_failed(const std::vector<ClaimResult>& results) {
  return std::any_of(results.begin(), results.end(), [](const auto& r) {
    return r.status == ClaimStatus::kFail;
  });
}

}  // namespace forcelab
