#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "forcelab/claims.hpp"
#include "forcelab/families.hpp"
#include "forcelab/report.hpp"
#include "forcelab/verify.hpp"

namespace forcelab {
namespace {

const ClaimResult& find(const std::vector<ClaimResult>& results,
                        const std::string& id) {
  auto it = std::find_if(results.begin(), results.end(),
                         [&](const ClaimResult& r) { return r.id == id; });
  if (it == results.end()) throw std::runtime_error("missing claim " + id);
  return *it;
}

std::set<std::string> failing_ids(const std::vector<ClaimResult>& results) {
  std::set<std::string> ids;
  for (const auto& r : results)
    if (r.status == ClaimStatus::kFail) ids.insert(r.id);
  return ids;
}

TEST(ClaimsTable, PrismBranches) {
  EXPECT_EQ(claims::prism_value(3, 0), 3u);
  EXPECT_EQ(claims::prism_value(3, 1), 3u);
  EXPECT_EQ(claims::prism_value(3, 2), 4u);
  EXPECT_EQ(claims::prism_value(5, 1), 4u);
  EXPECT_EQ(claims::prism_value(5, 2), std::nullopt);
  EXPECT_EQ(claims::prism_value(6, 3), 12u);
  EXPECT_EQ(claims::prism_two_leak_bound(4), 6u);
  EXPECT_EQ(claims::prism_two_leak_bound(7), 7u);
}

TEST(ClaimsTable, BipartiteBranches) {
  EXPECT_EQ(claims::bipartite_value(3, 2, 1), 3u);
  EXPECT_EQ(claims::bipartite_value(4, 2, 2), 5u);
  EXPECT_EQ(claims::bipartite_value(3, 3, 4), 6u);
}

TEST(ClaimsTable, WheelBranches) {
  EXPECT_EQ(claims::wheel_value(5, 1), 3u);
  EXPECT_EQ(claims::wheel_value(6, 2), 4u);
  EXPECT_EQ(claims::wheel_value(4, 3), 4u);
  EXPECT_EQ(claims::wheel_value(4, 5), 5u);
  EXPECT_EQ(claims::wheel_value(4, 6), std::nullopt);
}

TEST(HalfCube, PassesForEveryDimensionUpToSix) {
  for (std::size_t d = 2; d <= 6; ++d) {
    const ClaimResult r = verify_halfcube(d);
    EXPECT_EQ(r.status, ClaimStatus::kPass) << r.id;
    EXPECT_EQ(r.id, "thm1-d" + std::to_string(d));
    ASSERT_TRUE(r.certificate.witness);
    EXPECT_EQ(*r.certificate.witness, half_cube_set(d));
  }
  EXPECT_EQ(verify_halfcube(4).certificate.leak_sets_tested, 120u);
  EXPECT_EQ(verify_halfcube(6).certificate.leak_sets_tested, 635376u);
}

TEST(HalfCube, WorkerCountIrrelevant) {
  EXPECT_EQ(to_json({verify_halfcube(5, 1)}), to_json({verify_halfcube(5, 3)}));
}

TEST(CubeValues, ExactAndSkipped) {
  const auto results = verify_cube_values();
  EXPECT_EQ(find(results, "Z1-Q3").status, ClaimStatus::kPass);
  EXPECT_EQ(find(results, "Z1-Q3").certificate.cardinality, 4u);
  EXPECT_EQ(find(results, "Z2-Q4").status, ClaimStatus::kPass);
  EXPECT_EQ(find(results, "Z2-Q4").certificate.cardinality, 8u);
  EXPECT_EQ(find(results, "Z3-Q5-sufficiency").status, ClaimStatus::kPass);
  EXPECT_EQ(find(results, "Z3-Q5-sufficiency").certificate.leak_sets_tested,
            4960u);
  const ClaimResult& minimality = find(results, "Z3-Q5-minimality");
  EXPECT_EQ(minimality.status, ClaimStatus::kSkipped);
  ASSERT_TRUE(minimality.certificate.bounds);
  EXPECT_EQ(minimality.certificate.bounds->second, 16u);
  EXPECT_EQ(to_string(minimality.status), "skipped-beyond-budget");
}

TEST(Prism, AllCellsPass) {
  const auto results = verify_prism();
  EXPECT_TRUE(failing_ids(results).empty());
  EXPECT_EQ(find(results, "thm2-n3-l1").computed, "Z = 3");
  EXPECT_EQ(find(results, "thm2-n5-l0").computed, "Z = 4");
  const ClaimResult& bound = find(results, "thm2-bound-n5");
  EXPECT_EQ(bound.status, ClaimStatus::kPass);
  EXPECT_EQ(*bound.certificate.witness, petersen_inner(5));
  const VertexSet n4_construction = petersen_inner(4) | VertexSet{0, 1};
  EXPECT_EQ(find(results, "thm2-bound-n4").certificate.witness, n4_construction);
  EXPECT_EQ(find(results, "thm2-n5-l2-exact").status, ClaimStatus::kPass);
  for (std::size_t n = 4; n <= 10; ++n)
    EXPECT_NO_THROW(find(results, "thm2-bound-n" + std::to_string(n)));
}

TEST(Bipartite, OnlyTheSingleEdgeCellDisagrees) {
  const auto results = verify_bipartite();
  EXPECT_EQ(results.size(), 85u);
  EXPECT_EQ(failing_ids(results), std::set<std::string>{"prop42-m1-n1-l0"});
  EXPECT_EQ(find(results, "prop42-m1-n1-l0").computed, "Z = 1");
  EXPECT_EQ(find(results, "prop42-m3-n2-l1").computed, "Z = 3");
  EXPECT_EQ(find(results, "prop42-m4-n2-l2").computed, "Z = 5");
  EXPECT_EQ(find(results, "prop42-m3-n3-l4").computed, "Z = 6");
}

TEST(Wheel, TwoLeakBranchDisagreesEverywhere) {
  const auto results = verify_wheel();
  std::set<std::string> expected;
  for (std::size_t n = 3; n <= 8; ++n)
    expected.insert("prop44-n" + std::to_string(n) + "-l2");
  EXPECT_EQ(failing_ids(results), expected);
  EXPECT_EQ(find(results, "prop44-n6-l2").computed, "Z = 5");
  EXPECT_EQ(find(results, "prop44-n5-l1").computed, "Z = 3");
  EXPECT_EQ(find(results, "prop44-n4-l3").computed, "Z = 4");
  EXPECT_EQ(find(results, "cor45-n6-l2").status, ClaimStatus::kPass);
}

TEST(Containment, EveryInstanceAnswersYes) {
  const auto results = verify_containment_corollaries();
  EXPECT_TRUE(failing_ids(results).empty());
  std::size_t trees = 0;
  for (const auto& r : results) {
    if (r.id.rfind("cor41-", 0) == 0 && r.id.ends_with("-l1")) ++trees;
    ASSERT_TRUE(r.certificate.containment) << r.id;
    const auto& [b, bl] = *r.certificate.containment;
    EXPECT_TRUE(b.is_subset_of(bl));
  }
  EXPECT_GE(trees, 20u);
  EXPECT_NO_THROW(find(results, "cor43-m4-n3-l2"));
  EXPECT_NO_THROW(find(results, "cor45-n6-l2"));
}

TEST(GeneralizedPetersenSkipTwo, DataPointsRevalidate) {
  const auto results = verify_gp_problem();
  EXPECT_EQ(results.size(), 8u);
  EXPECT_TRUE(failing_ids(results).empty());
  EXPECT_EQ(find(results, "gpprob-n5-k2-l2").computed, "Z = 5");
  EXPECT_EQ(find(results, "gpprob-n6-k2-l2").computed, "Z = 6");
}

TEST(Suites, PassStatusCarriesReplayableEvidence) {
  const auto results = run_suite("all");
  for (const auto& r : results) {
    if (r.status != ClaimStatus::kPass) continue;
    const auto& c = r.certificate;
    EXPECT_TRUE(c.witness || c.containment || c.cardinality) << r.id;
  }
}

TEST(Suites, OrderedAndUnique) {
  const auto results = run_suite("all");
  for (std::size_t i = 1; i < results.size(); ++i)
    EXPECT_TRUE(claim_id_less(results[i - 1].id, results[i].id))
        << results[i - 1].id << " " << results[i].id;
  EXPECT_TRUE(any_failed(results));
  std::set<std::string> ids;
  for (const auto& name : suite_names())
    if (name != "all")
      for (const auto& r : run_suite(name)) ids.insert(r.id);
  EXPECT_EQ(results.size(), ids.size());
}

TEST(Suites, DeterministicAcrossWorkers) {
  VerifyOptions one, many;
  many.workers = 4;
  EXPECT_EQ(to_json(run_suite("all", one)), to_json(run_suite("all", many)));
}

TEST(Suites, UnknownNameRejected) {
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
}

TEST(ClaimIds, NaturalOrder) {
  EXPECT_TRUE(claim_id_less("thm1-d2", "thm1-d10"));
  EXPECT_FALSE(claim_id_less("thm1-d10", "thm1-d2"));
  EXPECT_TRUE(claim_id_less("prop44-n3-l9", "prop44-n3-l10"));
  EXPECT_TRUE(claim_id_less("a", "b"));
  EXPECT_TRUE(claim_id_less("thm2", "thm2-n3"));
  EXPECT_FALSE(claim_id_less("x1", "x1"));
}

}  // namespace
}  // namespace forcelab
