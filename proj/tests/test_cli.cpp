#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "forcelab/cli.hpp"
#include "forcelab/errors.hpp"
#include "json.hpp"

namespace forcelab::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  const char* dir = std::getenv("FORCELAB_GOLDEN_DIR");
  if (dir == nullptr) throw std::runtime_error("FORCELAB_GOLDEN_DIR unset");
  std::ifstream in(std::filesystem::path(dir) / name);
  if (!in) throw std::runtime_error("missing golden file " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(Cli, SolveHypercubeJson) {
  const Result r = invoke({"solve", "--family", "hypercube", "--d", "3",
                           "--leaks", "1", "--output", "json"});
  EXPECT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["z_value"], 4);
  EXPECT_EQ(j["graph"], "hypercube(d=3)");
  j.erase("elapsed_ms");
  EXPECT_EQ(j.dump(2) + "\n", golden("solve_q3_l1.json"));
}

TEST(Cli, CheckPrismOneLeakIsOk) {
  const Result r = invoke({"check", "--family", "gp", "--n", "3", "--k", "1",
                           "--set", "3,4,5", "--leaks", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ok\n");
}

TEST(Cli, CheckPrismTwoLeaksPrintsCertificate) {
  const Result r = invoke({"check", "--family", "gp", "--n", "3", "--k", "1",
                           "--set", "3,4,5", "--leaks", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("check_gp3_l2.json"));
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["leaks"].size(), 2u);
}

TEST(Cli, CheckJsonWithTrace) {
  const Result r = invoke({"check", "--family", "gp", "--n", "3", "--k", "1",
                           "--set", "3,4,5", "--leaks", "2", "--output",
                           "json", "--trace"});
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["trace"]["leaks"], j["certificate"]["leaks"]);
}

TEST(Cli, VerifyJsonIndependentOfWorkers) {
  const Result a = invoke({"verify-paper", "--suite", "all", "--output",
                           "json", "--workers", "1"});
  const Result b = invoke({"verify-paper", "--suite", "all", "--output",
                           "json", "--workers", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
}

TEST(Cli, VerifyExitCodes) {
  const Result cubes = invoke({"verify-paper", "--suite", "cubes"});
  EXPECT_EQ(cubes.code, 0);
  EXPECT_NE(cubes.out.find("skipped-beyond-budget"), std::string::npos);
  EXPECT_EQ(cubes.out, golden("verify_cubes.txt"));
  EXPECT_EQ(invoke({"verify-paper", "--suite", "wheel"}).code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--family", "hypercube"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--family", "hypercube", "--d", "9"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--family", "moebius", "--n", "3"}).code, 2);
  EXPECT_EQ(invoke({"check", "--family", "path", "--n", "3"}).code, 2);
  EXPECT_EQ(invoke({"check", "--family", "path", "--n", "3", "--set", "7"}).code, 2);
  EXPECT_EQ(invoke({"check", "--family", "path", "--n", "3", "--set", "a"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--family", "path", "--n", "3", "--graph", "x"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--graph", "/nonexistent/graph.txt"}).code, 2);
  EXPECT_EQ(invoke({"verify-paper", "--suite", "nope"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--family", "path", "--n", "3", "--output", "xml"}).code, 2);
  const Result r = invoke({"solve", "--family", "gp", "--n", "5", "--k", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, BudgetExhaustionExitsOne) {
  const Result r = invoke({"solve", "--family", "hypercube", "--d", "4",
                           "--leaks", "2", "--budget-evals", "10", "--output",
                           "json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["status"], "unknown");
  EXPECT_EQ(invoke({"containment", "--family", "hypercube", "--d", "4",
                    "--leaks", "2", "--budget-evals", "10"})
                .code,
            1);
}

TEST(Cli, GraphFileSource) {
  const auto file =
      std::filesystem::temp_directory_path() / "forcelab_cli_graph.txt";
  {
    std::ofstream f(file);
    f << "# path\n0 1\n1 2\n2 3\n";
  }
  const Result r = invoke({"solve", "--graph", file.string(), "--output", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["z_value"], 1);
  {
    std::ofstream f(file);
    f << "0 1\n2 2\n";
  }
  const Result bad = invoke({"solve", "--graph", file.string()});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  std::filesystem::remove(file);
}

TEST(Cli, ContainmentAndChain) {
  const Result c = invoke({"containment", "--family", "wheel", "--n", "5",
                           "--leaks", "2", "--output", "json"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(Json::parse(c.out)["answer"], "yes");
  const Result ch = invoke({"chain", "--family", "path", "--n", "4",
                            "--leaks", "1", "--output", "json"});
  EXPECT_EQ(ch.code, 0);
  EXPECT_EQ(Json::parse(ch.out)["nonstrict_exists"], true);
  EXPECT_EQ(invoke({"chain", "--family", "path", "--n", "4", "--leaks", "1"})
                .code,
            0);
}

TEST(Cli, FamiliesListing) {
  const Result plain = invoke({"families"});
  EXPECT_EQ(plain.code, 0);
  EXPECT_NE(plain.out.find("hypercube"), std::string::npos);
  const Result described = invoke({"families", "--describe"});
  EXPECT_NE(described.out.find("hub N"), std::string::npos);
  const Result edges = invoke({"families", "--family", "wheel", "--n", "3"});
  EXPECT_EQ(edges.out.substr(0, 4), "n 4\n");
}

TEST(Cli, AssumeVertexTransitiveFlag) {
  const Result r = invoke({"solve", "--family", "hypercube", "--d", "3",
                           "--leaks", "1", "--assume-vertex-transitive",
                           "--output", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["z_value"], 4);
}

TEST(Cli, IdListParsing) {
  EXPECT_EQ(parse_id_list("3,4, 5"), (std::vector<Vertex>{3, 4, 5}));
  EXPECT_EQ(parse_id_list(""), std::vector<Vertex>{});
  EXPECT_THROW(parse_id_list("1,-2"), UsageError);
  EXPECT_THROW(parse_id_list("1,2x"), UsageError);
}

}  // namespace
}  // namespace forcelab::cli
