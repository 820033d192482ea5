#include <gtest/gtest.h>

#include <sstream>

#include "hochlab/gerstenhaber.hpp"
#include "hochlab/suites.hpp"

using namespace hochlab;

namespace {

Report sample_report() {
  Report r;
  r.records.push_back({"signs", "sphere2/b", "statement", Status::Fail, "witness\twith tab", 12});
  r.records.push_back({"beta", "sphere2/a", "statement", Status::Pass, "", 3});
  r.records.push_back({"signs", "sphere2/a", "statement", Status::Unstable, "saturation", 5});
  r.sort();
  return r;
}

int count_fields(const std::string& line) {
  int n = 1;
  for (char c : line) n += c == '\t';
  return n;
}

RunConfig config(std::vector<std::string> suites, std::vector<std::string> entries) {
  RunConfig cfg;
  cfg.catalogue_dir = HOCHLAB_CATALOGUE_DIR;
  cfg.suites = std::move(suites);
  cfg.catalogue = std::move(entries);
  return cfg;
}

}  // namespace

TEST(Report, EmptyJsonIsEmptyArray) {
  std::string text = emit(Report{}, Format::Json);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  EXPECT_EQ(text, "[]");
}

TEST(Report, OneTsvRowHasSixColumns) {
  Report r;
  r.records.push_back({"signs", "sphere2/d-squared", "statement", Status::Pass, "", 4});
  std::string text = emit(r, Format::Tsv);
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(text.back(), '\n');
  text.pop_back();
  EXPECT_EQ(text.find('\n'), std::string::npos);
  EXPECT_EQ(count_fields(text), 6);
  // Tabs inside fields do not add columns.
  std::istringstream lines(emit(sample_report(), Format::Tsv));
  for (std::string line; std::getline(lines, line);) EXPECT_EQ(count_fields(line), 6);
}

TEST(Report, OrderingAndFailureCount) {
  auto r = sample_report();
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.records[0].module, "beta");
  EXPECT_EQ(r.records[1].name, "sphere2/a");
  EXPECT_EQ(r.records[2].name, "sphere2/b");
  EXPECT_TRUE(r.any_failure());
  Report unstable_only;
  unstable_only.records.push_back({"m", "n", "a", Status::Unstable, "", 0});
  EXPECT_FALSE(unstable_only.any_failure());
}

TEST(Report, JsonRoundTrip) {
  auto r = sample_report();
  auto back = report_from_json(nlohmann::json::parse(emit(r, Format::Json)));
  EXPECT_EQ(to_json(back), to_json(r));
  EXPECT_EQ(emit(back, Format::Json), emit(r, Format::Json));
  EXPECT_FALSE(to_json(r, false)[0].contains("timing"));
}

TEST(Gerstenhaber, TrivialAlgebraPasses) {
  HomologyOperations ops;
  ops.dims = {{0, 1}};
  ops.cup = [](int, int, int, int) { return std::optional<SparseVector>(SparseVector{{0, Scalar(1)}}); };
  ops.bracket = [](int, int, int, int) { return std::optional<SparseVector>(SparseVector{}); };
  EXPECT_TRUE(verify_gerstenhaber(ops).ok());
  EXPECT_TRUE(verify_gerstenhaber(HomologyOperations{{}, ops.cup, ops.bracket}).ok());
}

TEST(Gerstenhaber, NonCommutativeCupDetected) {
  // Two even classes whose products disagree.
  HomologyOperations ops;
  ops.dims = {{0, 2}};
  ops.cup = [](int, int i, int, int j) -> std::optional<SparseVector> {
    return SparseVector{{i, Scalar(1)}, {j, Scalar(i == j ? 1 : 2)}};
  };
  ops.bracket = [](int, int, int, int) -> std::optional<SparseVector> { return std::nullopt; };
  auto report = verify_gerstenhaber(ops);
  EXPECT_FALSE(report.ok());
  EXPECT_NE(report.summary().find("graded commutativity"), std::string::npos);
}

TEST(Gerstenhaber, SphereCohomologyAndMutation) {
  auto inst = Instance::load(HOCHLAB_CATALOGUE_DIR, "sphere2");
  auto w = dual_hochschild_window(*inst, -8, 8, true);
  auto ops = window_operations(w, inst->dual);
  auto report = verify_gerstenhaber(ops);
  EXPECT_TRUE(report.ok()) << report.summary();
  long instances = 0;
  for (const auto& law : report.laws) {
    EXPECT_GT(law.instances, 0) << law.name;
    instances += law.instances;
  }
  EXPECT_GT(instances, 100);

  auto bracket = ops.bracket;
  ops.bracket = [bracket](int n, int i, int m, int j) {
    auto r = bracket(n, i, m, j);
    if (r && (n & 1))
      for (auto& e : *r) e.second = -e.second;
    return r;
  };
  auto mutated = verify_gerstenhaber(ops);
  EXPECT_FALSE(mutated.ok());
  EXPECT_NE(mutated.summary().find("Jacobi"), std::string::npos) << mutated.summary();
}

TEST(Suites, EmptySelectionGivesEmptyReport) {
  auto r = run_suites(config({}, {}));
  EXPECT_TRUE(r.records.empty());
  EXPECT_FALSE(r.any_failure());
}

TEST(Suites, SignsOnTheSpherePass) {
  auto r = run_suites(config({"signs"}, {"sphere2"}));
  ASSERT_FALSE(r.records.empty());
  for (const auto& rec : r.records) EXPECT_EQ(rec.status, Status::Pass) << rec.name << " " << rec.witness;
}

TEST(Suites, SmallWindowIsUnstable) {
  auto cfg = config({"cobar-comparison"}, {"projplane"});
  cfg.cobar_level = 1;
  auto r = run_suites(cfg);
  bool unstable = false;
  for (const auto& rec : r.records)
    if (rec.name == "projplane/D2-homology") unstable = rec.status == Status::Unstable;
  EXPECT_TRUE(unstable);
}

TEST(Suites, DeterministicOutput) {
  auto cfg = config({"signs", "gamma", "naturality"}, {"sphere2"});
  EXPECT_EQ(emit(run_suites(cfg), Format::Json, false), emit(run_suites(cfg), Format::Json, false));
}
