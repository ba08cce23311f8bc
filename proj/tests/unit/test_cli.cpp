#include <gtest/gtest.h>

#include <sstream>

#include "campaign/experiment.hpp"
#include "cli.hpp"
#include "helpers.hpp"

namespace campaign {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path matrix_dir() {
  static const auto dir = [] {
    auto d = test::temp_dir("cli_matrices");
    for (const auto& m : test::planted_corpus(8, 16, 3, {feature_index("timing.tweet_count")})) {
      write_file(d / (m.trend.hashtag + ".json"), to_json(m).dump());
    }
    return d;
  }();
  return dir;
}

const std::vector<std::string> kQuick{"--folds", "3", "--candidates", "timing.tweet_count,content.words.max"};

std::vector<std::string> with(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TEST(Cli, UnknownSubcommandIsUsageError) {
  EXPECT_EQ(run({"frobnicate"}).code, cli::usage_error);
  EXPECT_EQ(run({}).code, cli::usage_error);
  EXPECT_EQ(run({"evaluate", "--matrices", "x"}).code, cli::usage_error);  // --out missing
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::ok);
  EXPECT_NE(r.out.find("evaluate"), std::string::npos);
}

TEST(Cli, SeedIsRequired) {
  const auto out = test::temp_dir("cli_noseed") / "r.json";
  const auto r = run(with({"evaluate", "--matrices", matrix_dir().string(), "--out", out.string()}, kQuick));
  EXPECT_EQ(r.code, cli::usage_error);
  EXPECT_NE(r.err.find("seed"), std::string::npos);
}

TEST(Cli, MissingInputIsDataError) {
  const auto out = test::temp_dir("cli_missing") / "r.json";
  const auto r = run(with({"--seed", "1", "evaluate", "--matrices", "/nonexistent/dir", "--out", out.string()}, kQuick));
  EXPECT_EQ(r.code, cli::data_error);
}

TEST(Cli, MalformedConfigIsDataError) {
  const auto dir = test::temp_dir("cli_badcfg");
  write_file(dir / "c.json", "{not json");
  const auto r = run(with({"--config", (dir / "c.json").string(), "--seed", "1", "evaluate", "--matrices",
                           matrix_dir().string(), "--out", (dir / "r.json").string()},
                          kQuick));
  EXPECT_EQ(r.code, cli::data_error);
}

TEST(Cli, EvaluateWritesReportRocAndProvenance) {
  const auto dir = test::temp_dir("cli_eval");
  const auto out = dir / "report.json";
  const auto r = run(with({"--seed", "5", "evaluate", "--matrices", matrix_dir().string(), "--out", out.string(),
                           "--roc-csv", (dir / "roc.csv").string()},
                          kQuick));
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const auto report = Json::parse(read_file(out));
  EXPECT_TRUE(report.contains("mean_auc"));
  EXPECT_GT(report.at("mean_auc").get<double>(), 0.9);
  EXPECT_TRUE(read_file(dir / "roc.csv").starts_with("fpr,tpr\n"));
  const auto prov = Json::parse(read_file(dir / "report.json.provenance.json"));
  EXPECT_EQ(prov.at("seed").get<std::uint64_t>(), 5u);
  EXPECT_TRUE(prov.contains("config_hash"));
}

TEST(Cli, OverridesAndConfigLayering) {
  const auto dir = test::temp_dir("cli_layers");
  write_file(dir / "c.json", R"({"seed": 9, "experiment": {"folds": 4, "classifier": "knn_flat"}})");
  const auto r = run({"--config", (dir / "c.json").string(), "--set", "experiment.classifier=sax_vsm", "evaluate",
                      "--matrices", matrix_dir().string(), "--out", (dir / "r.json").string(), "--folds", "3",
                      "--candidates", "timing.tweet_count"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const auto report = Json::parse(read_file(dir / "r.json"));
  EXPECT_EQ(report.at("classifier"), "sax_vsm");
  EXPECT_EQ(report.at("folds"), 3);
  EXPECT_EQ(report.at("seed"), 9);
}

TEST(Cli, SelectTrainClassify) {
  const auto dir = test::temp_dir("cli_pipeline");
  auto r = run(with({"--seed", "2", "select", "--matrices", matrix_dir().string(), "--out", (dir / "sel.json").string()},
                    kQuick));
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const auto sel = Json::parse(read_file(dir / "sel.json"));
  EXPECT_EQ(sel.at("selected").at(0), "timing.tweet_count");

  r = run({"train", "--matrices", matrix_dir().string(), "--selection", (dir / "sel.json").string(), "--out",
           (dir / "model.json").string()});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  r = run({"--seed", "2", "classify", "--matrices", matrix_dir().string(), "--model", (dir / "model.json").string(),
           "--out", (dir / "scores.json").string()});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "scores.json.provenance.json"));
}

TEST(Cli, SynthThenExtract) {
  const auto dir = test::temp_dir("cli_synth");
  auto r = run({"--seed", "4", "synth", "--out", (dir / "corpus").string(), "--promoted", "2", "--organic", "3",
                "--volume-scale", "0.01"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "corpus" / "provenance.json"));
  EXPECT_EQ(load_manifest(dir / "corpus" / "manifest.jsonl").size(), 5u);
  r = run({"extract", "--corpus", (dir / "corpus").string(), "--out", (dir / "m").string()});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_EQ(load_matrices(dir / "m").size(), 5u);
}

}  // namespace
}  // namespace campaign
