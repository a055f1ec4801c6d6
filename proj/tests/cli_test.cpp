// Copyright 2026 The kolmoverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "kolmoverify/errors.hpp"
#include "kolmoverify/experiments.hpp"
#include "kolmoverify/golden.hpp"

namespace kolmoverify::cli {
namespace {

using nlohmann::json;

const std::string kFixtures = KOLMOVERIFY_FIXTURE_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(const std::vector<std::string>& args, std::optional<std::string> env_seed = {}) {
  Environment env;
  env.seed = std::move(env_seed);
  env.data_dir = KOLMOVERIFY_DATA_DIR;
  std::ostringstream out, err;
  const int code = Run(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("kolmoverify_cli_test_" + name)).string();
}

double GoldenValue(const std::string& flavor, const std::string& x, unsigned t) {
  const auto g = golden::Load(std::string(KOLMOVERIFY_DATA_DIR) + "/goldens.json");
  for (const auto& c : g.complexities) {
    if (c.flavor == flavor && c.x == x && c.t == t) return c.value;
  }
  throw std::out_of_range("no golden");
}

TEST(ComplexityCommandTest, MatchesGoldens) {
  auto r = Cli({"complexity", "--flavor", "ukt", "--x", "00", "--t", "12", "--m", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["value"].get<double>(), GoldenValue("ukt", "00", 12));
  EXPECT_EQ(json::parse(r.out)["mode"], "exact");
  r = Cli({"complexity", "--flavor", "qukt", "--x", "0", "--t", "16", "--m", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["value"].get<double>(), GoldenValue("qukt", "0", 16));
}

TEST(ComplexityCommandTest, Errors) {
  EXPECT_EQ(Cli({"complexity", "--t", "12"}).code, kExitError);
  EXPECT_EQ(Cli({"complexity", "--x", "00", "--t", "12", "--m", "3"}).code, kExitError);
  EXPECT_EQ(Cli({"complexity", "--x", "0a", "--t", "12"}).code, kExitError);
  EXPECT_EQ(Cli({"complexity", "--x", "00", "--t", "12", "--flavor", "zz"}).code, kExitError);
  EXPECT_EQ(Cli({}).code, kExitError);
}

TEST(VerifyCommandTest, HonestFixtureAccepts) {
  const auto r = Cli({"verify", "--samples", kFixtures + "/honest_uniform1.samples", "--target",
                      "uniform1", "--n", "4", "--eps", "0.25"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["verdict"]["accepted"].get<bool>());
  EXPECT_EQ(j["config"]["s"], 2155);
}

TEST(VerifyCommandTest, PrgStretchFixtureRejects) {
  const auto r = Cli({"verify", "--samples", kFixtures + "/prg0_uniform1.samples", "--target",
                      "uniform1", "--n", "4", "--eps", "0.25"});
  EXPECT_EQ(r.code, kExitReject) << r.err;
  EXPECT_FALSE(json::parse(r.out)["verdict"]["accepted"].get<bool>());
}

TEST(VerifyCommandTest, WrongElementLengthIsAnError) {
  const auto r = Cli({"verify", "--samples", kFixtures + "/wrong_length.samples", "--target",
                      "uniform1", "--n", "4", "--eps", "0.25"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_FALSE(r.err.empty());
}

TEST(VerifyCommandTest, ArityAndOracleErrors) {
  const std::string honest = kFixtures + "/honest_uniform1.samples";
  EXPECT_EQ(Cli({"verify", "--samples", honest, "--target", "uniform1", "--n", "8"}).code,
            kExitError);
  EXPECT_EQ(Cli({"verify", "--samples", honest, "--target", "uniform1", "--flavor", "qukt"}).code,
            kExitError);
  EXPECT_EQ(Cli({"verify", "--samples", honest, "--target", "nosuch"}).code, kExitError);
  EXPECT_EQ(Cli({"verify", "--samples", honest}).code, kExitError);
  EXPECT_EQ(Cli({"verify", "--samples", kFixtures + "/missing.samples", "--target", "uniform1"}).code,
            kExitError);
}

TEST(VerifyCommandTest, QasFixtureAccepts) {
  const auto r = Cli({"verify", "--kind", "qas", "--samples", kFixtures + "/qas_toy.samples",
                      "--n", "16"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["verdict"]["gaps"].size(), 16u);
}

TEST(VerifyCommandTest, ConfigFileAndFlagOverride) {
  const std::string cfg = kFixtures + "/verify_config.json";
  const std::string honest = kFixtures + "/honest_uniform1.samples";
  auto r = Cli({"--config", cfg, "verify", "--samples", honest});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["config"]["approx"], "one-sided");
  EXPECT_EQ(j["config"]["target"], "uniform1");
  r = Cli({"verify", "--samples", honest, "--config", cfg, "--approx", "exact"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["config"]["approx"], "exact");
}

TEST(VerifyCommandTest, Deterministic) {
  const std::vector<std::string> args = {"verify", "--samples",
                                         kFixtures + "/honest_uniform1.samples", "--target",
                                         "uniform1", "--approx", "two-sided", "--seed", "5"};
  EXPECT_EQ(Cli(args).out, Cli(args).out);
}

TEST(ExperimentCommandTest, CodingPassesAndMatchesGolden) {
  const auto r = Cli({"experiment", "run", "coding", "--T", "20", "--no-timestamp"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto g = golden::Load(std::string(KOLMOVERIFY_DATA_DIR) + "/goldens.json");
  EXPECT_EQ(json::parse(r.out)["observed"]["c_univ"].get<double>(), g.c_univ);
}

TEST(ExperimentCommandTest, IncompressibilityUniform8) {
  const auto r = Cli({"experiment", "run", "incompressibility", "--sampler", "uniform8", "--alpha",
                      "4", "--no-timestamp"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["parameters"]["alpha"], "4");
}

TEST(ExperimentCommandTest, UnknownIdOrParameter) {
  EXPECT_EQ(Cli({"experiment", "run", "nosuch"}).code, kExitError);
  EXPECT_EQ(Cli({"experiment", "run", "embedding", "--nosuch", "1"}).code, kExitError);
  EXPECT_EQ(Cli({"experiment", "run", "embedding", "--t"}).code, kExitError);
  EXPECT_EQ(Cli({"experiment", "run", "embedding", "--format", "xml"}).code, kExitError);
  EXPECT_EQ(Cli({"corpus", "list", "--nosuch", "1"}).code, kExitError);
}

TEST(ExperimentCommandTest, FailingExperimentExitsOne) {
  // The zero-seed stretches violate the +1/e rearrangement.
  EXPECT_EQ(Cli({"experiment", "run", "fannes_prg", "--pairs", "10"}).code, kExitReject);
}

TEST(ExperimentCommandTest, ListShowsManifest) {
  const auto r = Cli({"experiment", "list"});
  ASSERT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["experiments"].size(), experiments::Registry().size());
}

TEST(ExperimentCommandTest, SeedFromEnvironmentAndFlag) {
  const std::vector<std::string> args = {"experiment", "run", "qas_gap", "--trials", "100",
                                         "--no-timestamp"};
  EXPECT_EQ(json::parse(Cli(args).out)["seed"], experiments::kDefaultSeed);
  EXPECT_EQ(json::parse(Cli(args, "77").out)["seed"], 77);
  auto with_flag = args;
  with_flag.insert(with_flag.end(), {"--seed", "78"});
  EXPECT_EQ(json::parse(Cli(with_flag, "77").out)["seed"], 78);
  EXPECT_EQ(Cli(args, "x").code, kExitError);
}

TEST(ExperimentCommandTest, ByteIdenticalWithoutTimestamp) {
  const std::vector<std::string> args = {"experiment", "run", "qas_gap", "--trials", "300",
                                         "--no-timestamp", "--seed", "4"};
  const auto a = Cli(args);
  EXPECT_EQ(a.out, Cli(args).out);
  EXPECT_EQ(a.out.find("timestamp"), std::string::npos);
  auto stamped = args;
  stamped.erase(stamped.begin() + 5);
  EXPECT_NE(Cli(stamped).out.find("timestamp"), std::string::npos);
}

TEST(ExperimentCommandTest, WritesReportAndCsv) {
  const std::string path = TempPath("embedding.csv");
  const auto r = Cli({"experiment", "run", "embedding", "--format", "csv", "--out", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "embedding: PASS\n");
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "experiment,param,trial_stat,bound,pass");
  std::filesystem::remove(path);
}

TEST(CorpusCommandTest, ListAndShow) {
  const auto list = Cli({"corpus", "list"});
  ASSERT_EQ(list.code, kExitOk);
  EXPECT_NE(list.out.find("uniform8\tclassical-vm\tm=8"), std::string::npos);
  const auto show = Cli({"corpus", "show", "point0"});
  ASSERT_EQ(show.code, kExitOk);
  const json j = json::parse(show.out);
  EXPECT_EQ(j["distribution"][0]["p_exact"], "1");
  EXPECT_EQ(Cli({"corpus", "show", "nosuch"}).code, kExitError);
}

TEST(CorpusCommandTest, SampleRoundTripsThroughSamplesFile) {
  const auto r = Cli({"corpus", "sample", "uniform8", "--count", "5", "--seed", "2"});
  ASSERT_EQ(r.code, kExitOk);
  const SamplesFile f = ParseSamples(r.out);
  EXPECT_EQ(f.m, 8u);
  ASSERT_EQ(f.blocks.size(), 1u);
  EXPECT_EQ(f.blocks[0].size(), 5u);
  EXPECT_EQ(FormatSamples(f), r.out);
}

TEST(GoldenCommandTest, CheckFreezeAndDrift) {
  EXPECT_EQ(Cli({"golden", "check"}).code, kExitOk);
  const std::string path = TempPath("goldens.json");
  ASSERT_EQ(Cli({"golden", "freeze", "--file", path}).code, kExitOk);
  EXPECT_EQ(Cli({"golden", "check", "--file", path}).code, kExitOk);
  auto g = golden::Load(path);
  g.c_univ += 1;
  std::ofstream(path) << golden::Serialize(g);
  const auto drift = Cli({"golden", "check", "--file", path});
  EXPECT_EQ(drift.code, kExitReject);
  EXPECT_NE(drift.out.find("c_univ"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(HelpTest, EveryCommandDocumentsItsFlags) {
  const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> cases = {
      {{}, {"--seed", "--no-timestamp", "--format", "--out", "--config"}},
      {{"complexity"}, {"--flavor", "--x", "--t", "--m"}},
      {{"verify"},
       {"--samples", "--target", "--corpus", "--kind", "--flavor", "--n", "--c", "--eps",
        "--approx", "--profile", "--delta", "--oracle-t", "--t-classical", "--t-quantum"}},
      {{"experiment"}, {"run", "list"}},
      {{"experiment", "run"}, {"--trials", "--T", "--sampler", "--alpha", "--t_max"}},
      {{"corpus"}, {"--corpus", "list", "show", "sample"}},
      {{"corpus", "sample"}, {"--count", "--stretch"}},
      {{"golden"}, {"--file", "check", "freeze"}},
  };
  for (const auto& [cmd, flags] : cases) {
    auto args = cmd;
    args.push_back("--help");
    const auto r = Cli(args);
    EXPECT_EQ(r.code, kExitOk);
    for (const auto& f : flags) EXPECT_NE(r.out.find(f), std::string::npos) << f;
  }
}

TEST(SamplesFileTest, FormatAndErrors) {
  const SamplesFile f = ParseSamples("m=3\na\n2\n\ne\n");
  ASSERT_EQ(f.blocks.size(), 2u);
  EXPECT_EQ(f.blocks[0][0].ToString(), "101");
  EXPECT_EQ(f.Flatten().size(), 3u);
  EXPECT_EQ(FormatSamples(f), "m=3\na\n2\n\ne\n");
  EXPECT_THROW(ParseSamples("0\n"), ParseError);
  EXPECT_THROW(ParseSamples(""), ParseError);
  EXPECT_THROW(ParseSamples("m=3\n12\n"), ParseError);
}

TEST(ConfigTest, FlatObjectsOnly) {
  const auto c = ParseConfig(R"({"n": 4, "eps": 0.25, "no-timestamp": true, "target": "x"})");
  EXPECT_EQ(c.at("n"), "4");
  EXPECT_EQ(c.at("eps"), "0.25");
  EXPECT_EQ(c.at("no-timestamp"), "true");
  EXPECT_EQ(c.at("target"), "x");
  EXPECT_THROW(ParseConfig(R"({"a": [1]})"), ParseError);
  EXPECT_THROW(ParseConfig("[1]"), ParseError);
  EXPECT_THROW(ParseConfig("{"), ParseError);
}

}  // namespace
}  // namespace kolmoverify::cli
