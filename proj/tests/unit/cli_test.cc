// Copyright 2026 The Unrest Forecast Authors.
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

#include <doctest.h>

#include <sstream>

#include "test_support.h"
#include "unrest/cli.h"
#include "unrest/text_io.h"

namespace unrest {
namespace {

using testing::TempDir;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome Run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

// Small simulated corpus shared by the command tests.
class World {
 public:
  World() : dir_("cli_world") {
    WriteFile(dir_ / "gen.json",
              R"({"base_daily_tweets": 1500, "protest_logit_weights": {"bias": -1.5, "mention": 2.0}})");
    Outcome sim = Run({"simulate", "--generator", dir_ / "gen.json", "--seed", "3", "--out", dir_.path()});
    REQUIRE(sim.code == 0);
    Outcome feat = Run({"featurize", "--tweets", dir_ / "tweets.jsonl", "--protests", dir_ / "protests.csv",
                        "--votes", dir_ / "votes.csv", "--out", dir_.path()});
    REQUIRE(feat.code == 0);
  }
  std::string operator/(const std::string &name) const { return dir_ / name; }

 private:
  TempDir dir_;
};

const World &SharedWorld() {
  static World world;
  return world;
}

TEST_CASE("unknown command and missing command exit 1 with usage") {
  Outcome bad = Run({"frobnicate"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("Usage") != std::string::npos);
  CHECK(Run({}).code == 1);
  CHECK(Run({"--help"}).code == 0);
}

TEST_CASE("input errors exit 1 with a stable prefix") {
  TempDir dir("cli_err");
  Outcome missing = Run({"evaluate", "--matrix", dir / "absent.csv", "--out", dir.path()});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("E-IO") != std::string::npos);

  WriteFile(dir / "bad.csv", "date,state,f1\n");
  Outcome schema = Run({"evaluate", "--matrix", dir / "bad.csv", "--out", dir.path()});
  CHECK(schema.code == 1);
  CHECK(schema.err.find("E-SCHEMA") != std::string::npos);

  Outcome mask = Run({"evaluate", "--matrix", SharedWorld() / "features.csv", "--features", "f9",
                      "--out", dir.path()});
  CHECK(mask.code == 1);
  CHECK(mask.err.find("E-VALIDATION") != std::string::npos);

  WriteFile(dir / "config.json", "{not json");
  Outcome config = Run({"evaluate", "--config", dir / "config.json"});
  CHECK(config.code == 1);
  CHECK(config.err.find("E-PARSE") != std::string::npos);
}

TEST_CASE("simulate, featurize, evaluate") {
  const World &w = SharedWorld();
  CHECK(ReadLines(w / "features.csv").size() == 351);
  CHECK(ReadLines(w / "correlation.csv").size() == 8);
  TempDir out("cli_eval");
  Outcome eval = Run({"evaluate", "--matrix", w / "features.csv", "--out", out.path()});
  REQUIRE(eval.code == 0);
  CHECK(eval.out.find("Overall accuracy") != std::string::npos);
  auto report = nlohmann::json::parse(ReadFile(out / "report.json"));
  CHECK(report.at("days").size() == 6);
  CHECK(report.at("days")[3].at("training_rows") == 200);
  CHECK(report.at("run").at("classifier") == "logit");
  for (const char *f : {"roc.csv", "scores.csv", "model.json"}) {
    CHECK(std::filesystem::exists(out / f));
  }

  TempDir single("cli_single");
  REQUIRE(Run({"evaluate", "--matrix", w / "features.csv", "--features", "f1", "--out", single.path()}).code == 0);
  auto one = nlohmann::json::parse(ReadFile(single / "report.json"));
  CHECK(one.at("run").at("features") == "f1");
  CHECK(nlohmann::json::parse(ReadFile(single / "model.json")).at("dim") == 1);

  TempDir roc("cli_roc");
  REQUIRE(Run({"roc", "--scores", out / "scores.csv", "--out", roc.path()}).code == 0);
  CHECK(ReadFile(roc / "roc.csv") == ReadFile(out / "roc.csv"));
}

TEST_CASE("runs are byte-reproducible and inputs untouched") {
  const World &w = SharedWorld();
  const std::string before = ReadFile(w / "features.csv");
  TempDir a("cli_rep_a"), b("cli_rep_b");
  for (const TempDir *d : {&a, &b}) {
    REQUIRE(Run({"evaluate", "--matrix", w / "features.csv", "--classifier", "nb", "--out", d->path()}).code == 0);
  }
  for (const char *f : {"report.json", "roc.csv", "model.json", "scores.csv"}) {
    CHECK(ReadFile(a / f) == ReadFile(b / f));
  }
  CHECK(ReadFile(w / "features.csv") == before);
}

TEST_CASE("flags override the config file") {
  const World &w = SharedWorld();
  TempDir dir("cli_cfg");
  nlohmann::json cfg = {{"matrix", w / "features.csv"}, {"classifier", "tree"}, {"out", dir.path()}};
  WriteFile(dir / "run.json", cfg.dump());
  REQUIRE(Run({"evaluate", "--config", dir / "run.json"}).code == 0);
  CHECK(nlohmann::json::parse(ReadFile(dir / "report.json")).at("run").at("classifier") == "tree");
  REQUIRE(Run({"evaluate", "--config", dir / "run.json", "--classifier", "svm"}).code == 0);
  CHECK(nlohmann::json::parse(ReadFile(dir / "report.json")).at("run").at("classifier") == "svm");
}

TEST_CASE("select, train, baselines, transfer") {
  const World &w = SharedWorld();
  TempDir dir("cli_misc");
  Outcome sel = Run({"select", "--matrix", w / "features.csv", "--folds", "5", "--out", dir.path()});
  REQUIRE(sel.code == 0);
  auto report = nlohmann::json::parse(ReadFile(dir / "selection_report.json"));
  CHECK(report.at("folds") == 5);
  CHECK(report.contains("retained_after_pruning"));

  REQUIRE(Run({"train", "--matrix", w / "features.csv", "--features", "tweet", "--out", dir.path()}).code == 0);
  auto model = nlohmann::json::parse(ReadFile(dir / "model.json"));
  CHECK(model.at("dim") == 5);

  Outcome base = Run({"baselines", "--matrix", w / "features.csv", "--out", dir.path()});
  REQUIRE(base.code == 0);
  auto baselines = nlohmann::json::parse(ReadFile(dir / "baselines.json"));
  CHECK(baselines.size() == 3);

  Outcome transfer = Run({"transfer", "--matrix", w / "features.csv", "--test-matrix", w / "features.csv",
                          "--out", dir.path()});
  REQUIRE(transfer.code == 0);
  CHECK(nlohmann::json::parse(ReadFile(dir / "report.json")).at("run").at("mode") == "transfer");
  CHECK(Run({"transfer", "--matrix", w / "features.csv", "--out", dir.path()}).code == 1);
}

TEST_CASE("ingest and watch") {
  const World &w = SharedWorld();
  TempDir dir("cli_watch");
  REQUIRE(Run({"ingest", "--tweets", w / "tweets.jsonl", "--out", dir.path()}).code == 0);
  auto stats = nlohmann::json::parse(ReadFile(dir / "ingest.json"));
  CHECK(stats.at("malformed") == 0);
  CHECK(stats.at("retained") < stats.at("records"));

  Outcome watch = Run({"watch", "--tweets", w / "tweets.jsonl", "--threshold", "5", "--top-k", "3",
                       "--out", dir.path()});
  REQUIRE(watch.code == 0);
  CHECK(ReadLines(dir / "signals.csv").front() == "window_start,window_end,count,fired");
  auto hashtags = ReadLines(dir / "hashtags.csv");
  CHECK(hashtags.size() == 4);
  CHECK(hashtags.at(1).rfind("#notmypresident,", 0) == 0);
}

}  // namespace
}  // namespace unrest
