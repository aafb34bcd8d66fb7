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

#include <cmath>

#include "test_support.h"
#include "unrest/datagen.h"
#include "unrest/error.h"
#include "unrest/text_io.h"

namespace unrest {
namespace {

const TextResources &Resources() {
  static const TextResources r = LoadTextResources(testing::DataDir(), DefaultRegionSet());
  return r;
}

const std::vector<TweetTemplate> &Templates() {
  static const auto t = LoadTemplates(testing::DataDir() + "/templates.txt");
  return t;
}

GenConfig Small(std::uint64_t seed) {
  GenConfig c;
  c.seed = seed;
  c.base_daily_tweets = 1500;
  return c;
}

TEST_CASE("same seed gives byte-identical files") {
  testing::TempDir a("gen_a"), b("gen_b");
  WriteGenOutput(Generate(Small(4), Templates(), Resources()), a.path());
  WriteGenOutput(Generate(Small(4), Templates(), Resources()), b.path());
  for (const char *file : {"tweets.jsonl", "protests.csv", "votes.csv"}) {
    CHECK(ReadFile(a / file) == ReadFile(b / file));
  }
  auto other = Generate(Small(5), Templates(), Resources());
  CHECK(SerializeTweets(other.tweets) != ReadFile(a / "tweets.jsonl"));
}

TEST_CASE("output shape") {
  auto out = Generate(Small(1), Templates(), Resources());
  CHECK(out.election.size() == 50);
  CHECK(out.cells.size() == 50 * 7);
  CHECK(std::is_sorted(out.tweets.begin(), out.tweets.end(),
                       [](const auto &x, const auto &y) { return x.created_at < y.created_at; }));
  CHECK(out.tweets.front().id == "t00000001");
  for (const auto &p : out.protests) {
    CHECK(p.date > out.cells.front().date - std::chrono::days{1});
  }
  for (const auto &[region, stats] : out.election) {
    CHECK(stats.candidate_vote_pct >= 0.25);
    CHECK(stats.candidate_vote_pct <= 0.70);
  }
  // Written files parse with the corpus readers.
  testing::TempDir dir("gen_shape");
  WriteGenOutput(out, dir.path());
  CHECK(Ingest(dir / "tweets.jsonl", DefaultRegionSet()).records.size() == out.tweets.size());
  CHECK(LoadGroundTruth(dir / "protests.csv", DefaultRegionSet()) == out.protests);
  CHECK(LoadElection(dir / "votes.csv", DefaultRegionSet()).size() == 50);
}

TEST_CASE("zero weights give the bias rate everywhere") {
  int protests = 0, cells = 0;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GenConfig c = Small(seed);
    c.base_daily_tweets = 300;
    c.protest_logit_weights = {};
    c.protest_logit_weights.bias = -1.0;
    auto out = Generate(c, Templates(), Resources());
    for (const auto &cell : out.cells) {
      CHECK(cell.probability == doctest::Approx(1.0 / (1.0 + std::exp(1.0))));
      protests += cell.protest;
      ++cells;
    }
  }
  const double rate = static_cast<double>(protests) / cells;
  CHECK(std::abs(rate - 1.0 / (1.0 + std::exp(1.0))) < 0.03);
}

TEST_CASE("negative vote weight favours low-vote regions") {
  int low_p = 0, low_n = 0, high_p = 0, high_n = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GenConfig c = Small(seed);
    c.base_daily_tweets = 300;
    c.protest_logit_weights = {};
    c.protest_logit_weights.bias = -1.0;
    c.protest_logit_weights.vote = -1.5;
    auto out = Generate(c, Templates(), Resources());
    for (const auto &cell : out.cells) {
      const bool low = out.election.at(cell.region).candidate_vote_pct < 0.475;
      (low ? low_p : high_p) += cell.protest;
      (low ? low_n : high_n) += 1;
    }
  }
  CHECK(static_cast<double>(low_p) / low_n > static_cast<double>(high_p) / high_n);
}

TEST_CASE("fixed vote shares and lead flags are honoured") {
  GenConfig c = Small(2);
  c.regions = 3;
  c.vote_pcts = {0.3, 0.5, 0.6};
  c.lead_flags = {1, 0, 1};
  auto out = Generate(c, Templates(), Resources());
  REQUIRE(out.election.size() == 3);
  const auto &first = out.election.begin()->second;
  CHECK(first.candidate_vote_pct == 0.3);
  CHECK(first.max_opposition_county_lead >= c.lead_threshold);
  CHECK(std::next(out.election.begin())->second.max_opposition_county_lead < c.lead_threshold);
}

TEST_CASE("config validation and JSON") {
  GenConfig c;
  c.mention_rate = 1.5;
  CHECK_THROWS_AS(c.Validate(), Error);
  c = GenConfig{};
  c.days = 1;
  CHECK_THROWS_AS(c.Validate(), Error);
  c = GenConfig{};
  c.regions = 0;
  CHECK_THROWS_AS(c.Validate(), Error);
  c = GenConfig{};
  c.regions = 2;
  c.vote_pcts = {0.5};
  CHECK_THROWS_AS(c.Validate(), Error);

  GenConfig d;
  d.seed = 9;
  d.protest_logit_weights.mention = 2.5;
  d.start_date = testing::D("2017-01-27");
  auto back = GenConfigFromJson(nlohmann::json::parse(GenConfigToJson(d).dump()));
  CHECK(GenConfigToJson(back).dump() == GenConfigToJson(d).dump());
  CHECK_THROWS_AS(GenConfigFromJson(nlohmann::json{{"days", "seven"}}), Error);
}

TEST_CASE("templates cover every category") {
  std::set<std::string> categories;
  for (const auto &t : Templates()) categories.insert(t.category);
  for (const char *c : {"mention_place", "mention", "plain", "negative", "positive", "violent", "spam"}) {
    CHECK(categories.count(c) == 1);
  }
}

}  // namespace
}  // namespace unrest
