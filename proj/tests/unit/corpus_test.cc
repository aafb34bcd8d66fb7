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

#include <random>

#include <nlohmann/json.hpp>

#include "test_support.h"
#include "unrest/corpus.h"
#include "unrest/error.h"
#include "unrest/text_io.h"

namespace unrest {
namespace {

using testing::D;
using testing::TempDir;

std::string Line(const std::string &id, const std::string &ts, const std::string &state,
                 const std::string &text, bool rt = false) {
  nlohmann::json j = {{"id", id}, {"created_at", ts}, {"text", text}, {"is_retweet", rt}};
  j["state"] = state.empty() ? nlohmann::json(nullptr) : nlohmann::json(state);
  return j.dump() + "\n";
}

TweetRecord Rec(const std::string &id, std::optional<Region> region, const std::string &text,
                bool rt = false) {
  return {id, *ParseTimestamp("2016-11-10T12:00:00Z"), std::move(region), text, rt};
}

TEST_CASE("ingest: empty file gives empty corpus") {
  TempDir dir("ingest");
  WriteFile(dir / "t.jsonl", "");
  auto r = Ingest(dir / "t.jsonl", DefaultRegionSet());
  CHECK(r.records.empty());
  CHECK(r.stats.malformed == 0);
}

TEST_CASE("ingest: three well-formed lines pass through") {
  std::string text = Line("1", "2016-11-10T01:00:00Z", "NY", "hello") +
                     Line("2", "2016-11-10T02:00:00Z", "", "no geo") +
                     Line("3", "2016-11-10T03:00:00Z", "ca", "lower state", true);
  auto r = IngestText(text, DefaultRegionSet());
  REQUIRE(r.records.size() == 3);
  CHECK(r.records[0].region == std::optional<Region>("NY"));
  CHECK_FALSE(r.records[1].region.has_value());
  CHECK(r.records[2].region == std::optional<Region>("CA"));
  CHECK(r.records[2].is_retweet);
}

TEST_CASE("ingest: invalid timestamp is skipped and counted") {
  std::string text = Line("1", "2016-11-10T01:00:00Z", "NY", "a") +
                     Line("2", "not-a-time", "NY", "b") +
                     Line("3", "2016-11-10T03:00:00Z", "NY", "c");
  auto r = IngestText(text, DefaultRegionSet());
  CHECK(r.records.size() == 2);
  CHECK(r.stats.malformed == 1);
}

TEST_CASE("ingest: duplicate ids keep the first record") {
  std::string text = Line("7", "2016-11-10T01:00:00Z", "NY", "first") +
                     Line("7", "2016-11-10T02:00:00Z", "NY", "second") +
                     Line("8", "2016-11-10T02:00:00Z", "NY", "other");
  auto r = IngestText(text, DefaultRegionSet());
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].text == "first");
  CHECK(r.stats.duplicates == 1);
}

TEST_CASE("ingest: mostly malformed input is fatal") {
  std::string text = "{oops\n" + Line("1", "2016-11-10T01:00:00Z", "NY", "a") + "[]\n";
  try {
    IngestText(text, DefaultRegionSet());
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::kParse);
  }
  CHECK_THROWS_AS(Ingest("/nonexistent/tweets.jsonl", DefaultRegionSet()), Error);
}

TEST_CASE("ingest: unknown region makes the record malformed") {
  std::string text = Line("1", "2016-11-10T01:00:00Z", "NY", "a") +
                     Line("2", "2016-11-10T01:00:00Z", "ZZ", "b") +
                     Line("3", "2016-11-10T01:00:00Z", "TX", "c");
  auto r = IngestText(text, DefaultRegionSet());
  CHECK(r.records.size() == 2);
  CHECK(r.stats.malformed == 1);
}

TEST_CASE("ingest/serialize/ingest is a fixed point") {
  std::string text = Line("1", "2016-11-10T01:00:00.5Z", "NY", "a \"quoted\" #tag") +
                     Line("2", "2016-11-10T02:00:00-05:00", "", "b", true);
  auto first = IngestText(text, DefaultRegionSet()).records;
  auto serialized = SerializeTweets(first);
  auto second = IngestText(serialized, DefaultRegionSet()).records;
  CHECK(first == second);
  CHECK(SerializeTweets(second) == serialized);
}

TEST_CASE("cleanse: geo filter") {
  Corpus c = {Rec("1", "NY", "march tomorrow"), Rec("2", std::nullopt, "march tomorrow"),
              Rec("3", "CA", "rally at city hall")};
  CHECK(Cleanse(c, RelevanceRule::Default()).size() == 2);
}

TEST_CASE("cleanse: advertisement with a trending hashtag is removed") {
  Corpus c = {Rec("1", "NY", "Buy now! Promo code TRUMP20 #NotMyPresident")};
  CHECK(Cleanse(c, RelevanceRule::Default()).empty());
}

TEST_CASE("cleanse: retweets are kept as independent records") {
  Corpus c = {Rec("1", "NY", "Rally in Albany tomorrow #NotMyPresident"),
              Rec("2", "NY", "RT @a: Rally in Albany tomorrow #NotMyPresident", true)};
  CHECK(Cleanse(c, RelevanceRule::Default()).size() == 2);
}

TEST_CASE("relevance rule") {
  const RelevanceRule rule = RelevanceRule::Default();
  CHECK(IsRelevant("so angry tonight #NotMyPresident", rule));
  CHECK_FALSE(IsRelevant("https://t.co/abc #NotMyPresident", rule));
  CHECK_FALSE(IsRelevant("RT @someone: https://t.co/abc #NotMyPresident", rule));
  CHECK(IsRelevant("RT @someone: march https://t.co/abc", rule));
  CHECK_FALSE(IsRelevant("look #a #b #c", rule));
  CHECK(IsRelevant("look #a #b #protest", rule));
  CHECK_FALSE(IsRelevant("FREE SHIPPING today only", rule));
  RelevanceRule loose = rule;
  loose.drop_url_only = false;
  CHECK(IsRelevant("https://t.co/abc", loose));
}

TEST_CASE("cleanse is idempotent and never grows the corpus") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> pieces = {"rally", "#NotMyPresident", "#a", "#b", "#c",
                                           "buy now", "http://x.y", "tomorrow", "#protest"};
  const std::vector<std::optional<Region>> regions = {std::nullopt, "NY", "CA"};
  for (int trial = 0; trial < 200; ++trial) {
    Corpus c;
    int n = static_cast<int>(rng() % 10);
    for (int i = 0; i < n; ++i) {
      std::string text;
      int words = 1 + static_cast<int>(rng() % 5);
      for (int w = 0; w < words; ++w) text += pieces[rng() % pieces.size()] + " ";
      c.push_back(Rec(std::to_string(i), regions[rng() % 3], text));
    }
    Corpus once = Cleanse(c, RelevanceRule::Default());
    CHECK(once.size() <= c.size());
    CHECK(Cleanse(once, RelevanceRule::Default()) == once);
  }
}

TEST_CASE("ground truth parsing") {
  auto events = ParseGroundTruth("date,state\n2016-11-11,NY\n2016-11-11,CA\n", DefaultRegionSet());
  CHECK(events.size() == 2);
  CHECK(events.count({D("2016-11-11"), "NY"}) == 1);
  CHECK_THROWS_AS(ParseGroundTruth("date,state\n2016-11-11,NY\n2016-11-11,NY\n", DefaultRegionSet()),
                  Error);
  CHECK_THROWS_AS(ParseGroundTruth("day,state\n", DefaultRegionSet()), Error);
  CHECK_THROWS_AS(ParseGroundTruth("date,state\n2016-11-11,XX\n", DefaultRegionSet()), Error);
  auto back = ParseGroundTruth(FormatGroundTruth(events), DefaultRegionSet());
  CHECK(back == events);
}

std::string VotesFor(const std::vector<Region> &regions) {
  std::string text = "state,candidate_vote_pct,max_opposition_county_lead\n";
  for (const auto &r : regions) text += r + ",0.5,10\n";
  return text;
}

TEST_CASE("election parsing") {
  RegionSet two = {"TX", "NY"};
  auto table = ParseElection(
      "state,candidate_vote_pct,max_opposition_county_lead\nTX,0.52,150000\nNY,0.37,0\n", two);
  CHECK(table.at("TX").candidate_vote_pct == doctest::Approx(0.52));
  CHECK(table.at("TX").max_opposition_county_lead == 150000);
  CHECK(ParseElection(FormatElection(table), two).at("NY").candidate_vote_pct ==
        doctest::Approx(0.37));

  std::vector<Region> all = UsStates();
  CHECK(ParseElection(VotesFor(all), DefaultRegionSet()).size() == 50);
  all.pop_back();
  CHECK_THROWS_AS(ParseElection(VotesFor(all), DefaultRegionSet()), Error);

  CHECK_THROWS_AS(
      ParseElection("state,candidate_vote_pct,max_opposition_county_lead\nTX,1.2,0\nNY,0.3,0\n", two),
      Error);
  CHECK_THROWS_AS(
      ParseElection("state,candidate_vote_pct,max_opposition_county_lead\nTX,0.2,-5\nNY,0.3,0\n", two),
      Error);
  CHECK_THROWS_AS(
      ParseElection("state,candidate_vote_pct,max_opposition_county_lead\nTX,0.2,0\nTX,0.3,0\n", two),
      Error);
}

}  // namespace
}  // namespace unrest
