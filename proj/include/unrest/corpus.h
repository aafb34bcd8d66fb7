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

#ifndef UNREST_CORPUS_H_
#define UNREST_CORPUS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "unrest/calendar.h"
#include "unrest/regions.h"

namespace unrest {

struct TweetRecord {
  std::string id;
  Timestamp created_at;
  std::optional<Region> region;
  std::string text;
  bool is_retweet = false;

  bool operator==(const TweetRecord &) const = default;
};

using Corpus = std::vector<TweetRecord>;

struct IngestStats {
  size_t lines = 0;       // non-blank input lines
  size_t records = 0;     // records returned
  size_t malformed = 0;   // unparseable JSON or invalid fields
  size_t duplicates = 0;  // repeated ids, first occurrence kept
};

struct IngestResult {
  Corpus records;
  IngestStats stats;
};

// Parses one tweets.jsonl line. Returns nullopt when the JSON is malformed or
// a field is invalid (empty id, bad timestamp, region outside the set).
std::optional<TweetRecord> ParseTweetLine(std::string_view line,
                                          const RegionSet &regions);

// Reads tweets.jsonl. Malformed lines are counted and skipped; more than
// half malformed is fatal since the file is probably not tweets.jsonl.
IngestResult Ingest(const std::string &path, const RegionSet &regions);
IngestResult IngestText(std::string_view contents, const RegionSet &regions);

// One JSON object per line, keys in canonical order.
std::string SerializeTweets(const Corpus &corpus);

// Deny-list describing irrelevant (advertisement, spam) tweets. Hashtag
// entries are lowercase and include the leading '#'.
struct RelevanceRule {
  std::set<std::string> campaign_hashtags;
  // Hashtags that are on topic and never count as unrelated.
  std::set<std::string> related_hashtags;
  std::vector<std::string> spam_phrases;  // lowercase substrings
  int max_unrelated_hashtags = 3;         // irrelevant at or above this
  // Drop bodies that are only links once hashtags, @handles and a retweet
  // marker are ignored.
  bool drop_url_only = true;

  static RelevanceRule Default();
};

bool IsRelevant(std::string_view text, const RelevanceRule &rule);

// Keeps geo-tagged, relevant records in input order. Retweets are kept as
// independent records.
Corpus Cleanse(const Corpus &corpus, const RelevanceRule &rule);

struct ProtestEvent {
  Date date;
  Region region;

  auto operator<=>(const ProtestEvent &) const = default;
};

using ProtestSet = std::set<ProtestEvent>;

struct ElectionStats {
  Region region;
  double candidate_vote_pct = 0.0;
  std::int64_t max_opposition_county_lead = 0;
};

using ElectionTable = std::map<Region, ElectionStats>;

// protests.csv with header `date,state`.
ProtestSet LoadGroundTruth(const std::string &path, const RegionSet &regions);
ProtestSet ParseGroundTruth(std::string_view contents, const RegionSet &regions);
std::string FormatGroundTruth(const ProtestSet &events);

// votes.csv with header `state,candidate_vote_pct,max_opposition_county_lead`.
// Every region in the set must appear exactly once.
ElectionTable LoadElection(const std::string &path, const RegionSet &regions);
ElectionTable ParseElection(std::string_view contents, const RegionSet &regions);
std::string FormatElection(const ElectionTable &table);

}  // namespace unrest

#endif  // UNREST_CORPUS_H_
