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

#ifndef UNREST_DATAGEN_H_
#define UNREST_DATAGEN_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unrest/calendar.h"
#include "unrest/corpus.h"
#include "unrest/textfeat.h"

namespace unrest {

// Weights of the latent protest model. Every input except the lead flag is
// standardized across regions for the day, so weights are comparable.
struct ProtestWeights {
  double bias = -1.5;
  double volume = 0.0;      // log tweet count on the previous day
  double mention = 0.0;     // log mentions targeting the protest day
  double vote = 0.0;        // (vote_pct - 0.5) / 0.1
  double lead = 0.0;        // lead flag, 0/1
  double negativity = 0.0;  // share of negative tweets on the previous day
};

struct GenConfig {
  std::uint64_t seed = 1;
  int regions = 50;        // first N codes of the 50-state list
  int days = 7;            // tweet days; protests fall on the following days
  Date start_date = Date{std::chrono::year{2016} / 11 / 9};
  int base_daily_tweets = 7000;
  ProtestWeights protest_logit_weights;
  double mention_rate = 0.08;
  double negative_rate = 0.35;
  double violent_rate = 0.05;
  double no_geo_rate = 0.1;
  double spam_rate = 0.02;
  double retweet_rate = 0.3;
  double mobilization_sd = 0.6;
  double mobilization_persistence = 0.5;
  std::int64_t lead_threshold = 100000;
  std::string campaign_hashtag = "#NotMyPresident";
  // Per region in region order; drawn from the seed when empty.
  std::vector<double> vote_pcts;
  std::vector<int> lead_flags;

  // Throws Errc::kValidation when a field is out of range.
  void Validate() const;
};

GenConfig GenConfigFromJson(const nlohmann::json &doc);
nlohmann::ordered_json GenConfigToJson(const GenConfig &config);

struct TweetTemplate {
  std::string category;
  std::string text;
};

// templates.txt: `category|text`, '#' comment lines.
std::vector<TweetTemplate> LoadTemplates(const std::string &path);

// Quantities the latent model saw for one (region, protest day) cell.
struct LatentCell {
  Region region;
  Date date;  // protest day
  int tweets_prev_day = 0;
  int negative_prev_day = 0;
  int mentions = 0;
  double probability = 0.0;
  int protest = 0;
};

struct GenOutput {
  Corpus tweets;  // sorted by time, ids assigned in that order
  ProtestSet protests;
  ElectionTable election;
  std::vector<LatentCell> cells;
};

// Deterministic for a given config, templates and resources.
GenOutput Generate(const GenConfig &config, const std::vector<TweetTemplate> &templates,
                   const TextResources &resources);

// Writes tweets.jsonl, protests.csv and votes.csv into dir.
void WriteGenOutput(const GenOutput &output, const std::string &dir);

}  // namespace unrest

#endif  // UNREST_DATAGEN_H_
