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

#ifndef UNREST_FEATMAT_H_
#define UNREST_FEATMAT_H_

#include <array>
#include <bitset>
#include <chrono>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unrest/calendar.h"
#include "unrest/corpus.h"
#include "unrest/regions.h"
#include "unrest/textfeat.h"

namespace unrest {

inline constexpr size_t kFeatureCount = 7;

// Column order of the seven predictors.
enum Feature : size_t {
  kMentionCount = 0,         // f1: mentions targeting (region, date)
  kGlobalNegativeCount = 1,  // f2: corpus-wide negative tweets on d-1
  kVotePct = 2,              // f3: candidate vote share
  kAvgNegativePolarity = 3,  // f4: mean polarity of negative tweets, <= 0
  kAvgViolentPerTweet = 4,   // f5: violent words per tweet
  kDailyTweetCount = 5,      // f6: tweets on d-1 (or hourly pace)
  kLeadFlag = 6,             // f7: county lead at or above threshold
};

using FeatureVector = std::array<double, kFeatureCount>;
using FeatureMask = std::bitset<kFeatureCount>;

// "f1".."f7".
std::string FeatureName(size_t index);

// Accepts "all", "tweet" (f1,f2,f4,f5,f6), "event" (f3,f7), a comma list such
// as "f1,f3" or a 7-character 0/1 string with f1 first.
FeatureMask ParseFeatureMask(std::string_view text);
std::string FormatFeatureMask(FeatureMask mask);

inline FeatureMask AllFeatures() { return FeatureMask{}.set(); }
FeatureMask TweetOnlyFeatures();

struct StateDayFeatures {
  Region region;
  Date date;
  FeatureVector values{};
  int label = 0;

  double f(size_t index) const { return values[index]; }
};

struct FeatureMatrix {
  std::vector<StateDayFeatures> rows;  // ordered by (date, region)

  std::vector<Date> Dates() const;
  std::vector<Region> Regions() const;
  std::vector<double> Column(size_t feature) const;
  std::vector<int> Labels() const;
};

enum class PaceMode { kAuto, kCount, kHourlyPace };

struct BuildOptions {
  std::vector<Region> regions = UsStates();
  Date first_date;
  Date last_date;
  std::int64_t lead_threshold = 100000;
  PaceMode pace_mode = PaceMode::kAuto;
  // Observed collection hours per tweet day; days not listed count as 24.
  std::map<Date, double> coverage_hours;
};

// Row (r, d) uses tweets from day d-1, except f1 which counts every mention
// of (r, d) made on any day before d. Rows come out in (date, region) order.
FeatureMatrix BuildMatrix(std::span<const TweetAnalysis> tweets,
                          const ElectionTable &election,
                          const ProtestSet &protests,
                          const BuildOptions &options);

// 1 iff the largest opposition county lead reaches the threshold.
int LeadFlag(const ElectionStats &stats, std::int64_t threshold);

// Pearson coefficient; 0 when either input is constant.
double Pearson(std::span<const double> x, std::span<const double> y);

using CorrelationMatrix = std::vector<std::vector<double>>;

CorrelationMatrix Correlations(const FeatureMatrix &matrix);

// Drops, for every pair with |r| above the threshold, the member with the
// worse significance rank (1 = most significant). Features missing from the
// rank map are treated as least significant.
FeatureMask PruneCorrelated(const CorrelationMatrix &corr, double corr_threshold,
                            const std::map<size_t, int> &significance_rank,
                            FeatureMask candidates = AllFeatures());

// features.csv: `date,state,f1,...,f7,label`.
std::string FormatFeaturesCsv(const FeatureMatrix &matrix);
FeatureMatrix ParseFeaturesCsv(std::string_view contents);
FeatureMatrix LoadFeaturesCsv(const std::string &path);

}  // namespace unrest

#endif  // UNREST_FEATMAT_H_
