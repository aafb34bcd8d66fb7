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

#include "unrest/featmat.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>

#include "unrest/error.h"
#include "unrest/text_io.h"

namespace unrest {
namespace {

using namespace std::chrono;

struct DayAggregate {
  int tweets = 0;
  int negative = 0;
  double negative_polarity_sum = 0.0;
  double violent_sum = 0.0;
};

bool IsIntegerColumn(size_t feature) {
  return feature == kMentionCount || feature == kGlobalNegativeCount ||
         feature == kLeadFlag;
}

}  // namespace

std::string FeatureName(size_t index) { return "f" + std::to_string(index + 1); }

FeatureMask TweetOnlyFeatures() {
  FeatureMask mask;
  mask.set(kMentionCount).set(kGlobalNegativeCount).set(kAvgNegativePolarity);
  mask.set(kAvgViolentPerTweet).set(kDailyTweetCount);
  return mask;
}

FeatureMask ParseFeatureMask(std::string_view text) {
  text = Trim(text);
  if (text == "all") return AllFeatures();
  if (text == "tweet") return TweetOnlyFeatures();
  if (text == "event") return FeatureMask{}.set(kVotePct).set(kLeadFlag);
  if (text.size() == kFeatureCount &&
      text.find_first_not_of("01") == std::string_view::npos) {
    FeatureMask mask;
    for (size_t i = 0; i < kFeatureCount; ++i) mask[i] = text[i] == '1';
    if (mask.none()) Fail(Errc::kValidation, "feature mask selects nothing");
    return mask;
  }
  FeatureMask mask;
  for (const std::string &item : SplitCsv(text)) {
    std::string lowered = item;
    for (char &c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    bool ok = lowered.size() == 2 && lowered[0] == 'f' && lowered[1] >= '1' &&
              lowered[1] <= '0' + static_cast<char>(kFeatureCount);
    if (!ok) Fail(Errc::kValidation, "bad feature name '" + item + "' in mask");
    mask.set(static_cast<size_t>(lowered[1] - '1'));
  }
  if (mask.none()) Fail(Errc::kValidation, "feature mask selects nothing");
  return mask;
}

std::string FormatFeatureMask(FeatureMask mask) {
  std::string out;
  for (size_t i = 0; i < kFeatureCount; ++i) {
    if (!mask[i]) continue;
    if (!out.empty()) out += ',';
    out += FeatureName(i);
  }
  return out;
}

std::vector<Date> FeatureMatrix::Dates() const {
  std::vector<Date> dates;
  for (const auto &row : rows) {
    if (dates.empty() || dates.back() != row.date) dates.push_back(row.date);
  }
  return dates;
}

std::vector<Region> FeatureMatrix::Regions() const {
  std::set<Region> regions;
  for (const auto &row : rows) regions.insert(row.region);
  return {regions.begin(), regions.end()};
}

std::vector<double> FeatureMatrix::Column(size_t feature) const {
  std::vector<double> col;
  col.reserve(rows.size());
  for (const auto &row : rows) col.push_back(row.values[feature]);
  return col;
}

std::vector<int> FeatureMatrix::Labels() const {
  std::vector<int> labels;
  labels.reserve(rows.size());
  for (const auto &row : rows) labels.push_back(row.label);
  return labels;
}

int LeadFlag(const ElectionStats &stats, std::int64_t threshold) {
  return stats.max_opposition_county_lead >= threshold ? 1 : 0;
}

FeatureMatrix BuildMatrix(std::span<const TweetAnalysis> tweets,
                          const ElectionTable &election,
                          const ProtestSet &protests,
                          const BuildOptions &options) {
  if (options.last_date < options.first_date) {
    Fail(Errc::kValidation, "empty date range");
  }
  if (options.regions.empty()) Fail(Errc::kValidation, "no regions configured");
  for (const Region &r : options.regions) {
    if (!election.contains(r)) {
      Fail(Errc::kValidation, "region " + r + " has no election statistics");
    }
  }
  std::vector<Region> regions = options.regions;
  std::sort(regions.begin(), regions.end());
  regions.erase(std::unique(regions.begin(), regions.end()), regions.end());

  std::map<std::pair<Date, Region>, DayAggregate> per_region_day;
  std::map<Date, int> negative_per_day;
  // target (date, region) -> tweet days of the mentioning tweets
  std::map<std::pair<Date, Region>, std::vector<Date>> mentions;
  for (const TweetAnalysis &t : tweets) {
    DayAggregate &agg = per_region_day[{t.day, t.region}];
    ++agg.tweets;
    agg.violent_sum += t.violent_words;
    if (t.sentiment.is_negative) {
      ++agg.negative;
      agg.negative_polarity_sum += t.sentiment.polarity;
      ++negative_per_day[t.day];
    }
    for (const MentionHit &hit : t.mentions) {
      mentions[{hit.target_date, hit.target_region}].push_back(t.day);
    }
  }

  const int num_days = (options.last_date - options.first_date).count() + 1;
  bool use_pace = options.pace_mode == PaceMode::kHourlyPace;
  if (options.pace_mode == PaceMode::kAuto) {
    for (int i = 0; i < num_days; ++i) {
      auto it = options.coverage_hours.find(options.first_date + days{i - 1});
      if (it != options.coverage_hours.end() && it->second != 24.0) use_pace = true;
    }
  }

  FeatureMatrix matrix;
  matrix.rows.reserve(regions.size() * static_cast<size_t>(num_days));
  for (int i = 0; i < num_days; ++i) {
    const Date date = options.first_date + days{i};
    const Date prev = date - days{1};
    double hours = 24.0;
    if (auto it = options.coverage_hours.find(prev); it != options.coverage_hours.end()) {
      hours = it->second;
      if (use_pace && !(hours > 0.0)) {
        Fail(Errc::kValidation, "coverage hours for " + FormatDate(prev) + " must be positive");
      }
    }
    const auto neg_it = negative_per_day.find(prev);
    const int global_negative = neg_it == negative_per_day.end() ? 0 : neg_it->second;

    for (const Region &region : regions) {
      StateDayFeatures row;
      row.region = region;
      row.date = date;
      auto &v = row.values;

      int mention_count = 0;
      if (auto it = mentions.find({date, region}); it != mentions.end()) {
        for (Date day : it->second) mention_count += day < date ? 1 : 0;
      }
      v[kMentionCount] = mention_count;
      v[kGlobalNegativeCount] = global_negative;

      const ElectionStats &stats = election.at(region);
      v[kVotePct] = stats.candidate_vote_pct;
      v[kLeadFlag] = LeadFlag(stats, options.lead_threshold);

      DayAggregate agg;
      if (auto it = per_region_day.find({prev, region}); it != per_region_day.end()) {
        agg = it->second;
      }
      v[kAvgNegativePolarity] =
          agg.negative > 0 ? agg.negative_polarity_sum / agg.negative : 0.0;
      v[kAvgViolentPerTweet] = agg.tweets > 0 ? agg.violent_sum / agg.tweets : 0.0;
      v[kDailyTweetCount] = use_pace ? agg.tweets / hours : agg.tweets;

      row.label = protests.contains({date, region}) ? 1 : 0;
      matrix.rows.push_back(std::move(row));
    }
  }
  return matrix;
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    Fail(Errc::kSchema, "pearson: length mismatch " + std::to_string(x.size()) +
                            " vs " + std::to_string(y.size()));
  }
  if (x.size() < 2) Fail(Errc::kValidation, "pearson: need at least 2 points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationMatrix Correlations(const FeatureMatrix &matrix) {
  std::vector<std::vector<double>> cols;
  for (size_t f = 0; f < kFeatureCount; ++f) cols.push_back(matrix.Column(f));
  CorrelationMatrix corr(kFeatureCount, std::vector<double>(kFeatureCount, 0.0));
  for (size_t i = 0; i < kFeatureCount; ++i) {
    corr[i][i] = 1.0;
    for (size_t j = i + 1; j < kFeatureCount; ++j) {
      corr[i][j] = corr[j][i] = Pearson(cols[i], cols[j]);
    }
  }
  return corr;
}

FeatureMask PruneCorrelated(const CorrelationMatrix &corr, double corr_threshold,
                            const std::map<size_t, int> &significance_rank,
                            FeatureMask candidates) {
  const size_t n = corr.size();
  if (n > kFeatureCount) Fail(Errc::kSchema, "correlation matrix larger than feature set");
  auto rank_of = [&](size_t f) {
    auto it = significance_rank.find(f);
    return it == significance_rank.end() ? std::numeric_limits<int>::max() : it->second;
  };
  FeatureMask dropped;
  for (size_t i = 0; i < n; ++i) {
    if (!candidates[i]) continue;
    for (size_t j = i + 1; j < n; ++j) {
      if (!candidates[j] || !(std::abs(corr[i][j]) > corr_threshold)) continue;
      // Equal ranks fall back to column order.
      const bool i_worse = rank_of(i) > rank_of(j);
      dropped.set(i_worse ? i : j);
    }
  }
  return candidates & ~dropped;
}

std::string FormatFeaturesCsv(const FeatureMatrix &matrix) {
  std::string out = "date,state";
  for (size_t f = 0; f < kFeatureCount; ++f) out += "," + FeatureName(f);
  out += ",label\n";
  for (const StateDayFeatures &row : matrix.rows) {
    out += FormatDate(row.date) + "," + row.region;
    for (size_t f = 0; f < kFeatureCount; ++f) {
      out += ',';
      if (IsIntegerColumn(f)) {
        out += std::to_string(static_cast<long long>(std::llround(row.values[f])));
      } else {
        out += Fixed6(row.values[f]);
      }
    }
    out += "," + std::to_string(row.label) + "\n";
  }
  return out;
}

FeatureMatrix ParseFeaturesCsv(std::string_view contents) {
  std::istringstream in{std::string(contents)};
  std::string line;
  std::string expected = "date,state";
  for (size_t f = 0; f < kFeatureCount; ++f) expected += "," + FeatureName(f);
  expected += ",label";
  if (!std::getline(in, line) || Trim(line) != expected) {
    Fail(Errc::kSchema, "features.csv: expected header '" + expected + "'");
  }
  FeatureMatrix matrix;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    auto fields = SplitCsv(line);
    std::string where = "features.csv line " + std::to_string(line_no);
    if (fields.size() != kFeatureCount + 3) Fail(Errc::kParse, where + ": wrong field count");
    StateDayFeatures row;
    auto date = ParseDate(fields[0]);
    if (!date) Fail(Errc::kParse, where + ": bad date");
    row.date = *date;
    row.region = fields[1];
    try {
      for (size_t f = 0; f < kFeatureCount; ++f) {
        row.values[f] = std::stod(fields[f + 2]);
        if (!std::isfinite(row.values[f])) throw std::invalid_argument("non-finite");
      }
      row.label = std::stoi(fields[kFeatureCount + 2]);
    } catch (const std::logic_error &) {
      Fail(Errc::kParse, where + ": non-numeric value");
    }
    if (row.label != 0 && row.label != 1) Fail(Errc::kValidation, where + ": label not 0/1");
    if (!matrix.rows.empty()) {
      const auto &last = matrix.rows.back();
      if (std::tie(last.date, last.region) >= std::tie(row.date, row.region)) {
        Fail(Errc::kValidation, where + ": rows not in (date, state) order");
      }
    }
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

FeatureMatrix LoadFeaturesCsv(const std::string &path) {
  return ParseFeaturesCsv(ReadFile(path));
}

}  // namespace unrest
