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

#include "unrest/datagen.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <random>

#include "unrest/error.h"
#include "unrest/text_io.h"

namespace unrest {
namespace {

using namespace std::chrono;

const std::vector<std::string> kCategories = {
    "mention_place", "mention", "plain", "negative", "positive", "violent", "spam"};

double Logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

std::string Capitalize(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::string Ordinal(unsigned d) {
  const char *suffix = "th";
  if (d % 100 < 11 || d % 100 > 13) {
    if (d % 10 == 1) suffix = "st";
    if (d % 10 == 2) suffix = "nd";
    if (d % 10 == 3) suffix = "rd";
  }
  return std::to_string(d) + suffix;
}

void ReplaceAll(std::string &text, std::string_view key, std::string_view value) {
  size_t pos = 0;
  while ((pos = text.find(key, pos)) != std::string::npos) {
    text.replace(pos, key.size(), value);
    pos += value.size();
  }
}

// Standardizes across regions; a constant vector maps to zeros.
std::vector<double> ZScores(const std::vector<double> &v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= v.size();
  double var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  const double sd = std::sqrt(var / v.size());
  std::vector<double> out(v.size(), 0.0);
  if (sd > 1e-12) {
    for (size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - mean) / sd;
  }
  return out;
}

class Generator {
 public:
  Generator(const GenConfig &config, const std::vector<TweetTemplate> &templates,
            const TextResources &resources)
      : config_(config), rng_(config.seed) {
    for (const TweetTemplate &t : templates) by_category_[t.category].push_back(t.text);
    for (const std::string &c : kCategories) {
      if (by_category_[c].empty()) Fail(Errc::kValidation, "no templates of category '" + c + "'");
    }
    for (const auto &[term, polarity] : resources.sentiment) {
      (polarity < 0 ? negative_words_ : positive_words_).push_back(term);
    }
    violent_words_.assign(resources.violent.begin(), resources.violent.end());
    std::sort(negative_words_.begin(), negative_words_.end());
    std::sort(positive_words_.begin(), positive_words_.end());
    std::sort(violent_words_.begin(), violent_words_.end());
    if (negative_words_.empty() || positive_words_.empty() || violent_words_.empty()) {
      Fail(Errc::kValidation, "generator needs negative, positive and violent terms");
    }
    std::map<std::string, std::set<Region>> place_regions;
    for (const auto &[place, region] : resources.gazetteer.entries()) {
      place_regions[place].insert(region);
    }
    for (const auto &[place, regions] : place_regions) {
      if (regions.size() == 1) cities_[*regions.begin()].push_back(place);
    }
    regions_.assign(UsStates().begin(), UsStates().begin() + config.regions);
  }

  GenOutput Run() {
    GenOutput out;
    const size_t nr = regions_.size();
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<double> share(nr), votes(nr);
    std::vector<int> leads(nr);
    for (size_t i = 0; i < nr; ++i) share[i] = std::exp(0.3 * normal(rng_));
    for (size_t i = 0; i < nr; ++i) {
      votes[i] = config_.vote_pcts.empty() ? 0.25 + 0.45 * unit(rng_) : config_.vote_pcts[i];
    }
    for (size_t i = 0; i < nr; ++i) {
      leads[i] = config_.lead_flags.empty() ? (unit(rng_) < 0.4 ? 1 : 0) : config_.lead_flags[i];
    }
    for (size_t i = 0; i < nr; ++i) {
      ElectionStats stats;
      stats.region = regions_[i];
      stats.candidate_vote_pct = std::round(votes[i] * 1e6) / 1e6;
      const double u = unit(rng_);
      stats.max_opposition_county_lead =
          leads[i] ? config_.lead_threshold + static_cast<std::int64_t>(u * 400000)
                   : static_cast<std::int64_t>(u * static_cast<double>(config_.lead_threshold - 1));
      out.election.emplace(stats.region, stats);
    }

    struct Pending {
      TweetRecord record;
      size_t order;
    };
    std::vector<Pending> pending;
    std::map<std::pair<int, size_t>, int> mentions;  // (day index, region) -> count
    std::vector<double> mobilization(nr, 0.0);
    const double rho = config_.mobilization_persistence;

    for (int t = 0; t < config_.days; ++t) {
      const Date day = config_.start_date + days{t};
      std::vector<int> relevant(nr, 0), negative(nr, 0);
      for (size_t i = 0; i < nr; ++i) {
        const double shock = normal(rng_);
        mobilization[i] = t == 0 ? shock : rho * mobilization[i] + std::sqrt(1 - rho * rho) * shock;
        const double m = config_.mobilization_sd * mobilization[i];
        const double mean_tweets = static_cast<double>(config_.base_daily_tweets) / nr *
                                   share[i] * std::exp(m);
        std::poisson_distribution<int> poisson(mean_tweets);
        const int count = poisson(rng_);
        for (int j = 0; j < count; ++j) {
          TweetRecord rec;
          rec.created_at = Timestamp{day} + seconds{static_cast<int>(unit(rng_) * 86400)};
          rec.region = regions_[i];
          std::string text;
          const double kind = unit(rng_);
          if (kind < config_.no_geo_rate) {
            rec.region.reset();
            text = Pick("plain");
          } else if (kind < config_.no_geo_rate + config_.spam_rate) {
            text = Pick("spam");
          } else {
            ++relevant[i];
            if (unit(rng_) < std::min(0.9, config_.mention_rate * std::exp(m))) {
              const double u = unit(rng_);
              const int ahead = u < 0.7 ? 1 : (u < 0.9 ? 2 : 3);
              text = MentionText(regions_[i], day, day + days{ahead});
              ++mentions[{t + ahead, i}];
            } else {
              text = Pick("plain");
            }
            if (unit(rng_) < std::min(0.95, config_.negative_rate * std::exp(0.5 * m))) {
              ++negative[i];
              text += " " + Fill(Pick("negative"));
            } else if (unit(rng_) < 0.3) {
              text += " " + Fill(Pick("positive"));
            }
            if (unit(rng_) < std::min(0.9, config_.violent_rate * std::exp(0.5 * m))) {
              text += " " + Fill(Pick("violent"));
            }
          }
          if (unit(rng_) < config_.retweet_rate) {
            rec.is_retweet = true;
            text = "RT @user" + std::to_string(static_cast<int>(unit(rng_) * 9000) + 1000) +
                   ": " + text;
          }
          rec.text = Fill(text);
          pending.push_back({std::move(rec), pending.size()});
        }
      }

      // Protests on the following day.
      std::vector<double> vol(nr), men(nr), neg(nr);
      for (size_t i = 0; i < nr; ++i) {
        vol[i] = std::log1p(relevant[i]);
        men[i] = std::log1p(mentions[{t + 1, i}]);
        neg[i] = relevant[i] > 0 ? static_cast<double>(negative[i]) / relevant[i] : 0.0;
      }
      const auto zvol = ZScores(vol), zmen = ZScores(men), zneg = ZScores(neg);
      const ProtestWeights &w = config_.protest_logit_weights;
      for (size_t i = 0; i < nr; ++i) {
        const double z = w.bias + w.volume * zvol[i] + w.mention * zmen[i] +
                         w.vote * (votes[i] - 0.5) / 0.1 + w.lead * leads[i] +
                         w.negativity * zneg[i];
        LatentCell cell;
        cell.region = regions_[i];
        cell.date = day + days{1};
        cell.tweets_prev_day = relevant[i];
        cell.negative_prev_day = negative[i];
        cell.mentions = mentions[{t + 1, i}];
        cell.probability = Logistic(z);
        cell.protest = unit(rng_) < cell.probability ? 1 : 0;
        if (cell.protest) out.protests.insert({cell.date, cell.region});
        out.cells.push_back(cell);
      }
    }

    std::stable_sort(pending.begin(), pending.end(), [](const Pending &a, const Pending &b) {
      return a.record.created_at < b.record.created_at;
    });
    out.tweets.reserve(pending.size());
    for (size_t k = 0; k < pending.size(); ++k) {
      char id[16];
      std::snprintf(id, sizeof(id), "t%08zu", k + 1);
      pending[k].record.id = id;
      out.tweets.push_back(std::move(pending[k].record));
    }
    return out;
  }

 private:
  std::string Pick(const std::string &category) {
    const auto &list = by_category_.at(category);
    return list[std::uniform_int_distribution<size_t>(0, list.size() - 1)(rng_)];
  }

  template <typename T>
  const T &Choose(const std::vector<T> &list) {
    return list[std::uniform_int_distribution<size_t>(0, list.size() - 1)(rng_)];
  }

  std::string Fill(std::string text) {
    while (text.find("{neg}") != std::string::npos) {
      text.replace(text.find("{neg}"), 5, Choose(negative_words_));
    }
    while (text.find("{pos}") != std::string::npos) {
      text.replace(text.find("{pos}"), 5, Choose(positive_words_));
    }
    while (text.find("{violent}") != std::string::npos) {
      text.replace(text.find("{violent}"), 9, Choose(violent_words_));
    }
    ReplaceAll(text, "{tag}", config_.campaign_hashtag);
    return text;
  }

  std::string MentionText(const Region &region, Date today, Date target) {
    const int ahead = (target - today).count();
    std::string when;
    const int form = std::uniform_int_distribution<int>(ahead == 1 ? 0 : 1, 2)(rng_);
    if (form == 0) {
      when = "tomorrow";
    } else if (form == 1) {
      when = Capitalize(WeekdayName(weekday{target}));
    } else {
      const year_month_day ymd{target};
      when = Capitalize(MonthName(ymd.month())) + " " +
             Ordinal(static_cast<unsigned>(ymd.day()));
    }
    auto it = cities_.find(region);
    const bool with_place = it != cities_.end() && std::uniform_real_distribution<double>(0, 1)(rng_) < 0.6;
    std::string text = Pick(with_place ? "mention_place" : "mention");
    if (with_place) {
      const std::string &place = Choose(it->second);
      std::string tag;
      for (char c : place) {
        if (std::isalnum(static_cast<unsigned char>(c))) tag += c;
      }
      ReplaceAll(text, "{placetag}", tag);
      ReplaceAll(text, "{place}", place);
    }
    ReplaceAll(text, "{when}", when);
    return text;
  }

  const GenConfig &config_;
  std::mt19937_64 rng_;
  std::map<std::string, std::vector<std::string>> by_category_;
  std::vector<std::string> negative_words_, positive_words_, violent_words_;
  std::map<Region, std::vector<std::string>> cities_;
  std::vector<Region> regions_;
};

}  // namespace

void GenConfig::Validate() const {
  auto rate_ok = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (regions < 1 || regions > static_cast<int>(UsStates().size())) {
    Fail(Errc::kValidation, "regions must be in [1, 50]");
  }
  if (days < 2) Fail(Errc::kValidation, "days must be at least 2");
  if (base_daily_tweets < 0) Fail(Errc::kValidation, "base_daily_tweets must be nonnegative");
  for (double r : {mention_rate, negative_rate, violent_rate, no_geo_rate, spam_rate, retweet_rate,
                   mobilization_persistence}) {
    if (!rate_ok(r)) Fail(Errc::kValidation, "rates must lie in [0,1]");
  }
  if (no_geo_rate + spam_rate > 1.0) Fail(Errc::kValidation, "no_geo_rate + spam_rate exceeds 1");
  if (mobilization_sd < 0) Fail(Errc::kValidation, "mobilization_sd must be nonnegative");
  if (lead_threshold < 1) Fail(Errc::kValidation, "lead_threshold must be positive");
  if (!vote_pcts.empty()) {
    if (vote_pcts.size() != static_cast<size_t>(regions)) {
      Fail(Errc::kValidation, "vote_pcts needs one entry per region");
    }
    for (double v : vote_pcts) {
      if (!rate_ok(v)) Fail(Errc::kValidation, "vote_pcts must lie in [0,1]");
    }
  }
  if (!lead_flags.empty()) {
    if (lead_flags.size() != static_cast<size_t>(regions)) {
      Fail(Errc::kValidation, "lead_flags needs one entry per region");
    }
    for (int f : lead_flags) {
      if (f != 0 && f != 1) Fail(Errc::kValidation, "lead_flags must be 0/1");
    }
  }
}

GenConfig GenConfigFromJson(const nlohmann::json &doc) {
  GenConfig c;
  try {
    c.seed = doc.value("seed", c.seed);
    c.regions = doc.value("regions", c.regions);
    c.days = doc.value("days", c.days);
    if (doc.contains("start_date")) c.start_date = DateOrThrow(doc.at("start_date").get<std::string>());
    c.base_daily_tweets = doc.value("base_daily_tweets", c.base_daily_tweets);
    if (doc.contains("protest_logit_weights")) {
      const auto &w = doc.at("protest_logit_weights");
      ProtestWeights &p = c.protest_logit_weights;
      p.bias = w.value("bias", p.bias);
      p.volume = w.value("volume", p.volume);
      p.mention = w.value("mention", p.mention);
      p.vote = w.value("vote", p.vote);
      p.lead = w.value("lead", p.lead);
      p.negativity = w.value("negativity", p.negativity);
    }
    c.mention_rate = doc.value("mention_rate", c.mention_rate);
    c.negative_rate = doc.value("negative_rate", c.negative_rate);
    c.violent_rate = doc.value("violent_rate", c.violent_rate);
    c.no_geo_rate = doc.value("no_geo_rate", c.no_geo_rate);
    c.spam_rate = doc.value("spam_rate", c.spam_rate);
    c.retweet_rate = doc.value("retweet_rate", c.retweet_rate);
    c.mobilization_sd = doc.value("mobilization_sd", c.mobilization_sd);
    c.mobilization_persistence = doc.value("mobilization_persistence", c.mobilization_persistence);
    c.lead_threshold = doc.value("lead_threshold", c.lead_threshold);
    c.campaign_hashtag = doc.value("campaign_hashtag", c.campaign_hashtag);
    c.vote_pcts = doc.value("vote_pcts", c.vote_pcts);
    c.lead_flags = doc.value("lead_flags", c.lead_flags);
  } catch (const nlohmann::json::exception &e) {
    Fail(Errc::kParse, std::string("generator config: ") + e.what());
  }
  c.Validate();
  return c;
}

nlohmann::ordered_json GenConfigToJson(const GenConfig &c) {
  const ProtestWeights &w = c.protest_logit_weights;
  nlohmann::ordered_json doc;
  doc["seed"] = c.seed;
  doc["regions"] = c.regions;
  doc["days"] = c.days;
  doc["start_date"] = FormatDate(c.start_date);
  doc["base_daily_tweets"] = c.base_daily_tweets;
  doc["protest_logit_weights"] = {{"bias", w.bias},         {"volume", w.volume},
                                  {"mention", w.mention},   {"vote", w.vote},
                                  {"lead", w.lead},         {"negativity", w.negativity}};
  doc["mention_rate"] = c.mention_rate;
  doc["negative_rate"] = c.negative_rate;
  doc["violent_rate"] = c.violent_rate;
  doc["no_geo_rate"] = c.no_geo_rate;
  doc["spam_rate"] = c.spam_rate;
  doc["retweet_rate"] = c.retweet_rate;
  doc["mobilization_sd"] = c.mobilization_sd;
  doc["mobilization_persistence"] = c.mobilization_persistence;
  doc["lead_threshold"] = c.lead_threshold;
  doc["campaign_hashtag"] = c.campaign_hashtag;
  doc["vote_pcts"] = c.vote_pcts;
  doc["lead_flags"] = c.lead_flags;
  return doc;
}

std::vector<TweetTemplate> LoadTemplates(const std::string &path) {
  std::vector<TweetTemplate> out;
  auto lines = ReadLines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const size_t bar = line.find('|');
    if (bar == std::string_view::npos) {
      Fail(Errc::kParse, path + " line " + std::to_string(i + 1) + ": expected category|text");
    }
    TweetTemplate t{std::string(Trim(line.substr(0, bar))), std::string(Trim(line.substr(bar + 1)))};
    if (std::find(kCategories.begin(), kCategories.end(), t.category) == kCategories.end()) {
      Fail(Errc::kValidation, path + " line " + std::to_string(i + 1) + ": unknown category '" +
                                  t.category + "'");
    }
    out.push_back(std::move(t));
  }
  return out;
}

GenOutput Generate(const GenConfig &config, const std::vector<TweetTemplate> &templates,
                   const TextResources &resources) {
  config.Validate();
  return Generator(config, templates, resources).Run();
}

void WriteGenOutput(const GenOutput &output, const std::string &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) Fail(Errc::kIo, "cannot create directory '" + dir + "'");
  WriteFile(dir + "/tweets.jsonl", SerializeTweets(output.tweets));
  WriteFile(dir + "/protests.csv", FormatGroundTruth(output.protests));
  WriteFile(dir + "/votes.csv", FormatElection(output.election));
}

}  // namespace unrest
