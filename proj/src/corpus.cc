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

#include "unrest/corpus.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "unrest/error.h"
#include "unrest/text_io.h"

namespace unrest {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool IsUrl(std::string_view word) {
  return word.starts_with("http://") || word.starts_with("https://") ||
         word.starts_with("www.");
}

// Hashtag body up to the first character that cannot be part of a tag.
std::string HashtagOf(std::string_view word) {
  size_t end = 1;
  while (end < word.size()) {
    unsigned char c = static_cast<unsigned char>(word[end]);
    if (std::isalnum(c) || c == '_' || c >= 0x80) {
      ++end;
    } else {
      break;
    }
  }
  return Lower(word.substr(0, end));
}

std::vector<std::string_view> Words(std::string_view text) {
  std::vector<std::string_view> words;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) words.push_back(text.substr(start, i - start));
  }
  return words;
}

void RequireHeader(const std::vector<std::string> &lines,
                   const std::string &expected, const std::string &what) {
  if (lines.empty() || Trim(lines.front()) != expected) {
    Fail(Errc::kParse, what + ": expected header '" + expected + "'");
  }
}

std::vector<std::string> SplitLines(std::string_view contents) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

std::optional<TweetRecord> ParseTweetLine(std::string_view line,
                                          const RegionSet &regions) {
  json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (!obj.is_object()) return std::nullopt;

  TweetRecord rec;
  auto id = obj.find("id");
  if (id == obj.end()) return std::nullopt;
  if (id->is_string()) {
    rec.id = id->get<std::string>();
  } else if (id->is_number_integer()) {
    rec.id = id->dump();
  } else {
    return std::nullopt;
  }
  if (rec.id.empty()) return std::nullopt;

  auto created = obj.find("created_at");
  if (created == obj.end() || !created->is_string()) return std::nullopt;
  auto ts = ParseTimestamp(created->get_ref<const std::string &>());
  if (!ts) return std::nullopt;
  rec.created_at = *ts;

  auto state = obj.find("state");
  if (state != obj.end() && !state->is_null()) {
    if (!state->is_string()) return std::nullopt;
    Region region = Upper(state->get_ref<const std::string &>());
    if (!regions.contains(region)) return std::nullopt;
    rec.region = std::move(region);
  }

  auto text = obj.find("text");
  if (text == obj.end() || !text->is_string()) return std::nullopt;
  rec.text = text->get<std::string>();

  auto rt = obj.find("is_retweet");
  if (rt != obj.end()) {
    if (!rt->is_boolean()) return std::nullopt;
    rec.is_retweet = rt->get<bool>();
  }
  return rec;
}

IngestResult IngestText(std::string_view contents, const RegionSet &regions) {
  IngestResult result;
  std::unordered_set<std::string> seen;
  for (const std::string &line : SplitLines(contents)) {
    if (Trim(line).empty()) continue;
    ++result.stats.lines;
    auto rec = ParseTweetLine(line, regions);
    if (!rec) {
      ++result.stats.malformed;
      continue;
    }
    if (!seen.insert(rec->id).second) {
      ++result.stats.duplicates;
      continue;
    }
    result.records.push_back(std::move(*rec));
  }
  if (result.stats.malformed * 2 > result.stats.lines) {
    Fail(Errc::kParse, std::to_string(result.stats.malformed) + " of " +
                           std::to_string(result.stats.lines) +
                           " lines are malformed; input is not tweets.jsonl");
  }
  result.stats.records = result.records.size();
  return result;
}

IngestResult Ingest(const std::string &path, const RegionSet &regions) {
  return IngestText(ReadFile(path), regions);
}

std::string SerializeTweets(const Corpus &corpus) {
  std::string out;
  for (const TweetRecord &rec : corpus) {
    ordered_json obj;
    obj["id"] = rec.id;
    obj["created_at"] = FormatTimestamp(rec.created_at);
    obj["state"] = rec.region ? ordered_json(*rec.region) : ordered_json(nullptr);
    obj["text"] = rec.text;
    obj["is_retweet"] = rec.is_retweet;
    out += obj.dump();
    out += '\n';
  }
  return out;
}

RelevanceRule RelevanceRule::Default() {
  RelevanceRule rule;
  rule.campaign_hashtags = {"#notmypresident", "#muslimban", "#travelban"};
  rule.related_hashtags = {"#protest", "#rally", "#march", "#resist",
                           "#nobannowall", "#lovetrumpshate"};
  rule.spam_phrases = {"buy now",      "promo code", "discount",
                       "free shipping", "click here", "follow back",
                       "limited offer"};
  return rule;
}

bool IsRelevant(std::string_view text, const RelevanceRule &rule) {
  std::vector<std::string_view> body;
  int unrelated = 0;
  for (std::string_view word : Words(text)) {
    if (word.front() == '#' && word.size() > 1) {
      std::string tag = HashtagOf(word);
      if (rule.campaign_hashtags.contains(tag)) continue;
      if (!rule.related_hashtags.contains(tag)) ++unrelated;
    }
    body.push_back(word);
  }
  if (unrelated >= rule.max_unrelated_hashtags) return false;

  std::string lowered;
  for (std::string_view word : body) {
    if (!lowered.empty()) lowered += ' ';
    lowered += Lower(word);
  }
  for (const std::string &phrase : rule.spam_phrases) {
    if (!phrase.empty() && lowered.find(phrase) != std::string::npos) return false;
  }

  if (rule.drop_url_only) {
    bool any_url = false;
    bool only_urls = true;
    for (std::string_view word : body) {
      // Hashtags, handles and the retweet marker carry no content.
      if (word.front() == '#' || word.front() == '@' || Lower(word) == "rt") continue;
      if (IsUrl(word)) {
        any_url = true;
      } else {
        only_urls = false;
      }
    }
    if (any_url && only_urls) return false;
  }
  return true;
}

Corpus Cleanse(const Corpus &corpus, const RelevanceRule &rule) {
  Corpus out;
  for (const TweetRecord &rec : corpus) {
    if (rec.region && IsRelevant(rec.text, rule)) out.push_back(rec);
  }
  return out;
}

ProtestSet ParseGroundTruth(std::string_view contents, const RegionSet &regions) {
  auto lines = SplitLines(contents);
  RequireHeader(lines, "date,state", "protests.csv");
  ProtestSet events;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    auto fields = SplitCsv(lines[i]);
    std::string where = "protests.csv line " + std::to_string(i + 1);
    if (fields.size() != 2) Fail(Errc::kParse, where + ": expected 2 fields");
    auto date = ParseDate(fields[0]);
    if (!date) Fail(Errc::kParse, where + ": bad date '" + fields[0] + "'");
    Region region = Upper(fields[1]);
    if (!regions.contains(region)) {
      Fail(Errc::kValidation, where + ": unknown region '" + fields[1] + "'");
    }
    if (!events.insert({*date, region}).second) {
      Fail(Errc::kValidation, where + ": duplicate event " + fields[0] + "," + region);
    }
  }
  return events;
}

ProtestSet LoadGroundTruth(const std::string &path, const RegionSet &regions) {
  return ParseGroundTruth(ReadFile(path), regions);
}

std::string FormatGroundTruth(const ProtestSet &events) {
  std::string out = "date,state\n";
  for (const ProtestEvent &e : events) {
    out += FormatDate(e.date) + "," + e.region + "\n";
  }
  return out;
}

ElectionTable ParseElection(std::string_view contents, const RegionSet &regions) {
  auto lines = SplitLines(contents);
  RequireHeader(lines, "state,candidate_vote_pct,max_opposition_county_lead",
                "votes.csv");
  ElectionTable table;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    auto fields = SplitCsv(lines[i]);
    std::string where = "votes.csv line " + std::to_string(i + 1);
    if (fields.size() != 3) Fail(Errc::kParse, where + ": expected 3 fields");
    ElectionStats stats;
    stats.region = Upper(fields[0]);
    if (!regions.contains(stats.region)) {
      Fail(Errc::kValidation, where + ": unknown region '" + fields[0] + "'");
    }
    try {
      size_t used = 0;
      stats.candidate_vote_pct = std::stod(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument("trailing");
      stats.max_opposition_county_lead = std::stoll(fields[2], &used);
      if (used != fields[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error &) {
      Fail(Errc::kParse, where + ": non-numeric field");
    }
    if (!(stats.candidate_vote_pct >= 0.0 && stats.candidate_vote_pct <= 1.0)) {
      Fail(Errc::kValidation, where + ": candidate_vote_pct outside [0,1]");
    }
    if (stats.max_opposition_county_lead < 0) {
      Fail(Errc::kValidation, where + ": negative county lead");
    }
    if (table.contains(stats.region)) {
      Fail(Errc::kValidation, where + ": duplicate region " + stats.region);
    }
    table.emplace(stats.region, stats);
  }
  for (const Region &r : regions) {
    if (!table.contains(r)) Fail(Errc::kValidation, "votes.csv: missing region " + r);
  }
  return table;
}

ElectionTable LoadElection(const std::string &path, const RegionSet &regions) {
  return ParseElection(ReadFile(path), regions);
}

std::string FormatElection(const ElectionTable &table) {
  std::string out = "state,candidate_vote_pct,max_opposition_county_lead\n";
  for (const auto &[region, stats] : table) {
    out += region + "," + Fixed6(stats.candidate_vote_pct) + "," +
           std::to_string(stats.max_opposition_county_lead) + "\n";
  }
  return out;
}

}  // namespace unrest
