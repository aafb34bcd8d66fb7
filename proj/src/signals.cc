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

#include "unrest/signals.h"

#include <algorithm>
#include <map>

#include "unrest/error.h"
#include "unrest/text_io.h"
#include "unrest/textfeat.h"

namespace unrest {

bool HasKeyword(const std::string &text, const std::set<std::string> &keywords) {
  for (const std::string &token : Tokenize(text).tokens) {
    if (keywords.contains(token)) return true;
  }
  return false;
}

std::vector<SignalTrigger> ScanSignals(const Corpus &corpus,
                                       const std::set<std::string> &keywords,
                                       std::chrono::seconds window, int threshold) {
  if (keywords.empty()) Fail(Errc::kValidation, "signal scan needs at least one keyword");
  if (window <= std::chrono::seconds{0}) Fail(Errc::kValidation, "signal window must be positive");
  if (corpus.empty()) return {};

  auto [lo, hi] = std::minmax_element(
      corpus.begin(), corpus.end(),
      [](const TweetRecord &a, const TweetRecord &b) { return a.created_at < b.created_at; });
  const auto index_of = [&](Timestamp ts) {
    auto since_epoch = ts.time_since_epoch();
    auto q = since_epoch / window;
    if (since_epoch % window < std::chrono::seconds{0}) --q;
    return static_cast<long long>(q);
  };
  const long long first = index_of(lo->created_at);
  const long long last = index_of(hi->created_at);

  std::vector<SignalTrigger> triggers(static_cast<size_t>(last - first + 1));
  for (size_t i = 0; i < triggers.size(); ++i) {
    triggers[i].window_start = Timestamp{window * (first + static_cast<long long>(i))};
    triggers[i].window_end = triggers[i].window_start + window;
    triggers[i].threshold = threshold;
  }
  for (const TweetRecord &rec : corpus) {
    if (HasKeyword(rec.text, keywords)) {
      ++triggers[static_cast<size_t>(index_of(rec.created_at) - first)].keyword_count;
    }
  }
  for (SignalTrigger &t : triggers) t.fired = t.keyword_count >= threshold;
  return triggers;
}

HashtagRanking TrendingHashtags(const Corpus &corpus, const SignalTrigger &window,
                                const std::set<std::string> &keywords, int top_k) {
  std::map<std::string, int> counts;
  int uses = 0;
  for (const TweetRecord &rec : corpus) {
    if (rec.created_at < window.window_start || rec.created_at >= window.window_end) continue;
    TokenizedTweet tok = Tokenize(rec.text);
    bool signal = std::any_of(tok.tokens.begin(), tok.tokens.end(),
                              [&](const std::string &t) { return keywords.contains(t); });
    if (!signal) continue;
    std::set<std::string> tags(tok.hashtags.begin(), tok.hashtags.end());
    for (const std::string &tag : tags) ++counts[tag];
    // A signal tweet without hashtags still takes one share slot.
    uses += std::max<int>(1, static_cast<int>(tags.size()));
  }
  HashtagRanking ranking;
  for (const auto &[tag, count] : counts) {
    ranking.push_back({tag, count, static_cast<double>(count) / uses});
  }
  // std::map iteration already orders ties lexicographically.
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const HashtagShare &a, const HashtagShare &b) { return a.count > b.count; });
  if (top_k >= 0 && ranking.size() > static_cast<size_t>(top_k)) ranking.resize(top_k);
  return ranking;
}

std::string FormatSignalsCsv(const std::vector<SignalTrigger> &triggers) {
  std::string out = "window_start,window_end,count,fired\n";
  for (const SignalTrigger &t : triggers) {
    out += FormatTimestamp(t.window_start) + "," + FormatTimestamp(t.window_end) + "," +
           std::to_string(t.keyword_count) + "," + (t.fired ? "1" : "0") + "\n";
  }
  return out;
}

std::string FormatHashtagsCsv(const HashtagRanking &ranking) {
  std::string out = "hashtag,count,share\n";
  for (const HashtagShare &h : ranking) {
    out += h.hashtag + "," + std::to_string(h.count) + "," + Fixed6(h.share) + "\n";
  }
  return out;
}

}  // namespace unrest
