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

#ifndef UNREST_SIGNALS_H_
#define UNREST_SIGNALS_H_

#include <chrono>
#include <set>
#include <string>
#include <vector>

#include "unrest/calendar.h"
#include "unrest/corpus.h"

namespace unrest {

struct SignalTrigger {
  Timestamp window_start;
  Timestamp window_end;  // exclusive
  int keyword_count = 0;
  int threshold = 0;
  bool fired = false;
};

struct HashtagShare {
  std::string hashtag;
  int count = 0;  // signal tweets carrying the hashtag
  double share = 0.0;
};

using HashtagRanking = std::vector<HashtagShare>;

// True when a token of the text equals one of the keywords.
bool HasKeyword(const std::string &text, const std::set<std::string> &keywords);

// Tumbling windows aligned to multiples of `window` since the epoch, from
// the window holding the earliest tweet through the one holding the latest.
std::vector<SignalTrigger> ScanSignals(const Corpus &corpus,
                                       const std::set<std::string> &keywords,
                                       std::chrono::seconds window, int threshold);

// Hashtags of keyword-bearing tweets inside the window ranked by the number
// of tweets using them, ties in lexicographic order. Each signal tweet
// contributes max(1, distinct hashtags) share slots, so a lone hashtag's
// share is its frequency among signal tweets and shares sum to at most 1.
HashtagRanking TrendingHashtags(const Corpus &corpus, const SignalTrigger &window,
                                const std::set<std::string> &keywords, int top_k);

std::string FormatSignalsCsv(const std::vector<SignalTrigger> &triggers);
std::string FormatHashtagsCsv(const HashtagRanking &ranking);

}  // namespace unrest

#endif  // UNREST_SIGNALS_H_
