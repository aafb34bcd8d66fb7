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

#ifndef UNREST_TEXTFEAT_H_
#define UNREST_TEXTFEAT_H_

#include <chrono>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "unrest/calendar.h"
#include "unrest/corpus.h"
#include "unrest/regions.h"

namespace unrest {

struct TokenizedTweet {
  std::vector<std::string> tokens;    // lowercase, in text order
  std::vector<std::string> hashtags;  // tokens starting with '#'
};

// Splits on whitespace and punctuation and folds ASCII case. A '#' directly
// followed by a word character starts a hashtag token that keeps the '#'.
// Apostrophes between word characters stay inside the word. Bytes >= 0x80
// are treated as word characters and kept verbatim.
TokenizedTweet Tokenize(std::string_view text);

enum class MentionSource { kExplicitDate, kWeekday, kRelativeWord, kTweetGeo };

std::string_view MentionSourceName(MentionSource source);

struct MentionHit {
  Date target_date;
  Region target_region;
  MentionSource source;

  bool operator==(const MentionHit &) const = default;
};

// Place names mapped to regions. Names are matched on token sequences,
// longest first; hashtags match the place name with spaces removed
// ("#losangeles").
class Gazetteer {
 public:
  Gazetteer() = default;

  void Add(std::string_view place, const Region &region);

  struct Match {
    size_t first_token;
    size_t token_count;
    const std::set<Region> *regions;
  };

  // Non-overlapping greedy matches in token order.
  std::vector<Match> FindAll(const std::vector<std::string> &tokens) const;

  size_t size() const { return phrases_.size(); }

  // Every (place, region) pair; places as originally written.
  const std::vector<std::pair<std::string, Region>> &entries() const {
    return entries_;
  }

 private:
  std::map<std::vector<std::string>, std::set<Region>> phrases_;
  std::unordered_map<std::string, std::set<Region>> compact_;
  std::vector<std::pair<std::string, Region>> entries_;
  size_t max_tokens_ = 0;
};

// gazetteer.csv: `place,state`, header optional.
Gazetteer LoadGazetteer(const std::string &path, const RegionSet &regions);

struct MentionOptions {
  int horizon_days = 7;
  std::chrono::minutes utc_offset{0};
};

// Date mentions are explicit month-day dates ("November 14th", "14 Nov",
// "11/14"), weekday names (next occurrence strictly after the tweet date) and
// the words tomorrow/today/tonight. Places come from the gazetteer, else from
// the tweet's geo tag. One hit per distinct (date, region) pair.
std::vector<MentionHit> ExtractMentions(const TweetRecord &tweet,
                                        const Gazetteer &gazetteer,
                                        const MentionOptions &options = {});

using Lexicon = std::unordered_set<std::string>;

// violent_lexicon.txt: one term per line, '#' starts a comment line.
Lexicon LoadViolentLexicon(const std::string &path);

// Token occurrences whose base form is in the lexicon. Base forms are the
// token itself and a few regular English inflections (riots, rioting).
int ViolentWordCount(const TokenizedTweet &tweet, const Lexicon &lexicon);

// Lowercase candidate base forms of a token, the token itself first.
std::vector<std::string> BaseForms(std::string_view token);

struct SentimentScore {
  double polarity = 0.0;
  bool is_negative = false;
};

using SentimentLexicon = std::unordered_map<std::string, double>;

// sentiment_lexicon.csv: `term,polarity`, header optional, polarity in [-1,1].
SentimentLexicon LoadSentimentLexicon(const std::string &path);

// Mean polarity of matched tokens; no matches gives a neutral score.
SentimentScore Sentiment(const TokenizedTweet &tweet,
                         const SentimentLexicon &lexicon);

struct TextResources {
  Lexicon violent;
  SentimentLexicon sentiment;
  Gazetteer gazetteer;
};

// Loads violent_lexicon.txt, sentiment_lexicon.csv and gazetteer.csv from a
// directory.
TextResources LoadTextResources(const std::string &dir, const RegionSet &regions);

// Everything the feature matrix needs from one tweet.
struct TweetAnalysis {
  Date day;
  Region region;
  std::vector<MentionHit> mentions;
  SentimentScore sentiment;
  int violent_words = 0;
};

// Analyses a cleansed corpus (every record geo-tagged); output is in input
// order.
std::vector<TweetAnalysis> AnalyzeCorpus(const Corpus &corpus,
                                         const TextResources &resources,
                                         const MentionOptions &options = {});

}  // namespace unrest

#endif  // UNREST_TEXTFEAT_H_
