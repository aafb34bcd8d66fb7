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

#include "unrest/textfeat.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>

#include "unrest/error.h"
#include "unrest/text_io.h"

namespace unrest {
namespace {

using namespace std::chrono;

bool IsWordByte(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

char FoldCase(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::string StripHash(std::string_view token) {
  if (!token.empty() && token.front() == '#') token.remove_prefix(1);
  return std::string(token);
}

std::optional<unsigned> MonthFromToken(std::string_view token) {
  static const std::map<std::string_view, unsigned> kMonths = {
      {"january", 1},  {"jan", 1},      {"february", 2}, {"feb", 2},
      {"march", 3},    {"mar", 3},      {"april", 4},    {"apr", 4},
      {"may", 5},      {"june", 6},     {"jun", 6},      {"july", 7},
      {"jul", 7},      {"august", 8},   {"aug", 8},      {"september", 9},
      {"sep", 9},      {"sept", 9},     {"october", 10}, {"oct", 10},
      {"november", 11}, {"nov", 11},    {"december", 12}, {"dec", 12}};
  auto it = kMonths.find(token);
  if (it == kMonths.end()) return std::nullopt;
  return it->second;
}

// "14", "14th", "1st". With require_suffix only ordinal forms qualify.
std::optional<unsigned> DayFromToken(std::string_view token, bool require_suffix) {
  size_t digits = 0;
  while (digits < token.size() && std::isdigit(static_cast<unsigned char>(token[digits]))) {
    ++digits;
  }
  if (digits == 0 || digits > 2) return std::nullopt;
  std::string_view suffix = token.substr(digits);
  if (suffix.empty()) {
    if (require_suffix) return std::nullopt;
  } else if (suffix != "st" && suffix != "nd" && suffix != "rd" && suffix != "th") {
    return std::nullopt;
  }
  unsigned value = 0;
  for (size_t i = 0; i < digits; ++i) value = value * 10 + (token[i] - '0');
  if (value < 1 || value > 31) return std::nullopt;
  return value;
}

std::optional<weekday> WeekdayFromToken(std::string_view token) {
  for (unsigned i = 0; i < 7; ++i) {
    if (WeekdayName(weekday{i}) == token) return weekday{i};
  }
  return std::nullopt;
}

// Month-day on or after the tweet date: this year, else next year.
std::optional<Date> ResolveMonthDay(Date tweet_day, unsigned m, unsigned d) {
  year y = year_month_day{tweet_day}.year();
  for (int bump = 0; bump < 2; ++bump) {
    year_month_day ymd{y + years{bump}, month{m}, day{d}};
    if (!ymd.ok()) continue;
    Date date{ymd};
    if (date >= tweet_day) return date;
  }
  return std::nullopt;
}

struct DateMention {
  Date date;
  MentionSource source;
};

std::vector<DateMention> FindDates(const TweetRecord &tweet,
                                   const std::vector<std::string> &tokens,
                                   Date tweet_day) {
  std::vector<DateMention> found;
  auto add = [&](std::optional<Date> date, MentionSource source) {
    if (date) found.push_back({*date, source});
  };
  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string &tok = tokens[i];
    if (tok.front() == '#') continue;
    if (tok == "tomorrow") {
      add(tweet_day + days{1}, MentionSource::kRelativeWord);
    } else if (tok == "today" || tok == "tonight") {
      add(tweet_day, MentionSource::kRelativeWord);
    } else if (auto wd = WeekdayFromToken(tok)) {
      days ahead = *wd - weekday{tweet_day};
      if (ahead == days{0}) ahead = days{7};
      add(tweet_day + ahead, MentionSource::kWeekday);
    } else if (auto m = MonthFromToken(tok)) {
      if (i + 1 < tokens.size()) {
        if (auto d = DayFromToken(tokens[i + 1], false)) {
          add(ResolveMonthDay(tweet_day, *m, *d), MentionSource::kExplicitDate);
        }
      }
    } else if (auto d = DayFromToken(tok, true)) {
      size_t j = i + 1;
      if (j < tokens.size() && tokens[j] == "of") ++j;
      if (j < tokens.size()) {
        if (auto m2 = MonthFromToken(tokens[j])) {
          add(ResolveMonthDay(tweet_day, *m2, *d), MentionSource::kExplicitDate);
        }
      }
    }
  }
  // Numeric month/day, which the tokenizer splits apart.
  static const std::regex kNumeric(R"((^|[^0-9/])(1[0-2]|0?[1-9])/(3[01]|[12][0-9]|0?[1-9])(?![0-9/]))");
  for (auto it = std::sregex_iterator(tweet.text.begin(), tweet.text.end(), kNumeric);
       it != std::sregex_iterator(); ++it) {
    unsigned m = static_cast<unsigned>(std::stoi((*it)[2].str()));
    unsigned d = static_cast<unsigned>(std::stoi((*it)[3].str()));
    add(ResolveMonthDay(tweet_day, m, d), MentionSource::kExplicitDate);
  }
  return found;
}

}  // namespace

TokenizedTweet Tokenize(std::string_view text) {
  TokenizedTweet out;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    bool hashtag = c == '#' && i + 1 < n &&
                   IsWordByte(static_cast<unsigned char>(text[i + 1]));
    if (!hashtag && !IsWordByte(c)) {
      ++i;
      continue;
    }
    std::string token;
    if (hashtag) {
      token += '#';
      ++i;
    }
    while (i < n) {
      unsigned char d = static_cast<unsigned char>(text[i]);
      if (IsWordByte(d)) {
        token += FoldCase(text[i]);
        ++i;
      } else if (d == '\'' && i + 1 < n &&
                 IsWordByte(static_cast<unsigned char>(text[i + 1])) &&
                 !token.empty() && token.back() != '#') {
        token += '\'';
        ++i;
      } else {
        break;
      }
    }
    if (hashtag) out.hashtags.push_back(token);
    out.tokens.push_back(std::move(token));
  }
  return out;
}

std::string_view MentionSourceName(MentionSource source) {
  switch (source) {
    case MentionSource::kExplicitDate: return "explicit_date";
    case MentionSource::kWeekday: return "weekday";
    case MentionSource::kRelativeWord: return "relative_word";
    case MentionSource::kTweetGeo: return "tweet_geo";
  }
  return "unknown";
}

void Gazetteer::Add(std::string_view place, const Region &region) {
  TokenizedTweet tok = Tokenize(place);
  std::vector<std::string> words;
  std::string compact;
  for (const std::string &t : tok.tokens) {
    std::string w = StripHash(t);
    compact += w;
    words.push_back(std::move(w));
  }
  if (words.empty()) return;
  max_tokens_ = std::max(max_tokens_, words.size());
  phrases_[words].insert(region);
  compact_[compact].insert(region);
  entries_.emplace_back(std::string(Trim(place)), region);
}

std::vector<Gazetteer::Match> Gazetteer::FindAll(
    const std::vector<std::string> &tokens) const {
  std::vector<Match> matches;
  size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].front() == '#') {
      auto it = compact_.find(tokens[i].substr(1));
      if (it != compact_.end()) matches.push_back({i, 1, &it->second});
      ++i;
      continue;
    }
    bool matched = false;
    size_t longest = std::min(max_tokens_, tokens.size() - i);
    for (size_t len = longest; len >= 1; --len) {
      bool has_tag = false;
      for (size_t k = i; k < i + len; ++k) has_tag |= tokens[k].front() == '#';
      if (has_tag) continue;
      std::vector<std::string> key(tokens.begin() + i, tokens.begin() + i + len);
      auto it = phrases_.find(key);
      if (it != phrases_.end()) {
        matches.push_back({i, len, &it->second});
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return matches;
}

Gazetteer LoadGazetteer(const std::string &path, const RegionSet &regions) {
  Gazetteer gaz;
  auto lines = ReadLines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    if (i == 0 && Trim(lines[i]) == "place,state") continue;
    auto fields = SplitCsv(lines[i]);
    std::string where = path + " line " + std::to_string(i + 1);
    if (fields.size() != 2) Fail(Errc::kParse, where + ": expected `place,state`");
    Region region = fields[1];
    for (char &c : region) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (!regions.contains(region)) {
      Fail(Errc::kValidation, where + ": unknown region '" + fields[1] + "'");
    }
    gaz.Add(fields[0], region);
  }
  return gaz;
}

std::vector<MentionHit> ExtractMentions(const TweetRecord &tweet,
                                        const Gazetteer &gazetteer,
                                        const MentionOptions &options) {
  const Date tweet_day = DayOf(tweet.created_at, options.utc_offset);
  TokenizedTweet tok = Tokenize(tweet.text);

  std::vector<DateMention> dates;
  for (const DateMention &dm : FindDates(tweet, tok.tokens, tweet_day)) {
    bool same_day_word = dm.source == MentionSource::kRelativeWord &&
                         dm.date == tweet_day;
    if (dm.date < tweet_day || (dm.date == tweet_day && !same_day_word)) continue;
    if ((dm.date - tweet_day).count() > options.horizon_days) continue;
    bool seen = std::any_of(dates.begin(), dates.end(),
                            [&](const DateMention &o) { return o.date == dm.date; });
    if (!seen) dates.push_back(dm);
  }
  if (dates.empty()) return {};

  std::vector<Region> places;
  auto matches = gazetteer.FindAll(tok.tokens);
  for (const Gazetteer::Match &m : matches) {
    std::optional<Region> chosen;
    if (m.regions->size() == 1) {
      chosen = *m.regions->begin();
    } else if (tweet.region && m.regions->contains(*tweet.region)) {
      chosen = *tweet.region;
    }
    if (chosen && std::find(places.begin(), places.end(), *chosen) == places.end()) {
      places.push_back(*chosen);
    }
  }
  if (matches.empty() && tweet.region) places.push_back(*tweet.region);

  std::vector<MentionHit> hits;
  for (const DateMention &dm : dates) {
    for (const Region &r : places) hits.push_back({dm.date, r, dm.source});
  }
  return hits;
}

Lexicon LoadViolentLexicon(const std::string &path) {
  Lexicon lex;
  for (const std::string &line : ReadLines(path)) {
    std::string_view term = Trim(line);
    if (term.empty() || term.front() == '#') continue;
    std::string lowered(term);
    for (char &c : lowered) c = FoldCase(c);
    lex.insert(std::move(lowered));
  }
  return lex;
}

std::vector<std::string> BaseForms(std::string_view token) {
  std::string t = StripHash(token);
  std::vector<std::string> forms = {t};
  auto strip = [&](std::string_view suffix, std::string_view add) {
    if (t.size() > suffix.size() + 2 && std::string_view(t).ends_with(suffix)) {
      std::string base = t.substr(0, t.size() - suffix.size());
      forms.push_back(base + std::string(add));
      size_t b = base.size();
      // Undouble a final consonant: stabbing -> stab.
      if (add.empty() && b >= 2 && base[b - 1] == base[b - 2] &&
          std::string_view("aeiou").find(base[b - 1]) == std::string_view::npos) {
        forms.push_back(base.substr(0, b - 1));
      }
    }
  };
  strip("ies", "y");
  strip("es", "");
  strip("s", "");
  strip("ed", "");
  strip("d", "");
  strip("ing", "");
  strip("ing", "e");
  return forms;
}

int ViolentWordCount(const TokenizedTweet &tweet, const Lexicon &lexicon) {
  if (lexicon.empty()) return 0;
  int count = 0;
  for (const std::string &token : tweet.tokens) {
    for (const std::string &form : BaseForms(token)) {
      if (lexicon.contains(form)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

SentimentLexicon LoadSentimentLexicon(const std::string &path) {
  SentimentLexicon lex;
  auto lines = ReadLines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    if (i == 0 && Trim(lines[i]) == "term,polarity") continue;
    auto fields = SplitCsv(lines[i]);
    std::string where = path + " line " + std::to_string(i + 1);
    if (fields.size() != 2) Fail(Errc::kParse, where + ": expected `term,polarity`");
    double polarity;
    try {
      polarity = std::stod(fields[1]);
    } catch (const std::logic_error &) {
      Fail(Errc::kParse, where + ": non-numeric polarity");
    }
    if (!(polarity >= -1.0 && polarity <= 1.0)) {
      Fail(Errc::kValidation, where + ": polarity outside [-1,1]");
    }
    std::string term = fields[0];
    for (char &c : term) c = FoldCase(c);
    lex[term] = polarity;
  }
  return lex;
}

SentimentScore Sentiment(const TokenizedTweet &tweet,
                         const SentimentLexicon &lexicon) {
  double sum = 0.0;
  int matched = 0;
  for (const std::string &token : tweet.tokens) {
    auto it = lexicon.find(StripHash(token));
    if (it == lexicon.end()) continue;
    sum += it->second;
    ++matched;
  }
  SentimentScore score;
  if (matched > 0) score.polarity = sum / matched;
  score.is_negative = score.polarity < 0.0;
  return score;
}

TextResources LoadTextResources(const std::string &dir, const RegionSet &regions) {
  TextResources res;
  res.violent = LoadViolentLexicon(dir + "/violent_lexicon.txt");
  res.sentiment = LoadSentimentLexicon(dir + "/sentiment_lexicon.csv");
  res.gazetteer = LoadGazetteer(dir + "/gazetteer.csv", regions);
  return res;
}

std::vector<TweetAnalysis> AnalyzeCorpus(const Corpus &corpus,
                                         const TextResources &resources,
                                         const MentionOptions &options) {
  std::vector<TweetAnalysis> out;
  out.reserve(corpus.size());
  for (const TweetRecord &rec : corpus) {
    Check(rec.region.has_value(), "AnalyzeCorpus: record " + rec.id +
                                      " has no region; cleanse the corpus first");
    TokenizedTweet tok = Tokenize(rec.text);
    TweetAnalysis a;
    a.day = DayOf(rec.created_at, options.utc_offset);
    a.region = *rec.region;
    a.mentions = ExtractMentions(rec, resources.gazetteer, options);
    a.sentiment = Sentiment(tok, resources.sentiment);
    a.violent_words = ViolentWordCount(tok, resources.violent);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace unrest
