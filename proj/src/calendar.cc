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

#include "unrest/calendar.h"

#include <array>
#include <charconv>
#include <cstdio>

#include "unrest/error.h"

namespace unrest {
namespace {

using namespace std::chrono;

bool ReadInt(std::string_view text, size_t pos, size_t width, int *out) {
  if (pos + width > text.size()) return false;
  for (size_t i = pos; i < pos + width; ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  auto res = std::from_chars(text.data() + pos, text.data() + pos + width, *out);
  return res.ec == std::errc();
}

std::optional<Date> ParseDatePrefix(std::string_view text) {
  int y, m, d;
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  if (!ReadInt(text, 0, 4, &y) || !ReadInt(text, 5, 2, &m) ||
      !ReadInt(text, 8, 2, &d)) {
    return std::nullopt;
  }
  year_month_day ymd{year{y}, month{static_cast<unsigned>(m)},
                     day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return sys_days{ymd};
}

}  // namespace

std::optional<Date> ParseDate(std::string_view text) {
  if (text.size() != 10) return std::nullopt;
  return ParseDatePrefix(text);
}

std::string FormatDate(Date date) {
  year_month_day ymd{date};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

std::optional<Timestamp> ParseTimestamp(std::string_view text) {
  auto date = ParseDatePrefix(text);
  if (!date) return std::nullopt;
  if (text.size() < 19 || (text[10] != 'T' && text[10] != ' ') ||
      text[13] != ':' || text[16] != ':') {
    return std::nullopt;
  }
  int hh, mm, ss;
  if (!ReadInt(text, 11, 2, &hh) || !ReadInt(text, 14, 2, &mm) ||
      !ReadInt(text, 17, 2, &ss)) {
    return std::nullopt;
  }
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) return std::nullopt;
  }
  minutes offset{0};
  if (pos < text.size()) {
    char c = text[pos];
    if (c == 'Z' && pos + 1 == text.size()) {
      pos = text.size();
    } else if ((c == '+' || c == '-') && pos + 6 == text.size() &&
               text[pos + 3] == ':') {
      int oh, om;
      if (!ReadInt(text, pos + 1, 2, &oh) || !ReadInt(text, pos + 4, 2, &om) ||
          oh > 23 || om > 59) {
        return std::nullopt;
      }
      offset = hours{oh} + minutes{om};
      if (c == '-') offset = -offset;
    } else {
      return std::nullopt;
    }
  }
  Timestamp local = *date + hours{hh} + minutes{mm} + seconds{ss};
  return local - offset;
}

std::string FormatTimestamp(Timestamp ts) {
  Date date = floor<days>(ts);
  auto tod = hh_mm_ss<seconds>{ts - date};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%sT%02d:%02d:%02dZ", FormatDate(date).c_str(),
                static_cast<int>(tod.hours().count()),
                static_cast<int>(tod.minutes().count()),
                static_cast<int>(tod.seconds().count()));
  return buf;
}

Date DayOf(Timestamp ts, minutes utc_offset) {
  return floor<days>(ts + utc_offset);
}

std::string_view WeekdayName(weekday wd) {
  static constexpr std::array<std::string_view, 7> kNames = {
      "sunday", "monday", "tuesday", "wednesday", "thursday", "friday",
      "saturday"};
  return kNames[wd.c_encoding()];
}

std::string_view MonthName(month m) {
  static constexpr std::array<std::string_view, 12> kNames = {
      "january", "february", "march",     "april",   "may",      "june",
      "july",    "august",   "september", "october", "november", "december"};
  return kNames[static_cast<unsigned>(m) - 1];
}

Date DateOrThrow(std::string_view text) {
  auto date = ParseDate(text);
  if (!date) Fail(Errc::kParse, "invalid date '" + std::string(text) + "'");
  return *date;
}

}  // namespace unrest
