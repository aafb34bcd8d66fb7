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

#ifndef UNREST_CALENDAR_H_
#define UNREST_CALENDAR_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace unrest {

using Date = std::chrono::sys_days;
using Timestamp = std::chrono::sys_seconds;

// Strict YYYY-MM-DD.
std::optional<Date> ParseDate(std::string_view text);
std::string FormatDate(Date date);

// ISO-8601 date-time: YYYY-MM-DDTHH:MM:SS with optional fractional seconds
// (truncated) and an optional 'Z' or +HH:MM / -HH:MM offset. A missing
// offset means UTC. The result is normalized to UTC.
std::optional<Timestamp> ParseTimestamp(std::string_view text);

// Always YYYY-MM-DDTHH:MM:SSZ.
std::string FormatTimestamp(Timestamp ts);

// Calendar day of a timestamp seen from a fixed UTC offset.
Date DayOf(Timestamp ts, std::chrono::minutes utc_offset = {});

// Lowercase English names, Sunday = 0 and January = 1.
std::string_view WeekdayName(std::chrono::weekday wd);
std::string_view MonthName(std::chrono::month m);

// "2016-11-11" and the like for error messages; throws on bad input.
Date DateOrThrow(std::string_view text);

}  // namespace unrest

#endif  // UNREST_CALENDAR_H_
