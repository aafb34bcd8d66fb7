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

#include <doctest.h>

#include "test_support.h"
#include "unrest/calendar.h"
#include "unrest/error.h"
#include "unrest/regions.h"
#include "unrest/text_io.h"

namespace unrest {
namespace {

using namespace std::chrono;

TEST_CASE("dates parse strictly and round-trip") {
  auto d = ParseDate("2016-11-14");
  REQUIRE(d.has_value());
  CHECK(FormatDate(*d) == "2016-11-14");
  CHECK(year_month_day{*d}.day() == day{14});
  CHECK_FALSE(ParseDate("2016-11-31").has_value());
  CHECK_FALSE(ParseDate("2016-1-14").has_value());
  CHECK_FALSE(ParseDate("2016-11-14x").has_value());
  CHECK_FALSE(ParseDate("").has_value());
  CHECK_THROWS_AS(DateOrThrow("nope"), Error);
}

TEST_CASE("timestamps accept fractions and offsets") {
  auto a = ParseTimestamp("2016-11-10T23:30:00Z");
  auto b = ParseTimestamp("2016-11-10T18:30:00.250-05:00");
  auto c = ParseTimestamp("2016-11-10T23:30:00");
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(c);
  CHECK(*a == *b);
  CHECK(*a == *c);
  CHECK(FormatTimestamp(*a) == "2016-11-10T23:30:00Z");
  CHECK_FALSE(ParseTimestamp("2016/11/10T23:30:00Z").has_value());
  CHECK_FALSE(ParseTimestamp("2016-11-10T25:30:00Z").has_value());
  CHECK_FALSE(ParseTimestamp("yesterday").has_value());
}

TEST_CASE("day bucketing honours the configured offset") {
  auto ts = *ParseTimestamp("2016-11-11T02:00:00Z");
  CHECK(FormatDate(DayOf(ts)) == "2016-11-11");
  CHECK(FormatDate(DayOf(ts, minutes{-300})) == "2016-11-10");
  CHECK(FormatDate(DayOf(ts, minutes{600})) == "2016-11-11");
}

TEST_CASE("weekday and month names") {
  CHECK(WeekdayName(weekday{year_month_day{year{2016} / 11 / 14}}) == "monday");
  CHECK(MonthName(November) == "november");
}

TEST_CASE("region list") {
  const auto &states = UsStates();
  CHECK(states.size() == 50);
  CHECK(std::is_sorted(states.begin(), states.end()));
  CHECK(DefaultRegionSet().count("NY") == 1);
  CHECK(DefaultRegionSet().count("DC") == 0);
}

TEST_CASE("csv helpers") {
  auto fields = SplitCsv(" a, b ,,c");
  REQUIRE(fields.size() == 4);
  CHECK(fields[0] == "a");
  CHECK(fields[1] == "b");
  CHECK(fields[2].empty());
  CHECK(Fixed6(-0.0) == "0.000000");
  CHECK(Fixed6(-1e-9) == "0.000000");
  CHECK(Fixed6(0.5) == "0.500000");
}

TEST_CASE("error categories map to exit codes") {
  CHECK(ErrcName(Errc::kIo) == "E-IO");
  CHECK(ErrcName(Errc::kSchema) == "E-SCHEMA");
  CHECK(ExitCodeFor(Errc::kValidation) == 1);
  CHECK(ExitCodeFor(Errc::kInvariant) == 2);
  CHECK_THROWS_AS(ReadFile("/nonexistent/unrest/file"), Error);
}

}  // namespace
}  // namespace unrest
