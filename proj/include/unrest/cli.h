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

#ifndef UNREST_CLI_H_
#define UNREST_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unrest/calendar.h"
#include "unrest/corpus.h"
#include "unrest/featmat.h"
#include "unrest/models.h"

namespace unrest::cli {

// Settings shared by every command. Loaded from --config (JSON) and then
// overridden by flags.
struct RunConfig {
  std::string tweets = "tweets.jsonl";
  std::string protests = "protests.csv";
  std::string votes = "votes.csv";
  std::string resources_dir;  // lexicons + gazetteer; defaults to the installed data dir
  std::string templates;      // defaults to <resources_dir>/templates.txt
  std::string generator;      // generator config JSON for `simulate`
  std::string matrix = "features.csv";
  std::string test_matrix;    // `transfer` target
  std::string scores = "scores.csv";
  std::string out = ".";

  ClassifierKind classifier = ClassifierKind::kLogit;
  FeatureMask features = AllFeatures();
  std::vector<size_t> baseline_features = {0, 1, 2};
  std::uint64_t seed = 1;
  int folds = 10;
  int stale_limit = 5;

  double corr_threshold = 0.8;
  std::int64_t lead_threshold = 100000;
  int signal_threshold = 50;
  double signal_window_hours = 1.0;
  int top_k = 10;
  std::set<std::string> keywords = {"protest", "protests", "rally", "march"};
  int horizon_days = 7;
  int utc_offset_minutes = 0;
  PaceMode pace_mode = PaceMode::kAuto;
  std::map<Date, double> coverage_hours;
  RelevanceRule relevance = RelevanceRule::Default();
  TrainOptions train;

  // Matrix dates for `featurize`; prediction days for `evaluate`.
  std::optional<Date> first_date, last_date;
  std::optional<Date> start_date, end_date;
};

// Applies the keys present in a config document to `config`.
void ApplyConfigJson(const nlohmann::json &doc, RunConfig &config);

// Runs one command. Returns the process exit code: 0 success, 1 bad input,
// 2 internal invariant violation. Errors are written to `err`.
int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace unrest::cli

#endif  // UNREST_CLI_H_
