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

#ifndef UNREST_EVALUATION_H_
#define UNREST_EVALUATION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unrest/calendar.h"
#include "unrest/corpus.h"
#include "unrest/featmat.h"
#include "unrest/models.h"

namespace unrest {

struct PredictionLabel {
  Region region;
  Date date;
  double probability = 0.0;
  int label = 0;  // 1 iff probability > cutoff
  int truth = 0;
};

// Confusion counts and rates for one prediction day. With no actual
// positives TPR is reported as 1.0; likewise TNR with no actual negatives.
struct DailyReport {
  Date date;
  int tp = 0, fp = 0, tn = 0, fn = 0;
  double tpr = 1.0, tnr = 1.0, accuracy = 1.0;
  size_t training_rows = 0;

  int total() const { return tp + fp + tn + fn; }
};

DailyReport ReportFromCounts(Date date, int tp, int fp, int tn, int fn);

// Exactly one prediction per region for the date is required.
DailyReport DailyMetrics(std::span<const PredictionLabel> predictions,
                         const ProtestSet &truth, Date date,
                         std::span<const Region> regions);

struct ScoredLabel {
  double score;
  int label;
};

struct RocPoint {
  double threshold;  // predict positive iff score >= threshold
  double fpr;
  double tpr;
};

struct RocCurve {
  std::vector<RocPoint> points;  // from (0,0) to (1,1)
  double auc = 0.0;
};

// Threshold sweep over distinct scores, tied scores share one point;
// trapezoidal area. Needs both classes.
RocCurve Roc(std::span<const ScoredLabel> scores);

struct RunResult {
  std::string mode;  // "progressive" or "transfer"
  ClassifierKind kind = ClassifierKind::kLogit;
  FeatureMask mask;
  std::vector<DailyReport> days;
  std::vector<PredictionLabel> predictions;  // pooled over all days
  std::optional<RocCurve> roc;               // absent for single-class pools
  FittedModel final_model;
};

// Labels of a matrix as a ground-truth set.
ProtestSet TruthFromMatrix(const FeatureMatrix &matrix);

// Day-by-day refit: each day in [start, end] is predicted by a model trained
// from scratch on every row dated before it.
RunResult ProgressiveRun(const FeatureMatrix &matrix, ClassifierKind kind,
                         FeatureMask mask, Date start, Date end,
                         const TrainOptions &options = {});

// One fit on all of `train`, predictions for every row of `test`.
RunResult TransferRun(const FeatureMatrix &train, const FeatureMatrix &test,
                      ClassifierKind kind, FeatureMask mask,
                      const TrainOptions &options = {});

// One progressive run per feature with a single-feature mask.
std::vector<RunResult> SingleFeatureBaselines(const FeatureMatrix &matrix,
                                              std::span<const size_t> features,
                                              Date start, Date end,
                                              ClassifierKind kind = ClassifierKind::kLogit,
                                              const TrainOptions &options = {});

// report.json.
nlohmann::ordered_json ReportJson(const RunResult &run, std::uint64_t seed);

// roc.csv: `threshold,fpr,tpr` then `# auc=<value>`.
std::string FormatRocCsv(const RocCurve &curve);

// Rows TPR / TNR / Overall accuracy, one column per day.
std::string FormatDailyGrid(std::span<const DailyReport> days);

// scores.csv: `date,state,probability,label,truth`.
std::string FormatScoresCsv(std::span<const PredictionLabel> predictions);
std::vector<ScoredLabel> ParseScoresCsv(std::string_view contents);

}  // namespace unrest

#endif  // UNREST_EVALUATION_H_
