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

#include "unrest/evaluation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "unrest/error.h"
#include "unrest/selection.h"
#include "unrest/text_io.h"

namespace unrest {
namespace {

std::string Num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string Percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", 100.0 * v);
  return buf;
}

std::vector<double> Projected(const StateDayFeatures &row, FeatureMask mask) {
  std::vector<double> out;
  for (size_t f = 0; f < kFeatureCount; ++f) {
    if (mask[f]) out.push_back(row.values[f]);
  }
  return out;
}

std::vector<std::string> MaskNames(FeatureMask mask) {
  std::vector<std::string> names;
  for (size_t f = 0; f < kFeatureCount; ++f) {
    if (mask[f]) names.push_back(FeatureName(f));
  }
  return names;
}

FittedModel TrainOnRows(const std::vector<const StateDayFeatures *> &rows,
                        ClassifierKind kind, FeatureMask mask,
                        const TrainOptions &options) {
  Rows x;
  std::vector<int> y;
  x.reserve(rows.size());
  for (const StateDayFeatures *r : rows) {
    x.push_back(Projected(*r, mask));
    y.push_back(r->label);
  }
  FittedModel model = Train(kind, x, y, options);
  model.feature_names = MaskNames(mask);
  return model;
}

void FinishPooledRoc(RunResult &run) {
  std::vector<ScoredLabel> scored;
  int pos = 0;
  for (const PredictionLabel &p : run.predictions) {
    scored.push_back({p.probability, p.truth});
    pos += p.truth;
  }
  if (pos > 0 && pos < static_cast<int>(scored.size())) run.roc = Roc(scored);
}

void CheckMask(FeatureMask mask) {
  if (mask.none()) Fail(Errc::kValidation, "feature mask selects nothing");
}

}  // namespace

DailyReport ReportFromCounts(Date date, int tp, int fp, int tn, int fn) {
  Check(tp >= 0 && fp >= 0 && tn >= 0 && fn >= 0, "negative confusion count");
  DailyReport r;
  r.date = date;
  r.tp = tp;
  r.fp = fp;
  r.tn = tn;
  r.fn = fn;
  r.tpr = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 1.0;
  r.tnr = tn + fp > 0 ? static_cast<double>(tn) / (tn + fp) : 1.0;
  const int total = tp + fp + tn + fn;
  r.accuracy = total > 0 ? static_cast<double>(tp + tn) / total : 1.0;
  return r;
}

DailyReport DailyMetrics(std::span<const PredictionLabel> predictions,
                         const ProtestSet &truth, Date date,
                         std::span<const Region> regions) {
  std::map<Region, int> predicted;
  for (const PredictionLabel &p : predictions) {
    if (p.date != date) continue;
    if (!predicted.emplace(p.region, p.label).second) {
      Fail(Errc::kValidation, "duplicate prediction for " + p.region + " on " + FormatDate(date));
    }
  }
  int tp = 0, fp = 0, tn = 0, fn = 0;
  for (const Region &region : regions) {
    auto it = predicted.find(region);
    if (it == predicted.end()) {
      Fail(Errc::kValidation, "missing prediction for " + region + " on " + FormatDate(date));
    }
    const bool actual = truth.contains({date, region});
    if (it->second == 1) {
      (actual ? tp : fp) += 1;
    } else {
      (actual ? fn : tn) += 1;
    }
  }
  if (predicted.size() != regions.size()) {
    Fail(Errc::kValidation, "predictions for unknown regions on " + FormatDate(date));
  }
  return ReportFromCounts(date, tp, fp, tn, fn);
}

RocCurve Roc(std::span<const ScoredLabel> scores) {
  int pos = 0, neg = 0;
  for (const ScoredLabel &s : scores) {
    if (!std::isfinite(s.score)) Fail(Errc::kValidation, "non-finite score");
    (s.label == 1 ? pos : neg) += 1;
  }
  if (pos == 0 || neg == 0) {
    Fail(Errc::kValidation, "ROC needs both positive and negative labels");
  }
  std::vector<ScoredLabel> sorted(scores.begin(), scores.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ScoredLabel &a, const ScoredLabel &b) { return a.score > b.score; });
  RocCurve curve;
  curve.points.push_back({std::numeric_limits<double>::infinity(), 0.0, 0.0});
  int tp = 0, fp = 0;
  double area = 0.0;
  size_t i = 0;
  while (i < sorted.size()) {
    const double threshold = sorted[i].score;
    const int prev_tp = tp, prev_fp = fp;
    while (i < sorted.size() && sorted[i].score == threshold) {
      (sorted[i].label == 1 ? tp : fp) += 1;
      ++i;
    }
    // Trapezoid in count units, normalized at the end.
    area += (fp - prev_fp) * (tp + prev_tp) / 2.0;
    curve.points.push_back({threshold, static_cast<double>(fp) / neg,
                            static_cast<double>(tp) / pos});
  }
  curve.auc = area / (static_cast<double>(pos) * neg);
  return curve;
}

ProtestSet TruthFromMatrix(const FeatureMatrix &matrix) {
  ProtestSet truth;
  for (const auto &row : matrix.rows) {
    if (row.label == 1) truth.insert({row.date, row.region});
  }
  return truth;
}

RunResult ProgressiveRun(const FeatureMatrix &matrix, ClassifierKind kind,
                         FeatureMask mask, Date start, Date end,
                         const TrainOptions &options) {
  CheckMask(mask);
  if (end < start) Fail(Errc::kValidation, "progressive run: end date before start date");
  RunResult run;
  run.mode = "progressive";
  run.kind = kind;
  run.mask = mask;
  const ProtestSet truth = TruthFromMatrix(matrix);
  const std::vector<Region> regions = matrix.Regions();

  std::vector<const StateDayFeatures *> history;
  for (const auto &row : matrix.rows) {
    if (row.date < start) history.push_back(&row);
  }
  if (history.empty()) {
    Fail(Errc::kValidation, "no training rows before " + FormatDate(start));
  }

  for (Date day : matrix.Dates()) {
    if (day < start || day > end) continue;
    std::vector<const StateDayFeatures *> today;
    for (const auto &row : matrix.rows) {
      if (row.date == day) today.push_back(&row);
    }
    FittedModel model = TrainOnRows(history, kind, mask, options);
    std::vector<PredictionLabel> preds;
    for (const StateDayFeatures *row : today) {
      const double p = model.PredictProba(Projected(*row, mask));
      preds.push_back({row->region, day, p, p > model.cutoff ? 1 : 0, row->label});
    }
    DailyReport report = DailyMetrics(preds, truth, day, regions);
    report.training_rows = history.size();
    run.days.push_back(report);
    run.predictions.insert(run.predictions.end(), preds.begin(), preds.end());
    history.insert(history.end(), today.begin(), today.end());
    run.final_model = std::move(model);
  }
  if (run.days.empty()) {
    Fail(Errc::kValidation, "no matrix dates between " + FormatDate(start) + " and " +
                                FormatDate(end));
  }
  FinishPooledRoc(run);
  return run;
}

RunResult TransferRun(const FeatureMatrix &train, const FeatureMatrix &test,
                      ClassifierKind kind, FeatureMask mask,
                      const TrainOptions &options) {
  CheckMask(mask);
  if (train.rows.empty()) Fail(Errc::kValidation, "transfer: training matrix is empty");
  if (test.rows.empty()) Fail(Errc::kValidation, "transfer: nothing to predict");
  RunResult run;
  run.mode = "transfer";
  run.kind = kind;
  run.mask = mask;
  std::vector<const StateDayFeatures *> all;
  for (const auto &row : train.rows) all.push_back(&row);
  run.final_model = TrainOnRows(all, kind, mask, options);

  const ProtestSet truth = TruthFromMatrix(test);
  const std::vector<Region> regions = test.Regions();
  for (Date day : test.Dates()) {
    std::vector<PredictionLabel> preds;
    for (const auto &row : test.rows) {
      if (row.date != day) continue;
      const double p = run.final_model.PredictProba(Projected(row, mask));
      preds.push_back({row.region, day, p, p > run.final_model.cutoff ? 1 : 0, row.label});
    }
    DailyReport report = DailyMetrics(preds, truth, day, regions);
    report.training_rows = train.rows.size();
    run.days.push_back(report);
    run.predictions.insert(run.predictions.end(), preds.begin(), preds.end());
  }
  FinishPooledRoc(run);
  return run;
}

std::vector<RunResult> SingleFeatureBaselines(const FeatureMatrix &matrix,
                                              std::span<const size_t> features,
                                              Date start, Date end,
                                              ClassifierKind kind,
                                              const TrainOptions &options) {
  if (features.empty()) Fail(Errc::kValidation, "no features for baselines");
  std::vector<RunResult> runs;
  for (size_t f : features) {
    if (f >= kFeatureCount) Fail(Errc::kValidation, "feature index out of range");
    runs.push_back(ProgressiveRun(matrix, kind, FeatureMask{}.set(f), start, end, options));
  }
  return runs;
}

nlohmann::ordered_json ReportJson(const RunResult &run, std::uint64_t seed) {
  nlohmann::ordered_json doc;
  doc["run"] = {{"mode", run.mode},
                {"classifier", ClassifierName(run.kind)},
                {"features", FormatFeatureMask(run.mask)},
                {"seed", seed}};
  nlohmann::ordered_json days = nlohmann::ordered_json::array();
  for (const DailyReport &d : run.days) {
    days.push_back({{"date", FormatDate(d.date)},
                    {"tp", d.tp},
                    {"fp", d.fp},
                    {"tn", d.tn},
                    {"fn", d.fn},
                    {"tpr", d.tpr},
                    {"tnr", d.tnr},
                    {"accuracy", d.accuracy},
                    {"training_rows", d.training_rows}});
  }
  doc["days"] = std::move(days);
  doc["auc"] = run.roc ? nlohmann::ordered_json(run.roc->auc) : nlohmann::ordered_json(nullptr);
  return doc;
}

std::string FormatRocCsv(const RocCurve &curve) {
  std::string out = "threshold,fpr,tpr\n";
  for (const RocPoint &p : curve.points) {
    out += Num(p.threshold) + "," + Num(p.fpr) + "," + Num(p.tpr) + "\n";
  }
  out += "# auc=" + Num(curve.auc) + "\n";
  return out;
}

std::string FormatDailyGrid(std::span<const DailyReport> days) {
  auto cell = [](const std::string &s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%12s", s.c_str());
    return std::string(buf);
  };
  std::string header = "Predicted date    ", tpr = "TPR               ",
              tnr = "TNR               ", acc = "Overall accuracy  ";
  for (const DailyReport &d : days) {
    header += cell(FormatDate(d.date));
    tpr += cell(Percent(d.tpr));
    tnr += cell(Percent(d.tnr));
    acc += cell(Percent(d.accuracy));
  }
  return header + "\n" + tpr + "\n" + tnr + "\n" + acc + "\n";
}

std::string FormatScoresCsv(std::span<const PredictionLabel> predictions) {
  std::string out = "date,state,probability,label,truth\n";
  for (const PredictionLabel &p : predictions) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", p.probability);
    out += FormatDate(p.date) + "," + p.region + "," + buf + "," +
           std::to_string(p.label) + "," + std::to_string(p.truth) + "\n";
  }
  return out;
}

std::vector<ScoredLabel> ParseScoresCsv(std::string_view contents) {
  std::istringstream in{std::string(contents)};
  std::string line;
  if (!std::getline(in, line) || Trim(line) != "date,state,probability,label,truth") {
    Fail(Errc::kSchema, "scores.csv: expected header 'date,state,probability,label,truth'");
  }
  std::vector<ScoredLabel> out;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    auto fields = SplitCsv(line);
    if (fields.size() != 5) {
      Fail(Errc::kParse, "scores.csv line " + std::to_string(line_no) + ": expected 5 fields");
    }
    try {
      out.push_back({std::stod(fields[2]), std::stoi(fields[4])});
    } catch (const std::logic_error &) {
      Fail(Errc::kParse, "scores.csv line " + std::to_string(line_no) + ": non-numeric field");
    }
  }
  return out;
}

}  // namespace unrest
