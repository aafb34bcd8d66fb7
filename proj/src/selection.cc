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

#include "unrest/selection.h"

#include <algorithm>
#include <map>
#include <random>

#include "unrest/error.h"

namespace unrest {
namespace {

void ValidateInputs(const Rows &rows, std::span<const int> labels, int folds) {
  if (rows.empty()) Fail(Errc::kValidation, "feature selection on an empty matrix");
  if (rows.size() != labels.size()) Fail(Errc::kSchema, "row/label count mismatch");
  if (folds < 2) Fail(Errc::kValidation, "need at least 2 folds");
  if (rows.size() < static_cast<size_t>(folds)) {
    Fail(Errc::kValidation, "fewer rows than folds");
  }
  if (rows.front().size() > kFeatureCount) {
    Fail(Errc::kSchema, "at most " + std::to_string(kFeatureCount) + " features supported");
  }
}

}  // namespace

Rows ProjectRows(const Rows &rows, FeatureMask subset) {
  Rows out;
  out.reserve(rows.size());
  for (const auto &row : rows) {
    std::vector<double> projected;
    for (size_t j = 0; j < row.size(); ++j) {
      if (subset[j]) projected.push_back(row[j]);
    }
    out.push_back(std::move(projected));
  }
  return out;
}

Rows MatrixRows(const FeatureMatrix &matrix) {
  Rows rows;
  rows.reserve(matrix.rows.size());
  for (const auto &r : matrix.rows) rows.emplace_back(r.values.begin(), r.values.end());
  return rows;
}

std::vector<int> StratifiedFolds(std::span<const int> labels, int folds,
                                 std::uint64_t seed) {
  if (folds < 1) Fail(Errc::kValidation, "fold count must be positive");
  std::vector<size_t> by_class[2];
  for (size_t i = 0; i < labels.size(); ++i) by_class[labels[i] == 1].push_back(i);
  std::mt19937_64 rng(seed);
  std::vector<int> fold_ids(labels.size(), 0);
  int next = 0;
  // Positives first: they are the rare class and must spread out evenly.
  for (int c : {1, 0}) {
    std::shuffle(by_class[c].begin(), by_class[c].end(), rng);
    for (size_t i : by_class[c]) {
      fold_ids[i] = next;
      next = (next + 1) % folds;
    }
  }
  return fold_ids;
}

double CrossValidatedAccuracy(const Rows &rows, std::span<const int> labels,
                              FeatureMask subset, ClassifierKind kind,
                              std::span<const int> fold_ids, int folds,
                              const TrainOptions &train) {
  const Rows projected = ProjectRows(rows, subset);
  double sum = 0.0;
  int used = 0;
  for (int k = 0; k < folds; ++k) {
    Rows train_rows, test_rows;
    std::vector<int> train_labels, test_labels;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (fold_ids[i] == k) {
        test_rows.push_back(projected[i]);
        test_labels.push_back(labels[i]);
      } else {
        train_rows.push_back(projected[i]);
        train_labels.push_back(labels[i]);
      }
    }
    if (test_rows.empty() || train_rows.empty()) continue;
    int correct = 0;
    if (subset.none()) {
      const int pos = static_cast<int>(std::count(train_labels.begin(), train_labels.end(), 1));
      const int majority = 2 * pos > static_cast<int>(train_labels.size()) ? 1 : 0;
      correct = static_cast<int>(std::count(test_labels.begin(), test_labels.end(), majority));
    } else {
      const FittedModel model = Train(kind, train_rows, train_labels, train);
      for (size_t i = 0; i < test_rows.size(); ++i) {
        correct += model.Predict(test_rows[i]) == test_labels[i];
      }
    }
    sum += static_cast<double>(correct) / test_rows.size();
    ++used;
  }
  Check(used > 0, "cross-validation produced no usable folds");
  return sum / used;
}

SubsetEvaluation WrapperSelect(const Rows &rows, std::span<const int> labels,
                               ClassifierKind kind, const SelectionOptions &options) {
  ValidateInputs(rows, labels, options.folds);
  const size_t dim = rows.front().size();
  const std::vector<int> fold_ids = StratifiedFolds(labels, options.folds, options.seed);

  struct Node {
    double score;
    int order;
    FeatureMask subset;
  };
  std::map<unsigned long, double> evaluated;
  std::vector<Node> open;
  int order = 0;

  auto evaluate = [&](FeatureMask subset) {
    const double score = CrossValidatedAccuracy(rows, labels, subset, kind, fold_ids,
                                                options.folds, options.train);
    evaluated[subset.to_ulong()] = score;
    return score;
  };

  Node best{evaluate(FeatureMask{}), order++, FeatureMask{}};
  open.push_back(best);
  int stale = 0;
  while (!open.empty() && stale < options.stale_limit) {
    auto it = std::min_element(open.begin(), open.end(), [](const Node &a, const Node &b) {
      return a.score != b.score ? a.score > b.score : a.order < b.order;
    });
    const Node node = *it;
    open.erase(it);

    bool improved = false;
    for (size_t f = 0; f < dim; ++f) {
      if (node.subset[f]) continue;
      FeatureMask child = node.subset;
      child.set(f);
      if (evaluated.contains(child.to_ulong())) continue;
      Node next{evaluate(child), order++, child};
      open.push_back(next);
      if (next.score > best.score + options.min_improvement) {
        best = next;
        improved = true;
      }
    }
    stale = improved ? 0 : stale + 1;
  }
  SubsetEvaluation result;
  result.subset = best.subset;
  result.cv_accuracy = best.score;
  result.fold_count = options.folds;
  result.subsets_evaluated = static_cast<int>(evaluated.size());
  return result;
}

InclusionReport FoldInclusion(const Rows &rows, std::span<const int> labels,
                              ClassifierKind kind, const SelectionOptions &options) {
  ValidateInputs(rows, labels, options.folds);
  const std::vector<int> outer = StratifiedFolds(labels, options.folds, options.seed);
  InclusionReport report;
  report.folds = options.folds;
  for (int k = 0; k < options.folds; ++k) {
    Rows inner_rows;
    std::vector<int> inner_labels;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (outer[i] == k) continue;
      inner_rows.push_back(rows[i]);
      inner_labels.push_back(labels[i]);
    }
    SelectionOptions inner = options;
    inner.seed = options.seed * 1000003ULL + static_cast<std::uint64_t>(k) + 1;
    const SubsetEvaluation best = WrapperSelect(inner_rows, inner_labels, kind, inner);
    for (size_t f = 0; f < kFeatureCount; ++f) report.counts[f] += best.subset[f];
  }
  for (size_t f = 0; f < kFeatureCount; ++f) {
    report.fraction[f] = static_cast<double>(report.counts[f]) / options.folds;
  }
  return report;
}

nlohmann::ordered_json SelectionReportJson(const SubsetEvaluation &best,
                                           const InclusionReport &inclusion,
                                           ClassifierKind kind,
                                           const SelectionOptions &options) {
  nlohmann::ordered_json doc;
  doc["classifier"] = ClassifierName(kind);
  doc["folds"] = options.folds;
  doc["stale_limit"] = options.stale_limit;
  doc["seed"] = options.seed;
  doc["best_subset"] = FormatFeatureMask(best.subset);
  doc["cv_accuracy"] = best.cv_accuracy;
  doc["subsets_evaluated"] = best.subsets_evaluated;
  nlohmann::ordered_json incl;
  for (size_t f = 0; f < kFeatureCount; ++f) {
    incl[FeatureName(f)] = 100.0 * inclusion.fraction[f];
  }
  doc["inclusion_percent"] = std::move(incl);
  return doc;
}

}  // namespace unrest
