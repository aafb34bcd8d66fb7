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

#ifndef UNREST_SELECTION_H_
#define UNREST_SELECTION_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "unrest/featmat.h"
#include "unrest/models.h"

namespace unrest {

struct SubsetEvaluation {
  FeatureMask subset;
  double cv_accuracy = 0.0;
  int fold_count = 0;
  int subsets_evaluated = 0;
};

struct InclusionReport {
  int folds = 0;
  std::array<int, kFeatureCount> counts{};
  std::array<double, kFeatureCount> fraction{};
};

struct SelectionOptions {
  int folds = 10;
  int stale_limit = 5;
  std::uint64_t seed = 1;
  double min_improvement = 1e-6;
  TrainOptions train;
};

// Fold id in [0, folds) for every row. Each class is shuffled with the seed
// and dealt round-robin, so every fold keeps the label ratio.
std::vector<int> StratifiedFolds(std::span<const int> labels, int folds,
                                 std::uint64_t seed);

// Mean per-fold accuracy of Train(kind) restricted to the subset. The empty
// subset scores the training-fold majority class.
double CrossValidatedAccuracy(const Rows &rows, std::span<const int> labels,
                              FeatureMask subset, ClassifierKind kind,
                              std::span<const int> fold_ids, int folds,
                              const TrainOptions &train = {});

// Best-first forward search from the empty set scored by stratified k-fold
// accuracy. Stops after stale_limit expansions without an improvement
// above min_improvement.
SubsetEvaluation WrapperSelect(const Rows &rows, std::span<const int> labels,
                               ClassifierKind kind, const SelectionOptions &options);

// Runs WrapperSelect once per outer fold on the rows outside that fold and
// counts how often each feature lands in the selected subset.
InclusionReport FoldInclusion(const Rows &rows, std::span<const int> labels,
                              ClassifierKind kind, const SelectionOptions &options);

Rows ProjectRows(const Rows &rows, FeatureMask subset);
Rows MatrixRows(const FeatureMatrix &matrix);

nlohmann::ordered_json SelectionReportJson(const SubsetEvaluation &best,
                                           const InclusionReport &inclusion,
                                           ClassifierKind kind,
                                           const SelectionOptions &options);

}  // namespace unrest

#endif  // UNREST_SELECTION_H_
