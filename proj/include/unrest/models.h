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

#ifndef UNREST_MODELS_H_
#define UNREST_MODELS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace unrest {

// Row-major design matrix; every row has the same length.
using Rows = std::vector<std::vector<double>>;

enum class ClassifierKind { kLogit, kNaiveBayes, kTree, kLinearSvm };

// "logit", "nb", "tree", "svm".
std::string_view ClassifierName(ClassifierKind kind);
ClassifierKind ParseClassifierKind(std::string_view name);

// Per-feature z-scoring with population statistics. Standard deviations are
// floored so constant columns map to 0.
struct Standardizer {
  static constexpr double kStdFloor = 1e-9;

  std::vector<double> mean;
  std::vector<double> stddev;

  static Standardizer Fit(const Rows &rows);
  std::vector<double> Transform(std::span<const double> row) const;
  Rows Transform(const Rows &rows) const;
  bool empty() const { return mean.empty(); }
};

struct LogitParams {
  std::vector<double> weights;  // on standardized features
  double intercept = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct NaiveBayesParams {
  double prior_positive = 0.5;
  // mean[c][j], variance[c][j] for class c in {0, 1}.
  std::vector<double> mean[2];
  std::vector<double> variance[2];
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;   // value <= threshold
  int right = -1;  // value > threshold
  double positive_fraction = 0.0;
  int samples = 0;
};

struct TreeParams {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
};

struct SvmParams {
  std::vector<double> weights;  // on standardized features
  double intercept = 0.0;
};

struct FittedModel {
  ClassifierKind kind = ClassifierKind::kLogit;
  size_t dim = 0;
  Standardizer standardizer;  // empty for kinds fitted on raw features
  std::variant<LogitParams, NaiveBayesParams, TreeParams, SvmParams> params;
  double cutoff = 0.5;
  std::vector<std::string> feature_names;

  // Probability of the positive class. Tree and SVM values are surrogates:
  // leaf class frequency and logistic of the margin.
  double PredictProba(std::span<const double> row) const;
  std::vector<double> PredictProba(const Rows &rows) const;

  // 1 iff probability > cutoff.
  int Predict(std::span<const double> row) const {
    return PredictProba(row) > cutoff ? 1 : 0;
  }
};

struct LogitOptions {
  double ridge = 1e-4;
  double tol = 1e-8;
  int max_iter = 100;
};

struct NaiveBayesOptions {
  double var_floor = 1e-6;
};

struct TreeOptions {
  int max_depth = 4;
  int min_leaf = 2;
};

struct SvmOptions {
  double reg = 1e-3;
  int epochs = 200;
  std::uint64_t seed = 1;
};

struct TrainOptions {
  LogitOptions logit;
  NaiveBayesOptions naive_bayes;
  TreeOptions tree;
  SvmOptions svm;
};

// Penalized Bernoulli log-likelihood on already standardized rows; the
// intercept is not penalized:
//   sum_i [y_i z_i - log(1 + e^{z_i})] - ridge/2 * |w|^2,  z_i = b + w.x_i
double LogitObjective(const Rows &x, std::span<const int> y, double ridge,
                      double intercept, std::span<const double> weights);

// Gradient of LogitObjective, intercept component first.
std::vector<double> LogitGradient(const Rows &x, std::span<const int> y,
                                  double ridge, double intercept,
                                  std::span<const double> weights);

// Newton-Raphson (IRLS) maximizer of LogitObjective on standardized rows.
// Reaching max_iter is reported through LogitParams::converged.
FittedModel FitLogit(const Rows &rows, std::span<const int> labels,
                     const LogitOptions &options = {});

FittedModel FitNaiveBayes(const Rows &rows, std::span<const int> labels,
                          const NaiveBayesOptions &options = {});

FittedModel FitTree(const Rows &rows, std::span<const int> labels,
                    const TreeOptions &options = {});

// Pegasos-style hinge-loss subgradient descent; the bias is learned as the
// weight of a constant input and shares the L2 penalty.
FittedModel FitLinearSvm(const Rows &rows, std::span<const int> labels,
                         const SvmOptions &options = {});

// Threshold on probability maximizing training accuracy. Candidates are 0, 1
// and midpoints of adjacent distinct probabilities; ties go to the higher
// true-positive count, then the lower cutoff.
double OneRCutoff(std::span<const double> probs, std::span<const int> labels);

// Fit of the given kind followed by a OneR cutoff on its training
// probabilities.
FittedModel Train(ClassifierKind kind, const Rows &rows,
                  std::span<const int> labels, const TrainOptions &options = {});

// model.json.
nlohmann::ordered_json ModelToJson(const FittedModel &model);
FittedModel ModelFromJson(const nlohmann::json &doc);

}  // namespace unrest

#endif  // UNREST_MODELS_H_
