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

#include "unrest/models.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "unrest/error.h"

namespace unrest {
namespace {

double Logistic(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + e^z) without overflow.
double Softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

size_t ValidateTrainingSet(const Rows &rows, std::span<const int> labels,
                           size_t min_rows) {
  if (rows.size() != labels.size()) {
    Fail(Errc::kSchema, "row count " + std::to_string(rows.size()) +
                            " differs from label count " + std::to_string(labels.size()));
  }
  if (rows.size() < min_rows) {
    Fail(Errc::kValidation, "need at least " + std::to_string(min_rows) + " training rows");
  }
  const size_t dim = rows.front().size();
  for (const auto &row : rows) {
    if (row.size() != dim) Fail(Errc::kSchema, "ragged design matrix");
    for (double v : row) {
      if (!std::isfinite(v)) Fail(Errc::kValidation, "non-finite feature value");
    }
  }
  for (int y : labels) {
    if (y != 0 && y != 1) Fail(Errc::kValidation, "labels must be 0 or 1");
  }
  return dim;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Entropy(double pos, double total) {
  if (total <= 0 || pos <= 0 || pos >= total) return 0.0;
  const double p = pos / total, q = 1.0 - p;
  return -(p * std::log2(p) + q * std::log2(q));
}

struct TreeBuilder {
  const Rows &rows;
  std::span<const int> labels;
  TreeOptions options;
  std::vector<TreeNode> nodes;

  int Build(std::vector<size_t> idx, int depth) {
    TreeNode node;
    node.samples = static_cast<int>(idx.size());
    int pos = 0;
    for (size_t i : idx) pos += labels[i];
    node.positive_fraction = idx.empty() ? 0.0 : static_cast<double>(pos) / idx.size();
    const int id = static_cast<int>(nodes.size());
    nodes.push_back(node);
    if (pos == 0 || pos == node.samples || depth >= options.max_depth) return id;

    const double base = Entropy(pos, idx.size());
    struct Candidate {
      size_t feature;
      double threshold;
      double gain;
      double ratio;
    };
    std::vector<Candidate> best_per_feature;
    const size_t dim = rows.front().size();
    const size_t min_leaf = static_cast<size_t>(std::max(1, options.min_leaf));
    for (size_t f = 0; f < dim; ++f) {
      std::vector<size_t> order = idx;
      std::stable_sort(order.begin(), order.end(),
                       [&](size_t a, size_t b) { return rows[a][f] < rows[b][f]; });
      std::optional<Candidate> best;
      int left_pos = 0;
      for (size_t k = 0; k + 1 < order.size(); ++k) {
        left_pos += labels[order[k]];
        const double lo = rows[order[k]][f], hi = rows[order[k + 1]][f];
        if (!(lo < hi)) continue;
        const size_t nl = k + 1, nr = order.size() - nl;
        if (nl < min_leaf || nr < min_leaf) continue;
        const double n = static_cast<double>(order.size());
        const double cond = (nl / n) * Entropy(left_pos, nl) +
                            (nr / n) * Entropy(pos - left_pos, nr);
        const double gain = base - cond;
        if (gain <= 1e-12) continue;
        if (!best || gain > best->gain) {
          const double split_info = Entropy(static_cast<double>(nl), n);
          best = Candidate{f, lo + (hi - lo) / 2.0, gain, gain / split_info};
        }
      }
      if (best) best_per_feature.push_back(*best);
    }
    if (best_per_feature.empty()) return id;

    // C4.5: among attributes with at least average gain, take the best ratio.
    double mean_gain = 0.0;
    for (const auto &c : best_per_feature) mean_gain += c.gain;
    mean_gain /= best_per_feature.size();
    const Candidate *chosen = nullptr;
    for (const auto &c : best_per_feature) {
      if (c.gain + 1e-12 < mean_gain) continue;
      if (!chosen || c.ratio > chosen->ratio) chosen = &c;
    }

    std::vector<size_t> left, right;
    for (size_t i : idx) {
      (rows[i][chosen->feature] <= chosen->threshold ? left : right).push_back(i);
    }
    nodes[id].feature = static_cast<int>(chosen->feature);
    nodes[id].threshold = chosen->threshold;
    const int l = Build(std::move(left), depth + 1);
    const int r = Build(std::move(right), depth + 1);
    nodes[id].left = l;
    nodes[id].right = r;
    return id;
  }
};

double GaussianLogDensity(double x, double mean, double var) {
  const double d = x - mean;
  return -0.5 * (std::log(2.0 * std::numbers::pi * var) + d * d / var);
}

}  // namespace

std::string_view ClassifierName(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kLogit: return "logit";
    case ClassifierKind::kNaiveBayes: return "nb";
    case ClassifierKind::kTree: return "tree";
    case ClassifierKind::kLinearSvm: return "svm";
  }
  return "unknown";
}

ClassifierKind ParseClassifierKind(std::string_view name) {
  if (name == "logit") return ClassifierKind::kLogit;
  if (name == "nb") return ClassifierKind::kNaiveBayes;
  if (name == "tree") return ClassifierKind::kTree;
  if (name == "svm") return ClassifierKind::kLinearSvm;
  Fail(Errc::kValidation, "unknown classifier '" + std::string(name) +
                              "' (expected logit|nb|tree|svm)");
}

Standardizer Standardizer::Fit(const Rows &rows) {
  Standardizer s;
  if (rows.empty()) return s;
  const size_t dim = rows.front().size();
  const double n = static_cast<double>(rows.size());
  s.mean.assign(dim, 0.0);
  s.stddev.assign(dim, 0.0);
  for (const auto &row : rows) {
    for (size_t j = 0; j < dim; ++j) s.mean[j] += row[j];
  }
  for (double &m : s.mean) m /= n;
  for (const auto &row : rows) {
    for (size_t j = 0; j < dim; ++j) {
      const double d = row[j] - s.mean[j];
      s.stddev[j] += d * d;
    }
  }
  for (double &sd : s.stddev) sd = std::max(std::sqrt(sd / n), kStdFloor);
  return s;
}

std::vector<double> Standardizer::Transform(std::span<const double> row) const {
  if (empty()) return {row.begin(), row.end()};
  std::vector<double> out(row.size());
  for (size_t j = 0; j < row.size(); ++j) out[j] = (row[j] - mean[j]) / stddev[j];
  return out;
}

Rows Standardizer::Transform(const Rows &rows) const {
  Rows out;
  out.reserve(rows.size());
  for (const auto &row : rows) out.push_back(Transform(row));
  return out;
}

double FittedModel::PredictProba(std::span<const double> row) const {
  if (row.size() != dim) {
    Fail(Errc::kSchema, "row has " + std::to_string(row.size()) +
                            " features, model expects " + std::to_string(dim));
  }
  switch (kind) {
    case ClassifierKind::kLogit: {
      const auto &p = std::get<LogitParams>(params);
      return Logistic(p.intercept + Dot(p.weights, standardizer.Transform(row)));
    }
    case ClassifierKind::kLinearSvm: {
      const auto &p = std::get<SvmParams>(params);
      return Logistic(p.intercept + Dot(p.weights, standardizer.Transform(row)));
    }
    case ClassifierKind::kNaiveBayes: {
      const auto &p = std::get<NaiveBayesParams>(params);
      if (p.prior_positive <= 0.0) return 0.0;
      if (p.prior_positive >= 1.0) return 1.0;
      double l1 = std::log(p.prior_positive), l0 = std::log1p(-p.prior_positive);
      for (size_t j = 0; j < dim; ++j) {
        l1 += GaussianLogDensity(row[j], p.mean[1][j], p.variance[1][j]);
        l0 += GaussianLogDensity(row[j], p.mean[0][j], p.variance[0][j]);
      }
      return Logistic(l1 - l0);
    }
    case ClassifierKind::kTree: {
      const auto &p = std::get<TreeParams>(params);
      int id = 0;
      while (p.nodes[id].feature >= 0) {
        const TreeNode &n = p.nodes[id];
        id = row[n.feature] <= n.threshold ? n.left : n.right;
      }
      return p.nodes[id].positive_fraction;
    }
  }
  Fail(Errc::kInvariant, "unhandled classifier kind");
}

std::vector<double> FittedModel::PredictProba(const Rows &rows) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto &row : rows) out.push_back(PredictProba(row));
  return out;
}

double LogitObjective(const Rows &x, std::span<const int> y, double ridge,
                      double intercept, std::span<const double> weights) {
  double ll = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double z = intercept + Dot(weights, x[i]);
    ll += y[i] * z - Softplus(z);
  }
  return ll - 0.5 * ridge * Dot(weights, weights);
}

std::vector<double> LogitGradient(const Rows &x, std::span<const int> y,
                                  double ridge, double intercept,
                                  std::span<const double> weights) {
  std::vector<double> grad(weights.size() + 1, 0.0);
  for (size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - Logistic(intercept + Dot(weights, x[i]));
    grad[0] += r;
    for (size_t j = 0; j < weights.size(); ++j) grad[j + 1] += r * x[i][j];
  }
  for (size_t j = 0; j < weights.size(); ++j) grad[j + 1] -= ridge * weights[j];
  return grad;
}

FittedModel FitLogit(const Rows &rows, std::span<const int> labels,
                     const LogitOptions &options) {
  const size_t dim = ValidateTrainingSet(rows, labels, 1);
  if (!(options.ridge > 0.0)) Fail(Errc::kValidation, "ridge must be positive");

  FittedModel model;
  model.kind = ClassifierKind::kLogit;
  model.dim = dim;
  model.standardizer = Standardizer::Fit(rows);
  const Rows x = model.standardizer.Transform(rows);
  const size_t n = x.size(), p = dim + 1;

  Eigen::MatrixXd design(n, p);
  Eigen::VectorXd target(n);
  for (size_t i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    for (size_t j = 0; j < dim; ++j) design(i, j + 1) = x[i][j];
    target(i) = labels[i];
  }
  Eigen::VectorXd penalty = Eigen::VectorXd::Constant(p, options.ridge);
  penalty(0) = 0.0;

  auto objective = [&](const Eigen::VectorXd &beta) {
    const Eigen::VectorXd z = design * beta;
    double ll = 0.0;
    for (size_t i = 0; i < n; ++i) ll += target(i) * z(i) - Softplus(z(i));
    return ll - 0.5 * beta.tail(dim).squaredNorm() * options.ridge;
  };

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  LogitParams params;
  double current = objective(beta);
  for (int iter = 0; iter < options.max_iter; ++iter) {
    const Eigen::VectorXd z = design * beta;
    Eigen::VectorXd prob(n), w(n);
    for (size_t i = 0; i < n; ++i) {
      prob(i) = Logistic(z(i));
      w(i) = prob(i) * (1.0 - prob(i));
    }
    const Eigen::VectorXd grad =
        design.transpose() * (target - prob) - penalty.cwiseProduct(beta);
    if (grad.cwiseAbs().maxCoeff() < options.tol) {
      params.converged = true;
      break;
    }
    params.iterations = iter + 1;
    Eigen::MatrixXd info = design.transpose() * w.asDiagonal() * design;
    info.diagonal() += penalty;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(info);
    Eigen::VectorXd step = ldlt.solve(grad);
    if (ldlt.info() != Eigen::Success || !step.allFinite()) step = grad;

    // Step halving keeps each update an ascent step. Near the optimum the
    // objective is flat to rounding, so a tiny decrease is not a descent.
    const double slack = 1e-12 * (1.0 + std::abs(current));
    double scale = 1.0;
    Eigen::VectorXd next = beta + step;
    double value = objective(next);
    while (value < current - slack && scale > 1e-10) {
      scale *= 0.5;
      next = beta + scale * step;
      value = objective(next);
    }
    if (value < current - slack) break;
    beta = next;
    current = value;
  }
  if (!params.converged) {
    const Eigen::VectorXd z = design * beta;
    Eigen::VectorXd prob(n);
    for (size_t i = 0; i < n; ++i) prob(i) = Logistic(z(i));
    const Eigen::VectorXd grad =
        design.transpose() * (target - prob) - penalty.cwiseProduct(beta);
    params.converged = grad.cwiseAbs().maxCoeff() < options.tol;
  }
  Check(beta.allFinite(), "logit fit produced non-finite parameters");
  params.intercept = beta(0);
  params.weights.assign(beta.data() + 1, beta.data() + p);
  model.params = std::move(params);
  return model;
}

FittedModel FitNaiveBayes(const Rows &rows, std::span<const int> labels,
                          const NaiveBayesOptions &options) {
  const size_t dim = ValidateTrainingSet(rows, labels, 1);
  if (!(options.var_floor > 0.0)) Fail(Errc::kValidation, "var_floor must be positive");
  FittedModel model;
  model.kind = ClassifierKind::kNaiveBayes;
  model.dim = dim;
  NaiveBayesParams p;
  double count[2] = {0, 0};
  for (int c = 0; c < 2; ++c) {
    p.mean[c].assign(dim, 0.0);
    p.variance[c].assign(dim, 0.0);
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    const int c = labels[i];
    count[c] += 1;
    for (size_t j = 0; j < dim; ++j) p.mean[c][j] += rows[i][j];
  }
  for (int c = 0; c < 2; ++c) {
    if (count[c] > 0) {
      for (double &m : p.mean[c]) m /= count[c];
    }
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    const int c = labels[i];
    for (size_t j = 0; j < dim; ++j) {
      const double d = rows[i][j] - p.mean[c][j];
      p.variance[c][j] += d * d;
    }
  }
  for (int c = 0; c < 2; ++c) {
    for (double &v : p.variance[c]) {
      v = std::max(count[c] > 0 ? v / count[c] : 0.0, options.var_floor);
    }
  }
  p.prior_positive = count[1] / (count[0] + count[1]);
  model.params = std::move(p);
  return model;
}

FittedModel FitTree(const Rows &rows, std::span<const int> labels,
                    const TreeOptions &options) {
  const size_t dim = ValidateTrainingSet(rows, labels, 1);
  TreeBuilder builder{rows, labels, options, {}};
  std::vector<size_t> idx(rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  builder.Build(std::move(idx), 0);
  FittedModel model;
  model.kind = ClassifierKind::kTree;
  model.dim = dim;
  model.params = TreeParams{std::move(builder.nodes)};
  return model;
}

FittedModel FitLinearSvm(const Rows &rows, std::span<const int> labels,
                         const SvmOptions &options) {
  const size_t dim = ValidateTrainingSet(rows, labels, 1);
  if (!(options.reg > 0.0)) Fail(Errc::kValidation, "svm reg must be positive");
  FittedModel model;
  model.kind = ClassifierKind::kLinearSvm;
  model.dim = dim;
  model.standardizer = Standardizer::Fit(rows);
  const Rows x = model.standardizer.Transform(rows);

  // Last weight is the bias on a constant 1 input.
  std::vector<double> w(dim + 1, 0.0);
  std::vector<size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(options.seed);
  double t = 0.0;
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (size_t i : order) {
      t += 1.0;
      const double eta = 1.0 / (options.reg * t);
      const double y = labels[i] == 1 ? 1.0 : -1.0;
      const double margin = y * (Dot(std::span(w).first(dim), x[i]) + w[dim]);
      const double shrink = 1.0 - eta * options.reg;
      for (double &wj : w) wj *= shrink;
      if (margin < 1.0) {
        for (size_t j = 0; j < dim; ++j) w[j] += eta * y * x[i][j];
        w[dim] += eta * y;
      }
    }
  }
  SvmParams p;
  p.weights.assign(w.begin(), w.begin() + static_cast<long>(dim));
  p.intercept = w[dim];
  Check(std::all_of(w.begin(), w.end(), [](double v) { return std::isfinite(v); }),
        "svm fit produced non-finite parameters");
  model.params = std::move(p);
  return model;
}

double OneRCutoff(std::span<const double> probs, std::span<const int> labels) {
  if (probs.empty()) Fail(Errc::kValidation, "OneR cutoff needs at least one probability");
  if (probs.size() != labels.size()) Fail(Errc::kSchema, "probability/label count mismatch");

  std::vector<std::pair<double, int>> sorted;
  sorted.reserve(probs.size());
  for (size_t i = 0; i < probs.size(); ++i) sorted.emplace_back(probs[i], labels[i]);
  std::sort(sorted.begin(), sorted.end());
  const size_t n = sorted.size();
  // suffix_pos[k]: positives among sorted[k..n).
  std::vector<int> suffix_pos(n + 1, 0);
  for (size_t k = n; k-- > 0;) suffix_pos[k] = suffix_pos[k + 1] + (sorted[k].second == 1);
  const int total_pos = suffix_pos[0];
  const int total_neg = static_cast<int>(n) - total_pos;

  std::vector<double> candidates = {0.0};
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sorted[k].first < sorted[k + 1].first) {
      candidates.push_back(sorted[k].first + (sorted[k + 1].first - sorted[k].first) / 2.0);
    }
  }
  candidates.push_back(1.0);
  std::sort(candidates.begin(), candidates.end());

  double best_cutoff = candidates.front();
  int best_correct = -1, best_tp = -1;
  for (double c : candidates) {
    // Predicted positive iff prob > c.
    const auto first_pos = std::upper_bound(
        sorted.begin(), sorted.end(), c,
        [](double value, const std::pair<double, int> &e) { return value < e.first; });
    const size_t k = static_cast<size_t>(first_pos - sorted.begin());
    const int tp = suffix_pos[k];
    const int predicted_pos = static_cast<int>(n - k);
    const int tn = total_neg - (predicted_pos - tp);
    const int correct = tp + tn;
    if (correct > best_correct || (correct == best_correct && tp > best_tp)) {
      best_correct = correct;
      best_tp = tp;
      best_cutoff = c;
    }
  }
  return best_cutoff;
}

FittedModel Train(ClassifierKind kind, const Rows &rows,
                  std::span<const int> labels, const TrainOptions &options) {
  FittedModel model;
  switch (kind) {
    case ClassifierKind::kLogit: model = FitLogit(rows, labels, options.logit); break;
    case ClassifierKind::kNaiveBayes:
      model = FitNaiveBayes(rows, labels, options.naive_bayes);
      break;
    case ClassifierKind::kTree: model = FitTree(rows, labels, options.tree); break;
    case ClassifierKind::kLinearSvm: model = FitLinearSvm(rows, labels, options.svm); break;
  }
  model.cutoff = OneRCutoff(model.PredictProba(rows), labels);
  return model;
}

nlohmann::ordered_json ModelToJson(const FittedModel &model) {
  nlohmann::ordered_json doc;
  doc["kind"] = ClassifierName(model.kind);
  doc["dim"] = model.dim;
  doc["feature_names"] = model.feature_names;
  doc["standardizer"] = {{"mean", model.standardizer.mean},
                         {"stddev", model.standardizer.stddev}};
  nlohmann::ordered_json params;
  std::visit(
      [&](const auto &p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LogitParams>) {
          params["intercept"] = p.intercept;
          params["weights"] = p.weights;
          params["iterations"] = p.iterations;
          params["converged"] = p.converged;
        } else if constexpr (std::is_same_v<T, SvmParams>) {
          params["intercept"] = p.intercept;
          params["weights"] = p.weights;
        } else if constexpr (std::is_same_v<T, NaiveBayesParams>) {
          params["prior_positive"] = p.prior_positive;
          params["mean"] = {p.mean[0], p.mean[1]};
          params["variance"] = {p.variance[0], p.variance[1]};
        } else {
          params["nodes"] = nlohmann::ordered_json::array();
          for (const TreeNode &n : p.nodes) {
            params["nodes"].push_back({{"feature", n.feature},
                                       {"threshold", n.threshold},
                                       {"left", n.left},
                                       {"right", n.right},
                                       {"positive_fraction", n.positive_fraction},
                                       {"samples", n.samples}});
          }
        }
      },
      model.params);
  doc["params"] = std::move(params);
  doc["cutoff"] = model.cutoff;
  return doc;
}

FittedModel ModelFromJson(const nlohmann::json &doc) {
  try {
    FittedModel model;
    model.kind = ParseClassifierKind(doc.at("kind").get<std::string>());
    model.dim = doc.at("dim").get<size_t>();
    model.feature_names = doc.value("feature_names", std::vector<std::string>{});
    model.standardizer.mean = doc.at("standardizer").at("mean").get<std::vector<double>>();
    model.standardizer.stddev =
        doc.at("standardizer").at("stddev").get<std::vector<double>>();
    const auto &params = doc.at("params");
    switch (model.kind) {
      case ClassifierKind::kLogit: {
        LogitParams p;
        p.intercept = params.at("intercept").get<double>();
        p.weights = params.at("weights").get<std::vector<double>>();
        p.iterations = params.value("iterations", 0);
        p.converged = params.value("converged", false);
        if (p.weights.size() != model.dim) Fail(Errc::kSchema, "weight count != dim");
        model.params = std::move(p);
        break;
      }
      case ClassifierKind::kLinearSvm: {
        SvmParams p;
        p.intercept = params.at("intercept").get<double>();
        p.weights = params.at("weights").get<std::vector<double>>();
        if (p.weights.size() != model.dim) Fail(Errc::kSchema, "weight count != dim");
        model.params = std::move(p);
        break;
      }
      case ClassifierKind::kNaiveBayes: {
        NaiveBayesParams p;
        p.prior_positive = params.at("prior_positive").get<double>();
        for (int c = 0; c < 2; ++c) {
          p.mean[c] = params.at("mean").at(c).get<std::vector<double>>();
          p.variance[c] = params.at("variance").at(c).get<std::vector<double>>();
          if (p.mean[c].size() != model.dim || p.variance[c].size() != model.dim) {
            Fail(Errc::kSchema, "naive bayes parameter size != dim");
          }
        }
        model.params = std::move(p);
        break;
      }
      case ClassifierKind::kTree: {
        TreeParams p;
        for (const auto &n : params.at("nodes")) {
          TreeNode node;
          node.feature = n.at("feature").get<int>();
          node.threshold = n.at("threshold").get<double>();
          node.left = n.at("left").get<int>();
          node.right = n.at("right").get<int>();
          node.positive_fraction = n.at("positive_fraction").get<double>();
          node.samples = n.at("samples").get<int>();
          p.nodes.push_back(node);
        }
        const int count = static_cast<int>(p.nodes.size());
        if (count == 0) Fail(Errc::kSchema, "tree has no nodes");
        for (int i = 0; i < count; ++i) {
          const TreeNode &n = p.nodes[i];
          if (n.feature >= static_cast<int>(model.dim) ||
              (n.feature >= 0 && (n.left <= i || n.left >= count || n.right <= i ||
                                  n.right >= count))) {
            Fail(Errc::kSchema, "malformed tree node");
          }
        }
        model.params = std::move(p);
        break;
      }
    }
    model.cutoff = doc.at("cutoff").get<double>();
    if (!(model.cutoff >= 0.0 && model.cutoff <= 1.0)) {
      Fail(Errc::kValidation, "cutoff outside [0,1]");
    }
    return model;
  } catch (const nlohmann::json::exception &e) {
    Fail(Errc::kParse, std::string("model.json: ") + e.what());
  }
}

}  // namespace unrest
