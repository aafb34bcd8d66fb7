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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "oracles.h"
#include "test_support.h"
#include "unrest/cli.h"
#include "unrest/datagen.h"
#include "unrest/evaluation.h"
#include "unrest/models.h"
#include "unrest/selection.h"
#include "unrest/text_io.h"

namespace unrest {
namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char *format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

// ---- 1: printed daily rates are reachable with 50 regions ------------------

struct PrintedColumn {
  const char *date;
  const char *tpr, *tnr, *acc;
};

int Decimals(const char *text) {
  const std::string s = text;
  const auto dot = s.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
}

Verdict MetricArithmetic() {
  const PrintedColumn columns[] = {
      {"2016-11-11", "50", "97.5", "88"},     {"2016-11-12", "46.66", "97.14", "82"},
      {"2016-11-13", "72.72", "82.05", "80"}, {"2016-11-14", "71.43", "88.37", "86"},
      {"2016-11-15", "100", "87.5", "88"},    {"2016-11-16", "100", "88", "88"},
  };
  std::ostringstream detail;
  bool ok = true;
  for (const auto &c : columns) {
    auto found = oracle::MatchingConfusions(50, std::stod(c.tpr), Decimals(c.tpr), std::stod(c.tnr),
                                            Decimals(c.tnr), std::stod(c.acc), Decimals(c.acc));
    if (found.empty()) {
      ok = false;
      detail << c.date << ": no counts; ";
      continue;
    }
    const auto &f = found.front();
    // The library's rates on the reconstructed counts must display the same.
    DailyReport r = ReportFromCounts(DateOrThrow(c.date), f.tp, f.fp, f.tn, f.fn);
    ok = ok && oracle::ShowsAs(100 * r.tpr, std::stod(c.tpr), Decimals(c.tpr)) &&
         oracle::ShowsAs(100 * r.tnr, std::stod(c.tnr), Decimals(c.tnr)) &&
         oracle::ShowsAs(100 * r.accuracy, std::stod(c.acc), Decimals(c.acc));
    detail << c.date + 5 << " " << f.tp << "/" << f.fp << "/" << f.tn << "/" << f.fn;
    if (found.size() > 1) detail << " (+" << found.size() - 1 << ")";
    detail << "; ";
  }
  auto has = [](const std::vector<oracle::Confusion> &v, int tp, int fp, int tn, int fn) {
    for (const auto &c : v) {
      if (c.tp == tp && c.fp == fp && c.tn == tn && c.fn == fn) return true;
    }
    return false;
  };
  ok = ok && has(oracle::MatchingConfusions(50, 50, 0, 97.5, 1, 88, 0), 5, 1, 39, 5) &&
       has(oracle::MatchingConfusions(50, 100, 0, 87.5, 1, 88, 0), 2, 6, 42, 0);
  return {ok, detail.str()};
}

// ---- 2: accuracy is the count-weighted mean of TPR and TNR ------------------

Verdict WeightedAverage() {
  std::mt19937_64 rng(2);
  int failures = 0, instances = 0;
  double worst = 0.0;
  while (instances < 10000) {
    const int tp = static_cast<int>(rng() % 51), fp = static_cast<int>(rng() % 51);
    const int tn = static_cast<int>(rng() % 51), fn = static_cast<int>(rng() % 51);
    if (tp + fp + tn + fn == 0) continue;
    ++instances;
    const DailyReport r = ReportFromCounts(DateOrThrow("2016-11-11"), tp, fp, tn, fn);
    const std::int64_t p = tp + fn, n = tn + fp, total = p + n;
    bool exact = r.total() == total;
    // Rates are the correctly rounded quotients of the counts.
    exact = exact && r.tpr == (p ? static_cast<double>(tp) / p : 1.0);
    exact = exact && r.tnr == (n ? static_cast<double>(tn) / n : 1.0);
    exact = exact && r.accuracy == static_cast<double>(tp + tn) / total;
    // Identity in exact rational arithmetic: P*(tp/P) + N*(tn/N) = tp + tn.
    if (p > 0 && n > 0) exact = exact && p * tp * n + n * tn * p == (tp + tn) * p * n;
    const double weighted = (p * r.tpr + n * r.tnr) / static_cast<double>(total);
    worst = std::max(worst, std::abs(weighted - r.accuracy));
    if (!exact || std::abs(weighted - r.accuracy) > 1e-12) ++failures;
  }
  return {failures == 0, std::to_string(instances) + " reports, max float gap " + Fmt("%.2e", worst)};
}

// ---- 3: trapezoidal AUC equals the Mann-Whitney statistic -------------------

Verdict AucDualOracle() {
  std::mt19937_64 rng(3);
  double worst = 0.0;
  int sets = 0;
  while (sets < 1000) {
    const size_t n = 2 + rng() % 200;
    const int levels = 1 + static_cast<int>(rng() % 20);  // few levels force ties
    std::vector<double> s(n);
    std::vector<int> y(n);
    std::vector<ScoredLabel> scored(n);
    int pos = 0;
    for (size_t i = 0; i < n; ++i) {
      s[i] = static_cast<double>(rng() % levels) / levels;
      y[i] = static_cast<int>(rng() % 2);
      pos += y[i];
      scored[i] = {s[i], y[i]};
    }
    if (pos == 0 || pos == static_cast<int>(n)) continue;
    ++sets;
    worst = std::max(worst, std::abs(Roc(scored).auc - oracle::MannWhitneyAuc(s, y)));
  }
  return {worst <= 1e-12, "1000 sets, max gap " + Fmt("%.2e", worst)};
}

// ---- 4: IRLS vs grid search, gradient vs finite differences ----------------

Verdict LogitCorrectness() {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> normal;
  const double ridge = LogitOptions{}.ridge;
  double worst_param = 0.0, worst_grad = 0.0;
  for (int instance = 0; instance < 20; ++instance) {
    Rows x(30, std::vector<double>(2));
    std::vector<int> y(30);
    const double w1 = normal(rng), w2 = normal(rng), b = 0.5 * normal(rng);
    for (size_t i = 0; i < 30; ++i) {
      x[i] = {normal(rng) * 2.0 + 1.0, normal(rng) * 0.5 - 3.0};
      const double z = b + w1 * (x[i][0] - 1.0) / 2.0 + w2 * (x[i][1] + 3.0) / 0.5;
      y[i] = std::bernoulli_distribution(1.0 / (1.0 + std::exp(-z)))(rng) ? 1 : 0;
    }
    y[0] = 0;
    y[1] = 1;
    const FittedModel model = FitLogit(x, y);
    const auto &p = std::get<LogitParams>(model.params);
    const Rows z = model.standardizer.Transform(x);
    const auto best = oracle::GridMaximize(z, y, ridge);
    worst_param = std::max({worst_param, std::abs(best[0] - p.intercept), std::abs(best[1] - p.weights[0]),
                            std::abs(best[2] - p.weights[1])});

    const std::vector<double> at = {normal(rng), normal(rng), normal(rng)};
    const auto grad = LogitGradient(z, y, ridge, at[0], std::vector<double>{at[1], at[2]});
    auto f = [&](const std::vector<double> &q) {
      return oracle::PenalizedLogLik(z, y, ridge, q[0], {q[1], q[2]});
    };
    for (size_t d = 0; d < 3; ++d) {
      const double fd = oracle::CentralDifference(f, at, d, 1e-5);
      worst_grad = std::max(worst_grad, std::abs(grad[d] - fd) / std::max(1.0, std::abs(fd)));
    }
  }
  return {worst_param <= 1e-3 && worst_grad <= 1e-5,
          "max param gap " + Fmt("%.2e", worst_param) + ", max gradient rel gap " + Fmt("%.2e", worst_grad)};
}

// ---- 5: OneR cutoff equals the exhaustive scan -----------------------------

Verdict OneROracle() {
  std::mt19937_64 rng(5);
  int mismatches = 0;
  for (int instance = 0; instance < 1000; ++instance) {
    const size_t n = 1 + rng() % 60;
    const bool coarse = rng() % 2;
    std::vector<double> probs(n);
    std::vector<int> labels(n);
    for (size_t i = 0; i < n; ++i) {
      probs[i] = coarse ? static_cast<double>(rng() % 8) / 7.0 : std::uniform_real_distribution<double>()(rng);
      labels[i] = static_cast<int>(rng() % 2);
    }
    if (OneRCutoff(probs, labels) != oracle::OneRExhaustive(probs, labels)) ++mismatches;
  }
  return {mismatches == 0, "1000 instances, " + std::to_string(mismatches) + " mismatches"};
}

// ---- 6: wrapper recovers a planted feature ---------------------------------

Verdict WrapperRecovery() {
  int selected = 0;
  double inclusion_sum = 0.0, inclusion_min = 1.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto planted = fixture::PlantedMatrix(seed, 350, 7, 0, 1.5);
    SelectionOptions opts;
    opts.seed = seed;
    const auto best = WrapperSelect(planted.rows, planted.labels, ClassifierKind::kLogit, opts);
    selected += best.subset[planted.informative];
    const auto inclusion = FoldInclusion(planted.rows, planted.labels, ClassifierKind::kLogit, opts);
    inclusion_sum += inclusion.fraction[planted.informative];
    inclusion_min = std::min(inclusion_min, inclusion.fraction[planted.informative]);
  }
  const double mean = inclusion_sum / 10.0;
  return {selected >= 9 && mean >= 0.8,
          "selected in " + std::to_string(selected) + "/10 seeds, mean fold inclusion " +
              Fmt("%.0f%%", 100 * mean) + " (min " + Fmt("%.0f%%", 100 * inclusion_min) + ")"};
}

// ---- pipeline helpers -------------------------------------------------------

int Cli(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  if (code != 0) std::cerr << "  unrest " << args.front() << " failed: " << err.str();
  return code;
}

std::string Preset(const std::string &name) { return testing::DataDir() + "/presets/" + name; }

// simulate -> featurize through the CLI. Returns false on any failure.
bool SimulateAndFeaturize(const std::string &preset, std::uint64_t seed, const std::string &dir) {
  return Cli({"simulate", "--generator", preset, "--seed", std::to_string(seed), "--out", dir}) == 0 &&
         Cli({"featurize", "--tweets", dir + "/tweets.jsonl", "--protests", dir + "/protests.csv",
              "--votes", dir + "/votes.csv", "--out", dir}) == 0;
}

std::optional<nlohmann::json> ReadReport(const std::string &dir) {
  try {
    return nlohmann::json::parse(ReadFile(dir + "/report.json"));
  } catch (const std::exception &) {
    return std::nullopt;
  }
}

// ---- 7: desk-scale end-to-end run ------------------------------------------

Verdict DeskRun() {
  testing::TempDir dir("acc_desk");
  if (!SimulateAndFeaturize(Preset("desk.json"), 1, dir.path())) return {false, "pipeline failed"};
  if (Cli({"evaluate", "--matrix", dir / "features.csv", "--classifier", "logit", "--out", dir.path()}) != 0) {
    return {false, "evaluate failed"};
  }
  auto report = ReadReport(dir.path());
  if (!report || (*report)["auc"].is_null()) return {false, "no AUC in report.json"};
  const double auc = (*report)["auc"].get<double>();
  std::vector<size_t> sizes;
  for (const auto &day : (*report)["days"]) sizes.push_back(day["training_rows"].get<size_t>());
  const bool sizes_ok = sizes == std::vector<size_t>{50, 100, 150, 200, 250, 300};
  const size_t tweets = ReadLines(dir / "tweets.jsonl").size();
  std::string seq;
  for (size_t s : sizes) seq += (seq.empty() ? "" : "/") + std::to_string(s);
  return {auc >= 0.85 && sizes_ok,
          std::to_string(tweets) + " tweets, pooled AUC " + Fmt("%.4f", auc) + ", training sizes " + seq};
}

// ---- 8: event features lift AUC --------------------------------------------

Verdict EventFeatureLift() {
  const TextResources resources = LoadTextResources(testing::DataDir(), DefaultRegionSet());
  const auto templates = LoadTemplates(testing::DataDir() + "/templates.txt");
  const GenConfig base = GenConfigFromJson(nlohmann::json::parse(ReadFile(Preset("lift.json"))));
  double sum_all = 0.0, sum_tweet = 0.0;
  int wins = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenConfig config = base;
    config.seed = seed;
    const GenOutput out = Generate(config, templates, resources);
    const auto analyses = AnalyzeCorpus(Cleanse(out.tweets, RelevanceRule::Default()), resources);
    BuildOptions opts;
    opts.first_date = config.start_date + std::chrono::days{1};
    opts.last_date = config.start_date + std::chrono::days{config.days};
    opts.lead_threshold = config.lead_threshold;
    const FeatureMatrix m = BuildMatrix(analyses, out.election, out.protests, opts);
    const Date start = opts.first_date + std::chrono::days{1};
    const auto all = ProgressiveRun(m, ClassifierKind::kLogit, AllFeatures(), start, opts.last_date);
    const auto tweet = ProgressiveRun(m, ClassifierKind::kLogit, TweetOnlyFeatures(), start, opts.last_date);
    if (!all.roc || !tweet.roc) return {false, "single-class pool for seed " + std::to_string(seed)};
    sum_all += all.roc->auc;
    sum_tweet += tweet.roc->auc;
    wins += all.roc->auc > tweet.roc->auc;
  }
  const double lift = (sum_all - sum_tweet) / 10.0;
  return {lift >= 0.01, "mean AUC F1-F7 " + Fmt("%.4f", sum_all / 10) + " vs tweet-only " +
                            Fmt("%.4f", sum_tweet / 10) + ", lift " + Fmt("%+.4f", lift) + ", " +
                            std::to_string(wins) + "/10 seeds higher"};
}

// ---- 9: cross-event transfer -------------------------------------------------

Verdict Transfer() {
  testing::TempDir a("acc_event_a"), b("acc_event_b"), out("acc_transfer");
  if (!SimulateAndFeaturize(Preset("desk.json"), 1, a.path()) ||
      !SimulateAndFeaturize(Preset("transfer_b.json"), 2, b.path())) {
    return {false, "pipeline failed"};
  }
  if (Cli({"transfer", "--matrix", a / "features.csv", "--test-matrix", b / "features.csv", "--out",
           out.path()}) != 0) {
    return {false, "transfer failed"};
  }
  auto report = ReadReport(out.path());
  if (!report || (*report)["auc"].is_null()) return {false, "no AUC in report.json"};
  const double auc = (*report)["auc"].get<double>();
  return {auc > 0.5, "event B " + (*report)["days"][0]["date"].get<std::string>() + "..., pooled AUC " +
                         Fmt("%.4f", auc)};
}

// ---- 10: byte-identical reruns ---------------------------------------------

Verdict Determinism() {
  testing::TempDir first("acc_det_a"), second("acc_det_b");
  for (const testing::TempDir *dir : {&first, &second}) {
    if (!SimulateAndFeaturize(Preset("desk.json"), 7, dir->path()) ||
        Cli({"evaluate", "--matrix", *dir / "features.csv", "--out", dir->path()}) != 0) {
      return {false, "pipeline failed"};
    }
  }
  std::string differing;
  for (const char *file : {"report.json", "roc.csv", "model.json"}) {
    if (ReadFile(first / file) != ReadFile(second / file)) differing += std::string(" ") + file;
  }
  return {differing.empty(), differing.empty() ? "report.json, roc.csv, model.json identical"
                                               : "differs:" + differing};
}

}  // namespace
}  // namespace unrest

int main() {
  using unrest::Verdict;
  struct Criterion {
    int id;
    const char *name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "metric arithmetic vs printed table", unrest::MetricArithmetic},
      {2, "weighted-average identity", unrest::WeightedAverage},
      {3, "AUC dual oracle", unrest::AucDualOracle},
      {4, "logit correctness", unrest::LogitCorrectness},
      {5, "OneR oracle equality", unrest::OneROracle},
      {6, "wrapper recovery", unrest::WrapperRecovery},
      {7, "desk-scale end-to-end run", unrest::DeskRun},
      {8, "event-feature lift", unrest::EventFeatureLift},
      {9, "transfer protocol", unrest::Transfer},
      {10, "determinism", unrest::Determinism},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !v.pass;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
