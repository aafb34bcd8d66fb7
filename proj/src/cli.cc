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

#include "unrest/cli.h"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "unrest/datagen.h"
#include "unrest/error.h"
#include "unrest/evaluation.h"
#include "unrest/selection.h"
#include "unrest/signals.h"
#include "unrest/text_io.h"
#include "unrest/textfeat.h"

#ifndef UNREST_DEFAULT_DATA_DIR
#define UNREST_DEFAULT_DATA_DIR "data"
#endif

namespace unrest::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

void ConfigureLogging() {
  static bool done = false;
  if (!done) {
    auto logger = spdlog::stderr_logger_mt("unrest");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    done = true;
  }
  const char *level = std::getenv("UNREST_LOG");
  std::string name = level ? level : "error";
  if (name == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else if (name == "info") {
    spdlog::set_level(spdlog::level::info);
  } else {
    spdlog::set_level(spdlog::level::err);
  }
}

std::string Join(const std::string &dir, const std::string &file) {
  return (fs::path(dir) / file).string();
}

void EnsureDir(const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) Fail(Errc::kIo, "cannot create output directory '" + dir + "'");
}

void RequireFile(const std::string &path, const std::string &what) {
  if (!fs::is_regular_file(path)) Fail(Errc::kIo, what + " '" + path + "' does not exist");
}

std::string ResourcesDir(const RunConfig &c) {
  return c.resources_dir.empty() ? std::string(UNREST_DEFAULT_DATA_DIR) : c.resources_dir;
}

std::string Dump(const ordered_json &doc) { return doc.dump(2) + "\n"; }

PaceMode ParsePaceMode(const std::string &s) {
  if (s == "auto") return PaceMode::kAuto;
  if (s == "count") return PaceMode::kCount;
  if (s == "pace") return PaceMode::kHourlyPace;
  Fail(Errc::kValidation, "pace_mode must be auto|count|pace");
}

std::vector<size_t> ParseFeatureList(const std::string &text) {
  FeatureMask mask = ParseFeatureMask(text);
  std::vector<size_t> out;
  for (size_t f = 0; f < kFeatureCount; ++f) {
    if (mask[f]) out.push_back(f);
  }
  return out;
}

Date Earliest(const Corpus &corpus, std::chrono::minutes offset) {
  Date d = DayOf(corpus.front().created_at, offset);
  for (const auto &t : corpus) d = std::min(d, DayOf(t.created_at, offset));
  return d;
}

Date Latest(const Corpus &corpus, std::chrono::minutes offset) {
  Date d = DayOf(corpus.front().created_at, offset);
  for (const auto &t : corpus) d = std::max(d, DayOf(t.created_at, offset));
  return d;
}

Corpus LoadCleanCorpus(const RunConfig &c, const RegionSet &regions, IngestStats *stats) {
  RequireFile(c.tweets, "tweets file");
  IngestResult ingested = Ingest(c.tweets, regions);
  if (stats) *stats = ingested.stats;
  spdlog::info("ingested {} records ({} malformed, {} duplicate ids)", ingested.stats.records,
               ingested.stats.malformed, ingested.stats.duplicates);
  Corpus clean = Cleanse(ingested.records, c.relevance);
  spdlog::info("{} records after cleansing", clean.size());
  return clean;
}

// ---- commands -------------------------------------------------------------

int CmdSimulate(const RunConfig &c, bool seed_given, std::ostream &out) {
  GenConfig gen;
  if (!c.generator.empty()) {
    RequireFile(c.generator, "generator config");
    json doc = json::parse(ReadFile(c.generator), nullptr, false);
    if (doc.is_discarded()) Fail(Errc::kParse, "generator config is not valid JSON");
    gen = GenConfigFromJson(doc);
  }
  if (seed_given) gen.seed = c.seed;
  gen.lead_threshold = c.lead_threshold;
  const std::string dir = ResourcesDir(c);
  const TextResources resources = LoadTextResources(dir, DefaultRegionSet());
  const auto templates = LoadTemplates(c.templates.empty() ? Join(dir, "templates.txt") : c.templates);
  const GenOutput output = Generate(gen, templates, resources);
  EnsureDir(c.out);
  WriteGenOutput(output, c.out);
  WriteFile(Join(c.out, "generator.json"), Dump(GenConfigToJson(gen)));
  out << "simulate: " << output.tweets.size() << " tweets, " << output.protests.size()
      << " protest events, " << output.election.size() << " regions -> " << c.out << "\n";
  return 0;
}

int CmdIngest(const RunConfig &c, std::ostream &out) {
  IngestStats stats;
  const Corpus clean = LoadCleanCorpus(c, DefaultRegionSet(), &stats);
  EnsureDir(c.out);
  WriteFile(Join(c.out, "tweets.clean.jsonl"), SerializeTweets(clean));
  ordered_json doc = {{"lines", stats.lines},
                      {"records", stats.records},
                      {"malformed", stats.malformed},
                      {"duplicates", stats.duplicates},
                      {"retained", clean.size()}};
  WriteFile(Join(c.out, "ingest.json"), Dump(doc));
  out << "ingest: " << stats.records << " records, " << stats.malformed << " malformed, "
      << clean.size() << " retained after cleansing\n";
  return 0;
}

int CmdFeaturize(const RunConfig &c, std::ostream &out) {
  const RegionSet regions = DefaultRegionSet();
  const Corpus clean = LoadCleanCorpus(c, regions, nullptr);
  RequireFile(c.protests, "protests file");
  RequireFile(c.votes, "votes file");
  const ProtestSet protests = LoadGroundTruth(c.protests, regions);
  const ElectionTable election = LoadElection(c.votes, regions);
  const TextResources resources = LoadTextResources(ResourcesDir(c), regions);

  MentionOptions mopts;
  mopts.horizon_days = c.horizon_days;
  mopts.utc_offset = std::chrono::minutes{c.utc_offset_minutes};

  BuildOptions bopts;
  bopts.lead_threshold = c.lead_threshold;
  bopts.pace_mode = c.pace_mode;
  bopts.coverage_hours = c.coverage_hours;
  if (c.first_date && c.last_date) {
    bopts.first_date = *c.first_date;
    bopts.last_date = *c.last_date;
  } else {
    if (clean.empty()) Fail(Errc::kValidation, "no usable tweets; pass --from/--to explicitly");
    bopts.first_date = c.first_date.value_or(Earliest(clean, mopts.utc_offset) + std::chrono::days{1});
    bopts.last_date = c.last_date.value_or(Latest(clean, mopts.utc_offset) + std::chrono::days{1});
  }

  const auto analyses = AnalyzeCorpus(clean, resources, mopts);
  const FeatureMatrix matrix = BuildMatrix(analyses, election, protests, bopts);
  EnsureDir(c.out);
  WriteFile(Join(c.out, "features.csv"), FormatFeaturesCsv(matrix));

  const CorrelationMatrix corr = Correlations(matrix);
  std::string csv = "feature";
  for (size_t f = 0; f < kFeatureCount; ++f) csv += "," + FeatureName(f);
  csv += "\n";
  for (size_t i = 0; i < kFeatureCount; ++i) {
    csv += FeatureName(i);
    for (size_t j = 0; j < kFeatureCount; ++j) csv += "," + Fixed6(corr[i][j]);
    csv += "\n";
  }
  WriteFile(Join(c.out, "correlation.csv"), csv);
  out << "featurize: " << matrix.rows.size() << " rows (" << matrix.Regions().size()
      << " regions x " << matrix.Dates().size() << " days) -> " << Join(c.out, "features.csv")
      << "\n";
  return 0;
}

FeatureMatrix LoadMatrix(const std::string &path) {
  RequireFile(path, "feature matrix");
  FeatureMatrix m = LoadFeaturesCsv(path);
  if (m.rows.empty()) Fail(Errc::kValidation, "feature matrix '" + path + "' has no rows");
  return m;
}

int CmdSelect(const RunConfig &c, std::ostream &out) {
  const FeatureMatrix matrix = LoadMatrix(c.matrix);
  const Rows rows = MatrixRows(matrix);
  const std::vector<int> labels = matrix.Labels();
  SelectionOptions opts;
  opts.folds = c.folds;
  opts.stale_limit = c.stale_limit;
  opts.seed = c.seed;
  opts.train = c.train;
  const SubsetEvaluation best = WrapperSelect(rows, labels, c.classifier, opts);
  const InclusionReport inclusion = FoldInclusion(rows, labels, c.classifier, opts);

  // Significance rank from inclusion, most included first.
  std::vector<size_t> order(kFeatureCount);
  for (size_t f = 0; f < kFeatureCount; ++f) order[f] = f;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return inclusion.counts[a] > inclusion.counts[b];
  });
  std::map<size_t, int> rank;
  for (size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<int>(k) + 1;
  const FeatureMask retained = PruneCorrelated(Correlations(matrix), c.corr_threshold, rank);

  ordered_json doc = SelectionReportJson(best, inclusion, c.classifier, opts);
  doc["corr_threshold"] = c.corr_threshold;
  doc["retained_after_pruning"] = FormatFeatureMask(retained);
  EnsureDir(c.out);
  WriteFile(Join(c.out, "selection_report.json"), Dump(doc));
  out << "select: best subset {" << FormatFeatureMask(best.subset) << "} cv accuracy "
      << best.cv_accuracy << "\n";
  for (size_t f = 0; f < kFeatureCount; ++f) {
    out << "  " << FeatureName(f) << " in " << 100.0 * inclusion.fraction[f] << "% of folds\n";
  }
  return 0;
}

int CmdTrain(const RunConfig &c, std::ostream &out) {
  const FeatureMatrix matrix = LoadMatrix(c.matrix);
  const Rows rows = ProjectRows(MatrixRows(matrix), c.features);
  FittedModel model = Train(c.classifier, rows, matrix.Labels(), c.train);
  model.feature_names.clear();
  for (size_t f = 0; f < kFeatureCount; ++f) {
    if (c.features[f]) model.feature_names.push_back(FeatureName(f));
  }
  EnsureDir(c.out);
  WriteFile(Join(c.out, "model.json"), Dump(ModelToJson(model)));
  out << "train: " << ClassifierName(c.classifier) << " on " << rows.size() << " rows, cutoff "
      << model.cutoff << "\n";
  return 0;
}

void WriteRunArtifacts(const RunConfig &c, const RunResult &run, std::ostream &out) {
  EnsureDir(c.out);
  WriteFile(Join(c.out, "report.json"), Dump(ReportJson(run, c.seed)));
  WriteFile(Join(c.out, "scores.csv"), FormatScoresCsv(run.predictions));
  WriteFile(Join(c.out, "model.json"), Dump(ModelToJson(run.final_model)));
  if (run.roc) {
    WriteFile(Join(c.out, "roc.csv"), FormatRocCsv(*run.roc));
  } else {
    spdlog::warn("pooled predictions contain a single class; roc.csv not written");
  }
  out << FormatDailyGrid(run.days);
  if (run.roc) out << "AUC " << Fixed6(run.roc->auc) << "\n";
}

std::pair<Date, Date> PredictionWindow(const RunConfig &c, const FeatureMatrix &matrix) {
  const auto dates = matrix.Dates();
  if (dates.size() < 2 && !c.start_date) {
    Fail(Errc::kValidation, "progressive evaluation needs at least two matrix dates");
  }
  return {c.start_date.value_or(dates.size() > 1 ? dates[1] : dates[0]),
          c.end_date.value_or(dates.back())};
}

int CmdEvaluate(const RunConfig &c, std::ostream &out) {
  const FeatureMatrix matrix = LoadMatrix(c.matrix);
  const auto [start, end] = PredictionWindow(c, matrix);
  const RunResult run = ProgressiveRun(matrix, c.classifier, c.features, start, end, c.train);
  WriteRunArtifacts(c, run, out);
  return 0;
}

int CmdBaselines(const RunConfig &c, std::ostream &out) {
  const FeatureMatrix matrix = LoadMatrix(c.matrix);
  const auto [start, end] = PredictionWindow(c, matrix);
  const auto runs =
      SingleFeatureBaselines(matrix, c.baseline_features, start, end, c.classifier, c.train);
  ordered_json doc = ordered_json::object();
  for (const RunResult &run : runs) {
    doc[FormatFeatureMask(run.mask)] = ReportJson(run, c.seed);
    out << "Feature " << FormatFeatureMask(run.mask) << "\n" << FormatDailyGrid(run.days) << "\n";
  }
  EnsureDir(c.out);
  WriteFile(Join(c.out, "baselines.json"), Dump(doc));
  return 0;
}

int CmdTransfer(const RunConfig &c, std::ostream &out) {
  if (c.test_matrix.empty()) Fail(Errc::kValidation, "transfer needs --test-matrix");
  const FeatureMatrix train = LoadMatrix(c.matrix);
  RequireFile(c.test_matrix, "test matrix");
  const FeatureMatrix test = LoadFeaturesCsv(c.test_matrix);
  const RunResult run = TransferRun(train, test, c.classifier, c.features, c.train);
  WriteRunArtifacts(c, run, out);
  return 0;
}

int CmdWatch(const RunConfig &c, std::ostream &out) {
  RequireFile(c.tweets, "tweets file");
  const Corpus corpus = Ingest(c.tweets, DefaultRegionSet()).records;
  const auto window = std::chrono::seconds{static_cast<long long>(c.signal_window_hours * 3600)};
  const auto triggers = ScanSignals(corpus, c.keywords, window, c.signal_threshold);
  EnsureDir(c.out);
  WriteFile(Join(c.out, "signals.csv"), FormatSignalsCsv(triggers));
  HashtagRanking ranking;
  auto fired = std::find_if(triggers.begin(), triggers.end(),
                            [](const SignalTrigger &t) { return t.fired; });
  if (fired != triggers.end()) {
    ranking = TrendingHashtags(corpus, *fired, c.keywords, c.top_k);
    out << "watch: first signal window " << FormatTimestamp(fired->window_start) << " with "
        << fired->keyword_count << " keyword tweets\n";
  } else {
    out << "watch: no window reached the threshold of " << c.signal_threshold << "\n";
  }
  WriteFile(Join(c.out, "hashtags.csv"), FormatHashtagsCsv(ranking));
  for (const HashtagShare &h : ranking) {
    out << "  " << h.hashtag << " " << h.count << " (" << Fixed6(h.share) << ")\n";
  }
  return 0;
}

int CmdRoc(const RunConfig &c, std::ostream &out) {
  RequireFile(c.scores, "scores file");
  const auto scored = ParseScoresCsv(ReadFile(c.scores));
  const RocCurve curve = Roc(scored);
  EnsureDir(c.out);
  WriteFile(Join(c.out, "roc.csv"), FormatRocCsv(curve));
  out << "roc: " << curve.points.size() << " points, AUC " << Fixed6(curve.auc) << "\n";
  return 0;
}

// ---- flag plumbing ----------------------------------------------------------

struct Flags {
  std::map<std::string, std::string> values;

  void Add(CLI::App *app, const std::string &name, const std::string &help) {
    app->add_option("--" + name, values[name], help);
  }
};

void ApplyFlags(const CLI::App &sub, Flags &flags, RunConfig &c, bool *seed_given) {
  auto given = [&](const std::string &name) {
    auto *opt = sub.get_option_no_throw("--" + name);
    return opt != nullptr && opt->count() > 0;
  };
  auto str = [&](const std::string &name, std::string &target) {
    if (given(name)) target = flags.values[name];
  };
  auto date = [&](const std::string &name, std::optional<Date> &target) {
    if (given(name)) target = DateOrThrow(flags.values[name]);
  };
  auto number = [&](const std::string &name, auto &target) {
    if (!given(name)) return;
    try {
      using T = std::decay_t<decltype(target)>;
      if constexpr (std::is_floating_point_v<T>) {
        target = std::stod(flags.values[name]);
      } else {
        target = static_cast<T>(std::stoll(flags.values[name]));
      }
    } catch (const std::logic_error &) {
      Fail(Errc::kValidation, "--" + name + " expects a number");
    }
  };
  str("tweets", c.tweets);
  str("protests", c.protests);
  str("votes", c.votes);
  str("resources", c.resources_dir);
  str("templates", c.templates);
  str("generator", c.generator);
  str("matrix", c.matrix);
  str("test-matrix", c.test_matrix);
  str("scores", c.scores);
  str("out", c.out);
  if (given("classifier")) c.classifier = ParseClassifierKind(flags.values["classifier"]);
  if (given("features")) c.features = ParseFeatureMask(flags.values["features"]);
  if (given("baseline-features")) c.baseline_features = ParseFeatureList(flags.values["baseline-features"]);
  if (given("keywords")) {
    c.keywords.clear();
    for (const auto &k : SplitCsv(flags.values["keywords"])) {
      if (!k.empty()) c.keywords.insert(k);
    }
  }
  number("seed", c.seed);
  number("folds", c.folds);
  number("threshold", c.signal_threshold);
  number("window-hours", c.signal_window_hours);
  number("top-k", c.top_k);
  number("corr-threshold", c.corr_threshold);
  number("lead-threshold", c.lead_threshold);
  date("from", c.first_date);
  date("to", c.last_date);
  date("start", c.start_date);
  date("end", c.end_date);
  *seed_given = given("seed");
}

}  // namespace

void ApplyConfigJson(const json &doc, RunConfig &c) {
  if (!doc.is_object()) Fail(Errc::kParse, "config must be a JSON object");
  try {
    c.tweets = doc.value("tweets", c.tweets);
    c.protests = doc.value("protests", c.protests);
    c.votes = doc.value("votes", c.votes);
    c.resources_dir = doc.value("resources_dir", c.resources_dir);
    c.templates = doc.value("templates", c.templates);
    c.generator = doc.value("generator", c.generator);
    c.matrix = doc.value("matrix", c.matrix);
    c.test_matrix = doc.value("test_matrix", c.test_matrix);
    c.scores = doc.value("scores", c.scores);
    c.out = doc.value("out", c.out);
    if (doc.contains("classifier")) c.classifier = ParseClassifierKind(doc.at("classifier").get<std::string>());
    if (doc.contains("features")) c.features = ParseFeatureMask(doc.at("features").get<std::string>());
    if (doc.contains("baseline_features")) {
      c.baseline_features = ParseFeatureList(doc.at("baseline_features").get<std::string>());
    }
    c.seed = doc.value("seed", c.seed);
    c.folds = doc.value("folds", c.folds);
    c.stale_limit = doc.value("stale_limit", c.stale_limit);
    c.corr_threshold = doc.value("corr_threshold", c.corr_threshold);
    c.lead_threshold = doc.value("lead_threshold", c.lead_threshold);
    c.signal_threshold = doc.value("signal_threshold", c.signal_threshold);
    c.signal_window_hours = doc.value("signal_window_hours", c.signal_window_hours);
    c.top_k = doc.value("top_k", c.top_k);
    if (doc.contains("keywords")) c.keywords = doc.at("keywords").get<std::set<std::string>>();
    c.horizon_days = doc.value("horizon_days", c.horizon_days);
    c.utc_offset_minutes = doc.value("utc_offset_minutes", c.utc_offset_minutes);
    if (doc.contains("pace_mode")) c.pace_mode = ParsePaceMode(doc.at("pace_mode").get<std::string>());
    if (doc.contains("coverage_hours")) {
      for (const auto &[day, hours] : doc.at("coverage_hours").items()) {
        c.coverage_hours[DateOrThrow(day)] = hours.get<double>();
      }
    }
    for (const char *key : {"first_date", "last_date", "start_date", "end_date"}) {
      if (!doc.contains(key)) continue;
      const Date d = DateOrThrow(doc.at(key).get<std::string>());
      std::string k = key;
      (k == "first_date" ? c.first_date
       : k == "last_date" ? c.last_date
       : k == "start_date" ? c.start_date
                           : c.end_date) = d;
    }
    if (doc.contains("relevance")) {
      const auto &r = doc.at("relevance");
      c.relevance.campaign_hashtags = r.value("campaign_hashtags", c.relevance.campaign_hashtags);
      c.relevance.related_hashtags = r.value("related_hashtags", c.relevance.related_hashtags);
      c.relevance.spam_phrases = r.value("spam_phrases", c.relevance.spam_phrases);
      c.relevance.max_unrelated_hashtags =
          r.value("max_unrelated_hashtags", c.relevance.max_unrelated_hashtags);
      c.relevance.drop_url_only = r.value("drop_url_only", c.relevance.drop_url_only);
    }
    if (doc.contains("train")) {
      const auto &t = doc.at("train");
      c.train.logit.ridge = t.value("ridge", c.train.logit.ridge);
      c.train.logit.tol = t.value("tol", c.train.logit.tol);
      c.train.logit.max_iter = t.value("max_iter", c.train.logit.max_iter);
      c.train.naive_bayes.var_floor = t.value("var_floor", c.train.naive_bayes.var_floor);
      c.train.tree.max_depth = t.value("max_depth", c.train.tree.max_depth);
      c.train.tree.min_leaf = t.value("min_leaf", c.train.tree.min_leaf);
      c.train.svm.reg = t.value("svm_reg", c.train.svm.reg);
      c.train.svm.epochs = t.value("svm_epochs", c.train.svm.epochs);
    }
  } catch (const json::exception &e) {
    Fail(Errc::kParse, std::string("config: ") + e.what());
  }
}

int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  ConfigureLogging();
  CLI::App app{"Protest forecasting from geo-tagged short messages", "unrest"};
  app.require_subcommand(1);

  struct Command {
    std::string name, help;
    std::vector<std::string> flags;
  };
  const std::vector<std::string> common = {"config", "seed", "out", "resources"};
  const std::vector<Command> commands = {
      {"simulate", "generate a synthetic corpus, protests.csv and votes.csv",
       {"generator", "templates", "lead-threshold"}},
      {"ingest", "parse and cleanse tweets.jsonl", {"tweets"}},
      {"featurize", "build features.csv from tweets, protests and votes",
       {"tweets", "protests", "votes", "from", "to", "lead-threshold"}},
      {"select", "wrapper feature selection with fold inclusion",
       {"matrix", "classifier", "folds", "corr-threshold"}},
      {"train", "fit one model on the whole matrix", {"matrix", "classifier", "features"}},
      {"evaluate", "progressive day-by-day evaluation",
       {"matrix", "classifier", "features", "start", "end"}},
      {"baselines", "single-feature progressive runs",
       {"matrix", "classifier", "baseline-features", "start", "end"}},
      {"transfer", "train on one event, predict another",
       {"matrix", "test-matrix", "classifier", "features"}},
      {"watch", "keyword signal windows and trending hashtags",
       {"tweets", "keywords", "window-hours", "threshold", "top-k"}},
      {"roc", "ROC curve from scores.csv", {"scores"}},
  };
  const std::map<std::string, std::string> help = {
      {"config", "JSON run configuration; flags override it"},
      {"seed", "random seed"},
      {"out", "output directory"},
      {"resources", "directory with lexicons, gazetteer and templates"},
      {"generator", "generator config JSON"},
      {"templates", "tweet templates file"},
      {"lead-threshold", "county lead (votes) for the lead flag"},
      {"tweets", "tweets.jsonl"},
      {"protests", "protests.csv"},
      {"votes", "votes.csv"},
      {"from", "first matrix date (YYYY-MM-DD)"},
      {"to", "last matrix date (YYYY-MM-DD)"},
      {"matrix", "features.csv"},
      {"test-matrix", "features.csv of the event to predict"},
      {"classifier", "logit|nb|tree|svm"},
      {"features", "feature mask: all, tweet, event, f1,f3,... or 0/1 string"},
      {"baseline-features", "features run one at a time (default f1,f2,f3)"},
      {"folds", "cross-validation folds"},
      {"corr-threshold", "absolute Pearson above which features are pruned"},
      {"start", "first prediction day"},
      {"end", "last prediction day"},
      {"keywords", "comma-separated signal keywords"},
      {"window-hours", "signal window length in hours"},
      {"threshold", "keyword tweets per window that fire a signal"},
      {"top-k", "hashtags to report"},
      {"scores", "scores.csv written by evaluate or transfer"},
  };

  std::map<std::string, Flags> flags;
  std::map<std::string, CLI::App *> subs;
  for (const Command &cmd : commands) {
    CLI::App *sub = app.add_subcommand(cmd.name, cmd.help);
    subs[cmd.name] = sub;
    for (const std::string &f : common) flags[cmd.name].Add(sub, f, help.at(f));
    for (const std::string &f : cmd.flags) flags[cmd.name].Add(sub, f, help.at(f));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "unrest: E-USAGE: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    for (const Command &cmd : commands) {
      CLI::App *sub = subs[cmd.name];
      if (!sub->parsed()) continue;
      RunConfig config;
      Flags &f = flags[cmd.name];
      if (sub->get_option("--config")->count() > 0) {
        const std::string path = f.values["config"];
        RequireFile(path, "config");
        json doc = json::parse(ReadFile(path), nullptr, false);
        if (doc.is_discarded()) Fail(Errc::kParse, "config '" + path + "' is not valid JSON");
        ApplyConfigJson(doc, config);
      }
      bool seed_given = false;
      ApplyFlags(*sub, f, config, &seed_given);
      spdlog::info("{}: seed {}", cmd.name, config.seed);

      if (cmd.name == "simulate") return CmdSimulate(config, seed_given, out);
      if (cmd.name == "ingest") return CmdIngest(config, out);
      if (cmd.name == "featurize") return CmdFeaturize(config, out);
      if (cmd.name == "select") return CmdSelect(config, out);
      if (cmd.name == "train") return CmdTrain(config, out);
      if (cmd.name == "evaluate") return CmdEvaluate(config, out);
      if (cmd.name == "baselines") return CmdBaselines(config, out);
      if (cmd.name == "transfer") return CmdTransfer(config, out);
      if (cmd.name == "watch") return CmdWatch(config, out);
      if (cmd.name == "roc") return CmdRoc(config, out);
    }
    Fail(Errc::kInvariant, "no command dispatched");
  } catch (const Error &e) {
    err << "unrest: " << ErrcName(e.code()) << ": " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception &e) {
    err << "unrest: " << ErrcName(Errc::kInvariant) << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace unrest::cli
