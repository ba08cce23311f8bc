#include "campaign/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace campaign {

void ExperimentConfig::validate() const {
  windowing.validate();
  if (folds < 2) throw InvalidArgument("folds must be at least 2");
  if (!(min_auc_gain > 0)) throw InvalidArgument("min_auc_gain must be positive");
  if (max_selected < 1) throw InvalidArgument("max_selected must be at least 1");
  if (length < 1 || length > windowing.series_length) throw InvalidArgument("L must be in [1, series length]");
  if (scorer.k < 1) throw InvalidArgument("K must be positive");
  if (scorer.coarsen_width < 1) throw InvalidArgument("coarsen width must be positive");
  if (scorer.word_length < 1 || scorer.word_length > static_cast<std::size_t>(length)) {
    throw InvalidArgument("word length must be in [1, L]");
  }
  for (double s : shift_sigmas) {
    if (!(s >= 0)) throw InvalidArgument("shift sigmas must be non-negative");
  }
  for (const auto& c : candidates) feature_index(c);
  observation_end_index(delay_minutes, windowing);
}

Json to_json(const ExperimentConfig& c) {
  return Json{{"delay", c.delay_minutes},
              {"length", c.length},
              {"classifier", std::string(to_string(c.classifier))},
              {"folds", c.folds},
              {"seed", c.seed},
              {"min_auc_gain", c.min_auc_gain},
              {"max_selected", c.max_selected},
              {"shift_sigmas", c.shift_sigmas},
              {"nested", c.nested},
              {"candidates", c.candidates},
              {"k", c.scorer.k},
              {"coarsen_width", c.scorer.coarsen_width},
              {"word_length", c.scorer.word_length},
              {"alphabet_size", c.scorer.alphabet_size},
              {"windowing",
               {{"window_length", c.windowing.window_length},
                {"slide", c.windowing.slide},
                {"series_length", c.windowing.series_length},
                {"points_before_trending", c.windowing.points_before_trending}}}};
}

ExperimentConfig experiment_config_from_json(const Json& j) {
  if (!j.is_object()) throw DataError("experiment config must be a JSON object");
  static const std::set<std::string> known{"delay", "length", "classifier", "folds", "seed", "min_auc_gain",
                                           "max_selected", "shift_sigmas", "nested", "candidates", "k",
                                           "coarsen_width", "word_length", "alphabet_size", "windowing"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw DataError("unknown config key: " + key);
  }
  ExperimentConfig c;
  try {
    c.delay_minutes = j.value("delay", c.delay_minutes);
    c.length = j.value("length", c.length);
    if (j.contains("classifier")) c.classifier = parse_classifier(j.at("classifier").get<std::string>());
    c.folds = j.value("folds", c.folds);
    c.seed = j.value("seed", c.seed);
    c.min_auc_gain = j.value("min_auc_gain", c.min_auc_gain);
    c.max_selected = j.value("max_selected", c.max_selected);
    c.shift_sigmas = j.value("shift_sigmas", c.shift_sigmas);
    c.nested = j.value("nested", c.nested);
    c.candidates = j.value("candidates", c.candidates);
    c.scorer.k = j.value("k", c.scorer.k);
    c.scorer.coarsen_width = j.value("coarsen_width", c.scorer.coarsen_width);
    c.scorer.word_length = j.value("word_length", c.scorer.word_length);
    c.scorer.alphabet_size = j.value("alphabet_size", c.scorer.alphabet_size);
    if (j.contains("windowing")) {
      const auto& w = j.at("windowing");
      c.windowing.window_length = w.value("window_length", c.windowing.window_length);
      c.windowing.slide = w.value("slide", c.windowing.slide);
      c.windowing.series_length = w.value("series_length", c.windowing.series_length);
      c.windowing.points_before_trending = w.value("points_before_trending", c.windowing.points_before_trending);
    }
  } catch (const Json::exception& e) {
    throw DataError(std::string("bad experiment config: ") + e.what());
  }
  return c;
}

namespace {

Json real_to_json(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

double real_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw DataError("bad real value: " + s);
  }
  return j.get<double>();
}

std::vector<std::size_t> candidate_rows(const ExperimentConfig& config) {
  std::vector<std::size_t> rows;
  if (config.candidates.empty()) {
    rows.resize(kFeatureCount);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  } else {
    for (const auto& c : config.candidates) rows.push_back(feature_index(c));
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  }
  return rows;
}

ScorerParams scorer_params(const ExperimentConfig& config) {
  ScorerParams p = config.scorer;
  p.seed = config.seed;
  return p;
}

std::vector<std::size_t> all_members(const ObservationSet& data) {
  std::vector<std::size_t> m(data.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return m;
}

ObservationSet restrict_features(const ObservationSet& data, std::span<const std::size_t> features) {
  ObservationSet out;
  out.hashtags = data.hashtags;
  out.labels = data.labels;
  out.length = data.length;
  for (auto f : features) out.feature_names.push_back(data.feature_names.at(f));
  out.values.reserve(data.size() * features.size() * data.length);
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (auto f : features) {
      const auto s = data.series(i, f);
      out.values.insert(out.values.end(), s.begin(), s.end());
    }
  }
  return out;
}

std::vector<std::string> names_of(const ObservationSet& data, std::span<const std::size_t> features) {
  std::vector<std::string> out;
  for (auto f : features) out.push_back(data.feature_names.at(f));
  return out;
}

EvaluationReport make_report(const ObservationSet& data, const CvPlan& plan, const std::vector<double>& scores,
                             const ExperimentConfig& config) {
  EvaluationReport r;
  r.classifier = std::string(to_string(config.classifier));
  r.delay_minutes = config.delay_minutes;
  r.length = config.length;
  r.folds = config.folds;
  r.seed = config.seed;
  r.nested = config.nested;
  const auto fa = fold_auc(plan, data.labels, scores);
  r.per_fold_auc = fa.per_fold;
  r.mean_auc = fa.mean;
  r.auc_std_error = fa.std_error;

  std::vector<Label> labels;
  for (auto m : plan.members) labels.push_back(data.labels[m]);
  r.roc_points = roc_curve(scores, labels);
  const auto best = best_f1_threshold(scores, labels);
  r.best_threshold = best.threshold;
  r.best_f1 = best.f1;
  for (std::size_t m = 0; m < plan.members.size(); ++m) {
    const auto i = plan.members[m];
    r.per_instance_scores[data.hashtags[i]] = {scores[m], data.labels[i], plan.fold_of[m]};
  }
  for (const auto& [tag, s] : r.per_instance_scores) {
    if ((s.score > r.best_threshold) != is_promoted(s.label)) r.misclassified.push_back(tag);
  }
  return r;
}

double mean_fold_auc(const SubsetScorer& scorer, std::size_t plan, std::span<const Label> labels,
                     std::span<const std::size_t> subset) {
  return fold_auc(scorer.plans()[plan], labels, scorer.cv_scores(plan, subset)).mean;
}

std::vector<NamedStep> named_trace(const ObservationSet& data, std::span<const SelectionStep> trace) {
  std::vector<NamedStep> out;
  for (const auto& s : trace) out.push_back({data.feature_names.at(s.feature), s.auc});
  return out;
}

SelectionConfig selection_config(const ExperimentConfig& config) {
  return {config.min_auc_gain, config.max_selected};
}

}  // namespace

Json to_json(const EvaluationReport& r) {
  Json roc = Json::array();
  for (const auto& p : r.roc_points) roc.push_back({p.fpr, p.tpr});
  Json instances = Json::object();
  for (const auto& [tag, s] : r.per_instance_scores) {
    instances[tag] = {{"score", s.score}, {"label", std::string(to_string(s.label))}, {"fold", s.fold}};
  }
  Json trace = Json::array();
  for (const auto& steps : r.selection_trace) {
    Json t = Json::array();
    for (const auto& s : steps) t.push_back({{"feature", s.feature}, {"auc", s.auc}});
    trace.push_back(t);
  }
  return Json{{"classifier", r.classifier},
              {"delay", r.delay_minutes},
              {"length", r.length},
              {"folds", r.folds},
              {"seed", r.seed},
              {"nested", r.nested},
              {"mean_auc", r.mean_auc},
              {"auc_std_error", r.auc_std_error},
              {"per_fold_auc", r.per_fold_auc},
              {"roc_points", roc},
              {"best_threshold", real_to_json(r.best_threshold)},
              {"best_f1", r.best_f1},
              {"per_instance_scores", instances},
              {"misclassified", r.misclassified},
              {"selected_features", r.selected_features},
              {"selection_trace", trace}};
}

EvaluationReport evaluation_report_from_json(const Json& j) {
  EvaluationReport r;
  r.classifier = j.at("classifier").get<std::string>();
  r.delay_minutes = j.at("delay").get<int>();
  r.length = j.at("length").get<int>();
  r.folds = j.at("folds").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.nested = j.at("nested").get<bool>();
  r.mean_auc = j.at("mean_auc").get<double>();
  r.auc_std_error = j.at("auc_std_error").get<double>();
  r.per_fold_auc = j.at("per_fold_auc").get<std::vector<double>>();
  for (const auto& p : j.at("roc_points")) r.roc_points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  r.best_threshold = real_from_json(j.at("best_threshold"));
  r.best_f1 = j.at("best_f1").get<double>();
  for (const auto& [tag, s] : j.at("per_instance_scores").items()) {
    r.per_instance_scores[tag] = {s.at("score").get<double>(), parse_label(s.at("label").get<std::string>()),
                                  s.at("fold").get<int>()};
  }
  r.misclassified = j.at("misclassified").get<std::vector<std::string>>();
  r.selected_features = j.at("selected_features").get<std::vector<std::vector<std::string>>>();
  for (const auto& steps : j.at("selection_trace")) {
    std::vector<NamedStep> t;
    for (const auto& s : steps) t.push_back({s.at("feature").get<std::string>(), s.at("auc").get<double>()});
    r.selection_trace.push_back(std::move(t));
  }
  return r;
}

std::string roc_csv(const EvaluationReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "fpr,tpr\n";
  for (const auto& p : report.roc_points) out << p.fpr << ',' << p.tpr << '\n';
  return out.str();
}

EvaluationReport cross_validate(const ObservationSet& data, std::span<const std::size_t> features,
                                const ExperimentConfig& config) {
  config.validate();
  if (features.empty()) throw InvalidArgument("no features to cross-validate");
  const auto subset_data = restrict_features(data, features);
  const auto members = all_members(subset_data);
  auto plan = make_plan(subset_data.labels, members, config.folds, config.seed);
  const auto scorer = make_scorer(config.classifier, subset_data, {plan}, scorer_params(config));
  std::vector<std::size_t> all(features.size());
  for (std::size_t f = 0; f < all.size(); ++f) all[f] = f;
  auto report = make_report(subset_data, plan, scorer->cv_scores(0, all), config);
  report.selected_features = {names_of(data, features)};
  return report;
}

Json to_json(const FeatureSelection& s) {
  Json trace = Json::array();
  for (const auto& step : s.trace) trace.push_back({{"feature", step.feature}, {"auc", step.auc}});
  return Json{{"selected", s.selected}, {"auc", s.auc}, {"trace", trace}};
}

FeatureSelection select_features(std::span<const TrendMatrix> corpus, const ExperimentConfig& config,
                                 std::span<const int> shifts) {
  config.validate();
  const auto data = observe(corpus, config.delay_minutes, config.length, config.windowing, shifts,
                            candidate_rows(config));
  const auto outer = make_plan(data.labels, all_members(data), config.folds, config.seed);
  std::vector<std::size_t> candidates(data.feature_count());
  for (std::size_t f = 0; f < candidates.size(); ++f) candidates[f] = f;
  const auto scorer = make_scorer(config.classifier, data, {outer}, scorer_params(config));
  const auto sel = greedy_forward_select(
      candidates, [&](std::span<const std::size_t> s) { return mean_fold_auc(*scorer, 0, data.labels, s); },
      selection_config(config));
  return {names_of(data, sel.selected), named_trace(data, sel.trace), sel.auc};
}

EvaluationReport run_experiment(std::span<const TrendMatrix> corpus, const ExperimentConfig& config,
                                std::span<const int> shifts) {
  config.validate();
  const auto rows = candidate_rows(config);
  const auto data = observe(corpus, config.delay_minutes, config.length, config.windowing, shifts, rows);
  const auto members = all_members(data);
  const auto outer = make_plan(data.labels, members, config.folds, config.seed);
  std::vector<std::size_t> candidates(data.feature_count());
  for (std::size_t f = 0; f < candidates.size(); ++f) candidates[f] = f;

  if (!config.nested) {
    const auto scorer = make_scorer(config.classifier, data, {outer}, scorer_params(config));
    const auto sel = greedy_forward_select(
        candidates, [&](std::span<const std::size_t> s) { return mean_fold_auc(*scorer, 0, data.labels, s); },
        selection_config(config));
    // the final report re-runs CV on the frozen selection
    auto report = cross_validate(data, sel.selected, config);
    report.selection_trace = {named_trace(data, sel.trace)};
    return report;
  }

  // nested: selection sees only each outer fold's training part
  std::vector<CvPlan> plans{outer};
  for (int g = 0; g < config.folds; ++g) {
    std::vector<std::size_t> inner;
    for (std::size_t m = 0; m < outer.members.size(); ++m) {
      if (outer.fold_of[m] != g) inner.push_back(outer.members[m]);
    }
    plans.push_back(make_plan(data.labels, inner, config.folds, derive_seed(config.seed, static_cast<std::uint64_t>(g))));
  }
  const auto scorer = make_scorer(config.classifier, data, std::move(plans), scorer_params(config));
  std::vector<double> scores(outer.members.size(), 0.0);
  std::vector<std::vector<std::string>> selected;
  std::vector<std::vector<NamedStep>> traces;
  for (int g = 0; g < config.folds; ++g) {
    const std::size_t inner_plan = static_cast<std::size_t>(g) + 1;
    const auto sel = greedy_forward_select(
        candidates,
        [&](std::span<const std::size_t> s) { return mean_fold_auc(*scorer, inner_plan, data.labels, s); },
        selection_config(config));
    const auto fold_scores = scorer->cv_scores(0, sel.selected);
    for (std::size_t m = 0; m < outer.members.size(); ++m) {
      if (outer.fold_of[m] == g) scores[m] = fold_scores[m];
    }
    selected.push_back(names_of(data, sel.selected));
    traces.push_back(named_trace(data, sel.trace));
  }
  auto report = make_report(data, outer, scores, config);
  report.selected_features = std::move(selected);
  report.selection_trace = std::move(traces);
  return report;
}

std::map<int, EvaluationReport> delay_sweep(std::span<const TrendMatrix> corpus, std::span<const int> delays,
                                            const ExperimentConfig& config) {
  std::map<int, EvaluationReport> out;
  for (int d : delays) {
    auto c = config;
    c.delay_minutes = d;
    out[d] = run_experiment(corpus, c);
  }
  return out;
}

std::vector<int> draw_shifts(std::span<const TrendMatrix> corpus, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0)) throw InvalidArgument("sigma must be non-negative");
  std::vector<int> shifts;
  shifts.reserve(corpus.size());
  for (const auto& t : corpus) {
    std::mt19937_64 gen(derive_seed(seed, t.trend.hashtag));
    // Box-Muller on 53-bit uniforms; spelled out so draws do not depend on the standard library
    const double u1 = (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    shifts.push_back(static_cast<int>(std::lround(sigma * z)));
  }
  return shifts;
}

std::map<double, EvaluationReport> shift_experiment(std::span<const TrendMatrix> corpus,
                                                    std::span<const double> sigmas, const ExperimentConfig& config) {
  std::map<double, EvaluationReport> out;
  for (double s : sigmas) out[s] = run_experiment(corpus, config, draw_shifts(corpus, s, config.seed));
  return out;
}

// ---------------------------------------------------------------- corpora on disk

std::filesystem::path tweet_file(const std::filesystem::path& corpus_dir, std::string_view hashtag) {
  static constexpr char hex[] = "0123456789abcdef";
  std::string name;
  for (unsigned char c : hashtag) {
    if (std::isalnum(c) || c == '_' || c == '-') {
      name += static_cast<char>(c);
    } else {
      name += '%';
      name += hex[c >> 4];
      name += hex[c & 15];
    }
  }
  return corpus_dir / "tweets" / (name + ".jsonl");
}

std::vector<TrendMatrix> extract_corpus(const std::filesystem::path& corpus_dir, const Lexicons& lexicons,
                                        const WindowingConfig& windowing) {
  const auto manifest = load_manifest(corpus_dir / "manifest.jsonl");
  std::vector<TrendMatrix> out;
  out.reserve(manifest.size());
  for (const auto& trend : manifest) {
    const auto tweets = load_tweets(tweet_file(corpus_dir, trend.hashtag), trend.hashtag, trend.trending_time);
    const auto windows = window_slices(tweets, windowing, trend.trending_time);
    out.push_back({trend, extract_matrix(tweets, windows, lexicons)});
  }
  return out;
}

Json to_json(const TrendMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.matrix.rows; ++r) {
    const auto row = m.matrix.row(r);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  Json j = trend_to_json(m.trend);
  j["features"] = feature_names();
  j["values"] = rows;
  return j;
}

TrendMatrix trend_matrix_from_json(const Json& j) {
  TrendMatrix m;
  m.trend = trend_from_json(j);
  const auto names = j.at("features").get<std::vector<std::string>>();
  if (names != feature_names()) throw DataError("matrix for " + m.trend.hashtag + " has a different feature registry");
  const auto& rows = j.at("values");
  if (rows.size() != names.size()) throw DataError("matrix row count mismatch for " + m.trend.hashtag);
  const std::size_t cols = rows.empty() ? 0 : rows.at(0).size();
  m.matrix = FeatureMatrix(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto row = rows.at(r).get<std::vector<double>>();
    if (row.size() != cols) throw DataError("ragged matrix for " + m.trend.hashtag);
    std::copy(row.begin(), row.end(), m.matrix.values.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

std::vector<TrendMatrix> load_matrices(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json" && e.path().filename() != "provenance.json") {
      files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<TrendMatrix> out;
  std::set<std::string> seen;
  for (const auto& f : files) {
    Json j;
    try {
      j = Json::parse(read_file(f));
    } catch (const Json::parse_error& e) {
      throw ParseError(f.string() + ": " + e.what(), 1);
    }
    out.push_back(trend_matrix_from_json(j));
    if (!seen.insert(out.back().trend.hashtag).second) throw DuplicateError("#" + out.back().trend.hashtag);
  }
  if (out.empty()) throw DataError("no matrix documents in " + dir.string());
  return out;
}

}  // namespace campaign
