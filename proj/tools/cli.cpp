#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "campaign/experiment.hpp"
#include "campaign/synth.hpp"

#ifndef CAMPAIGN_DEFAULT_LEXICONS
#define CAMPAIGN_DEFAULT_LEXICONS "data/lexicons"
#endif

namespace campaign::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kVersion = "1.0.0";

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  int jobs = 0;
  std::string lexicon_dir = CAMPAIGN_DEFAULT_LEXICONS;
  std::vector<std::string> overrides;

  std::string corpus_dir;
  std::string matrix_dir;
  std::string out;

  // experiment flags
  std::optional<int> delay;
  std::optional<int> length;
  std::optional<std::string> classifier;
  std::optional<int> folds;
  std::optional<double> min_gain;
  std::optional<std::size_t> max_selected;
  bool nested = false;
  std::vector<std::string> candidates;

  // synth
  int n_promoted = 60;
  int n_organic = 600;
  std::string params_path;
  std::optional<double> volume_scale;
  bool identical_classes = false;

  // train / classify / sweeps
  std::vector<std::string> features;
  std::string selection_path;
  std::string model_path;
  std::string roc_csv;
  std::vector<int> delays{-80, -40, 0, 40, 80};
  std::vector<double> sigmas;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json load_config_file(const std::string& path) {
  if (path.empty()) return Json::object();
  try {
    auto j = Json::parse(read_file(path));
    if (!j.is_object()) throw DataError("config file must hold a JSON object");
    return j;
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

// key=value with dotted keys; the value is parsed as JSON when possible.
void apply_override(Json& target, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("override must look like key=value: " + assignment);
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  Json value;
  try {
    value = Json::parse(raw);
  } catch (const Json::parse_error&) {
    value = raw;
  }
  Json* node = &target;
  std::size_t pos = 0;
  while (true) {
    const auto dot = key.find('.', pos);
    const std::string part = key.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (dot == std::string::npos) {
      (*node)[part] = value;
      break;
    }
    node = &(*node)[part];
    pos = dot + 1;
  }
}

// Effective experiment config: defaults < config file < --set < flags. The
// --set overrides are already applied to `file`.
ExperimentConfig experiment_config(const Options& o, const Json& file) {
  Json j = to_json(ExperimentConfig{});
  if (file.contains("seed")) j["seed"] = file.at("seed");
  if (file.contains("experiment")) j.merge_patch(file.at("experiment"));
  ExperimentConfig c = experiment_config_from_json(j);
  if (o.seed) c.seed = *o.seed;
  if (o.delay) c.delay_minutes = *o.delay;
  if (o.length) c.length = *o.length;
  if (o.classifier) c.classifier = parse_classifier(*o.classifier);
  if (o.folds) c.folds = *o.folds;
  if (o.min_gain) c.min_auc_gain = *o.min_gain;
  if (o.max_selected) c.max_selected = *o.max_selected;
  if (o.nested) c.nested = true;
  if (!o.candidates.empty()) c.candidates = o.candidates;
  if (!o.sigmas.empty()) c.shift_sigmas = o.sigmas;
  c.validate();
  return c;
}

SynthParams synth_params(const Options& o, const Json& file) {
  Json j = to_json(SynthParams::defaults());
  if (file.contains("synth")) j.merge_patch(file.at("synth"));
  if (!o.params_path.empty()) j.merge_patch(load_config_file(o.params_path));
  // --set still wins over the --params file
  for (const auto& s : o.overrides) {
    if (s.rfind("synth.", 0) == 0) apply_override(j, s.substr(6));
  }
  SynthParams p = synth_params_from_json(j);
  if (o.volume_scale) p.volume_scale = *o.volume_scale;
  if (o.identical_classes) p = p.without_class_differences();
  p.validate();
  return p;
}

bool has_seed(const Options& o, const Json& file) {
  return o.seed || file.contains("seed") || (file.contains("experiment") && file.at("experiment").contains("seed"));
}

std::uint64_t seed_of(const Options& o, const Json& file) {
  if (o.seed) return *o.seed;
  if (file.contains("seed")) return file.at("seed").get<std::uint64_t>();
  if (file.contains("experiment") && file.at("experiment").contains("seed")) {
    return file.at("experiment").at("seed").get<std::uint64_t>();
  }
  return 0;
}

Json lexicon_hashes(const std::string& dir) {
  Json out = Json::object();
  for (auto name : {Lexicons::kPosFile, Lexicons::kHappinessFile, Lexicons::kVadFile, Lexicons::kPolarityFile,
                    Lexicons::kEmoticonFile}) {
    const fs::path p = fs::path(dir) / name;
    out[std::string(name)] = fs::exists(p) ? Json(hex64(fnv1a(read_file(p)))) : Json(nullptr);
  }
  return out;
}

void write_provenance(const fs::path& path, const std::string& subcommand, const Json& effective_config,
                      std::uint64_t seed, const std::string& lexicon_dir, const std::vector<std::string>& inputs) {
  Json j{{"tool_version", kVersion},
         {"subcommand", subcommand},
         {"config_hash", hex64(fnv1a(effective_config.dump()))},
         {"config", effective_config},
         {"seed", seed},
         {"lexicons", lexicon_hashes(lexicon_dir)},
         {"inputs", inputs}};
  write_file(path, j.dump(2) + "\n");
}

fs::path provenance_for(const fs::path& out, bool out_is_dir) {
  return out_is_dir ? out / "provenance.json" : fs::path(out.string() + ".provenance.json");
}

std::vector<TrendMatrix> load_input(const Options& o, const ExperimentConfig& config) {
  if (!o.matrix_dir.empty()) return load_matrices(o.matrix_dir);
  if (o.corpus_dir.empty()) throw UsageError("one of --corpus or --matrices is required");
  const auto lexicons = Lexicons::load_directory(o.lexicon_dir);
  return extract_corpus(o.corpus_dir, lexicons, config.windowing);
}

std::vector<std::string> input_list(const Options& o) {
  return {o.matrix_dir.empty() ? o.corpus_dir : o.matrix_dir};
}

void write_json(const fs::path& path, const Json& j) { write_file(path, j.dump(2) + "\n"); }

void log(std::ostream& err, const std::string& line) { err << "campaign: " << line << '\n'; }

// ---------------------------------------------------------------- subcommands

void cmd_synth(const Options& o, const Json& file, std::ostream& err) {
  const auto params = synth_params(o, file);
  const auto seed = seed_of(o, file);
  const auto lexicons = Lexicons::load_directory(o.lexicon_dir);
  const auto vocab = Vocabulary::from_lexicons(lexicons, params.vocabulary_size, derive_seed(seed, "vocabulary"));
  const auto corpus = generate_corpus(o.n_promoted, o.n_organic, params, vocab, seed);
  write_corpus(o.out, corpus);
  std::size_t tweets = 0;
  for (const auto& t : corpus) tweets += t.tweets.size();
  log(err, "wrote " + std::to_string(corpus.size()) + " trends, " + std::to_string(tweets) + " tweets to " + o.out);
  Json effective = to_json(params);
  effective["n_promoted"] = o.n_promoted;
  effective["n_organic"] = o.n_organic;
  write_provenance(provenance_for(o.out, true), "synth", effective, seed, o.lexicon_dir, {});
}

void cmd_extract(const Options& o, const Json& file, std::ostream& err) {
  const auto config = experiment_config(o, file);
  if (o.corpus_dir.empty()) throw UsageError("extract needs --corpus");
  const auto corpus = load_input(o, config);
  for (const auto& m : corpus) {
    const auto stem = tweet_file("", m.trend.hashtag).stem().string();
    write_file(fs::path(o.out) / (stem + ".json"), to_json(m).dump() + "\n");
  }
  log(err, "extracted " + std::to_string(corpus.size()) + " feature matrices to " + o.out);
  write_provenance(provenance_for(o.out, true), "extract", to_json(config), config.seed, o.lexicon_dir,
                   input_list(o));
}

void cmd_select(const Options& o, const Json& file, std::ostream& err) {
  const auto config = experiment_config(o, file);
  const auto corpus = load_input(o, config);
  const auto sel = select_features(corpus, config);
  write_json(o.out, to_json(sel));
  log(err, "selected " + std::to_string(sel.selected.size()) + " features, CV AUC " + std::to_string(sel.auc));
  write_provenance(provenance_for(o.out, false), "select", to_json(config), config.seed, o.lexicon_dir,
                   input_list(o));
}

std::vector<std::string> training_features(const Options& o) {
  if (!o.features.empty()) return o.features;
  if (o.selection_path.empty()) throw UsageError("train needs --features or --selection");
  Json j;
  try {
    j = Json::parse(read_file(o.selection_path));
  } catch (const Json::parse_error& e) {
    throw ParseError(o.selection_path + ": " + e.what(), 0);
  }
  auto names = j.at("selected").get<std::vector<std::string>>();
  if (names.empty()) throw DataError("selection in " + o.selection_path + " is empty");
  return names;
}

std::vector<std::size_t> rows_for(const std::vector<std::string>& names) {
  std::vector<std::size_t> rows;
  for (const auto& n : names) rows.push_back(feature_index(n));
  return rows;
}

void cmd_train(const Options& o, const Json& file, std::ostream& err) {
  const auto config = experiment_config(o, file);
  const auto names = training_features(o);
  const auto corpus = load_input(o, config);
  const auto data = observe(corpus, config.delay_minutes, config.length, config.windowing, {}, rows_for(names));
  std::vector<TrainingTrend> trends;
  std::vector<std::size_t> all(names.size());
  for (std::size_t f = 0; f < all.size(); ++f) all[f] = f;
  for (std::size_t i = 0; i < data.size(); ++i) trends.push_back({data.hashtags[i], data.labels[i], data.instance_series(i, all)});
  Json model;
  switch (config.classifier) {
    case ClassifierKind::knn_dtw:
      model = to_json(train_knn_dtw(trends, names, config.scorer.k, config.scorer.coarsen_width));
      break;
    case ClassifierKind::sax_vsm:
      model = to_json(sax_vsm_train(trends, names, config.scorer.word_length, config.scorer.alphabet_size));
      break;
    case ClassifierKind::knn_flat: model = to_json(train_knn_flat(trends, names, config.scorer.k)); break;
  }
  model["delay"] = config.delay_minutes;
  model["length"] = config.length;
  write_json(o.out, model);
  log(err, "trained " + std::string(to_string(config.classifier)) + " on " + std::to_string(trends.size()) + " trends");
  write_provenance(provenance_for(o.out, false), "train", to_json(config), config.seed, o.lexicon_dir,
                   input_list(o));
}

void cmd_classify(const Options& o, const Json& file, std::ostream& err) {
  auto config = experiment_config(o, file);
  if (o.model_path.empty()) throw UsageError("classify needs --model");
  Json model;
  try {
    model = Json::parse(read_file(o.model_path));
  } catch (const Json::parse_error& e) {
    throw ParseError(o.model_path + ": " + e.what(), 0);
  }
  const auto kind = parse_classifier(model.at("classifier").get<std::string>());
  if (!o.delay && model.contains("delay")) config.delay_minutes = model.at("delay").get<int>();
  if (!o.length && model.contains("length")) config.length = model.at("length").get<int>();
  const auto names = model.at("features").get<std::vector<std::string>>();
  const auto corpus = load_input(o, config);
  const auto data = observe(corpus, config.delay_minutes, config.length, config.windowing, {}, rows_for(names));
  std::vector<std::size_t> all(names.size());
  for (std::size_t f = 0; f < all.size(); ++f) all[f] = f;

  Json scores = Json::object();
  const auto dtw = kind == ClassifierKind::knn_dtw ? knn_dtw_from_json(model) : TrainedKnnDtw{};
  const auto bags = kind == ClassifierKind::sax_vsm ? word_bags_from_json(model) : WordBags{};
  const auto flat = kind == ClassifierKind::knn_flat ? knn_flat_from_json(model) : FlatKnnModel{};
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto q = data.instance_series(i, all);
    double s = 0;
    switch (kind) {
      case ClassifierKind::knn_dtw: s = knn_dtw_score(q, dtw); break;
      case ClassifierKind::sax_vsm:
        s = is_promoted(sax_vsm_classify(q, bags, derive_seed(config.seed, data.hashtags[i]))) ? 1.0 : 0.0;
        break;
      case ClassifierKind::knn_flat: s = knn_flat_score(q, flat); break;
    }
    scores[data.hashtags[i]] = {{"score", s}, {"label", std::string(to_string(data.labels[i]))}};
  }
  write_json(o.out, Json{{"classifier", std::string(to_string(kind))}, {"delay", config.delay_minutes},
                         {"scores", scores}});
  log(err, "scored " + std::to_string(data.size()) + " trends");
  write_provenance(provenance_for(o.out, false), "classify", to_json(config), config.seed, o.lexicon_dir,
                   {input_list(o).front(), o.model_path});
}

void cmd_evaluate(const Options& o, const Json& file, std::ostream& err) {
  const auto config = experiment_config(o, file);
  const auto corpus = load_input(o, config);
  const auto report = run_experiment(corpus, config);
  write_json(o.out, to_json(report));
  if (!o.roc_csv.empty()) write_file(o.roc_csv, roc_csv(report));
  log(err, std::string(to_string(config.classifier)) + " D=" + std::to_string(config.delay_minutes) +
               " mean AUC " + std::to_string(report.mean_auc));
  write_provenance(provenance_for(o.out, false), "evaluate", to_json(config), config.seed, o.lexicon_dir,
                   input_list(o));
}

void cmd_delay_sweep(const Options& o, const Json& file, std::ostream& err) {
  const auto config = experiment_config(o, file);
  const auto corpus = load_input(o, config);
  const auto reports = delay_sweep(corpus, o.delays, config);
  Json j = Json::object();
  for (const auto& [d, r] : reports) {
    j[std::to_string(d)] = to_json(r);
    log(err, "D=" + std::to_string(d) + " mean AUC " + std::to_string(r.mean_auc));
  }
  write_json(o.out, j);
  Json effective = to_json(config);
  effective["delays"] = o.delays;
  write_provenance(provenance_for(o.out, false), "delay-sweep", effective, config.seed, o.lexicon_dir,
                   input_list(o));
}

void cmd_shift_test(const Options& o, const Json& file, std::ostream& err) {
  const auto config = experiment_config(o, file);
  const auto corpus = load_input(o, config);
  const auto reports = shift_experiment(corpus, config.shift_sigmas, config);
  Json j = Json::object();
  for (const auto& [s, r] : reports) {
    std::ostringstream key;
    key << s;
    j[key.str()] = to_json(r);
    log(err, "sigma=" + key.str() + " mean AUC " + std::to_string(r.mean_auc));
  }
  write_json(o.out, j);
  write_provenance(provenance_for(o.out, false), "shift-test", to_json(config), config.seed, o.lexicon_dir,
                   input_list(o));
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--corpus", o.corpus_dir, "Corpus directory (manifest.jsonl + tweets/)");
  sub->add_option("--matrices", o.matrix_dir, "Directory of extracted feature matrices");
}

void add_experiment(CLI::App* sub, Options& o) {
  sub->add_option("--delay", o.delay, "Observation delay D in minutes");
  sub->add_option("--length", o.length, "Observation length L in points");
  sub->add_option("--classifier", o.classifier, "knn_dtw, sax_vsm or knn_flat");
  sub->add_option("--folds", o.folds, "Cross-validation folds");
  sub->add_option("--min-gain", o.min_gain, "Selection stops below this AUC gain");
  sub->add_option("--max-selected", o.max_selected, "Selection size cap");
  sub->add_flag("--nested", o.nested, "Select features inside each outer fold");
  sub->add_option("--candidates", o.candidates, "Candidate feature names (default: all)")->delimiter(',');
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Classify trending hashtags as promoted or organic from feature time series", "campaign"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.add_option("--config", o.config_path, "JSON config with optional \"experiment\" and \"synth\" sections");
  app.add_option("--seed", o.seed, "Seed for every stochastic step");
  app.add_option("--jobs", o.jobs, "Maximum worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--lexicons", o.lexicon_dir, "Lexicon directory");
  app.add_option("--set", o.overrides, "Override a config document key, e.g. experiment.folds=5 (repeatable)");

  auto* synth = app.add_subcommand("synth", "Generate a synthetic labeled corpus");
  synth->add_option("--out", o.out, "Output corpus directory")->required();
  synth->add_option("--promoted", o.n_promoted, "Number of promoted trends")->check(CLI::PositiveNumber);
  synth->add_option("--organic", o.n_organic, "Number of organic trends")->check(CLI::PositiveNumber);
  synth->add_option("--params", o.params_path, "Synth parameter JSON");
  synth->add_option("--volume-scale", o.volume_scale, "Multiplier on tweet volume");
  synth->add_flag("--identical-classes", o.identical_classes, "Give both classes the organic parameters");

  auto* extract = app.add_subcommand("extract", "Write one feature-matrix document per trend");
  add_input(extract, o);
  extract->add_option("--out", o.out, "Output directory")->required();

  auto* select = app.add_subcommand("select", "Greedy forward feature selection");
  add_input(select, o);
  add_experiment(select, o);
  select->add_option("--out", o.out, "Selection JSON")->required();

  auto* train = app.add_subcommand("train", "Train a classifier on the whole corpus");
  add_input(train, o);
  add_experiment(train, o);
  train->add_option("--features", o.features, "Feature names")->delimiter(',');
  train->add_option("--selection", o.selection_path, "Selection JSON from `select`");
  train->add_option("--out", o.out, "Model JSON")->required();

  auto* classify = app.add_subcommand("classify", "Score trends with a trained model");
  add_input(classify, o);
  add_experiment(classify, o);
  classify->add_option("--model", o.model_path, "Model JSON from `train`")->required();
  classify->add_option("--out", o.out, "Scores JSON")->required();

  auto* evaluate = app.add_subcommand("evaluate", "Selection plus cross-validated evaluation");
  add_input(evaluate, o);
  add_experiment(evaluate, o);
  evaluate->add_option("--out", o.out, "Report JSON")->required();
  evaluate->add_option("--roc-csv", o.roc_csv, "Also write ROC points as CSV");

  auto* sweep = app.add_subcommand("delay-sweep", "Evaluate at several delays");
  add_input(sweep, o);
  add_experiment(sweep, o);
  sweep->add_option("--delays", o.delays, "Delays in minutes")->delimiter(',');
  sweep->add_option("--out", o.out, "Reports JSON keyed by delay")->required();

  auto* shift = app.add_subcommand("shift-test", "Evaluate under random temporal shifts");
  add_input(shift, o);
  add_experiment(shift, o);
  shift->add_option("--sigmas", o.sigmas, "Shift standard deviations in slide steps")->delimiter(',');
  shift->add_option("--out", o.out, "Reports JSON keyed by sigma")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "campaign: " << e.what() << "\n\n" << app.help();
    return usage_error;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  static const std::vector<std::string> stochastic{"synth", "select", "evaluate", "delay-sweep", "shift-test",
                                                   "classify"};
  try {
    if (o.jobs > 0) omp_set_num_threads(o.jobs);
    Json file = load_config_file(o.config_path);
    for (const auto& a : o.overrides) apply_override(file, a);
    if (std::find(stochastic.begin(), stochastic.end(), name) != stochastic.end() && !has_seed(o, file)) {
      throw UsageError(name + " needs a seed (--seed or \"seed\" in the config)");
    }
    if (name == "synth") cmd_synth(o, file, err);
    else if (name == "extract") cmd_extract(o, file, err);
    else if (name == "select") cmd_select(o, file, err);
    else if (name == "train") cmd_train(o, file, err);
    else if (name == "classify") cmd_classify(o, file, err);
    else if (name == "evaluate") cmd_evaluate(o, file, err);
    else if (name == "delay-sweep") cmd_delay_sweep(o, file, err);
    else if (name == "shift-test") cmd_shift_test(o, file, err);
  } catch (const UsageError& e) {
    err << "campaign: " << e.what() << '\n';
    return usage_error;
  } catch (const InvalidArgument& e) {
    err << "campaign: " << e.what() << '\n';
    return usage_error;
  } catch (const DataError& e) {
    err << "campaign: " << e.what() << '\n';
    return data_error;
  } catch (const Json::exception& e) {
    err << "campaign: malformed document: " << e.what() << '\n';
    return data_error;
  } catch (const fs::filesystem_error& e) {
    err << "campaign: " << e.what() << '\n';
    return data_error;
  }
  return ok;
}

}  // namespace campaign::cli
