// Parallel kernels against their serial reference implementations.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "campaign/dtw.hpp"
#include "campaign/encoding.hpp"
#include "campaign/features.hpp"
#include "campaign/ingest.hpp"
#include "campaign/reference.hpp"
#include "campaign/synth.hpp"
#include "campaign/wrapper.hpp"

namespace {

using namespace campaign;

struct TrendFixture {
  Lexicons lexicons = Lexicons::load_directory(CAMPAIGN_LEXICONS);
  SyntheticTrend trend;
  std::vector<WindowSlice> windows;

  TrendFixture() {
    auto params = SynthParams::defaults();
    params.volume_scale = 0.5;
    const auto vocab = Vocabulary::from_lexicons(lexicons, params.vocabulary_size, 1);
    trend = generate_trend(Label::promoted, params, vocab, 17, "bench", params.epoch);
    windows = window_slices(trend.tweets, WindowingConfig{}, trend.trend.trending_time);
  }
};

const TrendFixture& trend_fixture() {
  static const TrendFixture f;
  return f;
}

void BM_ExtractParallel(benchmark::State& state) {
  const auto& f = trend_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(extract_matrix(f.trend.tweets, f.windows, f.lexicons));
  state.counters["tweets"] = static_cast<double>(f.trend.tweets.size());
}
BENCHMARK(BM_ExtractParallel)->Unit(benchmark::kMillisecond);

void BM_ExtractSerial(benchmark::State& state) {
  const auto& f = trend_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(reference::extract_matrix(f.trend.tweets, f.windows, f.lexicons));
  state.counters["tweets"] = static_cast<double>(f.trend.tweets.size());
}
BENCHMARK(BM_ExtractSerial)->Unit(benchmark::kMillisecond);

std::vector<std::vector<double>> coarse_series(std::size_t n) {
  std::mt19937_64 g(5);
  std::normal_distribution<double> d(0, 1);
  std::vector<std::vector<double>> out(n, std::vector<double>(35));
  for (auto& s : out) {
    for (auto& v : s) v = d(g);
    s = paa(s, 5).values;
  }
  return out;
}

void BM_PairwiseDtwParallel(benchmark::State& state) {
  const auto series = coarse_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_dtw_coarse(series));
}
BENCHMARK(BM_PairwiseDtwParallel)->Arg(200)->Arg(660)->Unit(benchmark::kMillisecond);

void BM_PairwiseDtwSerial(benchmark::State& state) {
  const auto series = coarse_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::pairwise_dtw(series));
}
BENCHMARK(BM_PairwiseDtwSerial)->Arg(200)->Arg(660)->Unit(benchmark::kMillisecond);

struct ScorerFixture {
  ObservationSet data;
  CvPlan plan;

  ScorerFixture() {
    std::mt19937_64 g(8);
    std::normal_distribution<double> d(0, 1);
    const std::size_t n = 300, features = 8;
    data.length = 35;
    for (std::size_t f = 0; f < features; ++f) data.feature_names.push_back("f" + std::to_string(f));
    for (std::size_t i = 0; i < n; ++i) {
      data.hashtags.push_back("t" + std::to_string(i));
      data.labels.push_back(i % 10 == 0 ? Label::promoted : Label::organic);
    }
    data.values.resize(n * features * data.length);
    for (auto& v : data.values) v = d(g);
    std::vector<std::size_t> members(n);
    std::iota(members.begin(), members.end(), std::size_t{0});
    plan = make_plan(data.labels, members, 10, 1);
  }
};

const ScorerFixture& scorer_fixture() {
  static const ScorerFixture f;
  return f;
}

// One greedy round over all features: cached scorer built once.
void BM_ScorerRoundCached(benchmark::State& state) {
  const auto& f = scorer_fixture();
  const auto kind = static_cast<ClassifierKind>(state.range(0));
  for (auto _ : state) {
    const auto scorer = make_scorer(kind, f.data, {f.plan}, ScorerParams{});
    for (std::size_t c = 0; c < f.data.feature_count(); ++c) {
      const std::size_t subset[] = {c};
      benchmark::DoNotOptimize(scorer->cv_scores(0, subset));
    }
  }
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_ScorerRoundCached)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ScorerRoundReference(benchmark::State& state) {
  const auto& f = scorer_fixture();
  const auto kind = static_cast<ClassifierKind>(state.range(0));
  for (auto _ : state) {
    for (std::size_t c = 0; c < f.data.feature_count(); ++c) {
      const std::size_t subset[] = {c};
      benchmark::DoNotOptimize(reference::cv_scores(kind, f.data, f.plan, subset, ScorerParams{}));
    }
  }
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_ScorerRoundReference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
