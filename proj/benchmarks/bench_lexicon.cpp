#include <benchmark/benchmark.h>

#include <cstdlib>

#include "lexiscope/lexicon.hpp"

namespace {

std::filesystem::path dictDirectory() {
  if (const char* env = std::getenv("LEXISCOPE_WORDNET_DIR"); env && *env) return env;
  return std::filesystem::path(LEXISCOPE_FIXTURES_DIR) / "dict_concept";
}

void BM_LexiconLoad(benchmark::State& state) {
  const auto dir = dictDirectory();
  for (auto _ : state) benchmark::DoNotOptimize(lexiscope::Lexicon::load(dir));
}
BENCHMARK(BM_LexiconLoad)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const auto lexicon = lexiscope::Lexicon::load(dictDirectory());
  const std::vector<std::string> tokens = {"values", "running", "type", "xyzzy", "found", "forms"};
  for (auto _ : state) {
    for (const auto& t : tokens) benchmark::DoNotOptimize(lexicon.classify(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(tokens.size()));
}
BENCHMARK(BM_Classify);

}  // namespace
