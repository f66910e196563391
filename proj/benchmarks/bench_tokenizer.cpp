#include <benchmark/benchmark.h>

#include "lexiscope/tokenizer.hpp"

namespace {

void BM_SplitIdentifier(benchmark::State& state) {
  const std::vector<std::string> names = {"setValue", "XMLHttpRequestParser", "MAX_VALUE2",
                                          "parseHTTPHeader", "line_number", "getWheelCount"};
  for (auto _ : state) {
    for (const auto& name : names) benchmark::DoNotOptimize(lexiscope::splitIdentifier(name));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(names.size()));
}
BENCHMARK(BM_SplitIdentifier);

}  // namespace
