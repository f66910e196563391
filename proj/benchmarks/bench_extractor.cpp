#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "lexiscope/extractor.hpp"

namespace {

std::string source() {
  std::ostringstream out;
  out << "package bench;\n\npublic class Big {\n";
  for (int i = 0; i < 200; ++i) {
    out << "  private java.util.Map<String, Integer> cache" << i << " = new java.util.HashMap<>();\n";
    out << "  public int getValue" << i << "(String key, int defaultValue) {\n"
        << "    return cache" << i << ".getOrDefault(key, defaultValue);\n  }\n";
  }
  out << "}\n";
  return out.str();
}

void BM_ExtractJava(benchmark::State& state) {
  const std::string text = source();
  for (auto _ : state) benchmark::DoNotOptimize(lexiscope::extractJava(text, "Big.java"));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ExtractJava);

void BM_ExtractProject(benchmark::State& state) {
  const auto root = std::filesystem::path(LEXISCOPE_FIXTURES_DIR) / "minicorpus";
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lexiscope::extractProject(root, threads));
}
BENCHMARK(BM_ExtractProject)->Arg(1)->Arg(4);

}  // namespace
