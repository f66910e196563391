#include <benchmark/benchmark.h>

#include "lexiscope/extractor.hpp"
#include "lexiscope/lexicon.hpp"
#include "lexiscope/locator.hpp"

namespace {

void BM_LocateConcept(benchmark::State& state) {
  const std::filesystem::path fixtures(LEXISCOPE_FIXTURES_DIR);
  const auto lexicon = lexiscope::Lexicon::load(fixtures / "dict_concept");
  const auto nodes = lexiscope::extractProject(fixtures / "minicorpus").nodes;
  const auto query = lexiscope::parseConceptQuery("find word form", lexiscope::RelationSet::all(),
                                                  static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexiscope::locateConcept(nodes, query, lexicon, 10));
  }
}
BENCHMARK(BM_LocateConcept)->Arg(1)->Arg(3);

}  // namespace
