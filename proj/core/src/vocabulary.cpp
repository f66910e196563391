#include "lexiscope/vocabulary.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "lexiscope/errors.hpp"
#include "lexiscope/tokenizer.hpp"
#include "text_util.hpp"

namespace lexiscope {

std::int64_t KindCounts::sum() const {
  std::int64_t total = 0;
  for (auto v : values) total += v;
  return total;
}

const VocabularyEntry* ProjectVocabulary::find(std::string_view word) const {
  auto it = entries.find(word);
  return it == entries.end() ? nullptr : &it->second;
}

bool FilterConfig::keeps(std::string_view token) const {
  return static_cast<int>(token.size()) >= minLength && !stoplist.contains(token);
}

FilterConfig FilterConfig::defaults() {
  std::istringstream in{std::string(defaultStoplistText())};
  return FilterConfig{parseStoplist(in), 2};
}

std::set<std::string, std::less<>> parseStoplist(std::istream& in) {
  std::set<std::string, std::less<>> words;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (std::string_view field : splitFields(line)) {
      if (!field.empty() && field.back() == '\r') field.remove_suffix(1);
      if (!field.empty()) words.insert(toLowerAscii(field));
    }
  }
  return words;
}

std::set<std::string, std::less<>> loadStoplist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read stoplist: " + path.string());
  return parseStoplist(in);
}

namespace {

struct TokenClass {
  std::string word;
  std::optional<PosTag> pos;
};

using TokenCounts = std::unordered_map<std::string, KindCounts>;

}  // namespace

ProjectVocabulary buildVocabulary(std::span<const SourceNode> nodes, const Lexicon& lexicon,
                                  const FilterConfig& filter, unsigned threads) {
  // Pass 1: surviving raw-token counts per kind. Each worker owns a slice of
  // the nodes and its own map; maps are merged by addition.
  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(nodes.size() / 256 + 1)));
  std::vector<TokenCounts> partial(workers);
  auto countSlice = [&](unsigned w) {
    const std::size_t begin = nodes.size() * w / workers;
    const std::size_t end = nodes.size() * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::string& token : splitIdentifier(nodes[i].name)) {
        if (filter.keeps(token)) ++partial[w][std::move(token)][nodes[i].kind];
      }
    }
  };
  if (workers == 1) {
    countSlice(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(countSlice, w);
  }
  TokenCounts merged = std::move(partial[0]);
  for (unsigned w = 1; w < workers; ++w) {
    for (auto& [token, counts] : partial[w]) {
      KindCounts& into = merged[token];
      for (NodeKind kind : kAllNodeKinds) into[kind] += counts[kind];
    }
  }

  // Pass 2: classify each distinct token once and fold into word entries.
  ProjectVocabulary vocab;
  std::unordered_map<std::string, std::optional<PosTag>> lemmaPos;
  for (const auto& [token, counts] : merged) {
    TokenClass cls{token, std::nullopt};
    if (auto best = lexicon.classify(token)) {
      cls.word = best->lemma;
      auto [it, inserted] = lemmaPos.try_emplace(best->lemma);
      if (inserted) it->second = lexicon.primaryPos(best->lemma);
      cls.pos = it->second;
    }
    auto [it, inserted] = vocab.entries.try_emplace(cls.word);
    VocabularyEntry& entry = it->second;
    if (inserted) {
      entry.word = cls.word;
      entry.pos = cls.pos;
    }
    for (NodeKind kind : kAllNodeKinds) entry.countsByKind[kind] += counts[kind];
    entry.total = entry.countsByKind.sum();
  }
  return vocab;
}

int roundedPercent(std::int64_t part, std::int64_t whole) {
  if (whole <= 0) return 0;
  return static_cast<int>((200 * part + whole) / (2 * whole));
}

std::int64_t ProjectStats::posCount(PosTag pos) const {
  switch (pos) {
    case PosTag::Noun: return nouns;
    case PosTag::Verb: return verbs;
    case PosTag::Adjective: return adjectives;
    case PosTag::Adverb: return adverbs;
  }
  return 0;
}

int ProjectStats::recognizedPercent() const { return roundedPercent(recognized, totalWords); }
int ProjectStats::unrecognizedPercent() const { return roundedPercent(unrecognized, totalWords); }
int ProjectStats::posPercent(PosTag pos) const { return roundedPercent(posCount(pos), recognized); }

ProjectStats computeStats(const ProjectVocabulary& vocabulary) {
  ProjectStats stats;
  stats.fileCount = vocabulary.fileCount;
  for (const auto& [word, entry] : vocabulary.entries) {
    ++stats.totalWords;
    if (!entry.pos) {
      ++stats.unrecognized;
      continue;
    }
    ++stats.recognized;
    switch (*entry.pos) {
      case PosTag::Noun: ++stats.nouns; break;
      case PosTag::Verb: ++stats.verbs; break;
      case PosTag::Adjective: ++stats.adjectives; break;
      case PosTag::Adverb: ++stats.adverbs; break;
    }
  }
  return stats;
}

std::vector<VocabularyEntry> topK(const ProjectVocabulary& vocabulary, std::size_t k) {
  std::vector<const VocabularyEntry*> order;
  order.reserve(vocabulary.entries.size());
  for (const auto& [word, entry] : vocabulary.entries) order.push_back(&entry);
  const std::size_t n = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                    [](const VocabularyEntry* a, const VocabularyEntry* b) {
                      if (a->total != b->total) return a->total > b->total;
                      return a->word < b->word;
                    });
  std::vector<VocabularyEntry> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(*order[i]);
  return out;
}

}  // namespace lexiscope
