#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexiscope/extractor.hpp"
#include "lexiscope/lexicon.hpp"
#include "lexiscope/types.hpp"

namespace lexiscope {

/// Occurrence counts indexed by NodeKind.
struct KindCounts {
  std::array<std::int64_t, 4> values{};

  std::int64_t& operator[](NodeKind kind) { return values[static_cast<std::size_t>(kind)]; }
  std::int64_t operator[](NodeKind kind) const {
    return values[static_cast<std::size_t>(kind)];
  }
  std::int64_t sum() const;

  friend bool operator==(const KindCounts&, const KindCounts&) = default;
};

struct VocabularyEntry {
  std::string word;  // lemma when recognized, raw token otherwise
  std::optional<PosTag> pos;
  std::int64_t total = 0;
  KindCounts countsByKind;

  bool recognized() const noexcept { return pos.has_value(); }

  friend bool operator==(const VocabularyEntry&, const VocabularyEntry&) = default;
};

struct ProjectVocabulary {
  std::string projectName;
  std::size_t fileCount = 0;
  std::map<std::string, VocabularyEntry, std::less<>> entries;

  const VocabularyEntry* find(std::string_view word) const;
};

struct FilterConfig {
  std::set<std::string, std::less<>> stoplist;
  int minLength = 2;

  bool keeps(std::string_view token) const;

  /// Stoplist from the bundled default list, minimum length 2.
  static FilterConfig defaults();
};

/// Contents of core/data/stoplist.txt.
std::string_view defaultStoplistText();

/// One lowercase word per line; `#` starts a comment; blank lines ignored.
std::set<std::string, std::less<>> parseStoplist(std::istream& in);
std::set<std::string, std::less<>> loadStoplist(const std::filesystem::path& path);

/// Counts every surviving token occurrence of every node name. Recognized
/// tokens are merged under their best lemma; the entry's POS is the primary
/// POS of that lemma, so it does not depend on which inflection arrived
/// first. Work is split across `threads` workers with an order-free merge.
ProjectVocabulary buildVocabulary(std::span<const SourceNode> nodes, const Lexicon& lexicon,
                                  const FilterConfig& filter, unsigned threads = 1);

struct ProjectStats {
  std::size_t fileCount = 0;
  std::int64_t totalWords = 0;
  std::int64_t recognized = 0;
  std::int64_t unrecognized = 0;
  std::int64_t nouns = 0;
  std::int64_t verbs = 0;
  std::int64_t adjectives = 0;
  std::int64_t adverbs = 0;

  int recognizedPercent() const;
  int unrecognizedPercent() const;
  /// Share of recognized words carrying `pos`.
  int posPercent(PosTag pos) const;
  std::int64_t posCount(PosTag pos) const;
};

/// Whole-percent share, rounded half up; 0 when `whole` is 0.
int roundedPercent(std::int64_t part, std::int64_t whole);

ProjectStats computeStats(const ProjectVocabulary& vocabulary);

/// Entries ordered by total descending, ties by word ascending; at most `k`.
std::vector<VocabularyEntry> topK(const ProjectVocabulary& vocabulary, std::size_t k);

}  // namespace lexiscope
