#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexiscope/types.hpp"

namespace lexiscope {

/// Synsets are identified by their data-file byte offset plus POS, the same
/// key WordNet uses in its pointers.
struct SynsetId {
  std::uint32_t offset = 0;
  PosTag pos = PosTag::Noun;

  friend auto operator<=>(const SynsetId&, const SynsetId&) = default;
};

struct SynsetIdHash {
  std::size_t operator()(const SynsetId& id) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{id.offset} << 2) |
                                      static_cast<std::uint64_t>(id.pos));
  }
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;  // lowercase, in data-file order
  std::vector<SynsetId> hypernyms;
  std::vector<SynsetId> hyponyms;
};

struct LexiconEntry {
  std::string lemma;
  std::map<PosTag, std::vector<SynsetId>> sensesByPos;  // sense-rank order
  std::map<PosTag, int> tagCountByPos;

  bool has(PosTag pos) const { return sensesByPos.contains(pos); }
  int tagCount(PosTag pos) const;
};

/// One morphological normalisation of a token.
struct LemmaCandidate {
  std::string lemma;
  PosTag pos = PosTag::Noun;

  friend bool operator==(const LemmaCandidate&, const LemmaCandidate&) = default;
};

struct RelatedWord {
  std::string word;
  Relation relation = Relation::Self;
  int distance = 0;

  friend auto operator<=>(const RelatedWord&, const RelatedWord&) = default;
};

/// In-memory WordNet-format dictionary. Immutable once loaded, so a single
/// instance can be shared by concurrent readers.
class Lexicon {
 public:
  /// Reads index.{noun,verb,adj,adv}, data.{noun,verb,adj,adv} and, when
  /// present, {noun,verb,adj,adv}.exc from `directory`.
  /// Throws MissingFileError or MalformedLineError.
  static Lexicon load(const std::filesystem::path& directory);

  /// Exact index-lemma lookup; no morphology. Returns nullptr when absent.
  const LexiconEntry* lookup(std::string_view word) const;

  const Synset* synset(const SynsetId& id) const;

  /// Exact matches first (noun, verb, adjective, adverb), then exception-list
  /// forms, then suffix-detachment candidates. Every candidate is an index
  /// lemma carrying that POS.
  std::vector<LemmaCandidate> lemmatize(std::string_view token) const;

  /// Best lemma and its POS for `token`: the POS whose highest-tag-count
  /// candidate wins, ties resolved noun > verb > adjective > adverb.
  std::optional<LemmaCandidate> classify(std::string_view token) const;

  std::optional<PosTag> primaryPos(std::string_view word) const;

  /// Words related to `word` through `relations`, up to `depth` pointer
  /// hops. Always contains `{word, Self, 0}`. Synonyms are reported at
  /// distance 1 and therefore need depth >= 1. Each (word, relation) pair
  /// appears once, at its shortest distance.
  std::set<RelatedWord> relatedWords(std::string_view word, RelationSet relations,
                                     int depth) const;

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t synsetCount() const noexcept { return synsets_.size(); }
  std::size_t entryCount(PosTag pos) const;
  const std::filesystem::path& sourceDirectory() const noexcept { return source_; }

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  using EntryMap = std::unordered_map<std::string, LexiconEntry, StringHash, std::equal_to<>>;
  using ExceptionMap =
      std::unordered_map<std::string, std::vector<std::string>, StringHash, std::equal_to<>>;

  bool hasLemma(std::string_view lemma, PosTag pos) const;

  std::filesystem::path source_;
  EntryMap entries_;
  std::unordered_map<SynsetId, Synset, SynsetIdHash> synsets_;
  std::map<PosTag, ExceptionMap> exceptions_;
};

}  // namespace lexiscope
