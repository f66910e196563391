#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lexiscope/extractor.hpp"
#include "lexiscope/lexicon.hpp"
#include "lexiscope/types.hpp"

namespace lexiscope {

/// Exact non-negative rational used for match scores.
class Score {
 public:
  constexpr Score() = default;
  Score(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  double toDouble() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  Score& operator+=(const Score& other);
  friend Score operator+(Score a, const Score& b) { return a += b; }
  friend bool operator==(const Score&, const Score&) = default;
  friend std::strong_ordering operator<=>(const Score& a, const Score& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Per-keyword weights. Hypernym/hyponym matches weigh
/// `relationNumerator / distance`. Any setting must keep `self` at or above
/// every other weight.
struct ScoreWeights {
  std::int64_t self = 3;
  std::int64_t synonym = 2;
  std::int64_t relationNumerator = 1;

  Score weight(Relation relation, int distance) const;
};

struct ConceptQuery {
  std::vector<std::string> keywords;  // lowercase, alphabetic, non-empty
  RelationSet relations = RelationSet::all();
  int depth = 1;
};

struct KeywordEvidence {
  std::string matchedToken;
  Relation relation = Relation::Self;
  int distance = 0;

  friend bool operator==(const KeywordEvidence&, const KeywordEvidence&) = default;
};

struct ConceptMatch {
  int nodeId = 0;
  NodeKind kind = NodeKind::Method;
  Score score;
  std::map<std::string, KeywordEvidence> perKeyword;
};

using QueryExpansion = std::map<std::string, std::set<RelatedWord>>;

/// Builds a query from free text: whitespace-separated words, lowercased,
/// non-letters removed, duplicates dropped. May yield no keywords.
ConceptQuery parseConceptQuery(std::string_view phrase, RelationSet relations = RelationSet::all(),
                               int depth = 1);

/// Related words per keyword. Each keyword is lemmatized first; the keyword
/// and its lemmas are all reported as Self at distance 0.
QueryExpansion expandQuery(const ConceptQuery& query, const Lexicon& lexicon);

/// Raw tokens and lemma candidates of a method (name + parameters) or a
/// class (name + fields). `allNodes` must have dense ids matching their
/// positions. Throws ScopeError for parameters and fields.
std::set<std::string> nodeScope(const SourceNode& node, std::span<const SourceNode> allNodes,
                                const Lexicon& lexicon);

/// Classes and methods whose scope covers every keyword through the query's
/// expansion, best first: score desc, methods before classes, then
/// (file, line, id) ascending. At most `limit` results.
std::vector<ConceptMatch> locateConcept(std::span<const SourceNode> nodes,
                                        const ConceptQuery& query, const Lexicon& lexicon,
                                        std::size_t limit, const ScoreWeights& weights = {});

}  // namespace lexiscope
