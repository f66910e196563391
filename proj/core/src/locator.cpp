#include "lexiscope/locator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lexiscope/errors.hpp"
#include "lexiscope/tokenizer.hpp"
#include "text_util.hpp"

namespace lexiscope {

Score::Score(std::int64_t numerator, std::int64_t denominator) : num_(numerator), den_(denominator) {
  if (den_ <= 0) throw std::invalid_argument("score denominator must be positive");
  const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Score& Score::operator+=(const Score& other) {
  const std::int64_t l = std::lcm(den_, other.den_);
  *this = Score(num_ * (l / den_) + other.num_ * (l / other.den_), l);
  return *this;
}

std::strong_ordering operator<=>(const Score& a, const Score& b) {
  // Denominators are positive, so cross multiplication preserves order.
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Score ScoreWeights::weight(Relation relation, int distance) const {
  switch (relation) {
    case Relation::Self: return Score(self, 1);
    case Relation::Synonym: return Score(synonym, 1);
    case Relation::Hypernym:
    case Relation::Hyponym: return Score(relationNumerator, std::max(1, distance));
  }
  return Score();
}

ConceptQuery parseConceptQuery(std::string_view phrase, RelationSet relations, int depth) {
  ConceptQuery query;
  query.relations = relations;
  query.depth = depth;
  for (std::string_view field : splitFields(phrase)) {
    std::string word;
    for (char c : field) {
      if (isAsciiAlpha(c)) word += toLowerAscii(c);
    }
    if (!word.empty() &&
        std::find(query.keywords.begin(), query.keywords.end(), word) == query.keywords.end()) {
      query.keywords.push_back(std::move(word));
    }
  }
  return query;
}

QueryExpansion expandQuery(const ConceptQuery& query, const Lexicon& lexicon) {
  QueryExpansion out;
  for (const std::string& keyword : query.keywords) {
    std::vector<std::string> seeds{keyword};
    for (const LemmaCandidate& c : lexicon.lemmatize(keyword)) {
      if (std::find(seeds.begin(), seeds.end(), c.lemma) == seeds.end()) seeds.push_back(c.lemma);
    }
    // Keep the closest occurrence of each (word, relation).
    std::map<std::pair<std::string, Relation>, int> best;
    for (const std::string& seed : seeds) {
      for (const RelatedWord& r : lexicon.relatedWords(seed, query.relations, query.depth)) {
        auto [it, inserted] = best.try_emplace({r.word, r.relation}, r.distance);
        if (!inserted) it->second = std::min(it->second, r.distance);
      }
    }
    auto& related = out[keyword];
    for (const auto& [key, distance] : best) {
      related.insert(RelatedWord{key.first, key.second, distance});
    }
  }
  return out;
}

namespace {

void addScopeTokens(std::string_view name, const Lexicon& lexicon, std::set<std::string>& scope) {
  for (std::string& token : splitIdentifier(name)) {
    for (const LemmaCandidate& c : lexicon.lemmatize(token)) scope.insert(c.lemma);
    scope.insert(std::move(token));
  }
}

bool isMemberOfScope(const SourceNode& owner, const SourceNode& child) {
  if (owner.kind == NodeKind::Method) return child.kind == NodeKind::Parameter;
  return child.kind == NodeKind::Field;
}

// Lower is better: self, synonym, then relation matches by distance
// (hypernym before hyponym at equal distance), then word.
auto evidenceKey(const KeywordEvidence& e) {
  const int tier = e.relation == Relation::Self ? 0 : e.relation == Relation::Synonym ? 1 : 2;
  const int direction = e.relation == Relation::Hyponym ? 1 : 0;
  return std::tuple(tier, tier == 2 ? e.distance : 0, direction, std::string_view(e.matchedToken));
}

std::set<std::string> scopeFromChildren(const SourceNode& node,
                                        const std::vector<const SourceNode*>& children,
                                        const Lexicon& lexicon) {
  std::set<std::string> scope;
  addScopeTokens(node.name, lexicon, scope);
  for (const SourceNode* child : children) {
    if (isMemberOfScope(node, *child)) addScopeTokens(child->name, lexicon, scope);
  }
  return scope;
}

}  // namespace

std::set<std::string> nodeScope(const SourceNode& node, std::span<const SourceNode> allNodes,
                                const Lexicon& lexicon) {
  if (node.kind != NodeKind::Class && node.kind != NodeKind::Method) {
    throw ScopeError(std::string("no concept scope for a ") + std::string(toString(node.kind)) +
                     " node ('" + node.name + "')");
  }
  std::vector<const SourceNode*> children;
  for (const SourceNode& n : allNodes) {
    if (n.parentId && *n.parentId == node.id) children.push_back(&n);
  }
  return scopeFromChildren(node, children, lexicon);
}

std::vector<ConceptMatch> locateConcept(std::span<const SourceNode> nodes,
                                        const ConceptQuery& query, const Lexicon& lexicon,
                                        std::size_t limit, const ScoreWeights& weights) {
  if (limit == 0) throw std::invalid_argument("limit must be at least 1");
  if (query.keywords.empty()) throw std::invalid_argument("query has no keywords");
  if (query.depth < 0) throw std::invalid_argument("depth must be non-negative");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id != static_cast<int>(i)) throw std::invalid_argument("node ids must be dense");
  }

  const QueryExpansion expansion = expandQuery(query, lexicon);

  std::map<int, std::vector<const SourceNode*>> children;
  for (const SourceNode& n : nodes) {
    if (n.parentId) children[*n.parentId].push_back(&n);
  }
  static const std::vector<const SourceNode*> kNoChildren;

  std::vector<ConceptMatch> matches;
  for (const SourceNode& node : nodes) {
    if (node.kind != NodeKind::Class && node.kind != NodeKind::Method) continue;
    auto kids = children.find(node.id);
    const auto scope =
        scopeFromChildren(node, kids == children.end() ? kNoChildren : kids->second, lexicon);

    ConceptMatch match{node.id, node.kind, Score(), {}};
    bool all = true;
    for (const std::string& keyword : query.keywords) {
      std::optional<KeywordEvidence> best;
      for (const RelatedWord& r : expansion.at(keyword)) {
        if (!scope.contains(r.word)) continue;
        KeywordEvidence candidate{r.word, r.relation, r.distance};
        if (!best || evidenceKey(candidate) < evidenceKey(*best)) best = std::move(candidate);
      }
      if (!best) {
        all = false;
        break;
      }
      match.score += weights.weight(best->relation, best->distance);
      match.perKeyword.emplace(keyword, std::move(*best));
    }
    if (all) matches.push_back(std::move(match));
  }

  auto nodeOf = [&](int id) -> const SourceNode& { return nodes[static_cast<std::size_t>(id)]; };
  std::sort(matches.begin(), matches.end(), [&](const ConceptMatch& a, const ConceptMatch& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.kind != b.kind) return a.kind == NodeKind::Method;
    const SourceNode& na = nodeOf(a.nodeId);
    const SourceNode& nb = nodeOf(b.nodeId);
    return std::tie(na.filePath, na.line, na.id) < std::tie(nb.filePath, nb.line, nb.id);
  });
  if (matches.size() > limit) matches.resize(limit);
  return matches;
}

}  // namespace lexiscope
