#include "test_framework.hpp"

#include <random>

#include "fixtures.hpp"
#include "lexiscope/errors.hpp"
#include "lexiscope/extractor.hpp"
#include "lexiscope/lexicon.hpp"
#include "lexiscope/locator.hpp"

using namespace lexiscope;
using lexiscope::testing::fixturePath;

namespace {

const Lexicon& conceptDict() {
  static const Lexicon lexicon = Lexicon::load(fixturePath("dict_concept"));
  return lexicon;
}

const std::vector<SourceNode>& miniCorpus() {
  static const std::vector<SourceNode> nodes = extractProject(fixturePath("minicorpus")).nodes;
  return nodes;
}

const RelationSet kHyper = RelationSet::none().with(Relation::Hypernym);
const RelationSet kHypo = RelationSet::none().with(Relation::Hyponym);

std::vector<SourceNode> nodesFor(std::vector<std::tuple<NodeKind, std::string, std::optional<int>>> decls) {
  std::vector<SourceNode> nodes;
  for (auto& [kind, name, parent] : decls) {
    const int id = static_cast<int>(nodes.size());
    nodes.push_back(SourceNode{id, kind, name, "F.java", id + 1, parent});
  }
  return nodes;
}

}  // namespace

TEST_CASE("score arithmetic") {
  Score s;
  s += Score(1, 2);
  s += Score(1, 3);
  CHECK(s == Score(5, 6));
  CHECK(Score(2, 4) == Score(1, 2));
  CHECK(Score(3, 1) > Score(5, 2));
  CHECK(Score(1, 3) < Score(1, 2));
  CHECK_THROWS_AS(Score(1, 0), std::invalid_argument);

  const ScoreWeights w;
  CHECK(w.weight(Relation::Self, 0) == Score(3, 1));
  CHECK(w.weight(Relation::Synonym, 1) == Score(2, 1));
  CHECK(w.weight(Relation::Hypernym, 1) == Score(1, 1));
  CHECK(w.weight(Relation::Hyponym, 3) == Score(1, 3));
}

TEST_CASE("query parsing lowercases and dedupes") {
  const auto q = parseConceptQuery("  Find WORD form, find ");
  CHECK(q.keywords == std::vector<std::string>{"find", "word", "form"});
  CHECK(q.relations == RelationSet::all());
  CHECK(q.depth == 1);
  CHECK(parseConceptQuery("  42 !! ").keywords.empty());
}

TEST_CASE("query expansion") {
  const auto expansion = expandQuery(parseConceptQuery("find word form"), conceptDict());
  CHECK(expansion.at("find").contains(RelatedWord{"get", Relation::Hypernym, 1}));
  CHECK(expansion.at("word").contains(RelatedWord{"word", Relation::Self, 0}));
  CHECK(expansion.at("form").contains(RelatedWord{"type", Relation::Hyponym, 1}));
  CHECK(expansion.at("form").contains(RelatedWord{"kind", Relation::Synonym, 1}));
  for (const auto& [keyword, related] : expansion) {
    CHECK(related.contains(RelatedWord{keyword, Relation::Self, 0}));
  }
}

TEST_CASE("query keywords are lemmatized before expansion") {
  const auto expansion = expandQuery(parseConceptQuery("finding words forms"), conceptDict());
  CHECK(expansion.at("finding").contains(RelatedWord{"get", Relation::Hypernym, 1}));
  CHECK(expansion.at("words").contains(RelatedWord{"word", Relation::Self, 0}));
  CHECK(expansion.at("forms").contains(RelatedWord{"type", Relation::Hyponym, 1}));
}

TEST_CASE("node scopes") {
  const auto nodes = miniCorpus();
  const auto find = [&](std::string_view name, NodeKind kind) -> const SourceNode& {
    for (const auto& n : nodes) {
      if (n.name == name && n.kind == kind) return n;
    }
    throw std::logic_error("missing node");
  };
  const auto getType = nodeScope(find("getType", NodeKind::Method), nodes, conceptDict());
  CHECK(getType == std::set<std::string>{"get", "type", "word"});

  const auto car = nodeScope(find("Car", NodeKind::Class), nodes, conceptDict());
  for (const char* word : {"car", "wheel", "count", "current", "speed"}) CHECK(car.contains(word));
  CHECK_FALSE(car.contains("set"));  // methods are their own candidates

  const auto dictionary = nodeScope(find("Dictionary", NodeKind::Class), nodes, conceptDict());
  CHECK(dictionary.contains("suffixes"));
  CHECK(dictionary.contains("suffix"));

  CHECK_THROWS_AS(nodeScope(find("word", NodeKind::Parameter), nodes, conceptDict()), ScopeError);
  CHECK_THROWS_AS(nodeScope(find("wheelCount", NodeKind::Field), nodes, conceptDict()), ScopeError);
}

TEST_CASE("worked example: find word form") {
  const auto& nodes = miniCorpus();
  const auto matches = locateConcept(nodes, parseConceptQuery("find word form"), conceptDict(), 10);
  REQUIRE(matches.size() >= 1);
  const ConceptMatch& top = matches.front();
  const SourceNode& node = nodes[static_cast<std::size_t>(top.nodeId)];
  CHECK(node.name == "getType");
  CHECK(node.kind == NodeKind::Method);
  CHECK(top.perKeyword.at("find") == KeywordEvidence{"get", Relation::Hypernym, 1});
  CHECK(top.perKeyword.at("word") == KeywordEvidence{"word", Relation::Self, 0});
  CHECK(top.perKeyword.at("form") == KeywordEvidence{"type", Relation::Hyponym, 1});
  CHECK(top.score == Score(5, 1));
}

TEST_CASE("plain text search misses the worked example") {
  const auto query = parseConceptQuery("find word form", RelationSet::none(), 1);
  CHECK(locateConcept(miniCorpus(), query, conceptDict(), 10).empty());
}

TEST_CASE("unknown keyword matches nothing") {
  CHECK(locateConcept(miniCorpus(), parseConceptQuery("zzzz"), conceptDict(), 10).empty());
}

TEST_CASE("exact matches outrank relational ones") {
  const auto nodes = nodesFor({
      {NodeKind::Class, "Holder", std::nullopt},
      {NodeKind::Method, "getWordType", 0},
      {NodeKind::Method, "findWordForm", 0},
  });
  const auto matches = locateConcept(nodes, parseConceptQuery("find word form"), conceptDict(), 10);
  REQUIRE(matches.size() == 2);
  CHECK(matches[0].nodeId == 2);
  CHECK(matches[0].score == Score(9, 1));
  CHECK(matches[1].nodeId == 1);
  CHECK(matches[1].score == Score(5, 1));
}

TEST_CASE("ties put methods first, then file and line") {
  auto nodes = nodesFor({
      {NodeKind::Class, "CarPool", std::nullopt},
      {NodeKind::Method, "carCount", 0},
      {NodeKind::Method, "carWash", 0},
  });
  nodes[0].filePath = "A.java";
  const auto matches = locateConcept(nodes, parseConceptQuery("car"), conceptDict(), 10);
  REQUIRE(matches.size() == 3);
  CHECK(matches[0].nodeId == 1);
  CHECK(matches[1].nodeId == 2);
  CHECK(matches[2].nodeId == 0);
  CHECK(locateConcept(nodes, parseConceptQuery("car"), conceptDict(), 1).size() == 1);
}

TEST_CASE("argument validation") {
  const auto& nodes = miniCorpus();
  CHECK_THROWS_AS(locateConcept(nodes, parseConceptQuery("word"), conceptDict(), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(locateConcept(nodes, ConceptQuery{}, conceptDict(), 5), std::invalid_argument);
  auto broken = nodes;
  broken[3].id = 99;
  CHECK_THROWS_AS(locateConcept(broken, parseConceptQuery("word"), conceptDict(), 5),
                  std::invalid_argument);
}

TEST_CASE("property: matches satisfy the all-keywords rule") {
  const auto& nodes = miniCorpus();
  const std::vector<std::string> vocabulary = {"find", "word", "form", "get", "type", "car",
                                               "vehicle", "count", "value", "name", "kind",
                                               "acquire", "set", "colour", "line", "file"};
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, vocabulary.size() - 1);
  std::uniform_int_distribution<int> len(1, 3);
  for (int round = 0; round < 200; ++round) {
    std::string phrase;
    for (int i = len(rng); i > 0; --i) phrase += vocabulary[pick(rng)] + " ";
    const auto query = parseConceptQuery(phrase, RelationSet::all(), round % 3);
    const auto expansion = expandQuery(query, conceptDict());
    for (const ConceptMatch& m : locateConcept(nodes, query, conceptDict(), 1000)) {
      const auto scope =
          nodeScope(nodes[static_cast<std::size_t>(m.nodeId)], nodes, conceptDict());
      REQUIRE(m.perKeyword.size() == query.keywords.size());
      Score total;
      for (const auto& keyword : query.keywords) {
        const KeywordEvidence& ev = m.perKeyword.at(keyword);
        CHECK(scope.contains(ev.matchedToken));
        CHECK(expansion.at(keyword).contains(RelatedWord{ev.matchedToken, ev.relation, ev.distance}));
        total += ScoreWeights{}.weight(ev.relation, ev.distance);
      }
      CHECK(total == m.score);
    }
  }
}

TEST_CASE("property: more depth or relations never drops a match") {
  const auto& nodes = miniCorpus();
  const std::vector<std::string> phrases = {"find word form", "get type", "vehicle count",
                                            "form", "acquire value", "kind name", "car wheel",
                                            "colour code", "find", "type name"};
  const std::array<RelationSet, 4> chain = {
      RelationSet::none(), kHyper, kHyper.with(Relation::Hyponym), RelationSet::all()};
  for (const std::string& phrase : phrases) {
    for (std::size_t r = 0; r < chain.size(); ++r) {
      for (int depth = 0; depth < 3; ++depth) {
        const auto base = locateConcept(nodes, parseConceptQuery(phrase, chain[r], depth),
                                        conceptDict(), 100000);
        std::set<int> baseIds;
        for (const auto& m : base) baseIds.insert(m.nodeId);
        const auto deeper = locateConcept(nodes, parseConceptQuery(phrase, chain[r], depth + 1),
                                          conceptDict(), 100000);
        std::set<int> deeperIds;
        for (const auto& m : deeper) deeperIds.insert(m.nodeId);
        CHECK(std::includes(deeperIds.begin(), deeperIds.end(), baseIds.begin(), baseIds.end()));
        if (r + 1 < chain.size()) {
          const auto wider = locateConcept(nodes, parseConceptQuery(phrase, chain[r + 1], depth),
                                           conceptDict(), 100000);
          std::set<int> widerIds;
          for (const auto& m : wider) widerIds.insert(m.nodeId);
          CHECK(std::includes(widerIds.begin(), widerIds.end(), baseIds.begin(), baseIds.end()));
        }
      }
    }
  }
}

TEST_CASE("property: verbatim matches dominate relational ones and ranking is stable") {
  const auto& nodes = miniCorpus();
  for (const char* phrase : {"get type", "type", "name", "count", "find word form", "value"}) {
    const auto query = parseConceptQuery(phrase);
    const auto first = locateConcept(nodes, query, conceptDict(), 1000);
    const auto second = locateConcept(nodes, query, conceptDict(), 1000);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].nodeId == second[i].nodeId);
      CHECK(first[i].score == second[i].score);
    }
    const Score full = Score(3 * static_cast<std::int64_t>(query.keywords.size()), 1);
    bool seenRelational = false;
    for (const auto& m : first) {
      bool verbatim = true;
      for (const auto& [k, ev] : m.perKeyword) verbatim = verbatim && ev.relation == Relation::Self;
      CHECK(verbatim == (m.score == full));
      if (!verbatim) seenRelational = true;
      if (verbatim) CHECK_FALSE(seenRelational);
    }
  }
}
