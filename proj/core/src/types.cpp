#include "lexiscope/types.hpp"

namespace lexiscope {

std::string_view toString(PosTag pos) noexcept {
  switch (pos) {
    case PosTag::Noun: return "noun";
    case PosTag::Verb: return "verb";
    case PosTag::Adjective: return "adjective";
    case PosTag::Adverb: return "adverb";
  }
  return "noun";
}

std::optional<PosTag> parsePosTag(std::string_view text) noexcept {
  for (PosTag pos : kAllPosTags) {
    if (toString(pos) == text) return pos;
  }
  return std::nullopt;
}

std::string_view toString(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::Class: return "class";
    case NodeKind::Method: return "method";
    case NodeKind::Parameter: return "parameter";
    case NodeKind::Field: return "field";
  }
  return "class";
}

std::optional<NodeKind> parseNodeKind(std::string_view text) noexcept {
  for (NodeKind kind : kAllNodeKinds) {
    if (toString(kind) == text) return kind;
  }
  return std::nullopt;
}

std::string_view toString(Relation relation) noexcept {
  switch (relation) {
    case Relation::Self: return "self";
    case Relation::Synonym: return "synonym";
    case Relation::Hypernym: return "hypernym";
    case Relation::Hyponym: return "hyponym";
  }
  return "self";
}

std::optional<Relation> parseRelation(std::string_view text) noexcept {
  for (Relation r : {Relation::Self, Relation::Synonym, Relation::Hypernym, Relation::Hyponym}) {
    if (toString(r) == text) return r;
  }
  return std::nullopt;
}

}  // namespace lexiscope
