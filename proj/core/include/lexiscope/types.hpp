#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace lexiscope {

/// Part of speech. Declaration order is the tie-break priority.
enum class PosTag : std::uint8_t { Noun, Verb, Adjective, Adverb };

inline constexpr std::array<PosTag, 4> kAllPosTags = {
    PosTag::Noun, PosTag::Verb, PosTag::Adjective, PosTag::Adverb};

std::string_view toString(PosTag pos) noexcept;
std::optional<PosTag> parsePosTag(std::string_view text) noexcept;

/// Declaration kinds recognised in source code. Interfaces, enums, records
/// and annotation types are all reported as `Class`; `Field` is a class
/// variable.
enum class NodeKind : std::uint8_t { Class, Method, Parameter, Field };

inline constexpr std::array<NodeKind, 4> kAllNodeKinds = {
    NodeKind::Class, NodeKind::Method, NodeKind::Parameter, NodeKind::Field};

std::string_view toString(NodeKind kind) noexcept;
std::optional<NodeKind> parseNodeKind(std::string_view text) noexcept;

/// Lexical relation linking a query word to a related word.
enum class Relation : std::uint8_t { Self, Synonym, Hypernym, Hyponym };

std::string_view toString(Relation relation) noexcept;
std::optional<Relation> parseRelation(std::string_view text) noexcept;

/// Subset of {synonym, hypernym, hyponym} used to drive expansion.
class RelationSet {
 public:
  constexpr RelationSet() = default;

  static constexpr RelationSet none() { return RelationSet{}; }
  static constexpr RelationSet all() {
    return RelationSet{}.with(Relation::Synonym).with(Relation::Hypernym).with(
        Relation::Hyponym);
  }

  constexpr RelationSet with(Relation r) const {
    RelationSet out = *this;
    out.bits_ |= bit(r);
    return out;
  }
  constexpr bool contains(Relation r) const { return (bits_ & bit(r)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  /// True when every relation in `this` is also in `other`.
  constexpr bool subsetOf(RelationSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend constexpr bool operator==(RelationSet, RelationSet) = default;

 private:
  static constexpr std::uint8_t bit(Relation r) {
    return r == Relation::Self ? 0 : static_cast<std::uint8_t>(1u << static_cast<unsigned>(r));
  }
  std::uint8_t bits_ = 0;
};

}  // namespace lexiscope
