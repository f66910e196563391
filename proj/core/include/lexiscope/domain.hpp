#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexiscope/lexicon.hpp"
#include "lexiscope/types.hpp"
#include "lexiscope/vocabulary.hpp"

namespace lexiscope {

/// domain: supported by every project; potential: by at least two but not
/// all; single: by exactly one.
enum class TermStatus : std::uint8_t { Domain, Potential, Single };

std::string_view toString(TermStatus status) noexcept;

struct SupportEvidence {
  std::string matchedWord;
  Relation relation = Relation::Self;

  friend bool operator==(const SupportEvidence&, const SupportEvidence&) = default;
};

struct DomainTermEntry {
  std::string word;
  TermStatus status = TermStatus::Single;
  /// The word's own total in each project's top-K set, 0 when absent.
  std::map<std::string, std::int64_t> perProjectTotals;
  int supportCount = 0;
  /// Projects whose support came only through a lexical relation.
  std::map<std::string, SupportEvidence> evidence;

  std::int64_t summedTotal() const;
};

struct DomainVocabulary {
  std::string domainName;
  std::vector<std::string> projectNames;
  std::size_t k = 0;
  bool semantic = false;
  /// Sorted by support desc, summed totals desc, word asc.
  std::vector<DomainTermEntry> terms;

  std::size_t countWithStatus(TermStatus status) const;
};

/// Intersects the top-`k` words of each project. With `semantic` set, a
/// project also supports a word when its top-K set holds a synonym, direct
/// hypernym or direct hyponym of it; `lexicon` must then be non-null.
/// Throws TooFewProjectsError for fewer than two vocabularies and
/// std::invalid_argument for k == 0 or duplicate project names.
DomainVocabulary buildDomainVocabulary(std::span<const ProjectVocabulary> vocabularies,
                                       std::size_t k, bool semantic, const Lexicon* lexicon,
                                       std::string domainName = {});

/// Percentage of domain-status terms that occur anywhere in `vocabulary`.
double domainTermPercentage(const ProjectVocabulary& vocabulary,
                            const DomainVocabulary& domainVocabulary);

}  // namespace lexiscope
