#include "lexiscope/domain.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lexiscope/errors.hpp"

namespace lexiscope {

std::string_view toString(TermStatus status) noexcept {
  switch (status) {
    case TermStatus::Domain: return "domain";
    case TermStatus::Potential: return "potential";
    case TermStatus::Single: return "single";
  }
  return "single";
}

std::int64_t DomainTermEntry::summedTotal() const {
  std::int64_t sum = 0;
  for (const auto& [project, total] : perProjectTotals) sum += total;
  return sum;
}

std::size_t DomainVocabulary::countWithStatus(TermStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      terms.begin(), terms.end(), [status](const DomainTermEntry& t) { return t.status == status; }));
}

namespace {

int relationRank(Relation r) {
  switch (r) {
    case Relation::Self: return 0;
    case Relation::Synonym: return 1;
    case Relation::Hypernym: return 2;
    case Relation::Hyponym: return 3;
  }
  return 4;
}

}  // namespace

DomainVocabulary buildDomainVocabulary(std::span<const ProjectVocabulary> vocabularies,
                                       std::size_t k, bool semantic, const Lexicon* lexicon,
                                       std::string domainName) {
  if (vocabularies.size() < 2) {
    throw TooFewProjectsError("domain intersection needs at least 2 projects, got " +
                              std::to_string(vocabularies.size()));
  }
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (semantic && lexicon == nullptr) {
    throw std::invalid_argument("semantic merge requires a lexicon");
  }

  DomainVocabulary out;
  out.domainName = std::move(domainName);
  out.k = k;
  out.semantic = semantic;

  std::vector<std::map<std::string, std::int64_t, std::less<>>> tops;
  std::set<std::string> candidates;
  for (const ProjectVocabulary& vocab : vocabularies) {
    if (std::find(out.projectNames.begin(), out.projectNames.end(), vocab.projectName) !=
        out.projectNames.end()) {
      throw std::invalid_argument("duplicate project name: " + vocab.projectName);
    }
    out.projectNames.push_back(vocab.projectName);
    auto& top = tops.emplace_back();
    for (const VocabularyEntry& e : topK(vocab, k)) {
      top.emplace(e.word, e.total);
      candidates.insert(e.word);
    }
  }

  const std::size_t projectCount = vocabularies.size();
  for (const std::string& word : candidates) {
    DomainTermEntry term;
    term.word = word;

    std::vector<RelatedWord> related;
    if (semantic) {
      for (const RelatedWord& r : lexicon->relatedWords(word, RelationSet::all(), 1)) {
        if (r.relation != Relation::Self) related.push_back(r);
      }
      std::sort(related.begin(), related.end(), [](const RelatedWord& a, const RelatedWord& b) {
        if (relationRank(a.relation) != relationRank(b.relation)) {
          return relationRank(a.relation) < relationRank(b.relation);
        }
        return a.word < b.word;
      });
    }

    for (std::size_t p = 0; p < projectCount; ++p) {
      const std::string& project = out.projectNames[p];
      auto own = tops[p].find(word);
      term.perProjectTotals[project] = own == tops[p].end() ? 0 : own->second;
      if (own != tops[p].end()) {
        ++term.supportCount;
        continue;
      }
      for (const RelatedWord& r : related) {
        if (tops[p].contains(r.word)) {
          ++term.supportCount;
          term.evidence.emplace(project, SupportEvidence{r.word, r.relation});
          break;
        }
      }
    }

    if (static_cast<std::size_t>(term.supportCount) == projectCount) {
      term.status = TermStatus::Domain;
    } else if (term.supportCount >= 2) {
      term.status = TermStatus::Potential;
    } else {
      term.status = TermStatus::Single;
    }
    out.terms.push_back(std::move(term));
  }

  std::sort(out.terms.begin(), out.terms.end(),
            [](const DomainTermEntry& a, const DomainTermEntry& b) {
              if (a.supportCount != b.supportCount) return a.supportCount > b.supportCount;
              const auto sa = a.summedTotal();
              const auto sb = b.summedTotal();
              if (sa != sb) return sa > sb;
              return a.word < b.word;
            });
  return out;
}

double domainTermPercentage(const ProjectVocabulary& vocabulary,
                            const DomainVocabulary& domainVocabulary) {
  std::size_t domainTerms = 0;
  std::size_t present = 0;
  for (const DomainTermEntry& term : domainVocabulary.terms) {
    if (term.status != TermStatus::Domain) continue;
    ++domainTerms;
    if (vocabulary.find(term.word) != nullptr) ++present;
  }
  if (domainTerms == 0) return 0.0;
  return 100.0 * static_cast<double>(present) / static_cast<double>(domainTerms);
}

}  // namespace lexiscope
