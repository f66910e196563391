#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lexiscope/domain.hpp"
#include "lexiscope/extractor.hpp"
#include "lexiscope/locator.hpp"
#include "lexiscope/vocabulary.hpp"

namespace lexiscope::cli {

void writeStatsTable(std::ostream& out, std::string_view project, const ProjectStats& stats);
void writeStatsJson(std::ostream& out, std::string_view project, const ProjectStats& stats);
void writeStatsCsv(std::ostream& out, const ProjectStats& stats);

void writeTopWords(std::ostream& out, const std::vector<VocabularyEntry>& entries,
                   std::string_view format);

/// `**word**` for domain terms, `*word*` for potential ones, plain otherwise.
std::string statusMarker(const DomainTermEntry& term);

void writeDomainText(std::ostream& out, const DomainVocabulary& domain);
void writeDomainJson(std::ostream& out, const DomainVocabulary& domain);

/// Whole numbers print bare, other scores with three decimals.
std::string formatScore(const Score& score);

void writeMatches(std::ostream& out, const std::vector<ConceptMatch>& matches,
                  const std::vector<SourceNode>& nodes, const ConceptQuery& query);

}  // namespace lexiscope::cli
