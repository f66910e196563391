#include "lexiscope_cli/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include <nlohmann/json.hpp>

namespace lexiscope::cli {

namespace {

using Json = nlohmann::ordered_json;

struct StatsRow {
  std::string_view label;
  std::string_view key;
  std::int64_t count;
  std::optional<int> percent;
};

std::vector<StatsRow> statsRows(const ProjectStats& s) {
  return {
      {"Number of source files", "source_files", static_cast<std::int64_t>(s.fileCount), {}},
      {"Number of words", "words", s.totalWords, {}},
      {"Number of recognized words", "recognized", s.recognized, s.recognizedPercent()},
      {"Number of not recognized words", "not_recognized", s.unrecognized,
       s.unrecognizedPercent()},
      {"Number of nouns", "nouns", s.nouns, s.posPercent(PosTag::Noun)},
      {"Number of verbs", "verbs", s.verbs, s.posPercent(PosTag::Verb)},
      {"Number of adjectives", "adjectives", s.adjectives, s.posPercent(PosTag::Adjective)},
      {"Number of adverbs", "adverbs", s.adverbs, s.posPercent(PosTag::Adverb)},
  };
}

std::string pad(std::string_view text, std::size_t width) {
  std::string out(text);
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

std::string padLeft(std::string_view text, std::size_t width) {
  std::string out;
  if (text.size() < width) out.append(width - text.size(), ' ');
  out += text;
  return out;
}

}  // namespace

void writeStatsTable(std::ostream& out, std::string_view project, const ProjectStats& stats) {
  out << pad("Project", 32) << project << '\n';
  for (const StatsRow& row : statsRows(stats)) {
    out << pad(row.label, 32) << row.count;
    if (row.percent) out << " (" << *row.percent << "%)";
    out << '\n';
  }
}

void writeStatsJson(std::ostream& out, std::string_view project, const ProjectStats& stats) {
  Json j;
  j["project"] = project;
  for (const StatsRow& row : statsRows(stats)) {
    j[std::string(row.key)] = row.count;
    if (row.percent) j[std::string(row.key) + "_percent"] = *row.percent;
  }
  out << j.dump(2) << '\n';
}

void writeStatsCsv(std::ostream& out, const ProjectStats& stats) {
  out << "metric,count,percent\n";
  for (const StatsRow& row : statsRows(stats)) {
    out << row.key << ',' << row.count << ',';
    if (row.percent) out << *row.percent;
    out << '\n';
  }
}

void writeTopWords(std::ostream& out, const std::vector<VocabularyEntry>& entries,
                   std::string_view format) {
  auto posText = [](const VocabularyEntry& e) {
    return e.pos ? std::string(toString(*e.pos)) : std::string("-");
  };
  if (format == "json") {
    Json arr = Json::array();
    for (const VocabularyEntry& e : entries) {
      Json j;
      j["word"] = e.word;
      j["pos"] = e.pos ? Json(toString(*e.pos)) : Json(nullptr);
      j["total"] = e.total;
      for (NodeKind kind : kAllNodeKinds) j[std::string(toString(kind))] = e.countsByKind[kind];
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << "rank,word,pos,total,class,method,parameter,field\n";
    std::size_t rank = 1;
    for (const VocabularyEntry& e : entries) {
      out << rank++ << ',' << e.word << ',' << posText(e) << ',' << e.total;
      for (NodeKind kind : kAllNodeKinds) out << ',' << e.countsByKind[kind];
      out << '\n';
    }
    return;
  }
  std::size_t wordWidth = 4;
  for (const auto& e : entries) wordWidth = std::max(wordWidth, e.word.size());
  out << padLeft("rank", 4) << "  " << pad("word", wordWidth) << "  " << pad("pos", 9)
      << padLeft("total", 8) << padLeft("class", 8) << padLeft("method", 8)
      << padLeft("param", 8) << padLeft("field", 8) << '\n';
  std::size_t rank = 1;
  for (const VocabularyEntry& e : entries) {
    out << padLeft(std::to_string(rank++), 4) << "  " << pad(e.word, wordWidth) << "  "
        << pad(posText(e), 9) << padLeft(std::to_string(e.total), 8);
    for (NodeKind kind : kAllNodeKinds) {
      out << padLeft(std::to_string(e.countsByKind[kind]), 8);
    }
    out << '\n';
  }
}

std::string statusMarker(const DomainTermEntry& term) {
  switch (term.status) {
    case TermStatus::Domain: return "**" + term.word + "**";
    case TermStatus::Potential: return "*" + term.word + "*";
    case TermStatus::Single: return term.word;
  }
  return term.word;
}

void writeDomainText(std::ostream& out, const DomainVocabulary& domain) {
  const std::size_t projects = domain.projectNames.size();
  out << "Domain vocabulary";
  if (!domain.domainName.empty()) out << " '" << domain.domainName << "'";
  out << " (top " << domain.k << " per project, semantic merge "
      << (domain.semantic ? "on" : "off") << ")\n";
  out << "Terms: " << domain.countWithStatus(TermStatus::Domain) << " domain, "
      << domain.countWithStatus(TermStatus::Potential) << " potential, "
      << domain.countWithStatus(TermStatus::Single) << " single\n\n";

  std::size_t termWidth = 4;
  for (const auto& t : domain.terms) termWidth = std::max(termWidth, statusMarker(t).size());
  std::vector<std::size_t> widths;
  for (const std::string& name : domain.projectNames) {
    std::size_t w = name.size();
    for (const auto& t : domain.terms) w = std::max(w, std::to_string(t.perProjectTotals.at(name)).size());
    widths.push_back(w);
  }

  out << pad("term", termWidth);
  for (std::size_t p = 0; p < projects; ++p) out << "  " << padLeft(domain.projectNames[p], widths[p]);
  out << "  support\n";
  for (const DomainTermEntry& t : domain.terms) {
    out << pad(statusMarker(t), termWidth);
    for (std::size_t p = 0; p < projects; ++p) {
      out << "  " << padLeft(std::to_string(t.perProjectTotals.at(domain.projectNames[p])), widths[p]);
    }
    out << "  " << t.supportCount << '/' << projects << '\n';
    for (const auto& [project, ev] : t.evidence) {
      out << "    " << project << ": via " << ev.matchedWord << " (" << toString(ev.relation)
          << ")\n";
    }
  }
}

void writeDomainJson(std::ostream& out, const DomainVocabulary& domain) {
  Json j;
  j["domain"] = domain.domainName;
  j["k"] = domain.k;
  j["semantic"] = domain.semantic;
  j["projects"] = domain.projectNames;
  Json terms = Json::array();
  for (const DomainTermEntry& t : domain.terms) {
    Json row;
    row["word"] = t.word;
    row["status"] = toString(t.status);
    row["support"] = t.supportCount;
    Json totals;
    for (const std::string& name : domain.projectNames) totals[name] = t.perProjectTotals.at(name);
    row["totals"] = std::move(totals);
    Json evidence = Json::object();
    for (const auto& [project, ev] : t.evidence) {
      evidence[project] = {{"word", ev.matchedWord}, {"relation", toString(ev.relation)}};
    }
    row["evidence"] = std::move(evidence);
    terms.push_back(std::move(row));
  }
  j["terms"] = std::move(terms);
  out << j.dump(2) << '\n';
}

std::string formatScore(const Score& score) {
  if (score.denominator() == 1) return std::to_string(score.numerator());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", score.toDouble());
  return buf;
}

void writeMatches(std::ostream& out, const std::vector<ConceptMatch>& matches,
                  const std::vector<SourceNode>& nodes, const ConceptQuery& query) {
  if (matches.empty()) {
    out << "no matches\n";
    return;
  }
  std::size_t rank = 1;
  for (const ConceptMatch& m : matches) {
    const SourceNode& node = nodes.at(static_cast<std::size_t>(m.nodeId));
    out << rank++ << ". " << node.filePath << ':' << node.line << ' ' << toString(node.kind) << ' '
        << node.name << ' ' << formatScore(m.score) << '\n';
    for (const std::string& keyword : query.keywords) {
      const KeywordEvidence& ev = m.perKeyword.at(keyword);
      out << "   " << keyword << "→" << ev.matchedToken << " (" << toString(ev.relation) << ','
          << ev.distance << ")\n";
    }
  }
}

}  // namespace lexiscope::cli
