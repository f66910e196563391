#include "lexiscope_cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lexiscope/domain.hpp"
#include "lexiscope/errors.hpp"
#include "lexiscope/extractor.hpp"
#include "lexiscope/lexicon.hpp"
#include "lexiscope/locator.hpp"
#include "lexiscope/project_index.hpp"
#include "lexiscope/vocabulary.hpp"
#include "lexiscope_cli/reports.hpp"

namespace lexiscope::cli {

namespace fs = std::filesystem;

namespace {

std::optional<Lexicon> loadLexiconOrReport(const fs::path& dict, std::ostream& err) {
  try {
    return Lexicon::load(dict);
  } catch (const Error& e) {
    err << "error: cannot load lexicon: " << e.what() << '\n';
    return std::nullopt;
  }
}

std::optional<ProjectIndex> loadIndexOrReport(const fs::path& path, std::ostream& err) {
  try {
    return loadIndex(path);
  } catch (const Error& e) {
    err << "error: " << path.string() << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

std::string defaultProjectName(const fs::path& source) {
  fs::path p = source.lexically_normal();
  if (p.filename().empty()) p = p.parent_path();
  std::string name = p.has_stem() ? p.stem().string() : p.filename().string();
  return name.empty() ? "project" : name;
}

}  // namespace

int cmdAnalyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<SourceNode> nodes;
  std::size_t fileCount = 0;
  try {
    if (options.input == InputMode::Java) {
      ProjectExtraction extraction = extractProject(options.source, options.threads);
      if (extraction.unreadableFiles > 0) {
        err << "warning: skipped " << extraction.unreadableFiles << " unreadable file(s)\n";
      }
      nodes = std::move(extraction.nodes);
      fileCount = extraction.fileCount;
    } else {
      std::ifstream in(options.source);
      if (!in) throw IoError("cannot read node file: " + options.source.string());
      nodes = ingestNodes(in);
      std::set<std::string> files;
      for (const SourceNode& n : nodes) files.insert(n.filePath);
      fileCount = files.size();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }

  FilterConfig filter = FilterConfig::defaults();
  if (options.stoplist) {
    try {
      filter.stoplist = loadStoplist(*options.stoplist);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kIo;
    }
  }

  auto lexicon = loadLexiconOrReport(options.dict, err);
  if (!lexicon) return kLexicon;

  ProjectVocabulary vocab = buildVocabulary(nodes, *lexicon, filter, options.threads);
  vocab.projectName =
      options.projectName.empty() ? defaultProjectName(options.source) : options.projectName;
  vocab.fileCount = fileCount;

  const std::size_t nodeCount = nodes.size();
  const ProjectIndex index = ProjectIndex::fromParts(std::move(nodes), vocab);
  try {
    saveIndex(index, options.out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
  out << "analyzed " << vocab.projectName << ": " << fileCount << " files, " << nodeCount
      << " nodes, " << vocab.entries.size() << " distinct words -> " << options.out.string()
      << '\n';
  return kOk;
}

int cmdStats(const StatsOptions& options, std::ostream& out, std::ostream& err) {
  auto index = loadIndexOrReport(options.index, err);
  if (!index) return kIo;
  const ProjectStats stats = computeStats(index->toVocabulary());
  if (options.format == "json") {
    writeStatsJson(out, index->projectName, stats);
  } else if (options.format == "csv") {
    writeStatsCsv(out, stats);
  } else {
    writeStatsTable(out, index->projectName, stats);
  }
  return kOk;
}

int cmdTopWords(const TopWordsOptions& options, std::ostream& out, std::ostream& err) {
  auto index = loadIndexOrReport(options.index, err);
  if (!index) return kIo;
  writeTopWords(out, topK(index->toVocabulary(), options.k), options.format);
  return kOk;
}

int cmdDomain(const DomainOptions& options, std::ostream& out, std::ostream& err) {
  if (options.indexes.size() < 2) {
    err << "error: domain needs at least 2 index files, got " << options.indexes.size() << '\n';
    return kUsage;
  }
  if (options.k == 0) {
    err << "error: -k must be at least 1\n";
    return kUsage;
  }
  std::vector<ProjectVocabulary> vocabs;
  for (const fs::path& path : options.indexes) {
    auto index = loadIndexOrReport(path, err);
    if (!index) return kIo;
    vocabs.push_back(index->toVocabulary());
  }
  std::optional<Lexicon> lexicon;
  if (options.semantic) {
    if (!options.dict) {
      err << "error: --semantic needs --dict or LEXISCOPE_DICT\n";
      return kUsage;
    }
    lexicon = loadLexiconOrReport(*options.dict, err);
    if (!lexicon) return kLexicon;
  }
  DomainVocabulary domain;
  try {
    domain = buildDomainVocabulary(vocabs, options.k, options.semantic,
                                   lexicon ? &*lexicon : nullptr, options.domainName);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (options.format == "json") {
    writeDomainJson(out, domain);
  } else {
    writeDomainText(out, domain);
  }
  return kOk;
}

int cmdLocate(const LocateOptions& options, std::ostream& out, std::ostream& err) {
  const ConceptQuery query = parseConceptQuery(options.phrase, options.relations, options.depth);
  if (query.keywords.empty()) {
    err << "error: the key-phrase has no words\n";
    return kUsage;
  }
  if (options.limit == 0 || options.depth < 0) {
    err << "error: --limit must be >= 1 and --depth >= 0\n";
    return kUsage;
  }
  auto index = loadIndexOrReport(options.index, err);
  if (!index) return kIo;
  auto lexicon = loadLexiconOrReport(options.dict, err);
  if (!lexicon) return kLexicon;

  const auto matches = locateConcept(index->nodes, query, *lexicon, options.limit);
  writeMatches(out, matches, index->nodes, query);
  return kOk;
}

namespace {

std::optional<RelationSet> parseRelations(const std::string& text) {
  if (text == "all") return RelationSet::all();
  if (text == "none") return RelationSet::none();
  RelationSet set;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto r = parseRelation(item);
    if (!r || *r == Relation::Self) return std::nullopt;
    set = set.with(*r);
  }
  return set;
}

std::optional<fs::path> dictFromEnv() {
  if (const char* env = std::getenv("LEXISCOPE_DICT"); env != nullptr && *env != '\0') {
    return fs::path(env);
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lexiscope: software vocabularies and concept location from identifiers"};
  app.name("lexiscope");
  app.require_subcommand(1);
  app.set_version_flag("--version", "lexiscope 0.1.0");

  std::string dict;
  auto addDict = [&dict](CLI::App* sub) {
    sub->add_option("--dict", dict, "WordNet dict directory (default: $LEXISCOPE_DICT)");
  };

  AnalyzeOptions analyze;
  std::string inputMode = "java";
  std::string stoplist;
  auto* analyzeCmd = app.add_subcommand("analyze", "Extract identifiers and build a project index");
  analyzeCmd->add_option("source", analyze.source, "Source directory, or node file in jsonl mode")
      ->required();
  analyzeCmd->add_option("-o,--out", analyze.out, "Index file to write")->required();
  analyzeCmd->add_option("--stoplist", stoplist, "Stoplist file replacing the default list");
  analyzeCmd->add_option("--input", inputMode, "Input mode")
      ->check(CLI::IsMember({"java", "jsonl"}));
  analyzeCmd->add_option("--name", analyze.projectName, "Project name (default: source basename)");
  analyzeCmd->add_option("-j,--threads", analyze.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u));
  addDict(analyzeCmd);

  StatsOptions stats;
  auto* statsCmd = app.add_subcommand("stats", "Vocabulary statistics of one index");
  statsCmd->add_option("index", stats.index, "Index file")->required();
  statsCmd->add_option("--format", stats.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  TopWordsOptions top;
  auto* topCmd = app.add_subcommand("topwords", "Most frequent words of one index");
  topCmd->add_option("index", top.index, "Index file")->required();
  topCmd->add_option("-k", top.k, "Number of words");
  topCmd->add_option("--format", top.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  DomainOptions domain;
  auto* domainCmd = app.add_subcommand("domain", "Intersect the top-k words of several projects");
  domainCmd->add_option("indexes", domain.indexes, "Index files (at least 2)");
  domainCmd->add_option("-k", domain.k, "Top words taken from each project");
  domainCmd->add_flag("--semantic", domain.semantic,
                      "Count synonyms and direct hypernyms/hyponyms as support");
  domainCmd->add_option("--name", domain.domainName, "Domain name shown in the report");
  domainCmd->add_option("--format", domain.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  addDict(domainCmd);

  LocateOptions locate;
  std::string relations = "all";
  auto* locateCmd = app.add_subcommand("locate", "Find classes and methods matching a key-phrase");
  locateCmd->add_option("index", locate.index, "Index file")->required();
  locateCmd->add_option("phrase", locate.phrase, "Key-phrase, e.g. \"find word form\"")->required();
  locateCmd->add_option("--depth", locate.depth, "Hypernym/hyponym hops")
      ->check(CLI::NonNegativeNumber);
  locateCmd->add_option("--relations", relations,
                        "all, none, or a comma list of synonym,hypernym,hyponym");
  locateCmd->add_option("--limit", locate.limit, "Maximum number of hits")
      ->check(CLI::PositiveNumber);
  addDict(locateCmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::optional<fs::path> dictPath = dict.empty() ? dictFromEnv() : std::optional(fs::path(dict));
  auto needDict = [&]() -> bool {
    if (dictPath) return true;
    err << "error: no dictionary; pass --dict or set LEXISCOPE_DICT\n";
    return false;
  };

  if (*analyzeCmd) {
    if (!needDict()) return kUsage;
    analyze.dict = *dictPath;
    analyze.input = inputMode == "jsonl" ? InputMode::Jsonl : InputMode::Java;
    if (!stoplist.empty()) analyze.stoplist = stoplist;
    return cmdAnalyze(analyze, out, err);
  }
  if (*statsCmd) return cmdStats(stats, out, err);
  if (*topCmd) return cmdTopWords(top, out, err);
  if (*domainCmd) {
    domain.dict = dictPath;
    return cmdDomain(domain, out, err);
  }
  if (*locateCmd) {
    if (!needDict()) return kUsage;
    locate.dict = *dictPath;
    const auto parsed = parseRelations(relations);
    if (!parsed) {
      err << "error: bad --relations value '" << relations << "'\n";
      return kUsage;
    }
    locate.relations = *parsed;
    return cmdLocate(locate, out, err);
  }
  return kUsage;
}

}  // namespace lexiscope::cli
