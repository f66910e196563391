#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexiscope/types.hpp"

namespace lexiscope::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kLexicon = 3 };

enum class InputMode { Java, Jsonl };

struct AnalyzeOptions {
  std::filesystem::path source;  // directory (java) or node file (jsonl)
  std::filesystem::path dict;
  std::filesystem::path out;
  std::optional<std::filesystem::path> stoplist;
  InputMode input = InputMode::Java;
  std::string projectName;  // defaults to the source basename
  unsigned threads = 1;
};

struct StatsOptions {
  std::filesystem::path index;
  std::string format = "table";  // table | json | csv
};

struct TopWordsOptions {
  std::filesystem::path index;
  std::size_t k = 50;
  std::string format = "table";  // table | json | csv
};

struct DomainOptions {
  std::vector<std::filesystem::path> indexes;
  std::size_t k = 50;
  bool semantic = false;
  std::optional<std::filesystem::path> dict;
  std::string domainName;
  std::string format = "text";  // text | json
};

struct LocateOptions {
  std::filesystem::path index;
  std::filesystem::path dict;
  std::string phrase;
  int depth = 1;
  RelationSet relations = RelationSet::all();
  std::size_t limit = 10;
};

int cmdAnalyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);
int cmdStats(const StatsOptions& options, std::ostream& out, std::ostream& err);
int cmdTopWords(const TopWordsOptions& options, std::ostream& out, std::ostream& err);
int cmdDomain(const DomainOptions& options, std::ostream& out, std::ostream& err);
int cmdLocate(const LocateOptions& options, std::ostream& out, std::ostream& err);

/// Parses `args` (args[0] is the program name) and dispatches. `--dict`
/// falls back to the LEXISCOPE_DICT environment variable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lexiscope::cli
