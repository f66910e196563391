#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexiscope/types.hpp"

namespace lexiscope {

/// One named declaration found in source code.
struct SourceNode {
  int id = 0;
  NodeKind kind = NodeKind::Class;
  std::string name;
  std::string filePath;  // relative, '/'-separated
  int line = 0;          // 1-based
  std::optional<int> parentId;

  friend bool operator==(const SourceNode&, const SourceNode&) = default;
};

/// True when `name` matches `[A-Za-z_$][A-Za-z0-9_$]*`.
bool isIdentifier(std::string_view name) noexcept;

/// True when `child` may be nested under `parent` (absent parent allowed only
/// for classes).
bool validParentage(NodeKind child, std::optional<NodeKind> parent) noexcept;

struct ExtractionResult {
  std::vector<SourceNode> nodes;  // ids dense from 0
  std::size_t skippedConstructs = 0;
};

/// Declaration-level scan of Java source. Never throws on bad input: regions
/// that cannot be interpreted are skipped and counted.
ExtractionResult extractJava(std::string_view text, std::string_view filePath);

struct ProjectExtraction {
  std::vector<SourceNode> nodes;
  std::size_t fileCount = 0;
  std::size_t unreadableFiles = 0;
  std::size_t skippedConstructs = 0;
};

/// Scans every `*.java` file under `root` in sorted path order. Files are
/// scanned on up to `threads` workers; the merged node list does not depend
/// on the thread count. Throws IoError when `root` is not a readable
/// directory.
ProjectExtraction extractProject(const std::filesystem::path& root, unsigned threads = 1);

/// Reads one JSON object per line: `kind`, `name`, `file`, `line`, optional
/// `parent` (0-based index of an earlier record). Blank lines are ignored.
/// Throws SchemaError naming the offending 1-based line.
std::vector<SourceNode> ingestNodes(std::istream& in);

}  // namespace lexiscope
