#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lexiscope/extractor.hpp"
#include "lexiscope/vocabulary.hpp"

namespace lexiscope {

inline constexpr int kIndexFormatVersion = 1;

/// Persisted result of analysing one project.
struct ProjectIndex {
  int formatVersion = kIndexFormatVersion;
  std::string projectName;
  std::size_t fileCount = 0;
  std::vector<SourceNode> nodes;              // ids dense from 0
  std::vector<VocabularyEntry> vocabulary;    // sorted by word

  ProjectVocabulary toVocabulary() const;
  static ProjectIndex fromParts(std::vector<SourceNode> nodes, const ProjectVocabulary& vocabulary);
};

/// Deterministic JSON text, newline-terminated.
std::string serializeIndex(const ProjectIndex& index);

/// Throws SchemaError on malformed JSON or violated index invariants.
ProjectIndex parseIndex(std::string_view text);

/// Throws IoError when the file cannot be written.
void saveIndex(const ProjectIndex& index, const std::filesystem::path& path);

/// Throws IoError when unreadable, SchemaError when invalid.
ProjectIndex loadIndex(const std::filesystem::path& path);

}  // namespace lexiscope
