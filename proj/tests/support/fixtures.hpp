#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lexiscope/types.hpp"

namespace lexiscope::testing {

std::filesystem::path fixturePath(std::string_view relative);

std::string readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, std::string_view content);

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(std::string_view child) const { return path_ / child; }

 private:
  std::filesystem::path path_;
};

// Writes a WordNet-format dict directory from an in-memory description.
class LexiconWriter {
 public:
  // Returns the synset index used by addHypernym.
  std::size_t addSynset(PosTag pos, std::vector<std::string> lemmas);
  // Links child to parent with @ on the child and ~ on the parent.
  void addHypernym(std::size_t child, std::size_t parent);
  void setTagCount(const std::string& lemma, PosTag pos, int count);
  void addException(PosTag pos, const std::string& inflected, const std::string& base);

  void write(const std::filesystem::path& directory) const;

 private:
  struct SynsetSpec {
    PosTag pos;
    std::vector<std::string> lemmas;
    std::vector<std::size_t> hypernyms;
    std::vector<std::size_t> hyponyms;
  };
  std::uint32_t offsetOf(std::size_t index) const;

  std::vector<SynsetSpec> synsets_;
  std::map<std::pair<std::string, PosTag>, int> tagCounts_;
  std::map<PosTag, std::vector<std::pair<std::string, std::string>>> exceptions_;
};

}  // namespace lexiscope::testing
