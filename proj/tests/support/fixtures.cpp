#include "fixtures.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace lexiscope::testing {

namespace fs = std::filesystem;

fs::path fixturePath(std::string_view relative) {
  return fs::path(LEXISCOPE_FIXTURES_DIR) / relative;
}

std::string readFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void writeFile(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          ("lexiscope-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

namespace {

char posLetter(PosTag pos) {
  switch (pos) {
    case PosTag::Noun: return 'n';
    case PosTag::Verb: return 'v';
    case PosTag::Adjective: return 'a';
    case PosTag::Adverb: return 'r';
  }
  return 'n';
}

std::string_view suffix(PosTag pos) {
  switch (pos) {
    case PosTag::Noun: return "noun";
    case PosTag::Verb: return "verb";
    case PosTag::Adjective: return "adj";
    case PosTag::Adverb: return "adv";
  }
  return "noun";
}

std::string offsetText(std::uint32_t offset) {
  std::ostringstream out;
  out << std::setw(8) << std::setfill('0') << offset;
  return out.str();
}

}  // namespace

std::size_t LexiconWriter::addSynset(PosTag pos, std::vector<std::string> lemmas) {
  synsets_.push_back(SynsetSpec{pos, std::move(lemmas), {}, {}});
  return synsets_.size() - 1;
}

void LexiconWriter::addHypernym(std::size_t child, std::size_t parent) {
  synsets_.at(child).hypernyms.push_back(parent);
  synsets_.at(parent).hyponyms.push_back(child);
}

void LexiconWriter::setTagCount(const std::string& lemma, PosTag pos, int count) {
  tagCounts_[{lemma, pos}] = count;
}

void LexiconWriter::addException(PosTag pos, const std::string& inflected,
                                 const std::string& base) {
  exceptions_[pos].emplace_back(inflected, base);
}

std::uint32_t LexiconWriter::offsetOf(std::size_t index) const {
  return static_cast<std::uint32_t>(1000 + index * 100);
}

void LexiconWriter::write(const fs::path& directory) const {
  fs::create_directories(directory);
  for (PosTag pos : kAllPosTags) {
    std::ostringstream data;
    data << "  1 Generated test lexicon.\n";
    std::map<std::string, std::vector<std::size_t>> senses;
    for (std::size_t i = 0; i < synsets_.size(); ++i) {
      const SynsetSpec& s = synsets_[i];
      if (s.pos != pos) continue;
      data << offsetText(offsetOf(i)) << " 03 " << posLetter(pos) << ' ' << std::hex
           << std::setw(2) << std::setfill('0') << s.lemmas.size() << std::dec;
      for (const std::string& lemma : s.lemmas) {
        data << ' ' << lemma << " 0";
        senses[lemma].push_back(i);
      }
      const std::size_t pointers = s.hypernyms.size() + s.hyponyms.size();
      data << ' ' << std::setw(3) << std::setfill('0') << pointers;
      for (std::size_t h : s.hypernyms) {
        data << " @ " << offsetText(offsetOf(h)) << ' ' << posLetter(pos) << " 0000";
      }
      for (std::size_t h : s.hyponyms) {
        data << " ~ " << offsetText(offsetOf(h)) << ' ' << posLetter(pos) << " 0000";
      }
      data << " | generated synset " << i << "  \n";
    }
    writeFile(directory / ("data." + std::string(suffix(pos))), data.str());

    std::ostringstream index;
    index << "  1 Generated test lexicon.\n";
    for (const auto& [lemma, ids] : senses) {
      auto tc = tagCounts_.find({lemma, pos});
      index << lemma << ' ' << posLetter(pos) << ' ' << ids.size() << " 0 " << ids.size() << ' '
            << (tc == tagCounts_.end() ? 0 : tc->second);
      for (std::size_t i : ids) index << ' ' << offsetText(offsetOf(i));
      index << "  \n";
    }
    writeFile(directory / ("index." + std::string(suffix(pos))), index.str());

    if (auto it = exceptions_.find(pos); it != exceptions_.end()) {
      std::ostringstream exc;
      for (const auto& [inflected, base] : it->second) exc << inflected << ' ' << base << '\n';
      writeFile(directory / (std::string(suffix(pos)) + ".exc"), exc.str());
    }
  }
}

}  // namespace lexiscope::testing
