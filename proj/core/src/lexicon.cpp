#include "lexiscope/lexicon.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <span>
#include <unordered_set>

#include "lexiscope/errors.hpp"
#include "text_util.hpp"

namespace lexiscope {

namespace fs = std::filesystem;

namespace {

std::string_view fileSuffix(PosTag pos) {
  switch (pos) {
    case PosTag::Noun: return "noun";
    case PosTag::Verb: return "verb";
    case PosTag::Adjective: return "adj";
    case PosTag::Adverb: return "adv";
  }
  return "noun";
}

std::optional<PosTag> posFromChar(std::string_view field) {
  if (field.size() != 1) return std::nullopt;
  switch (field[0]) {
    case 'n': return PosTag::Noun;
    case 'v': return PosTag::Verb;
    case 'a':
    case 's': return PosTag::Adjective;  // 's' marks adjective satellites
    case 'r': return PosTag::Adverb;
    default: return std::nullopt;
  }
}

template <typename Int>
std::optional<Int> parseInt(std::string_view field, int base = 10) {
  Int value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value, base);
  if (ec != std::errc{} || ptr != field.data() + field.size()) return std::nullopt;
  return value;
}

// Data-file lemmas keep case and may carry an adjective position marker
// such as "(a)" or "(ip)".
std::string normalizeLemma(std::string_view raw) {
  const auto paren = raw.find('(');
  if (paren != std::string_view::npos) raw = raw.substr(0, paren);
  return toLowerAscii(raw);
}

bool isHeaderOrBlank(std::string_view line) {
  return line.empty() || line.front() == ' ' || line.front() == '\r';
}

class LineReader {
 public:
  explicit LineReader(const fs::path& path) : path_(path), in_(path) {
    if (!in_) throw MissingFileError(path);
  }

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++lineNo_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  [[noreturn]] void fail(const std::string& reason) const {
    throw MalformedLineError(path_, lineNo_, reason);
  }

  const fs::path& path() const { return path_; }
  std::size_t lineNo() const { return lineNo_; }

 private:
  fs::path path_;
  std::ifstream in_;
  std::size_t lineNo_ = 0;
};

struct PendingPointer {
  SynsetId from;
  SynsetId to;
  bool hypernym;
  std::size_t line;  // in data.<from.pos>
};

struct DetachRule {
  std::string_view suffix;
  std::string_view ending;
  bool undoDoubling;
};

constexpr std::array kNounRules = {
    DetachRule{"s", "", false},    DetachRule{"ses", "s", false}, DetachRule{"xes", "x", false},
    DetachRule{"zes", "z", false}, DetachRule{"ches", "ch", false},
    DetachRule{"shes", "sh", false}, DetachRule{"ies", "y", false},
};
constexpr std::array kVerbRules = {
    DetachRule{"s", "", false},  DetachRule{"ies", "y", false}, DetachRule{"es", "e", false},
    DetachRule{"es", "", false}, DetachRule{"ed", "e", false},  DetachRule{"ed", "", true},
    DetachRule{"ing", "e", false}, DetachRule{"ing", "", true},
};
constexpr std::array kAdjectiveRules = {
    DetachRule{"er", "", false}, DetachRule{"est", "", false},
    DetachRule{"er", "e", false}, DetachRule{"est", "e", false},
};

std::span<const DetachRule> rulesFor(PosTag pos) {
  switch (pos) {
    case PosTag::Noun: return kNounRules;
    case PosTag::Verb: return kVerbRules;
    case PosTag::Adjective: return kAdjectiveRules;
    case PosTag::Adverb: return {};
  }
  return {};
}

bool isVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool endsInDoubledConsonant(std::string_view stem) {
  if (stem.size() < 2) return false;
  const char last = stem.back();
  return last == stem[stem.size() - 2] && isAsciiLower(last) && !isVowel(last);
}

}  // namespace

int LexiconEntry::tagCount(PosTag pos) const {
  auto it = tagCountByPos.find(pos);
  return it == tagCountByPos.end() ? 0 : it->second;
}

Lexicon Lexicon::load(const fs::path& directory) {
  Lexicon lex;
  lex.source_ = directory;

  // Open everything up front so a missing file is reported before any
  // parsing work.
  for (PosTag pos : kAllPosTags) {
    for (std::string_view prefix : {"index.", "data."}) {
      const fs::path file = directory / (std::string(prefix) + std::string(fileSuffix(pos)));
      if (!fs::is_regular_file(file)) throw MissingFileError(file);
    }
  }

  std::vector<PendingPointer> pending;
  std::string line;

  for (PosTag pos : kAllPosTags) {
    LineReader reader(directory / ("data." + std::string(fileSuffix(pos))));
    while (reader.next(line)) {
      if (isHeaderOrBlank(line)) continue;
      const auto bar = line.find('|');
      const auto fields = splitFields(std::string_view(line).substr(0, bar));
      if (fields.size() < 6) reader.fail("too few fields in data line");

      const auto offset = parseInt<std::uint32_t>(fields[0]);
      const auto ssType = posFromChar(fields[2]);
      const auto wordCount = parseInt<std::size_t>(fields[3], 16);
      if (!offset || !ssType || !wordCount || *wordCount == 0) {
        reader.fail("bad synset header");
      }
      if (*ssType != pos) reader.fail("synset type does not match file");

      Synset synset;
      synset.id = SynsetId{*offset, pos};
      std::size_t i = 4;
      for (std::size_t w = 0; w < *wordCount; ++w, i += 2) {
        if (i + 1 >= fields.size()) reader.fail("truncated word list");
        std::string lemma = normalizeLemma(fields[i]);
        if (lemma.empty()) reader.fail("empty lemma");
        if (std::find(synset.lemmas.begin(), synset.lemmas.end(), lemma) == synset.lemmas.end()) {
          synset.lemmas.push_back(std::move(lemma));
        }
      }
      if (i >= fields.size()) reader.fail("missing pointer count");
      const auto pointerCount = parseInt<std::size_t>(fields[i++]);
      if (!pointerCount) reader.fail("bad pointer count");
      for (std::size_t p = 0; p < *pointerCount; ++p, i += 4) {
        if (i + 3 >= fields.size()) reader.fail("truncated pointer list");
        const std::string_view symbol = fields[i];
        const auto target = parseInt<std::uint32_t>(fields[i + 1]);
        const auto targetPos = posFromChar(fields[i + 2]);
        if (!target || !targetPos) reader.fail("bad pointer");
        const bool hypernym = symbol == "@" || symbol == "@i";
        const bool hyponym = symbol == "~" || symbol == "~i";
        if (!hypernym && !hyponym) continue;
        pending.push_back({synset.id, SynsetId{*target, *targetPos}, hypernym, reader.lineNo()});
      }

      const SynsetId id = synset.id;
      if (!lex.synsets_.emplace(id, std::move(synset)).second) {
        reader.fail("duplicate synset offset");
      }
    }
  }

  for (const auto& ptr : pending) {
    auto target = lex.synsets_.find(ptr.to);
    if (target == lex.synsets_.end()) {
      throw MalformedLineError(directory / ("data." + std::string(fileSuffix(ptr.from.pos))),
                               ptr.line, "pointer to unknown synset");
    }
    auto& source = lex.synsets_.at(ptr.from);
    auto& forward = ptr.hypernym ? source.hypernyms : source.hyponyms;
    if (std::find(forward.begin(), forward.end(), ptr.to) == forward.end()) {
      forward.push_back(ptr.to);
    }
  }
  // Make the two directions mirror each other even when a file lists a
  // pointer on one side only.
  for (auto& [id, synset] : lex.synsets_) {
    for (const SynsetId& up : synset.hypernyms) {
      auto& down = lex.synsets_.at(up).hyponyms;
      if (std::find(down.begin(), down.end(), id) == down.end()) down.push_back(id);
    }
  }
  for (auto& [id, synset] : lex.synsets_) {
    for (const SynsetId& down : synset.hyponyms) {
      auto& up = lex.synsets_.at(down).hypernyms;
      if (std::find(up.begin(), up.end(), id) == up.end()) up.push_back(id);
    }
  }

  for (PosTag pos : kAllPosTags) {
    LineReader reader(directory / ("index." + std::string(fileSuffix(pos))));
    while (reader.next(line)) {
      if (isHeaderOrBlank(line)) continue;
      const auto fields = splitFields(line);
      if (fields.size() < 6) reader.fail("too few fields in index line");

      const std::string lemma = toLowerAscii(fields[0]);
      const auto linePos = posFromChar(fields[1]);
      const auto synsetCount = parseInt<std::size_t>(fields[2]);
      const auto pointerCount = parseInt<std::size_t>(fields[3]);
      if (!linePos || !synsetCount || !pointerCount || *synsetCount == 0) {
        reader.fail("bad index header");
      }
      if (*linePos != pos) reader.fail("POS does not match file");
      const std::size_t countsAt = 4 + *pointerCount;
      if (fields.size() != countsAt + 2 + *synsetCount) reader.fail("field count mismatch");
      const auto tagCount = parseInt<int>(fields[countsAt + 1]);
      if (!tagCount || *tagCount < 0) reader.fail("bad tag count");

      std::vector<SynsetId> senses;
      senses.reserve(*synsetCount);
      for (std::size_t s = 0; s < *synsetCount; ++s) {
        const auto offset = parseInt<std::uint32_t>(fields[countsAt + 2 + s]);
        if (!offset) reader.fail("bad synset offset");
        const SynsetId id{*offset, pos};
        if (!lex.synsets_.contains(id)) reader.fail("index refers to unknown synset");
        senses.push_back(id);
      }

      auto [it, inserted] = lex.entries_.try_emplace(lemma);
      LexiconEntry& entry = it->second;
      if (inserted) entry.lemma = lemma;
      if (entry.has(pos)) reader.fail("duplicate lemma");
      entry.sensesByPos.emplace(pos, std::move(senses));
      entry.tagCountByPos.emplace(pos, *tagCount);
    }
  }

  for (PosTag pos : kAllPosTags) {
    const fs::path file = directory / (std::string(fileSuffix(pos)) + ".exc");
    if (!fs::is_regular_file(file)) continue;
    LineReader reader(file);
    auto& table = lex.exceptions_[pos];
    while (reader.next(line)) {
      if (isHeaderOrBlank(line)) continue;
      const auto fields = splitFields(line);
      if (fields.size() < 2) reader.fail("exception line needs a base form");
      auto& bases = table[toLowerAscii(fields[0])];
      for (std::size_t i = 1; i < fields.size(); ++i) bases.push_back(toLowerAscii(fields[i]));
    }
  }

  return lex;
}

const LexiconEntry* Lexicon::lookup(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

const Synset* Lexicon::synset(const SynsetId& id) const {
  auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

std::size_t Lexicon::entryCount(PosTag pos) const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [pos](const auto& kv) { return kv.second.has(pos); }));
}

bool Lexicon::hasLemma(std::string_view lemma, PosTag pos) const {
  const LexiconEntry* entry = lookup(lemma);
  return entry != nullptr && entry->has(pos);
}

std::vector<LemmaCandidate> Lexicon::lemmatize(std::string_view token) const {
  std::vector<LemmaCandidate> out;
  auto add = [&out](std::string_view lemma, PosTag pos) {
    LemmaCandidate c{std::string(lemma), pos};
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  };
  if (token.empty()) return out;

  if (const LexiconEntry* exact = lookup(token)) {
    for (PosTag pos : kAllPosTags) {
      if (exact->has(pos)) add(token, pos);
    }
  }

  for (PosTag pos : kAllPosTags) {
    auto table = exceptions_.find(pos);
    if (table == exceptions_.end()) continue;
    auto hit = table->second.find(token);
    if (hit == table->second.end()) continue;
    for (const std::string& base : hit->second) {
      if (hasLemma(base, pos)) add(base, pos);
    }
  }

  for (PosTag pos : kAllPosTags) {
    for (const DetachRule& rule : rulesFor(pos)) {
      if (token.size() <= rule.suffix.size() || !token.ends_with(rule.suffix)) continue;
      const std::string_view base = token.substr(0, token.size() - rule.suffix.size());
      std::string stem(base);
      stem += rule.ending;
      if (hasLemma(stem, pos)) {
        add(stem, pos);
      } else if (rule.undoDoubling && endsInDoubledConsonant(stem)) {
        stem.pop_back();
        if (hasLemma(stem, pos)) add(stem, pos);
      }
    }
  }
  return out;
}

std::optional<LemmaCandidate> Lexicon::classify(std::string_view token) const {
  const auto candidates = lemmatize(token);
  if (candidates.empty()) return std::nullopt;

  // Best candidate per POS; first listed wins ties inside a POS.
  std::map<PosTag, std::pair<int, const LemmaCandidate*>> best;
  for (const LemmaCandidate& c : candidates) {
    const int count = lookup(c.lemma)->tagCount(c.pos);
    auto [it, inserted] = best.try_emplace(c.pos, count, &c);
    if (!inserted && count > it->second.first) it->second = {count, &c};
  }
  // std::map iterates in noun, verb, adjective, adverb order, so a strict
  // comparison keeps the earlier POS on ties.
  const LemmaCandidate* winner = nullptr;
  int winnerCount = -1;
  for (const auto& [pos, scored] : best) {
    if (scored.first > winnerCount) {
      winnerCount = scored.first;
      winner = scored.second;
    }
  }
  return *winner;
}

std::optional<PosTag> Lexicon::primaryPos(std::string_view word) const {
  auto best = classify(word);
  if (!best) return std::nullopt;
  return best->pos;
}

std::set<RelatedWord> Lexicon::relatedWords(std::string_view word, RelationSet relations,
                                            int depth) const {
  std::map<std::pair<std::string, Relation>, int> found;
  found[{std::string(word), Relation::Self}] = 0;

  const LexiconEntry* entry = lookup(word);
  if (entry != nullptr && depth >= 1) {
    std::vector<SynsetId> seeds;
    for (const auto& [pos, senses] : entry->sensesByPos) {
      seeds.insert(seeds.end(), senses.begin(), senses.end());
    }
    auto record = [&](const Synset& synset, Relation relation, int distance) {
      for (const std::string& lemma : synset.lemmas) {
        if (lemma == word) continue;
        auto [it, inserted] = found.try_emplace({lemma, relation}, distance);
        if (!inserted) it->second = std::min(it->second, distance);
      }
    };

    if (relations.contains(Relation::Synonym)) {
      for (const SynsetId& id : seeds) record(synsets_.at(id), Relation::Synonym, 1);
    }
    for (Relation direction : {Relation::Hypernym, Relation::Hyponym}) {
      if (!relations.contains(direction)) continue;
      std::unordered_set<SynsetId, SynsetIdHash> visited;
      std::vector<SynsetId> frontier = seeds;
      for (int hop = 1; hop <= depth && !frontier.empty(); ++hop) {
        std::vector<SynsetId> next;
        for (const SynsetId& id : frontier) {
          const Synset& from = synsets_.at(id);
          const auto& links = direction == Relation::Hypernym ? from.hypernyms : from.hyponyms;
          for (const SynsetId& to : links) {
            if (visited.insert(to).second) next.push_back(to);
          }
        }
        for (const SynsetId& id : next) record(synsets_.at(id), direction, hop);
        frontier = std::move(next);
      }
    }
  }

  std::set<RelatedWord> out;
  for (const auto& [key, distance] : found) out.insert(RelatedWord{key.first, key.second, distance});
  return out;
}

}  // namespace lexiscope
