#include "lexiscope/extractor.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "java_lexer.hpp"
#include "lexiscope/errors.hpp"
#include "text_util.hpp"

namespace lexiscope {

namespace fs = std::filesystem;

bool isIdentifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  auto start = [](char c) { return isAsciiAlpha(c) || c == '_' || c == '$'; };
  if (!start(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return start(c) || isAsciiDigit(c); });
}

bool validParentage(NodeKind child, std::optional<NodeKind> parent) noexcept {
  switch (child) {
    case NodeKind::Class: return !parent || *parent == NodeKind::Class;
    case NodeKind::Method:
    case NodeKind::Field: return parent && *parent == NodeKind::Class;
    case NodeKind::Parameter: return parent && *parent == NodeKind::Method;
  }
  return false;
}

namespace {

using java::Token;

/// Recursive-descent walk over class bodies. Method bodies, initializer
/// blocks and field initializers are skipped as balanced token ranges.
class JavaScanner {
 public:
  JavaScanner(std::vector<Token> tokens, std::string_view filePath, std::size_t skipped)
      : toks_(std::move(tokens)), file_(filePath) {
    result_.skippedConstructs = skipped;
  }

  ExtractionResult run() {
    scanBody(std::nullopt, false);
    return std::move(result_);
  }

 private:
  bool at(std::size_t i, char c) const { return i < toks_.size() && toks_[i].is(c); }
  bool atEnd() const { return pos_ >= toks_.size(); }

  void skipped() { ++result_.skippedConstructs; }

  std::optional<int> emit(NodeKind kind, const Token& name, std::optional<int> parent) {
    if (!isIdentifier(name.text)) {
      skipped();
      return std::nullopt;
    }
    const int id = static_cast<int>(result_.nodes.size());
    result_.nodes.push_back(
        SourceNode{id, kind, std::string(name.text), std::string(file_), name.line, parent});
    return id;
  }

  // Index one past the bracket that closes the one at `i`. Unbalanced input
  // runs to the end of the token stream.
  std::size_t skipBalanced(std::size_t i) const {
    const char open = toks_[i].text[0];
    const char close = open == '(' ? ')' : open == '[' ? ']' : '}';
    int depth = 0;
    for (; i < toks_.size(); ++i) {
      if (toks_[i].is(open)) {
        ++depth;
      } else if (toks_[i].is(close)) {
        if (--depth == 0) return i + 1;
      }
    }
    return toks_.size();
  }

  // `@Name`, `@a.b.Name` or `@Name(...)`; `i` points at '@'.
  std::size_t skipAnnotation(std::size_t i) const {
    ++i;
    while (i < toks_.size() && toks_[i].isIdent()) {
      ++i;
      if (at(i, '.') && i + 1 < toks_.size() && toks_[i + 1].isIdent()) {
        ++i;
      } else {
        break;
      }
    }
    if (at(i, '(')) i = skipBalanced(i);
    return i;
  }

  void scanBody(std::optional<int> classId, bool enumBody) {
    if (enumBody) scanEnumConstants(*classId);
    while (!atEnd()) {
      const Token& t = toks_[pos_];
      if (t.is('}')) {
        ++pos_;
        if (classId) return;
        skipped();
        continue;
      }
      if (t.is(';')) {
        ++pos_;
        continue;
      }
      scanMember(classId);
    }
  }

  void scanEnumConstants(int enumId) {
    while (!atEnd()) {
      if (toks_[pos_].is(';')) {
        ++pos_;
        return;
      }
      if (toks_[pos_].is('}')) return;
      if (toks_[pos_].is('@')) {
        pos_ = skipAnnotation(pos_);
        continue;
      }
      if (!toks_[pos_].isIdent() || java::isReserved(toks_[pos_].text)) {
        skipped();
        return;
      }
      emit(NodeKind::Field, toks_[pos_], enumId);
      ++pos_;
      if (at(pos_, '(')) pos_ = skipBalanced(pos_);
      if (at(pos_, '{')) pos_ = skipBalanced(pos_);
      if (at(pos_, ',')) {
        ++pos_;
      } else if (!at(pos_, ';') && !at(pos_, '}')) {
        skipped();
        return;
      }
    }
  }

  // One declaration at member (or top) level, starting at pos_.
  void scanMember(std::optional<int> classId) {
    const std::size_t start = pos_;
    int angle = 0;  // generic arguments in the type part
    for (std::size_t i = pos_; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      if (t.is('<')) ++angle;
      if (t.is('>')) --angle;
      if (t.is('@')) {
        if (i + 1 < toks_.size() && toks_[i + 1].isWord("interface")) {
          scanTypeDeclaration(i + 1, classId, false);
          return;
        }
        i = skipAnnotation(i) - 1;
        continue;
      }
      if (t.isIdent()) {
        const bool afterDot = i > start && toks_[i - 1].is('.');
        if (!afterDot && (t.text == "class" || t.text == "interface")) {
          scanTypeDeclaration(i, classId, false);
          return;
        }
        if (!afterDot && t.text == "enum") {
          scanTypeDeclaration(i, classId, true);
          return;
        }
        if (!afterDot && t.text == "record" && i + 2 < toks_.size() &&
            toks_[i + 1].isIdent() && toks_[i + 2].is('(')) {
          scanTypeDeclaration(i, classId, false);
          return;
        }
        if (at(i + 1, '(') && !java::isReserved(t.text)) {
          scanMethod(i, classId);
          return;
        }
        continue;
      }
      if (t.is('=') || t.is(';') || (t.is(',') && angle <= 0)) {
        scanField(start, classId);
        return;
      }
      if (t.is('{')) {
        // Initializer block, or a top-level construct such as a module
        // declaration.
        pos_ = skipBalanced(i);
        return;
      }
      if (t.is('}')) {
        if (i > start) skipped();
        pos_ = i;
        return;
      }
      if (t.is('(') || t.is('[')) {
        if (t.is('(')) {
          skipped();
          pos_ = skipBalanced(i);
          return;
        }
        i = skipBalanced(i) - 1;
        continue;
      }
    }
    if (toks_.size() > start) skipped();
    pos_ = toks_.size();
  }

  // `kw` indexes the class/interface/enum/record keyword.
  void scanTypeDeclaration(std::size_t kw, std::optional<int> parent, bool isEnum) {
    const std::size_t nameAt = kw + 1;
    if (nameAt >= toks_.size() || !toks_[nameAt].isIdent()) {
      skipped();
      pos_ = nameAt;
      return;
    }
    std::size_t i = nameAt + 1;
    while (i < toks_.size() && !toks_[i].is('{') && !toks_[i].is(';') && !toks_[i].is('}')) {
      if (toks_[i].is('(') || toks_[i].is('[')) {
        i = skipBalanced(i);
      } else {
        ++i;
      }
    }
    if (!at(i, '{')) {
      skipped();
      pos_ = at(i, ';') ? i + 1 : i;
      return;
    }
    const auto id = emit(NodeKind::Class, toks_[nameAt], parent);
    if (!id) {
      pos_ = skipBalanced(i);
      return;
    }
    pos_ = i + 1;
    scanBody(*id, isEnum);
  }

  // `nameAt` indexes the method name; the next token is '('.
  void scanMethod(std::size_t nameAt, std::optional<int> classId) {
    const std::size_t open = nameAt + 1;
    const std::size_t afterParams = skipBalanced(open);

    std::size_t i = afterParams;
    while (i < toks_.size() && !toks_[i].is('{') && !toks_[i].is(';') && !toks_[i].is('}') &&
           !toks_[i].is('=')) {
      // Array brackets, throws clauses and annotation defaults.
      if (toks_[i].is('(') || toks_[i].is('[')) {
        i = skipBalanced(i);
      } else {
        ++i;
      }
    }
    if (!at(i, '{') && !at(i, ';')) {
      skipped();
      pos_ = at(i, '}') || i >= toks_.size() ? i : i + 1;
      return;
    }
    pos_ = at(i, '{') ? skipBalanced(i) : i + 1;
    if (!classId) {
      skipped();
      return;
    }
    const auto methodId = emit(NodeKind::Method, toks_[nameAt], classId);
    if (!methodId) return;
    scanParameters(open + 1, afterParams - 1, *methodId);
  }

  // Parameters between token indexes [begin, end).
  void scanParameters(std::size_t begin, std::size_t end, int methodId) {
    std::size_t segment = begin;
    int depth = 0;
    for (std::size_t i = begin; i <= end; ++i) {
      if (i < end) {
        const Token& t = toks_[i];
        if (t.is('(') || t.is('<') || t.is('[')) ++depth;
        if (t.is(')') || t.is('>') || t.is(']')) --depth;
        if (!(t.is(',') && depth == 0)) continue;
      }
      if (i > segment) emitParameter(segment, i, methodId);
      segment = i + 1;
    }
  }

  void emitParameter(std::size_t begin, std::size_t end, int methodId) {
    const Token* name = nullptr;
    for (std::size_t i = begin; i < end; ++i) {
      if (toks_[i].is('@')) {
        i = skipAnnotation(i) - 1;
        continue;
      }
      if (toks_[i].isIdent()) name = &toks_[i];
    }
    if (name == nullptr || java::isReserved(name->text)) {
      // `this` as a receiver parameter is legal and names nothing.
      if (name == nullptr || name->text != "this") skipped();
      return;
    }
    emit(NodeKind::Parameter, *name, methodId);
  }

  // Field declaration from `start` up to its terminating ';'.
  void scanField(std::size_t start, std::optional<int> classId) {
    struct Declarator {
      std::size_t begin, end;
    };
    std::vector<Declarator> declarators;
    std::size_t segment = start;
    bool assigned = false;
    int angle = 0;
    std::size_t i = start;
    for (; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      if (t.is('@')) {
        i = skipAnnotation(i) - 1;
        continue;
      }
      if (t.is('(') || t.is('[') || t.is('{')) {
        if (t.is('{') && !assigned) break;
        i = skipBalanced(i) - 1;
        continue;
      }
      if (t.is('}')) break;
      if (!assigned && t.is('<')) ++angle;
      if (!assigned && t.is('>')) --angle;
      if (t.is('=')) assigned = true;
      if (t.is(';')) {
        declarators.push_back({segment, i});
        break;
      }
      if (t.is(',') && angle <= 0) {
        // After an initializer, a comma only starts a new declarator when an
        // identifier follows as `name =`, `name,`, `name;` or `name[`.
        const bool nextDeclarator =
            i + 2 < toks_.size() && toks_[i + 1].isIdent() &&
            (toks_[i + 2].is('=') || toks_[i + 2].is(',') || toks_[i + 2].is(';') ||
             toks_[i + 2].is('['));
        if (!assigned || nextDeclarator) {
          declarators.push_back({segment, i});
          segment = i + 1;
          assigned = false;
          angle = 0;
        }
      }
    }
    if (!at(i, ';')) {
      skipped();
      pos_ = at(i, '{') ? skipBalanced(i) : i;
      return;
    }
    pos_ = i + 1;
    // Top-level statements ending in ';' are package and import clauses.
    if (!classId) return;

    bool first = true;
    for (const Declarator& d : declarators) {
      std::size_t nameEnd = d.end;
      for (std::size_t j = d.begin; j < d.end; ++j) {
        // `=` inside annotation arguments does not start an initializer.
        if (toks_[j].is('@')) {
          j = skipAnnotation(j) - 1;
          continue;
        }
        if (toks_[j].is('=')) {
          nameEnd = j;
          break;
        }
      }
      const Token* name = nullptr;
      std::size_t identCount = 0;
      for (std::size_t j = d.begin; j < nameEnd; ++j) {
        if (toks_[j].is('@')) {
          j = skipAnnotation(j) - 1;
          continue;
        }
        if (toks_[j].isIdent()) {
          name = &toks_[j];
          ++identCount;
        }
      }
      // The first declarator carries the type, so it needs two identifiers.
      if (name == nullptr || java::isReserved(name->text) || (first && identCount < 2)) {
        skipped();
      } else {
        emit(NodeKind::Field, *name, classId);
      }
      first = false;
    }
  }

  std::vector<Token> toks_;
  std::string_view file_;
  std::size_t pos_ = 0;
  ExtractionResult result_;
};

std::string relativeName(const fs::path& file, const fs::path& root) {
  return file.lexically_relative(root).generic_string();
}

}  // namespace

ExtractionResult extractJava(std::string_view text, std::string_view filePath) {
  auto lexed = java::lex(text);
  JavaScanner scanner(std::move(lexed.tokens), filePath, lexed.unterminated);
  return scanner.run();
}

ProjectExtraction extractProject(const fs::path& root, unsigned threads) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError("not a readable directory: " + root.string());

  std::vector<fs::path> files;
  try {
    for (const auto& entry : fs::recursive_directory_iterator(
             root, fs::directory_options::skip_permission_denied)) {
      if (entry.is_regular_file() && entry.path().extension() == ".java") {
        files.push_back(entry.path());
      }
    }
  } catch (const fs::filesystem_error& e) {
    throw IoError(std::string("cannot walk ") + root.string() + ": " + e.what());
  }
  std::sort(files.begin(), files.end(), [&](const fs::path& a, const fs::path& b) {
    return relativeName(a, root) < relativeName(b, root);
  });

  struct FileResult {
    std::string relative;
    ExtractionResult nodes;
    bool readable = false;
  };
  std::vector<FileResult> perFile(files.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      FileResult& slot = perFile[i];
      slot.relative = relativeName(files[i], root);
      std::ifstream in(files[i], std::ios::binary);
      if (!in) continue;
      std::ostringstream buffer;
      buffer << in.rdbuf();
      if (in.bad()) continue;
      slot.readable = true;
      slot.nodes = extractJava(buffer.str(), slot.relative);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(files.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  ProjectExtraction out;
  for (FileResult& file : perFile) {
    if (!file.readable) {
      ++out.unreadableFiles;
      continue;
    }
    ++out.fileCount;
    out.skippedConstructs += file.nodes.skippedConstructs;
    const int base = static_cast<int>(out.nodes.size());
    for (SourceNode& node : file.nodes.nodes) {
      node.id += base;
      if (node.parentId) *node.parentId += base;
      out.nodes.push_back(std::move(node));
    }
  }
  return out;
}

std::vector<SourceNode> ingestNodes(std::istream& in) {
  std::vector<SourceNode> nodes;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError(lineNo, std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object()) throw SchemaError(lineNo, "record is not an object");

    auto requireString = [&](const char* key) -> std::string {
      auto it = record.find(key);
      if (it == record.end() || !it->is_string()) {
        throw SchemaError(lineNo, std::string("missing string field '") + key + "'");
      }
      return it->get<std::string>();
    };

    SourceNode node;
    node.id = static_cast<int>(nodes.size());
    const std::string kindText = requireString("kind");
    const auto kind = parseNodeKind(kindText);
    if (!kind) throw SchemaError(lineNo, "unknown kind '" + kindText + "'");
    node.kind = *kind;
    node.name = requireString("name");
    if (node.name.empty()) throw SchemaError(lineNo, "empty name");
    if (!isIdentifier(node.name)) throw SchemaError(lineNo, "name is not an identifier: " + node.name);
    node.filePath = requireString("file");

    auto lineField = record.find("line");
    if (lineField == record.end() || !lineField->is_number_integer() || lineField->get<long long>() < 1) {
      throw SchemaError(lineNo, "'line' must be a positive integer");
    }
    node.line = lineField->get<int>();

    std::optional<NodeKind> parentKind;
    if (auto parent = record.find("parent"); parent != record.end() && !parent->is_null()) {
      if (!parent->is_number_integer()) throw SchemaError(lineNo, "'parent' must be an integer");
      const long long p = parent->get<long long>();
      if (p < 0 || p >= static_cast<long long>(nodes.size())) {
        throw SchemaError(lineNo, "dangling parent " + std::to_string(p));
      }
      node.parentId = static_cast<int>(p);
      parentKind = nodes[static_cast<std::size_t>(p)].kind;
    }
    if (!validParentage(node.kind, parentKind)) {
      throw SchemaError(lineNo, std::string("a ") + std::string(toString(node.kind)) +
                                    " cannot be nested under " +
                                    (parentKind ? std::string(toString(*parentKind)) : "nothing"));
    }
    nodes.push_back(std::move(node));
  }
  return nodes;
}

}  // namespace lexiscope
