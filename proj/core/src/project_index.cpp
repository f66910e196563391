#include "lexiscope/project_index.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lexiscope/errors.hpp"

namespace lexiscope {

namespace {

using Json = nlohmann::ordered_json;

Json nodeToJson(const SourceNode& n) {
  Json j;
  j["id"] = n.id;
  j["kind"] = toString(n.kind);
  j["name"] = n.name;
  j["file"] = n.filePath;
  j["line"] = n.line;
  j["parent"] = n.parentId ? Json(*n.parentId) : Json(nullptr);
  return j;
}

Json entryToJson(const VocabularyEntry& e) {
  Json j;
  j["word"] = e.word;
  j["recognized"] = e.recognized();
  j["pos"] = e.pos ? Json(toString(*e.pos)) : Json(nullptr);
  j["total"] = e.total;
  Json counts;
  for (NodeKind kind : kAllNodeKinds) counts[std::string(toString(kind))] = e.countsByKind[kind];
  j["counts"] = std::move(counts);
  return j;
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(0, where + ": missing '" + key + "'");
  return *it;
}

template <typename T>
T integer(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_number_integer()) throw SchemaError(0, where + ": '" + key + "' must be an integer");
  return v.get<T>();
}

std::string string(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_string()) throw SchemaError(0, where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

SourceNode nodeFromJson(const Json& j, std::size_t index, const std::vector<SourceNode>& earlier) {
  const std::string where = "nodes[" + std::to_string(index) + "]";
  if (!j.is_object()) throw SchemaError(0, where + ": not an object");
  SourceNode n;
  n.id = integer<int>(j, "id", where);
  if (n.id != static_cast<int>(index)) throw SchemaError(0, where + ": ids must be dense from 0");
  const auto kind = parseNodeKind(string(j, "kind", where));
  if (!kind) throw SchemaError(0, where + ": unknown kind");
  n.kind = *kind;
  n.name = string(j, "name", where);
  if (!isIdentifier(n.name)) throw SchemaError(0, where + ": invalid name");
  n.filePath = string(j, "file", where);
  n.line = integer<int>(j, "line", where);
  std::optional<NodeKind> parentKind;
  if (const Json& p = field(j, "parent", where); !p.is_null()) {
    if (!p.is_number_integer()) throw SchemaError(0, where + ": 'parent' must be an integer");
    const int parent = p.get<int>();
    if (parent < 0 || parent >= n.id) throw SchemaError(0, where + ": dangling parent");
    n.parentId = parent;
    parentKind = earlier[static_cast<std::size_t>(parent)].kind;
  }
  if (!validParentage(n.kind, parentKind)) throw SchemaError(0, where + ": invalid parentage");
  return n;
}

VocabularyEntry entryFromJson(const Json& j, std::size_t index) {
  const std::string where = "vocabulary[" + std::to_string(index) + "]";
  if (!j.is_object()) throw SchemaError(0, where + ": not an object");
  VocabularyEntry e;
  e.word = string(j, "word", where);
  if (e.word.empty()) throw SchemaError(0, where + ": empty word");
  const Json& recognized = field(j, "recognized", where);
  if (!recognized.is_boolean()) throw SchemaError(0, where + ": 'recognized' must be a boolean");
  if (const Json& pos = field(j, "pos", where); !pos.is_null()) {
    if (!pos.is_string() || !parsePosTag(pos.get<std::string>())) {
      throw SchemaError(0, where + ": invalid pos");
    }
    e.pos = parsePosTag(pos.get<std::string>());
  }
  if (recognized.get<bool>() != e.pos.has_value()) {
    throw SchemaError(0, where + ": 'recognized' disagrees with 'pos'");
  }
  e.total = integer<std::int64_t>(j, "total", where);
  const Json& counts = field(j, "counts", where);
  if (!counts.is_object()) throw SchemaError(0, where + ": 'counts' must be an object");
  for (NodeKind kind : kAllNodeKinds) {
    const std::int64_t c = integer<std::int64_t>(counts, std::string(toString(kind)).c_str(), where);
    if (c < 0) throw SchemaError(0, where + ": negative count");
    e.countsByKind[kind] = c;
  }
  if (e.total < 1 || e.total != e.countsByKind.sum()) {
    throw SchemaError(0, where + ": total must equal the per-kind sum and be at least 1");
  }
  return e;
}

}  // namespace

ProjectVocabulary ProjectIndex::toVocabulary() const {
  ProjectVocabulary vocab;
  vocab.projectName = projectName;
  vocab.fileCount = fileCount;
  for (const VocabularyEntry& e : vocabulary) vocab.entries.emplace(e.word, e);
  return vocab;
}

ProjectIndex ProjectIndex::fromParts(std::vector<SourceNode> nodes,
                                     const ProjectVocabulary& vocabulary) {
  ProjectIndex index;
  index.projectName = vocabulary.projectName;
  index.fileCount = vocabulary.fileCount;
  index.nodes = std::move(nodes);
  index.vocabulary.reserve(vocabulary.entries.size());
  for (const auto& [word, entry] : vocabulary.entries) index.vocabulary.push_back(entry);
  return index;
}

std::string serializeIndex(const ProjectIndex& index) {
  Json root;
  root["formatVersion"] = index.formatVersion;
  root["projectName"] = index.projectName;
  root["fileCount"] = index.fileCount;
  Json nodes = Json::array();
  for (const SourceNode& n : index.nodes) nodes.push_back(nodeToJson(n));
  root["nodes"] = std::move(nodes);
  Json vocab = Json::array();
  for (const VocabularyEntry& e : index.vocabulary) vocab.push_back(entryToJson(e));
  root["vocabulary"] = std::move(vocab);
  return root.dump(1) + "\n";
}

ProjectIndex parseIndex(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(0, std::string("index is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError(0, "index root must be an object");

  ProjectIndex index;
  index.formatVersion = integer<int>(root, "formatVersion", "index");
  if (index.formatVersion != kIndexFormatVersion) {
    throw SchemaError(0, "unsupported index formatVersion " + std::to_string(index.formatVersion));
  }
  index.projectName = string(root, "projectName", "index");
  const auto fileCount = integer<long long>(root, "fileCount", "index");
  if (fileCount < 0) throw SchemaError(0, "index: negative fileCount");
  index.fileCount = static_cast<std::size_t>(fileCount);

  const Json& nodes = field(root, "nodes", "index");
  if (!nodes.is_array()) throw SchemaError(0, "index: 'nodes' must be an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    index.nodes.push_back(nodeFromJson(nodes[i], i, index.nodes));
  }

  const Json& vocab = field(root, "vocabulary", "index");
  if (!vocab.is_array()) throw SchemaError(0, "index: 'vocabulary' must be an array");
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    VocabularyEntry e = entryFromJson(vocab[i], i);
    if (!index.vocabulary.empty() && !(index.vocabulary.back().word < e.word)) {
      throw SchemaError(0, "index: vocabulary must be sorted by word without duplicates");
    }
    index.vocabulary.push_back(std::move(e));
  }
  return index;
}

void saveIndex(const ProjectIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write index: " + path.string());
  out << serializeIndex(index);
  if (!out.flush()) throw IoError("cannot write index: " + path.string());
}

ProjectIndex loadIndex(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read index: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseIndex(buffer.str());
}

}  // namespace lexiscope
