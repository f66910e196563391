#include "test_framework.hpp"

#include "fixtures.hpp"
#include "lexiscope/errors.hpp"
#include "lexiscope/extractor.hpp"
#include "lexiscope/lexicon.hpp"
#include "lexiscope/project_index.hpp"

using namespace lexiscope;
using lexiscope::testing::fixturePath;
using lexiscope::testing::readFile;
using lexiscope::testing::TempDir;
using lexiscope::testing::writeFile;

namespace {

ProjectIndex miniIndex() {
  const Lexicon lexicon = Lexicon::load(fixturePath("dict_concept"));
  auto extraction = extractProject(fixturePath("minicorpus"));
  ProjectVocabulary vocab = buildVocabulary(extraction.nodes, lexicon, FilterConfig::defaults());
  vocab.projectName = "mini";
  vocab.fileCount = extraction.fileCount;
  return ProjectIndex::fromParts(std::move(extraction.nodes), vocab);
}

std::string replaceOnce(std::string text, std::string_view from, std::string_view to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  text.replace(at, from.size(), to);
  return text;
}

}  // namespace

TEST_CASE("mini-corpus index matches the golden bytes") {
  CHECK(serializeIndex(miniIndex()) == readFile(fixturePath("golden/minicorpus_index.json")));
}

TEST_CASE("round trip preserves everything") {
  const ProjectIndex index = miniIndex();
  const ProjectIndex back = parseIndex(serializeIndex(index));
  CHECK(back.formatVersion == 1);
  CHECK(back.projectName == index.projectName);
  CHECK(back.fileCount == index.fileCount);
  CHECK(back.nodes == index.nodes);
  CHECK(back.vocabulary == index.vocabulary);
  CHECK(back.toVocabulary().entries == index.toVocabulary().entries);
  CHECK(serializeIndex(back) == serializeIndex(index));
}

TEST_CASE("empty index round trip") {
  ProjectIndex empty;
  empty.projectName = "empty";
  const ProjectIndex back = parseIndex(serializeIndex(empty));
  CHECK(back.nodes.empty());
  CHECK(back.vocabulary.empty());
  CHECK(back.projectName == "empty");
}

TEST_CASE("save and load") {
  TempDir dir;
  const ProjectIndex index = miniIndex();
  saveIndex(index, dir / "mini.json");
  CHECK(loadIndex(dir / "mini.json").nodes == index.nodes);
  CHECK_THROWS_AS(loadIndex(dir / "absent.json"), IoError);
  CHECK_THROWS_AS(saveIndex(index, dir / "no" / "such" / "dir.json"), IoError);
}

TEST_CASE("schema violations are rejected") {
  const std::string good = serializeIndex(miniIndex());
  CHECK_THROWS_AS(parseIndex("not json"), SchemaError);
  CHECK_THROWS_AS(parseIndex("[]"), SchemaError);
  CHECK_THROWS_AS(parseIndex(replaceOnce(good, "\"formatVersion\": 1", "\"formatVersion\": 2")),
                  SchemaError);
  CHECK_THROWS_AS(parseIndex(replaceOnce(good, "\"kind\": \"class\"", "\"kind\": \"module\"")),
                  SchemaError);
  CHECK_THROWS_AS(parseIndex(replaceOnce(good, "\"id\": 1,", "\"id\": 7,")), SchemaError);
  CHECK_THROWS_AS(parseIndex(replaceOnce(good, "\"parent\": 3", "\"parent\": 300")), SchemaError);
  CHECK_THROWS_AS(parseIndex(replaceOnce(good, "\"total\": 1,", "\"total\": 2,")), SchemaError);
  CHECK_THROWS_AS(parseIndex(replaceOnce(good, "\"recognized\": true", "\"recognized\": false")),
                  SchemaError);
  CHECK_THROWS_AS(parseIndex(replaceOnce(good, "\"word\": \"add\"", "\"word\": \"zzz\"")),
                  SchemaError);
  CHECK_THROWS_AS(parseIndex(replaceOnce(good, "\"fileCount\": 20", "\"fileCount\": \"20\"")),
                  SchemaError);
  // A parameter whose parent is a class violates parentage.
  CHECK_THROWS_AS(parseIndex(replaceOnce(good, "\"kind\": \"method\"", "\"kind\": \"parameter\"")),
                  SchemaError);
}
