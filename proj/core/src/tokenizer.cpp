#include "lexiscope/tokenizer.hpp"

#include "text_util.hpp"

namespace lexiscope {

namespace {

void splitLetterRun(std::string_view run, std::vector<std::string>& out) {
  std::size_t start = 0;
  for (std::size_t i = 1; i < run.size(); ++i) {
    const bool lowerToUpper = isAsciiLower(run[i - 1]) && isAsciiUpper(run[i]);
    const bool acronymEnd = isAsciiUpper(run[i - 1]) && isAsciiUpper(run[i]) &&
                            i + 1 < run.size() && isAsciiLower(run[i + 1]);
    if (lowerToUpper || acronymEnd) {
      out.push_back(toLowerAscii(run.substr(start, i - start)));
      start = i;
    }
  }
  out.push_back(toLowerAscii(run.substr(start)));
}

}  // namespace

std::vector<std::string> splitIdentifier(std::string_view name) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < name.size()) {
    // Separators, digits and anything outside ASCII letters end a run.
    while (i < name.size() && !isAsciiAlpha(name[i])) ++i;
    const std::size_t start = i;
    while (i < name.size() && isAsciiAlpha(name[i])) ++i;
    if (i > start) splitLetterRun(name.substr(start, i - start), out);
  }
  return out;
}

std::vector<Token> tokenizeNodes(std::span<const SourceNode> nodes) {
  std::vector<Token> out;
  for (const SourceNode& node : nodes) {
    int position = 0;
    for (std::string& word : splitIdentifier(node.name)) {
      out.push_back(Token{std::move(word), node.id, position++});
    }
  }
  return out;
}

}  // namespace lexiscope
