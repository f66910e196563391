#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexiscope/extractor.hpp"

namespace lexiscope {

/// Splits an identifier into lowercase words.
///
/// Rules, in order: `_` and `$` separate words and are dropped; digit runs
/// separate words and are dropped; a lower-to-upper transition starts a new
/// word; inside an uppercase run followed by a lowercase letter, the last
/// capital starts the next word ("XMLHttp" -> "xml", "http"). Every token
/// is non-empty and matches `[a-z]+`.
std::vector<std::string> splitIdentifier(std::string_view name);

struct Token {
  std::string text;
  int sourceNodeId = 0;
  int position = 0;  // index within the identifier's token sequence
};

/// Splits every node name, in node order.
std::vector<Token> tokenizeNodes(std::span<const SourceNode> nodes);

}  // namespace lexiscope
