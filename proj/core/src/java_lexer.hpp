#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace lexiscope::java {

enum class TokenKind { Identifier, Punct, Literal };

/// Comments are dropped; string, text-block, char and numeric literals are
/// collapsed into Literal tokens; every other non-space byte is a
/// single-character Punct token.
struct Token {
  TokenKind kind;
  std::string_view text;
  int line;

  bool is(char c) const { return kind == TokenKind::Punct && text.size() == 1 && text[0] == c; }
  bool isIdent() const { return kind == TokenKind::Identifier; }
  bool isWord(std::string_view w) const { return kind == TokenKind::Identifier && text == w; }
};

struct LexResult {
  std::vector<Token> tokens;
  std::size_t unterminated = 0;  // literals or comments cut off by EOF / EOL
};

LexResult lex(std::string_view source);

/// Reserved words (plus the literals true/false/null), which never name a
/// declaration.
bool isReserved(std::string_view word);

}  // namespace lexiscope::java
