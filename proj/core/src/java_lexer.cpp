#include "java_lexer.hpp"

#include <algorithm>
#include <array>

#include "text_util.hpp"

namespace lexiscope::java {

namespace {

bool isIdentStart(unsigned char c) {
  return isAsciiAlpha(static_cast<char>(c)) || c == '_' || c == '$' || c >= 0x80;
}

bool isIdentPart(unsigned char c) { return isIdentStart(c) || isAsciiDigit(static_cast<char>(c)); }

constexpr auto kReserved = std::to_array<std::string_view>({
    "abstract", "assert",     "boolean",  "break",     "byte",      "case",
    "catch",    "char",       "class",    "const",     "continue",  "default",
    "do",       "double",     "else",     "enum",      "extends",   "false",
    "final",    "finally",    "float",    "for",       "goto",      "if",
    "implements", "import",   "instanceof", "int",     "interface", "long",
    "native",   "new",        "null",     "package",   "private",   "protected",
    "public",   "return",     "short",    "static",    "strictfp",  "super",
    "switch",   "synchronized", "this",   "throw",     "throws",    "transient",
    "true",     "try",        "void",     "volatile",  "while",
});

}  // namespace

bool isReserved(std::string_view word) {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

LexResult lex(std::string_view src) {
  LexResult out;
  std::size_t i = 0;
  int line = 1;
  const std::size_t n = src.size();

  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count && i < n; ++k, ++i) {
      if (src[i] == '\n') ++line;
    }
  };

  while (i < n) {
    const char c = src[i];
    if (c == '\n' || c == ' ' || c == '\t' || c == '\r' || c == '\f') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      const std::size_t close = src.find("*/", i + 2);
      if (close == std::string_view::npos) {
        ++out.unterminated;
        advance(n - i);
      } else {
        advance(close + 2 - i);
      }
      continue;
    }

    const int startLine = line;
    const std::size_t start = i;

    if (src.substr(i, 3) == "\"\"\"") {
      std::size_t j = i + 3;
      bool closed = false;
      while (j < n) {
        if (src[j] == '\\') {
          j += 2;
          continue;
        }
        if (src.substr(j, 3) == "\"\"\"") {
          j += 3;
          closed = true;
          break;
        }
        ++j;
      }
      if (!closed) ++out.unterminated;
      advance(std::min(j, n) - i);
      out.tokens.push_back({TokenKind::Literal, src.substr(start, i - start), startLine});
      continue;
    }
    if (c == '"' || c == '\'') {
      std::size_t j = i + 1;
      bool closed = false;
      while (j < n && src[j] != '\n') {
        if (src[j] == '\\') {
          j += 2;
          continue;
        }
        if (src[j] == c) {
          ++j;
          closed = true;
          break;
        }
        ++j;
      }
      if (!closed) ++out.unterminated;
      advance(std::min(j, n) - i);
      out.tokens.push_back({TokenKind::Literal, src.substr(start, i - start), startLine});
      continue;
    }
    if (isAsciiDigit(c) || (c == '.' && i + 1 < n && isAsciiDigit(src[i + 1]))) {
      std::size_t j = i + 1;
      while (j < n) {
        const char d = src[j];
        if (isAsciiDigit(d) || isAsciiAlpha(d) || d == '_' || d == '.') {
          ++j;
        } else if ((d == '+' || d == '-') && (src[j - 1] == 'e' || src[j - 1] == 'E' ||
                                              src[j - 1] == 'p' || src[j - 1] == 'P')) {
          ++j;
        } else {
          break;
        }
      }
      advance(j - i);
      out.tokens.push_back({TokenKind::Literal, src.substr(start, i - start), startLine});
      continue;
    }
    if (isIdentStart(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < n && isIdentPart(static_cast<unsigned char>(src[j]))) ++j;
      advance(j - i);
      out.tokens.push_back({TokenKind::Identifier, src.substr(start, i - start), startLine});
      continue;
    }
    advance(1);
    out.tokens.push_back({TokenKind::Punct, src.substr(start, 1), startLine});
  }
  return out;
}

}  // namespace lexiscope::java
