// Shared lexer for the net, sync, property, and formula text formats.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace protomc::detail {

enum class TokenKind {
  Ident,     // name or name.name, at most one dot
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Colon,
  Semicolon,
  Comma,
  Pipe,
  Amp,
  Bang,
  Arrow,     // ->
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
};

// Tokenizes the whole input; `#` starts a comment running to end of line.
// Throws ParseError on any unexpected character. The result always ends
// with a single End token carrying the position just past the input.
std::vector<Token> lex(std::string_view src);

const char* token_kind_name(TokenKind kind);

}  // namespace protomc::detail
