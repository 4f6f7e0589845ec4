#include "lexer.hpp"

#include <cctype>

#include "protomc/errors.hpp"

namespace protomc::detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_body(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;

  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(c);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(src[i]);
      continue;
    }

    const int tline = line;
    const int tcol = column;

    if (ident_start(c)) {
      std::string text;
      while (i < src.size() && ident_body(src[i])) {
        text.push_back(src[i]);
        advance(src[i]);
      }
      if (i < src.size() && src[i] == '.') {
        advance('.');
        if (i >= src.size() || !ident_start(src[i]))
          throw ParseError(line, column, "expected identifier after '.'");
        text.push_back('.');
        while (i < src.size() && ident_body(src[i])) {
          text.push_back(src[i]);
          advance(src[i]);
        }
      }
      out.push_back({TokenKind::Ident, std::move(text), tline, tcol});
      continue;
    }

    TokenKind kind;
    switch (c) {
      case '{': kind = TokenKind::LBrace; break;
      case '}': kind = TokenKind::RBrace; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      case ':': kind = TokenKind::Colon; break;
      case ';': kind = TokenKind::Semicolon; break;
      case ',': kind = TokenKind::Comma; break;
      case '|': kind = TokenKind::Pipe; break;
      case '&': kind = TokenKind::Amp; break;
      case '!': kind = TokenKind::Bang; break;
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          advance('-');
          advance('>');
          out.push_back({TokenKind::Arrow, "->", tline, tcol});
          continue;
        }
        throw ParseError(tline, tcol, "unexpected character '-'");
      default:
        throw ParseError(tline, tcol, std::string("unexpected character '") + c + "'");
    }
    advance(c);
    out.push_back({kind, std::string(1, c), tline, tcol});
  }

  out.push_back({TokenKind::End, "", line, column});
  return out;
}

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::Pipe: return "'|'";
    case TokenKind::Amp: return "'&'";
    case TokenKind::Bang: return "'!'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

}  // namespace protomc::detail
