#include "protomc/formula.hpp"

#include <algorithm>

#include "formula_internal.hpp"
#include "lexer.hpp"
#include "protomc/errors.hpp"

namespace protomc {

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == FormulaKind::Atom) return a.atom == b.atom;
  auto eq = [](const FormulaPtr& x, const FormulaPtr& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  return eq(a.lhs, b.lhs) && eq(a.rhs, b.rhs);
}

namespace ctl {

namespace {

FormulaPtr node(FormulaKind kind, FormulaPtr lhs = nullptr, FormulaPtr rhs = nullptr) {
  return std::make_shared<Formula>(Formula{kind, PlaceId{}, std::move(lhs), std::move(rhs)});
}

}  // namespace

FormulaPtr atom(std::string component, std::string place) {
  return std::make_shared<Formula>(
      Formula{FormulaKind::Atom, PlaceId{std::move(component), std::move(place)}, nullptr, nullptr});
}
FormulaPtr deadlock() { return node(FormulaKind::Deadlock); }
FormulaPtr neg(FormulaPtr f) { return node(FormulaKind::Not, std::move(f)); }
FormulaPtr conj(FormulaPtr f, FormulaPtr g) { return node(FormulaKind::And, std::move(f), std::move(g)); }
FormulaPtr disj(FormulaPtr f, FormulaPtr g) { return node(FormulaKind::Or, std::move(f), std::move(g)); }
FormulaPtr implies(FormulaPtr f, FormulaPtr g) { return node(FormulaKind::Implies, std::move(f), std::move(g)); }
FormulaPtr ex(FormulaPtr f) { return node(FormulaKind::ExistsNext, std::move(f)); }
FormulaPtr ax(FormulaPtr f) { return node(FormulaKind::ForallNext, std::move(f)); }
FormulaPtr ef(FormulaPtr f) { return node(FormulaKind::ExistsFuture, std::move(f)); }
FormulaPtr ag(FormulaPtr f) { return node(FormulaKind::ForallGlobally, std::move(f)); }
FormulaPtr eu(FormulaPtr f, FormulaPtr g) { return node(FormulaKind::ExistsUntil, std::move(f), std::move(g)); }
FormulaPtr au(FormulaPtr f, FormulaPtr g) { return node(FormulaKind::ForallUntil, std::move(f), std::move(g)); }
FormulaPtr ew(FormulaPtr f, FormulaPtr g) { return node(FormulaKind::ExistsWeakUntil, std::move(f), std::move(g)); }
FormulaPtr aw(FormulaPtr f, FormulaPtr g) { return node(FormulaKind::ForallWeakUntil, std::move(f), std::move(g)); }

}  // namespace ctl

namespace {

using detail::Token;
using detail::TokenKind;

PlaceId split_qualified(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return PlaceId{"", text};
  return PlaceId{text.substr(0, dot), text.substr(dot + 1)};
}

class FormulaParser {
 public:
  FormulaParser(const std::vector<Token>& tokens, std::size_t pos) : tokens_(tokens), pos_(pos) {}

  FormulaPtr parse_expression() { return implication(); }
  std::size_t position() const { return pos_; }

  void expect_end() {
    if (peek().kind != TokenKind::End) fail("expected end of input");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string got = t.kind == TokenKind::End
                          ? std::string(detail::token_kind_name(t.kind))
                          : "'" + t.text + "'";
    throw ParseError(t.line, t.column, what + ", got " + got);
  }

  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  void expect(TokenKind kind) {
    if (peek().kind != kind) fail(std::string("expected ") + detail::token_kind_name(kind));
    ++pos_;
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (peek().kind == TokenKind::Arrow) {
      take();
      return ctl::implies(std::move(lhs), implication());
    }
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (peek().kind == TokenKind::Pipe) {
      take();
      f = ctl::disj(std::move(f), conjunction());
    }
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (peek().kind == TokenKind::Amp) {
      take();
      f = ctl::conj(std::move(f), unary());
    }
    return f;
  }

  // E and A are operators only when followed by '['; U and W only in the
  // separator slot. Everywhere else those letters are ordinary atoms.
  FormulaPtr unary() {
    const Token& t = peek();
    if (t.kind == TokenKind::Bang) {
      take();
      return ctl::neg(unary());
    }
    if (t.kind == TokenKind::LParen) {
      take();
      FormulaPtr f = implication();
      expect(TokenKind::RParen);
      return f;
    }
    if (t.kind != TokenKind::Ident) fail("expected a formula");

    const std::string& word = t.text;
    if (word == "EX") { take(); return ctl::ex(unary()); }
    if (word == "AX") { take(); return ctl::ax(unary()); }
    if (word == "EF") { take(); return ctl::ef(unary()); }
    if (word == "AG") { take(); return ctl::ag(unary()); }
    if (word == "deadlock") { take(); return ctl::deadlock(); }
    if ((word == "E" || word == "A") && tokens_[pos_ + 1].kind == TokenKind::LBracket) {
      const bool exists = word == "E";
      take();
      expect(TokenKind::LBracket);
      FormulaPtr f = implication();
      if (peek().kind != TokenKind::Ident || (peek().text != "U" && peek().text != "W"))
        fail("expected 'U' or 'W'");
      const bool strong = take().text == "U";
      FormulaPtr g = implication();
      expect(TokenKind::RBracket);
      if (exists) return strong ? ctl::eu(f, g) : ctl::ew(f, g);
      return strong ? ctl::au(f, g) : ctl::aw(f, g);
    }

    PlaceId id = split_qualified(take().text);
    return ctl::atom(std::move(id.component), std::move(id.local));
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

// Binding strength; higher binds tighter. Atoms and bracketed untils are
// self-delimiting.
int precedence(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Implies: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    case FormulaKind::Not:
    case FormulaKind::ExistsNext:
    case FormulaKind::ForallNext:
    case FormulaKind::ExistsFuture:
    case FormulaKind::ForallGlobally: return 4;
    default: return 5;
  }
}

void render(const Formula& f, int min_prec, std::string& out) {
  const int prec = precedence(f.kind);
  const bool parens = prec < min_prec;
  if (parens) out += "(";
  switch (f.kind) {
    case FormulaKind::Atom:
      out += f.atom.str();
      break;
    case FormulaKind::Deadlock:
      out += "deadlock";
      break;
    case FormulaKind::Not:
      out += "!";
      render(*f.lhs, 4, out);
      break;
    case FormulaKind::ExistsNext:
    case FormulaKind::ForallNext:
    case FormulaKind::ExistsFuture:
    case FormulaKind::ForallGlobally:
      out += f.kind == FormulaKind::ExistsNext     ? "EX "
             : f.kind == FormulaKind::ForallNext   ? "AX "
             : f.kind == FormulaKind::ExistsFuture ? "EF "
                                                   : "AG ";
      render(*f.lhs, 4, out);
      break;
    case FormulaKind::And:
      render(*f.lhs, 3, out);
      out += " & ";
      render(*f.rhs, 4, out);
      break;
    case FormulaKind::Or:
      render(*f.lhs, 2, out);
      out += " | ";
      render(*f.rhs, 3, out);
      break;
    case FormulaKind::Implies:
      render(*f.lhs, 2, out);
      out += " -> ";
      render(*f.rhs, 1, out);
      break;
    case FormulaKind::ExistsUntil:
    case FormulaKind::ForallUntil:
    case FormulaKind::ExistsWeakUntil:
    case FormulaKind::ForallWeakUntil: {
      const bool exists =
          f.kind == FormulaKind::ExistsUntil || f.kind == FormulaKind::ExistsWeakUntil;
      const bool strong =
          f.kind == FormulaKind::ExistsUntil || f.kind == FormulaKind::ForallUntil;
      out += exists ? "E[" : "A[";
      render(*f.lhs, 1, out);
      out += strong ? " U " : " W ";
      render(*f.rhs, 1, out);
      out += "]";
      break;
    }
  }
  if (parens) out += ")";
}

void collect_atoms(const Formula& f, std::vector<PlaceId>& out) {
  if (f.kind == FormulaKind::Atom) {
    out.push_back(f.atom);
    return;
  }
  if (f.lhs) collect_atoms(*f.lhs, out);
  if (f.rhs) collect_atoms(*f.rhs, out);
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  const std::vector<detail::Token> tokens = detail::lex(text);
  FormulaParser parser(tokens, 0);
  FormulaPtr f = parser.parse_expression();
  parser.expect_end();
  return f;
}

std::string render_formula(const Formula& f) {
  std::string out;
  render(f, 1, out);
  return out;
}

std::vector<PlaceId> atoms(const Formula& f) {
  std::vector<PlaceId> out;
  collect_atoms(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

FormulaPtr parse_formula_at(const std::vector<Token>& tokens, std::size_t& pos) {
  FormulaParser parser(tokens, pos);
  FormulaPtr f = parser.parse_expression();
  pos = parser.position();
  return f;
}

}  // namespace detail

}  // namespace protomc
