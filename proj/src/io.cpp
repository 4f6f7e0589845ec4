#include "protomc/io.hpp"

#include <set>
#include <sstream>

#include "formula_internal.hpp"
#include "lexer.hpp"
#include "protomc/errors.hpp"

namespace protomc {

namespace {

using detail::Token;
using detail::TokenKind;

PlaceId split_place(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return PlaceId{"", text};
  return PlaceId{text.substr(0, dot), text.substr(dot + 1)};
}

TransitionId split_transition(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return TransitionId{"", text};
  return TransitionId{text.substr(0, dot), text.substr(dot + 1)};
}

class Cursor {
 public:
  explicit Cursor(const std::vector<Token>& tokens) : tokens_(tokens) {}

  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }
  std::size_t position() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }

  bool at_keyword(const char* word) const {
    return peek().kind == TokenKind::Ident && peek().text == word;
  }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string got = t.kind == TokenKind::End ? std::string("end of input") : "'" + t.text + "'";
    throw ParseError(t.line, t.column, what + ", got " + got);
  }

  Token expect(TokenKind kind) {
    if (peek().kind != kind) fail(std::string("expected ") + detail::token_kind_name(kind));
    return take();
  }

  Token expect_keyword(const char* word) {
    if (!at_keyword(word)) fail(std::string("expected '") + word + "'");
    return take();
  }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

std::vector<std::string> ident_list(Cursor& c) {
  std::vector<std::string> names;
  if (c.peek().kind != TokenKind::Ident) return names;
  names.push_back(c.take().text);
  while (c.peek().kind == TokenKind::Comma) {
    c.take();
    names.push_back(c.expect(TokenKind::Ident).text);
  }
  return names;
}

[[noreturn]] void throw_report(const std::string& lead, const std::vector<Violation>& report) {
  std::string msg = lead + ":";
  for (const auto& v : report) msg += "\n  " + v.subject + ": " + v.message;
  throw Error(msg);
}

}  // namespace

PetriNet load_net(std::string_view text) {
  const std::vector<Token> tokens = detail::lex(text);
  Cursor c(tokens);

  PetriNet net;
  c.expect_keyword("net");
  net.name = c.expect(TokenKind::Ident).text;
  c.expect(TokenKind::LBrace);

  while (c.peek().kind != TokenKind::RBrace) {
    if (c.at_keyword("place")) {
      c.take();
      const Token name = c.expect(TokenKind::Ident);
      const PlaceId id = split_place(name.text);
      bool init = false;
      if (c.at_keyword("init")) {
        c.take();
        init = true;
      }
      c.expect(TokenKind::Semicolon);
      net.places.push_back(id);
      if (init) net.initial.marked.push_back(id);
    } else if (c.at_keyword("trans")) {
      c.take();
      Transition t;
      t.id = split_transition(c.expect(TokenKind::Ident).text);
      if (c.at_keyword("label")) {
        c.take();
        t.label = c.expect(TokenKind::Ident).text;
      }
      c.expect(TokenKind::LBrace);
      c.expect_keyword("in");
      c.expect(TokenKind::Colon);
      for (const auto& n : ident_list(c)) t.pre.push_back(split_place(n));
      c.expect(TokenKind::Semicolon);
      c.expect_keyword("out");
      c.expect(TokenKind::Colon);
      for (const auto& n : ident_list(c)) t.post.push_back(split_place(n));
      c.expect(TokenKind::Semicolon);
      c.expect(TokenKind::RBrace);
      net.transitions.push_back(std::move(t));
    } else {
      c.fail("expected 'place', 'trans', or '}'");
    }
  }
  c.expect(TokenKind::RBrace);
  c.expect(TokenKind::End);

  canonicalize(net);
  if (auto report = validate_net(net); !report.empty())
    throw_report("net " + net.name + " is invalid", report);
  return net;
}

SyncSpec load_sync(std::string_view text, std::span<const PetriNet> nets) {
  const std::vector<Token> tokens = detail::lex(text);
  Cursor c(tokens);

  SyncSpec spec;
  c.expect_keyword("sync");
  c.expect(TokenKind::LBrace);
  while (c.peek().kind != TokenKind::RBrace) {
    c.expect_keyword("event");
    const Token event = c.expect(TokenKind::Ident);
    spec.events.push_back(event.text);
    c.expect(TokenKind::LBrace);
    if (c.peek().kind == TokenKind::RBrace) c.fail("expected a 'Component: transition;' mapping");
    while (c.peek().kind != TokenKind::RBrace) {
      const Token component = c.expect(TokenKind::Ident);
      c.expect(TokenKind::Colon);
      const Token trans = c.expect(TokenKind::Ident);
      c.expect(TokenKind::Semicolon);
      auto [it, inserted] = spec.maps[component.text].emplace(event.text, trans.text);
      (void)it;
      if (!inserted)
        throw ParseError(component.line, component.column,
                         "component '" + component.text + "' mapped twice for event '" +
                             event.text + "'");
    }
    c.expect(TokenKind::RBrace);
  }
  c.expect(TokenKind::RBrace);
  c.expect(TokenKind::End);

  if (auto report = validate_sync(nets, spec); !report.empty())
    throw_report("synchronization specification is invalid", report);
  return spec;
}

std::vector<std::pair<std::string, FormulaPtr>> load_props(std::string_view text) {
  const std::vector<Token> tokens = detail::lex(text);
  Cursor c(tokens);

  std::vector<std::pair<std::string, FormulaPtr>> props;
  std::set<std::string> names;
  while (c.peek().kind != TokenKind::End) {
    c.expect_keyword("prop");
    const Token name = c.expect(TokenKind::Ident);
    if (!names.insert(name.text).second)
      throw ParseError(name.line, name.column, "duplicate property name '" + name.text + "'");
    c.expect(TokenKind::Colon);
    std::size_t pos = c.position();
    FormulaPtr f = detail::parse_formula_at(tokens, pos);
    c.seek(pos);
    c.expect(TokenKind::Semicolon);
    props.emplace_back(name.text, std::move(f));
  }
  return props;
}

std::string save_net(const PetriNet& net) {
  PetriNet copy = net;
  canonicalize(copy);

  std::ostringstream os;
  os << "net " << copy.name << " {\n";
  for (const auto& p : copy.places) {
    os << "  place " << p.str();
    if (copy.initial.contains(p)) os << " init";
    os << ";\n";
  }
  for (const auto& t : copy.transitions) {
    os << "  trans " << t.id.str();
    if (t.label) os << " label " << *t.label;
    os << " {\n";
    auto field = [&](const char* key, const std::vector<PlaceId>& ids) {
      os << "    " << key << ":";
      for (std::size_t i = 0; i < ids.size(); ++i) os << (i == 0 ? " " : ", ") << ids[i].str();
      os << ";\n";
    };
    field("in", t.pre);
    field("out", t.post);
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace protomc
