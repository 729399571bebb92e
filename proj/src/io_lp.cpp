#include <cctype>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "lexer.hpp"
#include "wsys/io.hpp"

namespace wsys {

namespace {

using detail::Lexer;
using detail::Token;

class LpReader {
 public:
  explicit LpReader(std::string_view text) : lex_(text, false) { read_vocab_comments(text); }

  OProgram read() {
    while (lex_.peek().kind != Token::Kind::end) statement();
    Vocabulary v(atoms_);
    try {
      return OProgram(Program(std::move(rules_), v), std::move(weak_));
    } catch (const PreconditionError& e) {
      lex_.fail(lex_.here(), e.what());
    }
  }

 private:
  // `% vocab: a b c` fixes the leading part of the vocabulary order.
  void read_vocab_comments(std::string_view text) {
    SourceSpan at;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      at.offset = start;
      if (line.starts_with("% vocab:")) {
        std::istringstream names{std::string(line.substr(8))};
        for (std::string a; names >> a;) {
          at.column = 9;
          check_atom(a, at);
          note(a);
        }
      }
      ++at.line;
      start = end + 1;
    }
  }

  void note(const std::string& a) {
    if (seen_.insert(a).second) atoms_.push_back(a);
  }

  static void check_atom(const std::string& a, const SourceSpan& at) {
    if (a.starts_with("__")) Lexer::fail(at, "atom '" + a + "' uses the reserved prefix '__'");
    if (!std::islower(static_cast<unsigned char>(a.front())))
      Lexer::fail(at, "'" + a + "' is not a ground atom (atoms start with a lowercase letter)");
    for (char c : a)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        Lexer::fail(at, "'" + a + "' is not a valid atom");
  }

  Token expect(std::string_view p) {
    Token t = lex_.next();
    if (!t.is(p)) lex_.fail(t.span, "expected '" + std::string(p) + "', found " + describe(t));
    return t;
  }

  std::string atom() {
    Token t = lex_.next();
    if (t.kind != Token::Kind::ident || t.text == "not") lex_.fail(t.span, "expected an atom, found " + describe(t));
    check_atom(t.text, t.span);
    note(t.text);
    return t.text;
  }

  Literal literal() {
    if (lex_.peek().is_ident("not") && lex_.peek2().kind == Token::Kind::ident) {
      lex_.next();
      return {atom(), false};
    }
    return {atom(), true};
  }

  // Comma separated literals up to and including the final '.'.
  std::vector<Literal> body() {
    std::vector<Literal> out;
    if (lex_.peek().is(".")) {
      lex_.next();
      return out;
    }
    for (;;) {
      out.push_back(literal());
      Token t = lex_.next();
      if (t.is(".")) return out;
      if (!t.is(",")) lex_.fail(t.span, "expected ',' or '.', found " + describe(t));
    }
  }

  static Rule make_rule(std::optional<std::string> head, const std::vector<Literal>& lits) {
    Rule r{std::move(head), {}, {}};
    for (const auto& l : lits) (l.positive ? r.positive_body : r.negative_body).push_back(l.atom);
    return r;
  }

  Weight integer(bool allow_sign) {
    bool negative = false;
    if (allow_sign && lex_.peek().is("-")) {
      lex_.next();
      negative = true;
    }
    Token t = lex_.next();
    if (t.kind != Token::Kind::integer) lex_.fail(t.span, "expected an integer, found " + describe(t));
    Weight w = *parse_weight(t.text);
    return negative ? Weight(-w) : w;
  }

  Level level() {
    const SourceSpan at = lex_.peek().span;
    bool negative = lex_.peek().is("-");
    Weight l = integer(true);
    if (negative || l <= 0) lex_.fail(at, "level must be positive");
    if (l > Weight(std::numeric_limits<Level>::max())) lex_.fail(at, "level out of range");
    return static_cast<Level>(l);
  }

  void statement() {
    const Token& t = lex_.peek();
    if (t.is(":-")) {
      lex_.next();
      rules_.push_back(make_rule(std::nullopt, body()));
    } else if (t.is(":~")) {
      const SourceSpan at = lex_.next().span;
      std::vector<Literal> lits = body();
      if (lits.empty()) lex_.fail(at, "weak constraint needs a nonempty body");
      expect("[");
      Weight w = integer(true);
      Level l = 1;
      if (lex_.peek().is("@")) {
        lex_.next();
        l = level();
      }
      expect("]");
      weak_.push_back({WcBody(lits), w, l});
    } else if (t.kind == Token::Kind::directive && (t.text == "#minimize" || t.text == "#maximize")) {
      optimize();
    } else if (t.kind == Token::Kind::ident) {
      std::string head = atom();
      Token n = lex_.next();
      if (n.is(".")) {
        rules_.push_back(make_rule(std::move(head), {}));
      } else if (n.is(":-")) {
        rules_.push_back(make_rule(std::move(head), body()));
      } else {
        lex_.fail(n.span, "expected '.' or ':-', found " + describe(n));
      }
    } else {
      lex_.fail(t.span, "unexpected " + describe(t) + " at the start of a statement");
    }
  }

  void optimize() {
    const auto direction =
        lex_.next().text == "#minimize" ? OptimizeDirection::minimize : OptimizeDirection::maximize;
    expect("{");
    std::vector<OptimizeElement> elements;
    if (!lex_.peek().is("}")) {
      for (;;) {
        OptimizeElement e;
        e.weight = integer(true);
        if (lex_.peek().is("@")) {
          lex_.next();
          e.level = level();
        }
        expect(":");
        e.literal = literal();
        elements.push_back(std::move(e));
        Token sep = lex_.next();
        if (sep.is("}")) break;
        if (!sep.is(";") && !sep.is(",")) lex_.fail(sep.span, "expected ';' or '}', found " + describe(sep));
      }
    } else {
      lex_.next();
    }
    expect(".");
    for (auto& c : desugar_minimize(elements, direction)) weak_.push_back(std::move(c));
  }

  Lexer lex_;
  std::vector<std::string> atoms_;
  std::set<std::string> seen_;
  std::vector<Rule> rules_;
  std::vector<WeakConstraint> weak_;
};

}  // namespace

OProgram parse_lp(std::string_view text) { return LpReader(text).read(); }

std::string write_lp(const OProgram& p) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  auto note = [&](const std::string& a) {
    if (seen.insert(a).second) order.push_back(a);
  };
  for (const auto& r : p.program().rules()) {
    if (r.head) note(*r.head);
    for (const auto& a : r.positive_body) note(a);
    for (const auto& a : r.negative_body) note(a);
  }
  for (const auto& c : p.constraints())
    for (const auto& l : c.body.literals()) note(l.atom);

  std::string out;
  if (order != p.vocabulary().names()) {
    out += "% vocab:";
    for (const auto& a : p.vocabulary().names()) out += " " + a;
    out += "\n";
  }
  for (const auto& r : p.program().rules()) out += format_rule(r) + "\n";
  for (const auto& c : p.constraints()) out += format_weak_constraint(c) + "\n";
  return out;
}

}  // namespace wsys
