#include <limits>
#include <map>
#include <set>

#include "lexer.hpp"
#include "wsys/io.hpp"

namespace wsys {

namespace {

using detail::Lexer;
using detail::Token;

class WsysReader {
 public:
  explicit WsysReader(std::string_view text) : lex_(text, true) {}

  WsysParse read() {
    std::vector<Theory> hard;
    std::vector<std::pair<WCondition, SourceSpan>> soft;
    std::vector<std::pair<std::string, SourceSpan>> explicit_labels;
    std::vector<std::string> declared;
    bool has_vocab_line = false;

    for (;;) {
      while (lex_.peek().kind == Token::Kind::newline) lex_.next();
      if (lex_.peek().kind == Token::Kind::end) break;
      Token kw = lex_.next();
      if (kw.is_ident("vocab")) {
        has_vocab_line = true;
        while (lex_.peek().kind == Token::Kind::ident) declared.push_back(atom_name(lex_.next(), false));
      } else if (kw.is_ident("hard")) {
        hard.push_back(theory());
      } else if (kw.is_ident("soft")) {
        WCondition b;
        SourceSpan at = lex_.peek().span;
        if (lex_.peek().kind == Token::Kind::ident && lex_.peek2().is(":")) {
          b.label = lex_.next().text;
          lex_.next();
          explicit_labels.emplace_back(b.label, at);
        }
        b.theory = theory();
        weight(b);
        soft.emplace_back(std::move(b), at);
      } else {
        lex_.fail(kw.span, "expected 'vocab', 'hard' or 'soft', found " + describe(kw));
      }
      const Token& t = lex_.peek();
      if (t.kind != Token::Kind::newline && t.kind != Token::Kind::end)
        lex_.fail(t.span, "expected end of line, found " + describe(t));
    }

    WsysParse out;
    // Labels: explicit ones first, then s<k> for the rest, skipping taken names.
    std::set<std::string> taken;
    for (const auto& [label, at] : explicit_labels)
      if (!taken.insert(label).second) lex_.fail(at, "duplicate label '" + label + "'");
    std::size_t counter = 0;
    for (auto& [b, at] : soft) {
      if (!b.label.empty()) continue;
      do {
        b.label = soft_label(++counter);
      } while (taken.count(b.label));
      taken.insert(b.label);
    }

    if (has_vocab_line) {
      Vocabulary v(declared);
      for (const auto& [a, at] : first_mention_)
        if (!v.contains(a)) lex_.fail(at, "atom '" + a + "' is not declared in the vocab line");
      hard.insert(hard.begin(), Theory::sigma(v));
    } else {
      Vocabulary covered = Ams{hard}.vocabulary();
      std::vector<std::string> missing;
      for (const auto& [b, at] : soft)
        for (const auto& a : b.theory.vocabulary().names())
          if (!covered.contains(a)) missing.push_back(a);
      if (!missing.empty()) {
        Vocabulary extra(missing);
        std::string list;
        for (const auto& a : extra.names()) list += " " + a;
        out.warnings.push_back("soft atoms not covered by a hard module:" + list + "; added a sigma module");
        hard.push_back(Theory::sigma(extra));
      }
    }
    std::vector<WCondition> conditions;
    for (auto& [b, at] : soft) conditions.push_back(std::move(b));
    out.system = WSystem(Ams{std::move(hard)}, std::move(conditions));
    return out;
  }

 private:
  // Inside brackets line breaks are insignificant.
  const Token& peek() {
    if (depth_ > 0)
      while (lex_.peek().kind == Token::Kind::newline) lex_.next();
    return lex_.peek();
  }
  Token next() {
    peek();
    return lex_.next();
  }
  Token expect(std::string_view p) {
    Token t = next();
    if (!t.is(p)) lex_.fail(t.span, "expected '" + std::string(p) + "', found " + describe(t));
    return t;
  }
  void open(std::string_view p) {
    Token t = expect(p);
    if (++depth_ > detail::kMaxDepth) lex_.fail(t.span, "nesting too deep");
  }
  void close(std::string_view p) {
    expect(p);
    --depth_;
  }

  std::string atom_name(const Token& t, bool mention = true) {
    if (t.kind != Token::Kind::ident || t.text == "not")
      lex_.fail(t.span, "expected an atom, found " + describe(t));
    if (mention) {
      first_mention_.emplace(t.text, t.span);
      if (mentioned_) mentioned_->push_back(t.text);
    }
    return t.text;
  }

  std::string atom() { return atom_name(next()); }

  Literal literal() {
    if (peek().is("-")) {
      next();
      return {atom(), false};
    }
    return {atom(), true};
  }

  Clause clause() {
    if (peek().kind == Token::Kind::directive && peek().text == "#false") {
      next();
      return Clause();
    }
    std::vector<Literal> lits{literal()};
    while (peek().is("|")) {
      next();
      lits.push_back(literal());
    }
    return Clause(lits);
  }

  Formula formula() { return iff(); }

  Formula iff() {
    Formula lhs = implication();
    while (peek().is("<->")) {
      next();
      lhs = Formula::iff(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (!peek().is("->")) return lhs;
    Token t = next();
    if (++depth_ > detail::kMaxDepth) lex_.fail(t.span, "nesting too deep");
    Formula rhs = implication();
    --depth_;
    return Formula::implies(std::move(lhs), std::move(rhs));
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (peek().is("|")) {
      next();
      parts.push_back(conjunction());
    }
    return parts.size() == 1 ? std::move(parts.front()) : Formula::disj(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (peek().is("&")) {
      next();
      parts.push_back(unary());
    }
    return parts.size() == 1 ? std::move(parts.front()) : Formula::conj(std::move(parts));
  }

  Formula unary() {
    const Token& t = peek();
    if (t.is("-")) {
      Token n = next();
      if (++depth_ > detail::kMaxDepth) lex_.fail(n.span, "nesting too deep");
      Formula inner = unary();
      --depth_;
      return Formula::neg(std::move(inner));
    }
    if (t.is("(")) {
      open("(");
      Formula f = formula();
      close(")");
      return f;
    }
    if (t.kind == Token::Kind::directive && (t.text == "#true" || t.text == "#false")) {
      return next().text == "#true" ? Formula::truth() : Formula::falsity();
    }
    return Formula::atom(atom());
  }

  Rule rule() {
    Rule r;
    if (!peek().is(":-")) r.head = atom();
    if (peek().is(":-")) {
      next();
      if (!peek().is(".")) {
        for (;;) {
          if (peek().is_ident("not") && lex_.peek2().kind == Token::Kind::ident) {
            next();
            r.negative_body.push_back(atom());
          } else {
            r.positive_body.push_back(atom());
          }
          if (!peek().is(",")) break;
          next();
        }
      }
    } else if (!r.head) {
      lex_.fail(peek().span, "expected a rule");
    }
    expect(".");
    return r;
  }

  Theory theory() {
    Token tag = next();
    if (tag.kind != Token::Kind::ident) lex_.fail(tag.span, "expected a logic tag, found " + describe(tag));
    if (tag.text == "compl") {
      if (++compl_depth_ > detail::kMaxDepth) lex_.fail(tag.span, "nesting too deep");
      Theory inner = theory();
      --compl_depth_;
      return Theory::complement_of(std::move(inner));
    }

    std::optional<std::vector<std::string>> declared;
    if (peek().is("<")) {
      open("<");
      declared.emplace();
      while (peek().kind == Token::Kind::ident) declared->push_back(atom());
      close(">");
    }
    std::vector<std::string> mentioned;
    auto* saved = mentioned_;
    mentioned_ = &mentioned;
    auto restore = [&] { mentioned_ = saved; };

    const SourceSpan at = tag.span;
    auto vocab = [&] { return Vocabulary(declared ? *declared : mentioned); };
    try {
      Theory out;
      if (tag.text == "clause") {
        open("(");
        Clause c = clause();
        close(")");
        out = Theory::sat({std::move(c)}, vocab());
      } else if (tag.text == "sat") {
        open("{");
        std::vector<Clause> cs;
        while (!peek().is("}")) {
          cs.push_back(clause());
          expect(".");
        }
        close("}");
        out = Theory::sat(std::move(cs), vocab());
      } else if (tag.text == "pl") {
        std::vector<Formula> fs;
        if (peek().is("(")) {
          open("(");
          fs.push_back(formula());
          close(")");
        } else {
          open("{");
          while (!peek().is("}")) {
            fs.push_back(formula());
            expect(".");
          }
          close("}");
        }
        out = Theory::pl(std::move(fs), vocab());
      } else if (tag.text == "wc") {
        open("(");
        std::vector<Literal> lits{literal()};
        while (peek().is("&")) {
          next();
          lits.push_back(literal());
        }
        close(")");
        out = Theory::wc(WcBody(lits), vocab());
      } else if (tag.text == "lp") {
        open("{");
        std::vector<Rule> rules;
        while (!peek().is("}")) rules.push_back(rule());
        close("}");
        out = Theory::lp(Program(std::move(rules), vocab()));
      } else if (tag.text == "sigma") {
        if (declared) lex_.fail(at, "sigma takes its vocabulary in braces");
        open("{");
        while (peek().kind == Token::Kind::ident) atom();
        close("}");
        out = Theory::sigma(vocab());
      } else {
        lex_.fail(at, "unknown logic tag '" + tag.text + "'");
      }
      restore();
      if (saved) saved->insert(saved->end(), out.vocabulary().names().begin(), out.vocabulary().names().end());
      return out;
    } catch (const VocabularyMismatch& e) {
      lex_.fail(at, e.what());
    } catch (const PreconditionError& e) {
      lex_.fail(at, e.what());
    }
  }

  void weight(WCondition& b) {
    open("[");
    bool negative = false;
    if (peek().is("-")) {
      next();
      negative = true;
    }
    Token w = next();
    if (w.kind != Token::Kind::integer) lex_.fail(w.span, "expected a weight, found " + describe(w));
    b.weight = *parse_weight(w.text);
    if (negative) b.weight = -b.weight;
    b.level = 1;
    if (peek().is("@")) {
      next();
      Token l = next();
      if (l.kind != Token::Kind::integer) lex_.fail(l.span, "expected a level, found " + describe(l));
      Weight lv = *parse_weight(l.text);
      if (lv <= 0) lex_.fail(l.span, "level must be positive");
      if (lv > Weight(std::numeric_limits<Level>::max())) lex_.fail(l.span, "level out of range");
      b.level = static_cast<Level>(lv);
    }
    close("]");
  }

  Lexer lex_;
  std::size_t depth_ = 0;
  std::size_t compl_depth_ = 0;
  std::map<std::string, SourceSpan> first_mention_;
  std::vector<std::string>* mentioned_ = nullptr;
};

std::vector<std::string> scan_atoms(const std::string& payload) {
  std::vector<std::string> out;
  Lexer lex(payload, false);
  for (Token t = lex.next(); t.kind != Token::Kind::end; t = lex.next())
    if (t.kind == Token::Kind::ident && t.text != "not") out.push_back(t.text);
  return Vocabulary(out).names();
}

std::string render(const Theory& t) {
  std::string tag;
  std::string payload;
  switch (t.logic()) {
    case Logic::complement: return "compl " + render(t.inner());
    case Logic::sigma: {
      payload = "{";
      for (const auto& a : t.vocabulary().names()) payload += " " + a;
      return "sigma " + payload + " }";
    }
    case Logic::sat:
      if (t.clauses().size() == 1) {
        tag = "clause";
        payload = "(" + format_clause(t.clauses().front()) + ")";
      } else {
        tag = "sat";
        payload = "{";
        for (const auto& c : t.clauses()) payload += " " + format_clause(c) + ".";
        payload += " }";
      }
      break;
    case Logic::pl:
      tag = "pl";
      if (t.formulas().size() == 1) {
        payload = "(" + format_formula(t.formulas().front()) + ")";
      } else {
        payload = "{";
        for (const auto& f : t.formulas()) payload += " " + format_formula(f) + ".";
        payload += " }";
      }
      break;
    case Logic::lp:
      tag = "lp";
      payload = "{";
      for (const auto& r : t.program().rules()) payload += " " + format_rule(r);
      payload += " }";
      break;
    case Logic::wc: {
      tag = "wc";
      payload = "(";
      const auto lits = t.wc_body().literals();
      for (std::size_t k = 0; k < lits.size(); ++k) payload += (k ? " & " : "") + lits[k].str();
      payload += ")";
      break;
    }
  }
  if (scan_atoms(payload) != t.vocabulary().names()) {
    tag += " <";
    for (std::size_t k = 0; k < t.vocabulary().size(); ++k) tag += (k ? " " : "") + t.vocabulary().name(k);
    tag += ">";
  }
  return tag + " " + payload;
}

}  // namespace

WsysParse parse_wsystem_with_warnings(std::string_view text) { return WsysReader(text).read(); }

WSystem parse_wsystem(std::string_view text) { return parse_wsystem_with_warnings(text).system; }

std::string write_wsystem(const WSystem& w) {
  std::string out;
  for (const auto& m : w.hard().modules) out += "hard " + render(m) + "\n";
  for (const auto& b : w.soft()) {
    out += "soft " + b.label + ": " + render(b.theory) + " [" + to_string(b.weight) + "@" + std::to_string(b.level) +
           "]\n";
  }
  return out;
}

}  // namespace wsys
