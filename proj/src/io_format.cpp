#include "wsys/io.hpp"

namespace wsys {

std::string format_clause(const Clause& c) {
  if (c.empty()) return "#false";
  std::string s;
  for (const auto& l : c.literals()) {
    if (!s.empty()) s += " | ";
    s += l.str();
  }
  return s;
}

namespace {

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::equivalence: return 1;
    case Formula::Kind::implication: return 2;
    case Formula::Kind::disjunction: return f.children().size() < 2 ? 6 : 3;
    case Formula::Kind::conjunction: return f.children().size() < 2 ? 6 : 4;
    case Formula::Kind::negation: return 5;
    default: return 6;
  }
}

std::string render(const Formula& f);

std::string wrap(const Formula& f, bool parens) { return parens ? "(" + render(f) + ")" : render(f); }

std::string render(const Formula& f) {
  const auto& ch = f.children();
  const int p = precedence(f);
  switch (f.kind()) {
    case Formula::Kind::top: return "#true";
    case Formula::Kind::bottom: return "#false";
    case Formula::Kind::atom: return f.name();
    case Formula::Kind::negation: return "-" + wrap(ch[0], precedence(ch[0]) < 5);
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      const bool is_and = f.kind() == Formula::Kind::conjunction;
      if (ch.empty()) return is_and ? "#true" : "#false";
      if (ch.size() == 1) return render(ch[0]);
      std::string s;
      for (std::size_t k = 0; k < ch.size(); ++k) {
        if (k) s += is_and ? " & " : " | ";
        s += wrap(ch[k], precedence(ch[k]) <= p);
      }
      return s;
    }
    case Formula::Kind::implication:
      return wrap(ch[0], precedence(ch[0]) <= p) + " -> " + wrap(ch[1], precedence(ch[1]) < p);
    case Formula::Kind::equivalence:
      return wrap(ch[0], precedence(ch[0]) < p) + " <-> " + wrap(ch[1], precedence(ch[1]) <= p);
  }
  return {};
}

std::string body_text(const std::vector<std::string>& pos, const std::vector<std::string>& neg) {
  std::string s;
  for (const auto& a : pos) s += (s.empty() ? "" : ", ") + a;
  for (const auto& a : neg) s += (s.empty() ? "not " : ", not ") + a;
  return s;
}

}  // namespace

std::string format_formula(const Formula& f) { return render(f); }

std::string format_rule(const Rule& r) {
  const std::string body = body_text(r.positive_body, r.negative_body);
  if (r.head) return body.empty() ? *r.head + "." : *r.head + " :- " + body + ".";
  return body.empty() ? ":- ." : ":- " + body + ".";
}

std::string format_weak_constraint(const WeakConstraint& c) {
  return ":~ " + body_text(c.body.positive(), c.body.negative()) + ". [" + to_string(c.weight) + "@" +
         std::to_string(c.level) + "]";
}

}  // namespace wsys
