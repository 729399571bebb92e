#include "wsys/logics.hpp"

#include <algorithm>

#include "wsys/error.hpp"

namespace wsys {

namespace {

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Removes later duplicates, keeping first-occurrence order.
void stable_unique(std::vector<std::string>& v) {
  std::vector<std::string> out;
  for (auto& s : v)
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  v = std::move(out);
}

void append_unique(std::vector<std::string>& out, const std::string& name) {
  if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
}

}  // namespace

Clause::Clause(std::vector<std::string> negative, std::vector<std::string> positive)
    : negative_(std::move(negative)), positive_(std::move(positive)) {
  sort_unique(negative_);
  sort_unique(positive_);
}

Clause::Clause(const std::vector<Literal>& literals) {
  for (const auto& l : literals) (l.positive ? positive_ : negative_).push_back(l.atom);
  sort_unique(negative_);
  sort_unique(positive_);
}

std::vector<Literal> Clause::literals() const {
  std::vector<Literal> out;
  for (const auto& a : negative_) out.push_back({a, false});
  for (const auto& a : positive_) out.push_back({a, true});
  std::sort(out.begin(), out.end(), [](const Literal& x, const Literal& y) {
    if (x.atom != y.atom) return x.atom < y.atom;
    return !x.positive && y.positive;
  });
  return out;
}

std::vector<std::string> Clause::atoms() const {
  std::vector<std::string> out;
  for (const auto& l : literals()) append_unique(out, l.atom);
  return out;
}

Formula Formula::atom(std::string name) {
  Formula f(Kind::atom);
  f.name_ = std::move(name);
  return f;
}

Formula Formula::lit(const Literal& l) { return l.positive ? atom(l.atom) : neg(atom(l.atom)); }

Formula Formula::neg(Formula f) {
  Formula out(Kind::negation);
  out.children_.push_back(std::move(f));
  return out;
}

Formula Formula::conj(std::vector<Formula> children) {
  Formula out(Kind::conjunction);
  out.children_ = std::move(children);
  return out;
}

Formula Formula::disj(std::vector<Formula> children) {
  Formula out(Kind::disjunction);
  out.children_ = std::move(children);
  return out;
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  Formula out(Kind::implication);
  out.children_.push_back(std::move(lhs));
  out.children_.push_back(std::move(rhs));
  return out;
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  Formula out(Kind::equivalence);
  out.children_.push_back(std::move(lhs));
  out.children_.push_back(std::move(rhs));
  return out;
}

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  auto walk = [&](const Formula& f, auto& self) -> void {
    if (f.kind_ == Kind::atom) append_unique(out, f.name_);
    for (const auto& c : f.children_) self(c, self);
  };
  walk(*this, walk);
  return out;
}

std::string Formula::str() const {
  auto join = [&](const char* op, const char* empty) {
    if (children_.empty()) return std::string(empty);
    std::string s = "(";
    for (std::size_t k = 0; k < children_.size(); ++k) {
      if (k) s += op;
      s += children_[k].str();
    }
    return s + ")";
  };
  switch (kind_) {
    case Kind::top: return "#true";
    case Kind::bottom: return "#false";
    case Kind::atom: return name_;
    case Kind::negation: return "-" + children_[0].str();
    case Kind::conjunction: return join(" & ", "#true");
    case Kind::disjunction: return join(" | ", "#false");
    case Kind::implication: return "(" + children_[0].str() + " -> " + children_[1].str() + ")";
    case Kind::equivalence: return "(" + children_[0].str() + " <-> " + children_[1].str() + ")";
  }
  return {};
}

Formula to_formula(const Clause& c) {
  std::vector<Formula> lits;
  for (const auto& l : c.literals()) lits.push_back(Formula::lit(l));
  return Formula::disj(std::move(lits));
}

std::string Rule::str() const {
  std::string s = head.value_or("");
  std::vector<std::string> body;
  for (const auto& a : positive_body) body.push_back(a);
  for (const auto& a : negative_body) body.push_back("not " + a);
  if (!body.empty() || !head) {
    s += head ? " :- " : ":- ";
    for (std::size_t k = 0; k < body.size(); ++k) s += (k ? ", " : "") + body[k];
  }
  return s + ".";
}

Program::Program(std::vector<Rule> rules, Vocabulary vocabulary)
    : rules_(std::move(rules)), vocabulary_(std::move(vocabulary)) {
  auto check = [&](const std::string& a) {
    if (!vocabulary_.contains(a)) throw VocabularyMismatch("rule atom '" + a + "' is not in the program vocabulary");
  };
  for (auto& r : rules_) {
    stable_unique(r.positive_body);
    stable_unique(r.negative_body);
    if (r.head) check(*r.head);
    for (const auto& a : r.positive_body) check(a);
    for (const auto& a : r.negative_body) check(a);
  }
}

WcBody::WcBody(std::vector<std::string> positive, std::vector<std::string> negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
  stable_unique(positive_);
  stable_unique(negative_);
  if (positive_.empty() && negative_.empty()) throw PreconditionError("weak constraint body must be nonempty");
}

WcBody::WcBody(const std::vector<Literal>& literals) {
  for (const auto& l : literals) (l.positive ? positive_ : negative_).push_back(l.atom);
  stable_unique(positive_);
  stable_unique(negative_);
  if (positive_.empty() && negative_.empty()) throw PreconditionError("weak constraint body must be nonempty");
}

std::vector<Literal> WcBody::literals() const {
  std::vector<Literal> out;
  for (const auto& a : positive_) out.push_back({a, true});
  for (const auto& a : negative_) out.push_back({a, false});
  return out;
}

std::vector<std::string> WcBody::atoms() const {
  std::vector<std::string> out;
  for (const auto& l : literals()) append_unique(out, l.atom);
  return out;
}

bool eval_clause(const Interpretation& i, const Clause& c) {
  bool value = false;
  // Every atom is looked up so that foreign atoms are always reported.
  for (const auto& a : c.positive()) value = i.holds(a) || value;
  for (const auto& a : c.negative()) value = !i.holds(a) || value;
  return value;
}

bool eval_formula(const Interpretation& i, const Formula& f) {
  using K = Formula::Kind;
  const auto& ch = f.children();
  switch (f.kind()) {
    case K::top: return true;
    case K::bottom: return false;
    case K::atom: return i.holds(f.name());
    case K::negation: return !eval_formula(i, ch[0]);
    case K::conjunction: {
      bool value = true;
      for (const auto& c : ch) value = eval_formula(i, c) && value;
      return value;
    }
    case K::disjunction: {
      bool value = false;
      for (const auto& c : ch) value = eval_formula(i, c) || value;
      return value;
    }
    case K::implication: {
      bool lhs = eval_formula(i, ch[0]);
      bool rhs = eval_formula(i, ch[1]);
      return !lhs || rhs;
    }
    case K::equivalence: return eval_formula(i, ch[0]) == eval_formula(i, ch[1]);
  }
  return false;
}

bool eval_wc_body(const Interpretation& i, const WcBody& b) {
  bool value = true;
  for (const auto& a : b.positive()) value = i.holds(a) && value;
  for (const auto& a : b.negative()) value = !i.holds(a) && value;
  return value;
}

bool eval_rule(const Interpretation& i, const Rule& r) {
  bool body = true;
  for (const auto& a : r.positive_body) body = i.holds(a) && body;
  for (const auto& a : r.negative_body) body = !i.holds(a) && body;
  bool head = r.head ? i.holds(*r.head) : false;
  return !body || head;
}

Program reduct(const Program& p, const Interpretation& x) {
  std::vector<Rule> kept;
  for (const auto& r : p.rules()) {
    bool violated = std::any_of(r.negative_body.begin(), r.negative_body.end(),
                                [&](const std::string& a) { return x.contains(a); });
    if (violated) continue;
    kept.push_back(Rule{r.head, r.positive_body, {}});
  }
  return Program(std::move(kept), p.vocabulary());
}

Interpretation least_model(const Program& p) {
  const auto& voc = p.vocabulary();
  struct Compiled {
    std::size_t head;
    std::vector<std::size_t> body;
  };
  std::vector<Compiled> rules;
  for (const auto& r : p.rules()) {
    if (!r.negative_body.empty()) throw PreconditionError("least_model requires a program without negation");
    if (!r.head) continue;
    Compiled c{*voc.index_of(*r.head), {}};
    for (const auto& a : r.positive_body) c.body.push_back(*voc.index_of(a));
    rules.push_back(std::move(c));
  }
  Interpretation model(voc);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (model.holds(r.head)) continue;
      if (std::all_of(r.body.begin(), r.body.end(), [&](std::size_t b) { return model.holds(b); })) {
        model.set(r.head, true);
        changed = true;
      }
    }
  }
  return model;
}

bool is_answer_set(const Program& p, const Interpretation& x) {
  for (const auto& m : x.members())
    if (!p.vocabulary().contains(m)) return false;
  const Program r = reduct(p, x);
  const Interpretation lm = least_model(r);
  const Interpretation xs = project(x, p.vocabulary());
  if (!(lm == xs)) return false;
  for (const auto& rule : r.rules()) {
    if (!rule.is_constraint()) continue;
    if (std::all_of(rule.positive_body.begin(), rule.positive_body.end(),
                    [&](const std::string& a) { return xs.holds(a); }))
      return false;
  }
  return true;
}

}  // namespace wsys
