#include "wsys/translate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wsys/error.hpp"
#include "wsys/transforms.hpp"

namespace wsys {

DependencyGraph::DependencyGraph(const Program& p) : nodes_(p.vocabulary().names()), succ_(nodes_.size()) {
  const Vocabulary& v = p.vocabulary();
  for (const auto& r : p.rules()) {
    if (!r.head) continue;
    auto& out = succ_[*v.index_of(*r.head)];
    for (const auto& b : r.positive_body) {
      auto to = *v.index_of(b);
      if (std::find(out.begin(), out.end(), to) == out.end()) out.push_back(to);
    }
  }
}

std::optional<std::vector<std::string>> DependencyGraph::find_cycle() const {
  enum class Mark { fresh, active, done };
  std::vector<Mark> mark(nodes_.size(), Mark::fresh);
  std::vector<std::size_t> path;
  std::optional<std::vector<std::string>> cycle;

  auto visit = [&](std::size_t n, auto& self) -> bool {
    mark[n] = Mark::active;
    path.push_back(n);
    for (auto m : succ_[n]) {
      if (mark[m] == Mark::active) {
        auto from = std::find(path.begin(), path.end(), m);
        std::vector<std::string> names;
        for (auto it = from; it != path.end(); ++it) names.push_back(nodes_[*it]);
        names.push_back(nodes_[m]);
        cycle = std::move(names);
        return true;
      }
      if (mark[m] == Mark::fresh && self(m, self)) return true;
    }
    path.pop_back();
    mark[n] = Mark::done;
    return false;
  };
  for (std::size_t n = 0; n < nodes_.size(); ++n)
    if (mark[n] == Mark::fresh && visit(n, visit)) break;
  return cycle;
}

bool is_tight(const Program& p) { return !DependencyGraph(p).find_cycle().has_value(); }

namespace {

Formula collapse_conj(std::vector<Formula> fs) {
  if (fs.empty()) return Formula::truth();
  if (fs.size() == 1) return std::move(fs.front());
  return Formula::conj(std::move(fs));
}

Formula collapse_disj(std::vector<Formula> fs) {
  if (fs.empty()) return Formula::falsity();
  if (fs.size() == 1) return std::move(fs.front());
  return Formula::disj(std::move(fs));
}

Formula body_formula(const Rule& r) {
  std::vector<Formula> lits;
  for (const auto& a : r.positive_body) lits.push_back(Formula::atom(a));
  for (const auto& a : r.negative_body) lits.push_back(Formula::neg(Formula::atom(a)));
  return collapse_conj(std::move(lits));
}

}  // namespace

Formula completion(const Program& p) {
  std::vector<Formula> conjuncts;
  for (const auto& a : p.vocabulary().names()) {
    std::vector<Formula> bodies;
    for (const auto& r : p.rules())
      if (r.head && *r.head == a) bodies.push_back(body_formula(r));
    conjuncts.push_back(Formula::iff(Formula::atom(a), collapse_disj(std::move(bodies))));
  }
  for (const auto& r : p.rules())
    if (r.is_constraint()) conjuncts.push_back(Formula::neg(body_formula(r)));
  return collapse_conj(std::move(conjuncts));
}

namespace {

using K = Formula::Kind;

// One-level negation push that never produces double negations.
Formula negate(const Formula& f) {
  switch (f.kind()) {
    case K::top: return Formula::falsity();
    case K::bottom: return Formula::truth();
    case K::negation: return f.children()[0];
    default: return Formula::neg(f);
  }
}

// Constant propagation, double-negation removal, implication elimination and
// flattening of nested conjunctions/disjunctions. Constants survive only as
// the whole formula.
Formula simplify(const Formula& f) {
  const auto& ch = f.children();
  switch (f.kind()) {
    case K::top:
    case K::bottom:
    case K::atom: return f;
    case K::negation: return negate(simplify(ch[0]));
    case K::conjunction:
    case K::disjunction: {
      const bool is_and = f.kind() == K::conjunction;
      const K unit = is_and ? K::top : K::bottom;
      const K absorbing = is_and ? K::bottom : K::top;
      std::vector<Formula> out;
      for (const auto& c : ch) {
        Formula s = simplify(c);
        if (s.kind() == unit) continue;
        if (s.kind() == absorbing) return s;
        if (s.kind() == f.kind()) {
          for (const auto& g : s.children()) out.push_back(g);
        } else {
          out.push_back(std::move(s));
        }
      }
      if (out.empty()) return is_and ? Formula::truth() : Formula::falsity();
      if (out.size() == 1) return out.front();
      return is_and ? Formula::conj(std::move(out)) : Formula::disj(std::move(out));
    }
    case K::implication: return simplify(Formula::disj({Formula::neg(ch[0]), ch[1]}));
    case K::equivalence: {
      Formula l = simplify(ch[0]);
      Formula r = simplify(ch[1]);
      if (l.kind() == K::top) return r;
      if (r.kind() == K::top) return l;
      if (l.kind() == K::bottom) return negate(r);
      if (r.kind() == K::bottom) return negate(l);
      return Formula::iff(std::move(l), std::move(r));
    }
  }
  return f;
}

class Clausifier {
 public:
  explicit Clausifier(std::set<std::string> taken) : taken_(std::move(taken)) {}

  void emit_true(const Formula& f) {
    switch (f.kind()) {
      case K::top: return;
      case K::bottom: add({}); return;
      case K::atom: add({{f.name(), true}}); return;
      case K::negation: emit_false(f.children()[0]); return;
      case K::conjunction:
        for (const auto& c : f.children()) emit_true(c);
        return;
      case K::disjunction: emit_or(f.children()); return;
      case K::implication: emit_or({negate(f.children()[0]), f.children()[1]}); return;
      case K::equivalence: {
        const auto& l = f.children()[0];
        const auto& r = f.children()[1];
        emit_or({negate(l), r});
        emit_or({l, negate(r)});
        return;
      }
    }
  }

  void emit_false(const Formula& f) {
    switch (f.kind()) {
      case K::top: add({}); return;
      case K::bottom: return;
      case K::atom: add({{f.name(), false}}); return;
      case K::negation: emit_true(f.children()[0]); return;
      case K::conjunction: {
        std::vector<Formula> items;
        for (const auto& c : f.children()) items.push_back(negate(c));
        emit_or(items);
        return;
      }
      case K::disjunction:
        for (const auto& c : f.children()) emit_false(c);
        return;
      case K::implication:
        emit_true(f.children()[0]);
        emit_false(f.children()[1]);
        return;
      case K::equivalence: {
        const auto& l = f.children()[0];
        const auto& r = f.children()[1];
        emit_or({l, r});
        emit_or({negate(l), negate(r)});
        return;
      }
    }
  }

  ClausifyResult result() && { return {std::move(clauses_), std::move(fresh_)}; }

 private:
  // Conjuncts of f if f is conjunction-like, else empty.
  static std::vector<Formula> conjuncts(const Formula& f) {
    if (f.kind() == K::conjunction) return f.children();
    if (f.kind() == K::negation && f.children()[0].kind() == K::disjunction) {
      std::vector<Formula> out;
      for (const auto& c : f.children()[0].children()) out.push_back(negate(c));
      return out;
    }
    return {};
  }

  // Flattens nested disjunctions (including negated conjunctions) into items.
  static void flatten_or(const Formula& f, std::vector<Formula>& out) {
    if (f.kind() == K::disjunction) {
      for (const auto& c : f.children()) flatten_or(c, out);
    } else if (f.kind() == K::negation && f.children()[0].kind() == K::conjunction) {
      for (const auto& c : f.children()[0].children()) flatten_or(negate(c), out);
    } else if (f.kind() == K::implication) {
      flatten_or(negate(f.children()[0]), out);
      flatten_or(f.children()[1], out);
    } else {
      out.push_back(f);
    }
  }

  void emit_or(const std::vector<Formula>& input) {
    std::vector<Formula> items;
    for (const auto& f : input) flatten_or(f, items);
    std::vector<Literal> lits;
    std::vector<std::size_t> conj_like;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (items[k].kind() == K::top) return;
      if (items[k].kind() == K::bottom) continue;
      if (!conjuncts(items[k]).empty()) conj_like.push_back(k);
    }
    if (conj_like.size() == 1) {
      // Distribute over the single conjunction: one clause per conjunct.
      const std::size_t pivot = conj_like.front();
      for (const auto& c : conjuncts(items[pivot])) {
        std::vector<Formula> next;
        for (std::size_t k = 0; k < items.size(); ++k)
          if (k != pivot) next.push_back(items[k]);
        next.push_back(c);
        emit_or(next);
      }
      return;
    }
    for (const auto& item : items) {
      if (item.kind() == K::bottom) continue;
      lits.push_back(lit_of(item));
    }
    add(lits);
  }

  // A literal equivalent to f, introducing a defined atom when needed.
  Literal lit_of(const Formula& f) {
    if (f.kind() == K::atom) return {f.name(), true};
    if (f.kind() == K::negation) return lit_of(f.children()[0]).negated();
    const std::string key = f.str();
    if (auto it = defined_.find(key); it != defined_.end()) return {it->second, true};
    const std::string x = fresh_name();
    defined_.emplace(key, x);
    const Literal pos{x, true};
    const Literal neg{x, false};
    std::vector<Literal> ls;
    switch (f.kind()) {
      case K::conjunction: {
        for (const auto& c : f.children()) ls.push_back(lit_of(c));
        std::vector<Literal> back{pos};
        for (const auto& l : ls) {
          add({neg, l});
          back.push_back(l.negated());
        }
        add(back);
        break;
      }
      case K::disjunction: {
        for (const auto& c : f.children()) ls.push_back(lit_of(c));
        std::vector<Literal> fwd{neg};
        for (const auto& l : ls) {
          add({pos, l.negated()});
          fwd.push_back(l);
        }
        add(fwd);
        break;
      }
      case K::implication: {
        const Literal p = lit_of(f.children()[0]);
        const Literal q = lit_of(f.children()[1]);
        add({neg, p.negated(), q});
        add({pos, p});
        add({pos, q.negated()});
        break;
      }
      case K::equivalence: {
        const Literal p = lit_of(f.children()[0]);
        const Literal q = lit_of(f.children()[1]);
        add({neg, p.negated(), q});
        add({neg, p, q.negated()});
        add({pos, p, q});
        add({pos, p.negated(), q.negated()});
        break;
      }
      default: break;
    }
    return pos;
  }

  std::string fresh_name() {
    for (;;) {
      std::string name = "__body" + std::to_string(++counter_);
      if (taken_.insert(name).second) {
        fresh_.push_back(name);
        return name;
      }
    }
  }

  void add(const std::vector<Literal>& lits) {
    Clause c(lits);
    if (std::find(clauses_.begin(), clauses_.end(), c) == clauses_.end()) clauses_.push_back(std::move(c));
  }

  std::set<std::string> taken_;
  std::map<std::string, std::string> defined_;
  std::vector<Clause> clauses_;
  std::vector<std::string> fresh_;
  std::size_t counter_ = 0;
};

}  // namespace

ClausifyResult clausify(const Formula& f, const std::vector<std::string>& reserved) {
  std::set<std::string> taken(reserved.begin(), reserved.end());
  for (const auto& a : f.atoms()) taken.insert(a);
  Clausifier c(std::move(taken));
  c.emit_true(simplify(f));
  return std::move(c).result();
}

Translation oprogram_to_pw(const OProgram& p, Sense target) {
  if (auto cycle = DependencyGraph(p.program()).find_cycle()) {
    std::string path;
    for (std::size_t k = 0; k < cycle->size(); ++k) path += (k ? " -> " : "") + (*cycle)[k];
    throw SemanticRefusal("program is not tight; positive cycle: " + path);
  }
  const Singularity polarity = target == Sense::max ? Singularity::positive : Singularity::negative;
  SingularResult singular = target == Sense::max ? to_positively_singular(p) : to_negatively_singular(p);
  const OProgram& q = singular.program;

  // Sign normalization: afterwards all weights are >= 0 (max) or <= 0 (min).
  WSystem w = from_oprogram(q);
  {
    std::vector<WCondition> soft;
    for (const auto& b : w.soft()) soft.push_back(singular_rewrite(b, SingularMode::up, polarity));
    w = drop_zero_weights(WSystem(w.hard(), std::move(soft)));
  }
  if (levels(w).size() > 1) {
    w = normalize_levels(w);
    w = target == Sense::max ? flatten_levels(w) : negate_all_weights(flatten_levels(negate_all_weights(w)));
  }

  std::vector<SoftClause> soft;
  for (const auto& b : w.soft()) {
    WCondition img = singular_rewrite(b, SingularMode::sat, polarity);
    if (target == Sense::max) img.weight = -img.weight;
    Clause clause = img.theory.logic() == Logic::sat ? img.theory.clauses().front()
                                                     : Clause::unit(img.theory.wc_body().literals().front());
    soft.push_back({std::move(clause), img.weight});
  }

  ClausifyResult hard = clausify(completion(q.program()), q.vocabulary().names());
  std::vector<std::string> fresh;
  for (const auto& [atom, index] : singular.fresh_atoms) fresh.push_back(atom);
  std::sort(fresh.begin(), fresh.end(), [&](const std::string& a, const std::string& b) {
    return singular.fresh_atoms.at(a) < singular.fresh_atoms.at(b);
  });
  fresh.insert(fresh.end(), hard.fresh.begin(), hard.fresh.end());
  Vocabulary v = q.vocabulary().with(hard.fresh);
  return Translation{PwProblem(std::move(hard.clauses), std::move(soft), target, std::move(v)), std::move(fresh),
                     p.vocabulary()};
}

}  // namespace wsys
