#include "wsys/testkit.hpp"

#include <map>
#include <random>

#include "wsys/error.hpp"

namespace wsys::testkit {

namespace {

class Gen {
 public:
  explicit Gen(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  std::size_t upto(std::size_t hi) { return hi == 0 ? 0 : static_cast<std::size_t>(rng_() % (hi + 1)); }
  long between(long lo, long hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(unsigned percent) { return rng_() % 100 < percent; }

  Vocabulary vocabulary() {
    std::vector<std::string> names;
    const std::size_t n = upto(cfg_.max_atoms);
    for (std::size_t k = 0; k < n; ++k)
      names.push_back(k < 26 ? std::string(1, static_cast<char>('a' + k)) : "a" + std::to_string(k));
    return Vocabulary(names);
  }

  const std::string& pick(const Vocabulary& v) { return v.name(upto(v.size() - 1)); }

  Literal literal(const Vocabulary& v) { return {pick(v), chance(50)}; }

  Clause clause(const Vocabulary& v) {
    if (v.size() == 0 || chance(3)) return Clause();
    std::vector<Literal> lits;
    const std::size_t len = 1 + upto(2);
    for (std::size_t k = 0; k < len; ++k) lits.push_back(literal(v));
    return Clause(lits);
  }

  Formula formula(const Vocabulary& v, int depth) {
    if (v.size() == 0) return chance(50) ? Formula::truth() : Formula::falsity();
    if (depth == 0 || chance(30)) {
      if (chance(4)) return chance(50) ? Formula::truth() : Formula::falsity();
      return Formula::lit(literal(v));
    }
    switch (upto(4)) {
      case 0: return Formula::neg(formula(v, depth - 1));
      case 1: return Formula::conj({formula(v, depth - 1), formula(v, depth - 1)});
      case 2: return Formula::disj({formula(v, depth - 1), formula(v, depth - 1)});
      case 3: return Formula::implies(formula(v, depth - 1), formula(v, depth - 1));
      default: return Formula::iff(formula(v, depth - 1), formula(v, depth - 1));
    }
  }

  // Tight programs only use atoms that precede the head positively.
  Rule rule(const Vocabulary& v, bool tight) {
    Rule r;
    std::size_t head = v.size();
    if (!chance(15)) {
      head = upto(v.size() - 1);
      r.head = v.name(head);
    }
    const std::size_t npos = upto(2);
    for (std::size_t k = 0; k < npos; ++k) {
      if (tight && r.head) {
        if (head == 0) break;
        r.positive_body.push_back(v.name(upto(head - 1)));
      } else {
        r.positive_body.push_back(pick(v));
      }
    }
    const std::size_t nneg = upto(2);
    for (std::size_t k = 0; k < nneg; ++k) r.negative_body.push_back(pick(v));
    if (!r.head && r.positive_body.empty() && r.negative_body.empty()) r.negative_body.push_back(pick(v));
    return r;
  }

  Program program(const Vocabulary& v, bool tight) {
    std::vector<Rule> rules;
    if (v.size() > 0) {
      const std::size_t n = upto(cfg_.max_rules);
      for (std::size_t k = 0; k < n; ++k) rules.push_back(rule(v, tight));
    }
    return Program(std::move(rules), v);
  }

  WcBody body(const Vocabulary& v) {
    std::vector<Literal> lits;
    const std::size_t len = 1 + upto(2);
    for (std::size_t k = 0; k < len; ++k) lits.push_back(literal(v));
    return WcBody(lits);
  }

  Theory theory(const Vocabulary& v, bool soft) {
    const std::size_t choice = upto(soft ? 5 : 4);
    if (v.size() == 0) return choice % 2 ? Theory::sigma(v) : Theory::sat({}, v);
    switch (choice) {
      case 0: {
        std::vector<Clause> cs;
        const std::size_t n = soft ? 1 + upto(1) : upto(cfg_.max_clauses);
        for (std::size_t k = 0; k < n; ++k) cs.push_back(clause(v));
        return Theory::sat(std::move(cs), v);
      }
      case 1: {
        std::vector<Formula> fs;
        const std::size_t n = 1 + upto(1);
        for (std::size_t k = 0; k < n; ++k) fs.push_back(formula(v, 3));
        return Theory::pl(std::move(fs), v);
      }
      case 2: return Theory::lp(program(v, false));
      case 3: return Theory::wc(body(v), v);
      case 4: return soft ? Theory::sat({clause(v)}, v) : Theory::sigma(v);
      default: return Theory::complement_of(theory(v, soft));
    }
  }

  Weight weight() { return Weight(between(cfg_.min_weight, cfg_.max_weight)); }
  Level level() { return static_cast<Level>(between(1, static_cast<long>(std::max<Level>(1, cfg_.max_level)))); }

  const GenConfig& cfg_;
  std::mt19937_64 rng_;
};

}  // namespace

WSystem gen_wsystem(const GenConfig& cfg) {
  Gen g(cfg);
  const Vocabulary v = g.vocabulary();
  Ams hard;
  const std::size_t modules = 1 + g.upto(1);
  for (std::size_t k = 0; k < modules; ++k) hard.modules.push_back(g.theory(v, false));
  std::vector<WCondition> soft;
  const std::size_t n = g.upto(cfg.max_conditions);
  for (std::size_t k = 0; k < n; ++k) {
    Theory t = g.theory(v, true);
    Weight w = g.weight();
    soft.push_back({soft_label(k + 1), std::move(t), std::move(w), g.level()});
  }
  return WSystem(std::move(hard), std::move(soft));
}

OProgram gen_oprogram(const GenConfig& cfg) {
  Gen g(cfg);
  const Vocabulary v = g.vocabulary();
  Program p = g.program(v, cfg.tight);
  std::vector<WeakConstraint> weak;
  if (v.size() > 0) {
    const std::size_t n = g.upto(cfg.max_conditions);
    for (std::size_t k = 0; k < n; ++k) {
      WcBody b = g.body(v);
      Weight w = g.weight();
      weak.push_back({std::move(b), std::move(w), g.level()});
    }
  }
  return OProgram(std::move(p), std::move(weak));
}

PwProblem gen_pw(const GenConfig& cfg) {
  Gen g(cfg);
  const Vocabulary v = g.vocabulary();
  std::vector<Clause> hard;
  std::vector<SoftClause> soft;
  const std::size_t nh = g.upto(cfg.max_clauses);
  for (std::size_t k = 0; k < nh; ++k) hard.push_back(g.clause(v));
  const std::size_t ns = g.upto(cfg.max_conditions);
  for (std::size_t k = 0; k < ns; ++k) {
    Clause c = g.clause(v);
    soft.push_back({std::move(c), Weight(g.between(1, std::max(1, cfg.max_weight)))});
  }
  const Sense s = g.chance(50) ? Sense::max : Sense::min;
  return PwProblem(std::move(hard), std::move(soft), s, v);
}

namespace {

// Naive evaluators over a bit vector indexed by sigma.

bool value(const std::vector<bool>& bits, const Vocabulary& sigma, const std::string& atom) {
  auto idx = sigma.index_of(atom);
  if (!idx) throw VocabularyMismatch("oracle: atom '" + atom + "' is outside the vocabulary");
  return bits[*idx];
}

bool eval(const std::vector<bool>& bits, const Vocabulary& sigma, const Formula& f) {
  const auto& ch = f.children();
  switch (f.kind()) {
    case Formula::Kind::top: return true;
    case Formula::Kind::bottom: return false;
    case Formula::Kind::atom: return value(bits, sigma, f.name());
    case Formula::Kind::negation: return !eval(bits, sigma, ch[0]);
    case Formula::Kind::conjunction:
      for (const auto& c : ch)
        if (!eval(bits, sigma, c)) return false;
      return true;
    case Formula::Kind::disjunction:
      for (const auto& c : ch)
        if (eval(bits, sigma, c)) return true;
      return false;
    case Formula::Kind::implication: return !eval(bits, sigma, ch[0]) || eval(bits, sigma, ch[1]);
    case Formula::Kind::equivalence: return eval(bits, sigma, ch[0]) == eval(bits, sigma, ch[1]);
  }
  return false;
}

bool all_of(const std::vector<bool>& bits, const Vocabulary& sigma, const std::vector<std::string>& atoms, bool want) {
  for (const auto& a : atoms)
    if (value(bits, sigma, a) != want) return false;
  return true;
}

// Is `y` a model of the reduct of p with respect to `x`?
bool models_reduct(const Program& p, const std::vector<bool>& x, const std::vector<bool>& y,
                   const Vocabulary& sigma) {
  for (const auto& r : p.rules()) {
    if (!all_of(x, sigma, r.negative_body, false)) continue;  // deleted
    if (!all_of(y, sigma, r.positive_body, true)) continue;   // body false
    if (!r.head || !value(y, sigma, *r.head)) return false;
  }
  return true;
}

// x restricted to the program's atoms must be a subset-minimal model of the
// reduct; atoms outside the program must be false in the answer set sense,
// so the program is evaluated over its own vocabulary.
bool answer_set(const Program& p, const std::vector<bool>& x) {
  const Vocabulary& v = p.vocabulary();
  if (!models_reduct(p, x, x, v)) return false;
  std::vector<std::size_t> members;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k]) members.push_back(k);
  const std::uint64_t total = std::uint64_t{1} << members.size();
  for (std::uint64_t sub = 0; sub + 1 < total; ++sub) {
    std::vector<bool> y(x.size(), false);
    for (std::size_t k = 0; k < members.size(); ++k)
      if (sub >> k & 1) y[members[k]] = true;
    if (models_reduct(p, x, y, v)) return false;
  }
  return true;
}

std::vector<bool> restrict_to(const std::vector<bool>& bits, const Vocabulary& sigma, const Vocabulary& sub) {
  std::vector<bool> out(sub.size());
  for (std::size_t k = 0; k < sub.size(); ++k) out[k] = value(bits, sigma, sub.name(k));
  return out;
}

std::vector<bool> mask_bits(std::uint64_t mask, std::size_t n) {
  std::vector<bool> bits(n);
  for (std::size_t k = 0; k < n; ++k) bits[k] = (mask >> (n - 1 - k)) & 1;
  return bits;
}

std::uint64_t count_for(std::size_t n) {
  if (n > 24) throw CapExceeded("oracle: vocabulary of " + std::to_string(n) + " atoms is too large");
  return std::uint64_t{1} << n;
}

// Non-dominated elements: a dominates b when, at the greatest level where
// their sums differ, a is better.
std::vector<std::size_t> non_dominated(const std::vector<std::map<Level, Weight>>& sums, const std::vector<Level>& lv,
                                       bool larger_is_better) {
  auto dominates = [&](std::size_t a, std::size_t b) {
    for (auto it = lv.rbegin(); it != lv.rend(); ++it) {
      const Weight& x = sums[a].at(*it);
      const Weight& y = sums[b].at(*it);
      if (x != y) return larger_is_better ? x > y : x < y;
    }
    return false;
  };
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < sums.size(); ++b) {
    bool beaten = false;
    for (std::size_t a = 0; a < sums.size() && !beaten; ++a) beaten = a != b && dominates(a, b);
    if (!beaten) out.push_back(b);
  }
  return out;
}

}  // namespace

bool oracle_satisfies(const std::vector<bool>& bits, const Vocabulary& sigma, const Theory& t) {
  switch (t.logic()) {
    case Logic::sigma: {
      for (const auto& a : t.vocabulary().names()) value(bits, sigma, a);
      return true;
    }
    case Logic::sat:
      for (const auto& c : t.clauses()) {
        bool sat = false;
        for (const auto& a : c.positive()) sat = sat || value(bits, sigma, a);
        for (const auto& a : c.negative()) sat = sat || !value(bits, sigma, a);
        if (!sat) return false;
      }
      return true;
    case Logic::pl:
      for (const auto& f : t.formulas())
        if (!eval(bits, sigma, f)) return false;
      return true;
    case Logic::wc:
      return all_of(bits, sigma, t.wc_body().positive(), true) && all_of(bits, sigma, t.wc_body().negative(), false);
    case Logic::lp: return answer_set(t.program(), restrict_to(bits, sigma, t.program().vocabulary()));
    case Logic::complement: return !oracle_satisfies(bits, sigma, t.inner());
  }
  return false;
}

std::vector<Interpretation> oracle_optimal(const WSystem& w, Sense s) {
  const Vocabulary& v = w.vocabulary();
  std::vector<Level> lv;
  for (const auto& b : w.soft())
    if (std::find(lv.begin(), lv.end(), b.level) == lv.end()) lv.push_back(b.level);
  std::sort(lv.begin(), lv.end());

  std::vector<std::uint64_t> models;
  std::vector<std::map<Level, Weight>> sums;
  const std::uint64_t total = count_for(v.size());
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto bits = mask_bits(mask, v.size());
    bool ok = true;
    for (const auto& m : w.hard().modules) ok = ok && oracle_satisfies(bits, v, m);
    if (!ok) continue;
    std::map<Level, Weight> row;
    for (Level l : lv) row[l] = 0;
    for (const auto& b : w.soft())
      if (oracle_satisfies(bits, v, b.theory)) row[b.level] += b.weight;
    models.push_back(mask);
    sums.push_back(std::move(row));
  }
  std::vector<Interpretation> out;
  for (auto k : non_dominated(sums, lv, s == Sense::max)) out.push_back(Interpretation::from_mask(v, models[k]));
  return out;
}

std::vector<Interpretation> oracle_answer_sets(const Program& p) {
  const Vocabulary& v = p.vocabulary();
  std::vector<Interpretation> out;
  const std::uint64_t total = count_for(v.size());
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (answer_set(p, mask_bits(mask, v.size()))) out.push_back(Interpretation::from_mask(v, mask));
  return out;
}

std::vector<Interpretation> oracle_optimal_answer_sets(const OProgram& p) {
  const Vocabulary& v = p.vocabulary();
  std::vector<Level> lv;
  for (const auto& c : p.constraints())
    if (std::find(lv.begin(), lv.end(), c.level) == lv.end()) lv.push_back(c.level);
  std::sort(lv.begin(), lv.end());

  std::vector<std::uint64_t> sets;
  std::vector<std::map<Level, Weight>> costs;
  const std::uint64_t total = count_for(v.size());
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto bits = mask_bits(mask, v.size());
    if (!answer_set(p.program(), bits)) continue;
    std::map<Level, Weight> row;
    for (Level l : lv) row[l] = 0;
    for (const auto& c : p.constraints())
      if (all_of(bits, v, c.body.positive(), true) && all_of(bits, v, c.body.negative(), false))
        row[c.level] += c.weight;
    sets.push_back(mask);
    costs.push_back(std::move(row));
  }
  std::vector<Interpretation> out;
  for (auto k : non_dominated(costs, lv, false)) out.push_back(Interpretation::from_mask(v, sets[k]));
  return out;
}

}  // namespace wsys::testkit
