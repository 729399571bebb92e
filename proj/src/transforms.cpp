#include "wsys/transforms.hpp"

#include <algorithm>
#include <set>

#include "wsys/error.hpp"

namespace wsys {

namespace {

WSystem with_soft(const WSystem& w, std::vector<WCondition> soft) { return WSystem(w.hard(), std::move(soft)); }

}  // namespace

WSystem drop_zero_weights(const WSystem& w) {
  std::vector<WCondition> soft;
  for (const auto& b : w.soft())
    if (b.weight != 0) soft.push_back(b);
  return with_soft(w, std::move(soft));
}

WSystem scale_weights(const WSystem& w, const Weight& a) {
  if (a < 1) throw PreconditionError("scale factor must be a positive integer");
  std::vector<WCondition> soft = w.soft();
  for (auto& b : soft) b.weight *= a;
  return with_soft(w, std::move(soft));
}

WSystem normalize_levels(const WSystem& w) {
  const auto ls = levels(w);
  std::vector<WCondition> soft = w.soft();
  for (auto& b : soft)
    b.level = static_cast<Level>(std::lower_bound(ls.begin(), ls.end(), b.level) - ls.begin()) + 1;
  return with_soft(w, std::move(soft));
}

WSystem negate_all_weights(const WSystem& w) {
  std::vector<WCondition> soft = w.soft();
  for (auto& b : soft) b.weight = -b.weight;
  return with_soft(w, std::move(soft));
}

WSystem eliminate_sign(const WSystem& w, Sense keep) {
  std::vector<WCondition> soft = w.soft();
  for (auto& b : soft) {
    const bool wrong = keep == Sense::max ? b.weight < 0 : b.weight > 0;
    if (!wrong) continue;
    b.theory = complement(b.theory);
    b.weight = -b.weight;
  }
  return with_soft(w, std::move(soft));
}

WSystem flip_single_condition(const WSystem& w, const std::string& label) {
  std::vector<WCondition> soft = w.soft();
  auto it = std::find_if(soft.begin(), soft.end(), [&](const WCondition& b) { return b.label == label; });
  if (it == soft.end()) throw PreconditionError("unknown w-condition label '" + label + "'");
  it->theory = complement(it->theory);
  it->weight = -it->weight;
  return with_soft(w, std::move(soft));
}

WSystem drop_invariant_conditions(const WSystem& w, const std::vector<std::string>& labels, Sense sense,
                                  const SolveOptions& options) {
  std::set<std::string> drop(labels.begin(), labels.end());
  if (drop.empty()) return w;
  std::optional<Level> level;
  std::vector<WCondition> dropped;
  for (const auto& name : drop) {
    const WCondition& b = w.condition(name);
    if (level && *level != b.level)
      throw PreconditionError("conditions to drop must share one level (found " + std::to_string(*level) + " and " +
                              std::to_string(b.level) + ")");
    level = b.level;
    dropped.push_back(b);
  }
  const auto prev = prev_level(w, *level);
  const auto candidates = prev ? l_optimal_models(w, *prev, sense, options) : enumerate_models(w, options);
  std::optional<Weight> common;
  for (const auto& i : candidates) {
    Weight sum = 0;
    for (const auto& b : dropped) sum += weighted_eval(i, b);
    if (common && *common != sum)
      throw SemanticRefusal("dropped conditions sum to " + to_string(*common) + " on one candidate model and " +
                            to_string(sum) + " on " + i.str() + "; rewrite refused");
    common = sum;
  }
  std::vector<WCondition> soft;
  for (const auto& b : w.soft())
    if (!drop.count(b.label)) soft.push_back(b);
  return with_soft(w, std::move(soft));
}

LevelFactors level_factors(const WSystem& w) {
  for (const auto& b : w.soft())
    if (b.weight <= 0)
      throw PreconditionError("level flattening needs a strictly positive w-system; '" + b.label + "' has weight " +
                              to_string(b.weight));
  if (!level_normal(w)) throw PreconditionError("level flattening needs a level-normal w-system");
  const std::size_t k = levels(w).size();
  LevelFactors out;
  out.m.assign(k, Weight(1));
  for (const auto& b : w.soft())
    if (b.level < k) out.m[b.level] += b.weight;
  out.f.assign(k + 1, Weight(0));
  Weight product = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    product *= out.m[i - 1];
    out.f[i] = product;
  }
  return out;
}

WSystem flatten_levels(const WSystem& w) {
  const LevelFactors factors = level_factors(w);
  std::vector<WCondition> soft = w.soft();
  for (auto& b : soft) {
    b.weight *= factors.f[b.level];
    b.level = 1;
  }
  return with_soft(w, std::move(soft));
}

bool is_singular(const WeakConstraint& c, Singularity kind) {
  if (c.body.size() == 1) return true;
  return kind == Singularity::positive ? c.weight >= 0 : c.weight <= 0;
}

bool is_singular(const OProgram& p, Singularity kind) {
  return std::all_of(p.constraints().begin(), p.constraints().end(),
                     [&](const WeakConstraint& c) { return is_singular(c, kind); });
}

namespace {

template <typename NeedsAux>
SingularResult introduce_aux_atoms(const OProgram& p, NeedsAux needs_aux) {
  SingularResult out;
  std::vector<Rule> rules = p.program().rules();
  std::vector<WeakConstraint> constraints;
  std::vector<std::string> fresh;
  for (std::size_t k = 0; k < p.constraints().size(); ++k) {
    const auto& c = p.constraints()[k];
    if (!needs_aux(c)) {
      constraints.push_back(c);
      continue;
    }
    std::string aux = "__aux_wc" + std::to_string(k + 1);
    if (p.vocabulary().contains(aux))
      throw PreconditionError("fresh atom '" + aux + "' clashes with an atom of the program");
    rules.push_back(Rule{aux, c.body.positive(), c.body.negative()});
    constraints.push_back({WcBody({aux}, {}), c.weight, c.level});
    out.fresh_atoms.emplace(aux, k);
    fresh.push_back(aux);
  }
  Vocabulary v = p.vocabulary().with(fresh);
  out.program = OProgram(Program(std::move(rules), v), std::move(constraints));
  return out;
}

}  // namespace

SingularResult to_positively_singular(const OProgram& p, bool all_multi_literal) {
  return introduce_aux_atoms(p, [&](const WeakConstraint& c) {
    if (c.body.size() <= 1) return false;
    return all_multi_literal || c.weight < 0;
  });
}

SingularResult to_negatively_singular(const OProgram& p) {
  return introduce_aux_atoms(p, [](const WeakConstraint& c) { return c.body.size() > 1 && c.weight > 0; });
}

WCondition singular_rewrite(const WCondition& b, SingularMode mode, Singularity polarity) {
  if (b.theory.logic() != Logic::wc)
    throw PreconditionError("singular rewriting applies to wc conditions; '" + b.label + "' is " +
                            logic_name(b.theory.logic()));
  const WcBody& body = b.theory.wc_body();
  const bool singular =
      body.size() == 1 || (polarity == Singularity::positive ? b.weight >= 0 : b.weight <= 0);
  if (!singular)
    throw PreconditionError("w-condition '" + b.label + "' is not " +
                            (polarity == Singularity::positive ? "positively" : "negatively") + "-singular");
  const bool keeps = polarity == Singularity::positive ? b.weight >= 0 : b.weight <= 0;
  WCondition out = b;
  if (mode == SingularMode::up) {
    if (keeps) return out;
    const Literal l = body.literals().front();
    out.theory = Theory::wc(WcBody(std::vector<Literal>{l.negated()}), b.theory.vocabulary());
    out.weight = -b.weight;
    return out;
  }
  if (!keeps) return out;
  std::vector<Literal> lits;
  for (const auto& l : body.literals()) lits.push_back(l.negated());
  out.theory = Theory::sat({Clause(lits)}, b.theory.vocabulary());
  out.weight = -b.weight;
  return out;
}

WCondition singular_rewrite(const WCondition& b, SingularMode mode) {
  if (b.theory.logic() != Logic::wc)
    throw PreconditionError("singular rewriting applies to wc conditions; '" + b.label + "' is " +
                            logic_name(b.theory.logic()));
  const std::size_t m = b.theory.wc_body().size();
  const Singularity polarity = (m == 1 || b.weight >= 0) ? Singularity::positive : Singularity::negative;
  return singular_rewrite(b, mode, polarity);
}

}  // namespace wsys
