#include "wsys/encodings.hpp"

#include <set>

#include "wsys/error.hpp"

namespace wsys {

namespace {

Theory negative_literal(const std::string& atom, const Vocabulary& sigma) {
  return Theory::sat({Clause({atom}, {})}, sigma);
}

Theory positive_literal(const std::string& atom, const Vocabulary& sigma) {
  return Theory::sat({Clause({}, {atom})}, sigma);
}

void require_atoms(const std::vector<std::string>& atoms, const Vocabulary& sigma, const char* what) {
  for (const auto& a : atoms)
    if (!sigma.contains(a)) throw VocabularyMismatch(std::string(what) + " atom '" + a + "' is not in the vocabulary");
}

void require_permutation(const std::vector<std::string>& perm, const std::vector<std::string>& of) {
  std::multiset<std::string> a(perm.begin(), perm.end());
  std::multiset<std::string> b(of.begin(), of.end());
  if (a != b) throw PreconditionError("the given order is not a permutation of the distinguished atoms");
}

}  // namespace

std::string WeakConstraint::str() const {
  std::string s = ":~ ";
  auto lits = body.literals();
  for (std::size_t k = 0; k < lits.size(); ++k)
    s += (k ? ", " : "") + (lits[k].positive ? lits[k].atom : "not " + lits[k].atom);
  return s + ". [" + to_string(weight) + "@" + std::to_string(level) + "]";
}

OProgram::OProgram(Program program, std::vector<WeakConstraint> constraints)
    : program_(std::move(program)), constraints_(std::move(constraints)) {
  for (const auto& c : constraints_) {
    if (c.level < 1) throw PreconditionError("weak constraint level must be positive");
    require_atoms(c.body.atoms(), program_.vocabulary(), "weak constraint");
  }
}

std::vector<Level> OProgram::levels() const {
  std::set<Level> ls;
  for (const auto& c : constraints_) ls.insert(c.level);
  return {ls.begin(), ls.end()};
}

PwProblem::PwProblem(std::vector<Clause> hard, std::vector<SoftClause> soft, Sense sense, Vocabulary vocabulary)
    : hard_(std::move(hard)), soft_(std::move(soft)), sense_(sense), vocabulary_(std::move(vocabulary)) {
  for (const auto& c : hard_) require_atoms(c.atoms(), vocabulary_, "hard clause");
  for (const auto& s : soft_) {
    if (s.weight <= 0) throw PreconditionError("soft clause weights must be positive");
    require_atoms(s.clause.atoms(), vocabulary_, "soft clause");
  }
}

std::string soft_label(std::size_t ordinal) { return "s" + std::to_string(ordinal); }

WSystem from_maxsat(const std::vector<Clause>& f, const Vocabulary& sigma) {
  std::vector<WCondition> soft;
  for (std::size_t k = 0; k < f.size(); ++k)
    soft.push_back({soft_label(k + 1), Theory::sat({f[k]}, sigma), Weight(1), 1});
  return WSystem(Ams{{sigma_theory(sigma)}}, std::move(soft));
}

WSystem from_weighted_sat(const std::vector<SoftClause>& p, const Vocabulary& sigma, Sense) {
  std::vector<WCondition> soft;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].weight <= 0) throw PreconditionError("weighted MaxSAT/MinSAT weights must be positive");
    soft.push_back({soft_label(k + 1), Theory::sat({p[k].clause}, sigma), p[k].weight, 1});
  }
  return WSystem(Ams{{sigma_theory(sigma)}}, std::move(soft));
}

WSystem from_pw_sat(const PwProblem& prob) {
  const Vocabulary& v = prob.vocabulary();
  std::vector<WCondition> soft;
  for (std::size_t k = 0; k < prob.soft().size(); ++k)
    soft.push_back({soft_label(k + 1), Theory::sat({prob.soft()[k].clause}, v), prob.soft()[k].weight, 1});
  return WSystem(Ams{{Theory::sat(prob.hard(), v)}}, std::move(soft));
}

WSystem from_oprogram(const OProgram& p) {
  const Vocabulary& v = p.vocabulary();
  std::vector<WCondition> soft;
  for (std::size_t k = 0; k < p.constraints().size(); ++k) {
    const auto& c = p.constraints()[k];
    soft.push_back({soft_label(k + 1), Theory::wc(c.body, v), c.weight, c.level});
  }
  return WSystem(Ams{{Theory::lp(p.program())}}, std::move(soft));
}

std::vector<WeakConstraint> desugar_minimize(const std::vector<OptimizeElement>& elements,
                                             OptimizeDirection direction) {
  std::vector<WeakConstraint> out;
  for (const auto& e : elements) {
    Weight w = direction == OptimizeDirection::minimize ? e.weight : Weight(-e.weight);
    out.push_back({WcBody(std::vector<Literal>{e.literal}), w, e.level});
  }
  return out;
}

WSystem min_one(const std::vector<Clause>& f, const std::vector<std::string>& xi, const Vocabulary& sigma) {
  require_atoms(xi, sigma, "distinguished");
  std::vector<WCondition> soft;
  for (std::size_t k = 0; k < xi.size(); ++k)
    soft.push_back({soft_label(k + 1), negative_literal(xi[k], sigma), Weight(1), 1});
  return WSystem(Ams{{Theory::sat(f, sigma)}}, std::move(soft));
}

WSystem min_one_asp(const Program& p, const std::vector<std::string>& xi) {
  const Vocabulary& sigma = p.vocabulary();
  require_atoms(xi, sigma, "distinguished");
  std::vector<WCondition> soft;
  for (std::size_t k = 0; k < xi.size(); ++k)
    soft.push_back({soft_label(k + 1), negative_literal(xi[k], sigma), Weight(1), 1});
  return WSystem(Ams{{Theory::lp(p)}}, std::move(soft));
}

WSystem min_one_subset(const std::vector<Clause>& f, const std::vector<std::string>& perm, const Vocabulary& sigma) {
  require_atoms(perm, sigma, "distinguished");
  if (std::set<std::string>(perm.begin(), perm.end()).size() != perm.size())
    throw PreconditionError("the order of distinguished atoms repeats an atom");
  std::vector<WCondition> soft;
  for (std::size_t k = 0; k < perm.size(); ++k)
    soft.push_back({soft_label(k + 1), negative_literal(perm[k], sigma), Weight(1), static_cast<Level>(k + 1)});
  return WSystem(Ams{{Theory::sat(f, sigma)}}, std::move(soft));
}

WSystem distance_sat(const std::vector<Clause>& f, const Interpretation& ref, const Vocabulary& sigma) {
  std::vector<WCondition> soft;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const auto& a = sigma.name(k);
    Theory t = ref.contains(a) ? positive_literal(a, sigma) : negative_literal(a, sigma);
    soft.push_back({soft_label(k + 1), std::move(t), Weight(1), 1});
  }
  return WSystem(Ams{{Theory::sat(f, sigma)}}, std::move(soft));
}

WSystem distance_sat_subset(const std::vector<Clause>& f, const Interpretation& ref,
                            const std::vector<std::string>& perm, const Vocabulary& sigma) {
  require_permutation(perm, sigma.names());
  std::vector<WCondition> soft;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    const auto& a = perm[k];
    Theory t = ref.contains(a) ? positive_literal(a, sigma) : negative_literal(a, sigma);
    soft.push_back({soft_label(k + 1), std::move(t), Weight(1), static_cast<Level>(k + 1)});
  }
  return WSystem(Ams{{Theory::sat(f, sigma)}}, std::move(soft));
}

}  // namespace wsys
