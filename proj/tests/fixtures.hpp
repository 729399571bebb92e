#pragma once

#include <set>
#include <string>
#include <vector>

#include "wsys/encodings.hpp"
#include "wsys/logics.hpp"
#include "wsys/solver.hpp"
#include "wsys/testkit.hpp"
#include "wsys/theory.hpp"
#include "wsys/wsystem.hpp"

namespace fx {

using namespace wsys;

using ModelSet = std::set<std::vector<std::string>>;

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline ModelSet models(const std::vector<Interpretation>& is) {
  ModelSet out;
  for (const auto& i : is) out.insert(sorted(i.members()));
  return out;
}

inline ModelSet projected(const std::vector<Interpretation>& is, const Vocabulary& onto) {
  ModelSet out;
  for (const auto& i : is) out.insert(sorted(project(i, onto).members()));
  return out;
}

inline ModelSet sets(std::initializer_list<std::vector<std::string>> xs) {
  ModelSet out;
  for (const auto& x : xs) out.insert(sorted(x));
  return out;
}

// "-a" is a negative literal.
inline Literal lit(const std::string& s) { return s[0] == '-' ? Literal{s.substr(1), false} : Literal{s, true}; }

inline Clause cl(std::initializer_list<std::string> lits) {
  std::vector<Literal> v;
  for (const auto& s : lits) v.push_back(lit(s));
  return Clause(v);
}

inline WcBody body(std::initializer_list<std::string> lits) {
  std::vector<Literal> v;
  for (const auto& s : lits) v.push_back(lit(s));
  return WcBody(v);
}

inline Vocabulary ab() { return Vocabulary{"a", "b"}; }

// (a | b) & (-a | -b)
inline std::vector<Clause> f1_clauses() { return {cl({"a", "b"}), cl({"-a", "-b"})}; }
inline Theory f1() { return Theory::sat(f1_clauses(), ab()); }

inline WCondition cond(const std::string& label, Theory t, long w, Level l = 1) {
  return {label, std::move(t), Weight(w), l};
}

inline Theory clause_theory(std::initializer_list<std::string> lits) { return Theory::sat({cl(lits)}, ab()); }

// (F1, {(a,1),(b,1),(a|-b,2),(-a|b,0)})
inline WSystem partmsat() {
  return WSystem(Ams{{f1()}}, {cond("s1", clause_theory({"a"}), 1), cond("s2", clause_theory({"b"}), 1),
                               cond("s3", clause_theory({"a", "-b"}), 2), cond("s4", clause_theory({"-a", "b"}), 0)});
}

// partmsat with (b,1@3)
inline WSystem maxpl() {
  return WSystem(Ams{{f1()}}, {cond("s1", clause_theory({"a"}), 1), cond("s2", clause_theory({"b"}), 1, 3),
                               cond("s3", clause_theory({"a", "-b"}), 2), cond("s4", clause_theory({"-a", "b"}), 0)});
}

// (F1, {(-a|b, 2)})
inline PwProblem pwminsat_problem() { return PwProblem(f1_clauses(), {{cl({"-a", "b"}), Weight(2)}}, Sense::min, ab()); }

inline WSystem w1() {
  return WSystem(Ams{{f1()}}, {cond("s1", clause_theory({"a"}), 1), cond("s2", clause_theory({"a", "-b"}), 2),
                               cond("s3", clause_theory({"b"}), 1, 2)});
}

inline Program pi1() {
  return Program({Rule{"a", {}, {"b"}}, Rule{"b", {}, {"a"}}}, ab());
}

// (Pi1, {:~ a, not b. [-2@1]})
inline OProgram sampleop() { return OProgram(pi1(), {WeakConstraint{body({"a", "-b"}), Weight(-2), 1}}); }

inline testkit::GenConfig corpus(std::uint64_t seed) {
  testkit::GenConfig c;
  c.max_atoms = 8;
  c.max_conditions = 6;
  c.min_weight = -5;
  c.max_weight = 5;
  c.max_level = 4;
  c.seed = seed;
  return c;
}

inline testkit::GenConfig small_corpus(std::uint64_t seed) {
  testkit::GenConfig c = corpus(seed);
  c.max_atoms = 5;
  return c;
}

}  // namespace fx
