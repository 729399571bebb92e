#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsys/encodings.hpp"
#include "wsys/logics.hpp"

namespace wsys {

// Positive dependency graph: an edge head -> b for every atom-headed rule
// with b in its positive body.
class DependencyGraph {
 public:
  explicit DependencyGraph(const Program& p);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<std::vector<std::size_t>>& successors() const { return succ_; }

  // Atoms of one directed cycle (first atom repeated at the end), or nullopt.
  std::optional<std::vector<std::string>> find_cycle() const;

 private:
  std::vector<std::string> nodes_;
  std::vector<std::vector<std::size_t>> succ_;
};

bool is_tight(const Program& p);

// Conjunction of a <-> (disjunction of rule bodies) over the vocabulary, in
// vocabulary order, followed by the negated bodies of constraints.
// Singleton conjunctions and disjunctions are collapsed.
Formula completion(const Program& p);

struct ClausifyResult {
  std::vector<Clause> clauses;
  std::vector<std::string> fresh;  // auxiliary atoms in creation order
};

// Equisatisfiable clause set whose models, projected to the atoms of f, are
// exactly the models of f. Auxiliary atoms (__body<k>) are defined by full
// equivalences, so each model of f extends to exactly one model.
// Names in `reserved` are never used for auxiliary atoms.
ClausifyResult clausify(const Formula& f, const std::vector<std::string>& reserved = {});

struct Translation {
  PwProblem problem;
  // Atoms added by the pipeline; dropping them maps models back to σ_Π.
  std::vector<std::string> fresh;
  Vocabulary original;
};

// Tight o-program to pw-MaxSAT (target max) or pw-MinSAT (target min).
// Multi-level programs are made singular, sign-normalized, level-normalized
// and flattened first. Throws SemanticRefusal naming a positive cycle when
// the program is not tight.
Translation oprogram_to_pw(const OProgram& p, Sense target);

}  // namespace wsys
