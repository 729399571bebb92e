#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wsys/solver.hpp"
#include "wsys/wsystem.hpp"

namespace wsys {

// :~ body [weight@level]
struct WeakConstraint {
  WcBody body;
  Weight weight;
  Level level = 1;

  std::string str() const;
  friend bool operator==(const WeakConstraint&, const WeakConstraint&) = default;
};

// Logic program with weak constraints. Optimal answer sets minimize.
class OProgram {
 public:
  OProgram() = default;
  // Throws VocabularyMismatch if a constraint leaves the program vocabulary
  // and PreconditionError on a level of 0.
  OProgram(Program program, std::vector<WeakConstraint> constraints);

  const Program& program() const { return program_; }
  const std::vector<WeakConstraint>& constraints() const { return constraints_; }
  const Vocabulary& vocabulary() const { return program_.vocabulary(); }

  std::vector<Level> levels() const;

  friend bool operator==(const OProgram&, const OProgram&) = default;

 private:
  Program program_;
  std::vector<WeakConstraint> constraints_;
};

struct SoftClause {
  Clause clause;
  Weight weight;
  friend bool operator==(const SoftClause&, const SoftClause&) = default;
};

// Partial weighted MaxSAT (sense max) or MinSAT (sense min) problem.
class PwProblem {
 public:
  PwProblem() = default;
  // Throws PreconditionError on a nonpositive soft weight and
  // VocabularyMismatch on clauses outside the vocabulary.
  PwProblem(std::vector<Clause> hard, std::vector<SoftClause> soft, Sense sense, Vocabulary vocabulary);

  const std::vector<Clause>& hard() const { return hard_; }
  const std::vector<SoftClause>& soft() const { return soft_; }
  Sense sense() const { return sense_; }
  const Vocabulary& vocabulary() const { return vocabulary_; }

  friend bool operator==(const PwProblem&, const PwProblem&) = default;

 private:
  std::vector<Clause> hard_;
  std::vector<SoftClause> soft_;
  Sense sense_ = Sense::max;
  Vocabulary vocabulary_;
};

// Soft condition labels produced by the constructors below are s1, s2, ...
// in input order.
std::string soft_label(std::size_t ordinal);

// (σ-theory, {(C,1) | C ∈ f}).
WSystem from_maxsat(const std::vector<Clause>& f, const Vocabulary& sigma);

// (σ-theory, P); weights must be positive. The sense only documents which
// optimal set answers the problem (optimal for max, min-optimal for min).
WSystem from_weighted_sat(const std::vector<SoftClause>& p, const Vocabulary& sigma, Sense s);

// Hard clauses as one sat module, soft clauses as sat conditions.
WSystem from_pw_sat(const PwProblem& prob);

// Program as an lp module, each weak constraint as a wc condition at its
// level. Models are answer sets; min-optimal models are optimal answer sets.
WSystem from_oprogram(const OProgram& p);

enum class OptimizeDirection { minimize, maximize };

struct OptimizeElement {
  Weight weight;
  Level level = 1;
  Literal literal;
};

// #minimize / #maximize statement as weak constraints; maximize negates.
std::vector<WeakConstraint> desugar_minimize(const std::vector<OptimizeElement>& elements,
                                             OptimizeDirection direction);

// (F, {(¬a,1) | a ∈ ξ}) with sat conditions, F as a sat module over sigma.
WSystem min_one(const std::vector<Clause>& f, const std::vector<std::string>& xi, const Vocabulary& sigma);

// (Π, {(¬a,1) | a ∈ ξ}).
WSystem min_one_asp(const Program& p, const std::vector<std::string>& xi);

// (F, {(¬a_i, 1@i)}) for the permutation a_1..a_n of ξ. Every optimal model
// has a subset-minimal I∩ξ; one permutation does not yield all of them.
WSystem min_one_subset(const std::vector<Clause>& f, const std::vector<std::string>& perm,
                       const Vocabulary& sigma);

// (F, {(a,1) | a ∈ Î} ∪ {(¬a,1) | a ∈ σ∖Î}).
WSystem distance_sat(const std::vector<Clause>& f, const Interpretation& ref, const Vocabulary& sigma);

// Leveled variant over the permutation a_1..a_n of σ; one-sided like
// min_one_subset.
WSystem distance_sat_subset(const std::vector<Clause>& f, const Interpretation& ref,
                            const std::vector<std::string>& perm, const Vocabulary& sigma);

}  // namespace wsys
