#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "wsys/logics.hpp"
#include "wsys/vocabulary.hpp"

namespace wsys {

enum class Logic { sat, pl, lp, wc, sigma, complement };

const char* logic_name(Logic logic);

class Theory;

struct SigmaMarker {
  friend bool operator==(const SigmaMarker&, const SigmaMarker&) = default;
};

// Lazily complemented theory: satisfied exactly where the wrapped one is not.
struct ComplementOf {
  std::shared_ptr<const Theory> inner;
  friend bool operator==(const ComplementOf& a, const ComplementOf& b);
};

// A logic-tagged syntactic object over a vocabulary. The payload kind always
// matches the tag: sat -> clauses, pl -> formulas (read as a conjunction),
// lp -> program, wc -> literal conjunction, sigma -> marker, complement ->
// wrapped theory over the same vocabulary.
class Theory {
 public:
  using Payload = std::variant<std::vector<Clause>, std::vector<Formula>, Program, WcBody, SigmaMarker,
                               ComplementOf>;

  Theory() = default;  // sigma-theory over the empty vocabulary

  // Constructors throw VocabularyMismatch if the payload mentions atoms
  // outside the given vocabulary.
  static Theory sat(std::vector<Clause> clauses, Vocabulary vocabulary);
  static Theory sat(std::vector<Clause> clauses);  // vocabulary = mentioned atoms
  static Theory pl(std::vector<Formula> formulas, Vocabulary vocabulary);
  static Theory pl(std::vector<Formula> formulas);
  static Theory lp(Program program);
  static Theory wc(WcBody body, Vocabulary vocabulary);
  static Theory wc(WcBody body);
  static Theory sigma(Vocabulary vocabulary);
  static Theory complement_of(Theory inner);

  Logic logic() const { return logic_; }
  const Vocabulary& vocabulary() const { return vocabulary_; }
  const Payload& payload() const { return payload_; }

  const std::vector<Clause>& clauses() const { return std::get<std::vector<Clause>>(payload_); }
  const std::vector<Formula>& formulas() const { return std::get<std::vector<Formula>>(payload_); }
  const Program& program() const { return std::get<Program>(payload_); }
  const WcBody& wc_body() const { return std::get<WcBody>(payload_); }
  const Theory& inner() const { return *std::get<ComplementOf>(payload_).inner; }

  // Short human-readable rendering, e.g. "sat{a | b. -a | -b}".
  std::string str() const;

  friend bool operator==(const Theory&, const Theory&) = default;

 private:
  Theory(Logic logic, Payload payload, Vocabulary vocabulary);

  Logic logic_ = Logic::sigma;
  Payload payload_ = SigmaMarker{};
  Vocabulary vocabulary_;
};

// True iff the projection of i onto the theory's vocabulary is a model.
// Throws VocabularyMismatch when the theory's vocabulary is not within i's.
bool satisfies(const Interpretation& i, const Theory& t);

Theory sigma_theory(const Vocabulary& sigma);

// A theory over the same vocabulary whose models are exactly the
// non-models of t. Concrete renderings where one exists in a simple logic:
// a single sat clause becomes a wc conjunction, a wc conjunction becomes a
// sat clause, pl theories are negated, a complement is unwrapped; lp theories
// and multi-clause sat theories are wrapped.
Theory complement(const Theory& t);

// Exhaustive comparison of model sets. Throws VocabularyMismatch unless the
// two vocabularies hold the same atoms.
bool equivalent(const Theory& a, const Theory& b);

// All models of t over its own vocabulary in canonical order.
std::vector<Interpretation> theory_models(const Theory& t);

}  // namespace wsys
