#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsys/vocabulary.hpp"

namespace wsys {

// A literal: an atom or its negation.
struct Literal {
  std::string atom;
  bool positive = true;

  Literal negated() const { return {atom, !positive}; }
  std::string str() const { return positive ? atom : "-" + atom; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Disjunction of negated and plain atoms. An empty clause is always false.
// Atom sets are kept sorted and duplicate free.
class Clause {
 public:
  Clause() = default;
  Clause(std::vector<std::string> negative, std::vector<std::string> positive);
  explicit Clause(const std::vector<Literal>& literals);

  static Clause unit(const Literal& l) { return Clause(std::vector<Literal>{l}); }

  const std::vector<std::string>& negative() const { return negative_; }
  const std::vector<std::string>& positive() const { return positive_; }
  bool empty() const { return negative_.empty() && positive_.empty(); }
  std::size_t size() const { return negative_.size() + positive_.size(); }

  // Literals ordered by atom name, negative first on ties.
  std::vector<Literal> literals() const;
  std::vector<std::string> atoms() const;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause&, const Clause&) = default;

 private:
  std::vector<std::string> negative_;
  std::vector<std::string> positive_;
};

// Propositional formula tree.
class Formula {
 public:
  enum class Kind { top, bottom, atom, negation, conjunction, disjunction, implication, equivalence };

  static Formula truth() { return Formula(Kind::top); }
  static Formula falsity() { return Formula(Kind::bottom); }
  static Formula atom(std::string name);
  static Formula lit(const Literal& l);
  static Formula neg(Formula f);
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Formula>& children() const { return children_; }

  // Atoms in order of first occurrence.
  std::vector<std::string> atoms() const;

  // Fully parenthesized rendering using - & | -> <-> #true #false.
  std::string str() const;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  explicit Formula(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::top;
  std::string name_;
  std::vector<Formula> children_;
};

Formula to_formula(const Clause& c);

// a0 <- a1..al, not a(l+1)..not am; an empty head is bottom.
struct Rule {
  std::optional<std::string> head;
  std::vector<std::string> positive_body;
  std::vector<std::string> negative_body;

  bool is_constraint() const { return !head.has_value(); }
  std::string str() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

class Program {
 public:
  Program() = default;
  // Throws VocabularyMismatch if a rule mentions an atom outside vocabulary.
  Program(std::vector<Rule> rules, Vocabulary vocabulary);

  const std::vector<Rule>& rules() const { return rules_; }
  const Vocabulary& vocabulary() const { return vocabulary_; }

  friend bool operator==(const Program&, const Program&) = default;

 private:
  std::vector<Rule> rules_;
  Vocabulary vocabulary_;
};

// Conjunction of literals a1 & .. & al & -a(l+1) & .. & -am with m > 0.
class WcBody {
 public:
  WcBody() = default;
  // Throws PreconditionError when both sides are empty.
  WcBody(std::vector<std::string> positive, std::vector<std::string> negative);
  explicit WcBody(const std::vector<Literal>& literals);

  const std::vector<std::string>& positive() const { return positive_; }
  const std::vector<std::string>& negative() const { return negative_; }
  std::size_t size() const { return positive_.size() + negative_.size(); }
  std::vector<Literal> literals() const;
  std::vector<std::string> atoms() const;

  friend bool operator==(const WcBody&, const WcBody&) = default;

 private:
  std::vector<std::string> positive_;
  std::vector<std::string> negative_;
};

bool eval_clause(const Interpretation& i, const Clause& c);
bool eval_formula(const Interpretation& i, const Formula& f);
bool eval_wc_body(const Interpretation& i, const WcBody& b);
// Classical satisfaction of the rule's implication.
bool eval_rule(const Interpretation& i, const Rule& r);

// Deletes rules whose negative body is violated by x and strips the
// negative bodies of the rest.
Program reduct(const Program& p, const Interpretation& x);

// Least model of a negation-free program; bottom-headed rules do not
// contribute. Throws PreconditionError on a nonempty negative body.
Interpretation least_model(const Program& p);

bool is_answer_set(const Program& p, const Interpretation& x);

}  // namespace wsys
