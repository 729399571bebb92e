#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsys/theory.hpp"
#include "wsys/weight.hpp"

namespace wsys {

// (theory, weight@level) with a label unique inside its w-system.
struct WCondition {
  std::string label;
  Theory theory;
  Weight weight;
  Level level = 1;

  std::string str() const;  // label: theory [w@l]
  friend bool operator==(const WCondition&, const WCondition&) = default;
};

// Abstract modular system: hard modules, possibly in different logics.
struct Ams {
  std::vector<Theory> modules;

  Vocabulary vocabulary() const;  // union in module order
  friend bool operator==(const Ams&, const Ams&) = default;
};

class WSystem {
 public:
  WSystem() = default;
  // Throws PreconditionError on duplicate labels or a level of 0 and
  // VocabularyMismatch when a soft theory leaves the hard vocabulary.
  WSystem(Ams hard, std::vector<WCondition> soft);

  const Ams& hard() const { return hard_; }
  const std::vector<WCondition>& soft() const { return soft_; }
  const Vocabulary& vocabulary() const { return vocabulary_; }

  const WCondition& condition(const std::string& label) const;  // throws PreconditionError
  bool has_label(const std::string& label) const;

  friend bool operator==(const WSystem& a, const WSystem& b) {
    return a.hard_ == b.hard_ && a.soft_ == b.soft_;
  }

 private:
  Ams hard_;
  std::vector<WCondition> soft_;
  Vocabulary vocabulary_;
};

// weight(b) when i satisfies b's theory, 0 otherwise.
Weight weighted_eval(const Interpretation& i, const WCondition& b);

// Ascending set of levels used by soft conditions.
std::vector<Level> levels(const WSystem& w);

std::vector<WCondition> slice(const WSystem& w, Level l);

// Least level greater than l; nullopt for the greatest level.
// Throws PreconditionError when l is not a level of w.
std::optional<Level> prev_level(const WSystem& w, Level l);

// Σ weighted_eval over the conditions at level l.
Weight level_sum(const WSystem& w, const Interpretation& i, Level l);

bool level_normal(const WSystem& w);

}  // namespace wsys
