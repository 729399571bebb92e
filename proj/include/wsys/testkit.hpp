#pragma once

#include <cstdint>
#include <vector>

#include "wsys/encodings.hpp"
#include "wsys/wsystem.hpp"

namespace wsys::testkit {

struct GenConfig {
  std::size_t max_atoms = 5;
  std::size_t max_rules = 6;
  std::size_t max_clauses = 4;
  std::size_t max_conditions = 6;
  int min_weight = -5;
  int max_weight = 5;
  Level max_level = 4;
  std::uint64_t seed = 0;
  // gen_oprogram: only emit rules whose positive bodies mention earlier
  // atoms, so the program is tight by construction.
  bool tight = false;
};

// Deterministic for a given config. Hard modules and conditions are drawn
// from sat, pl, lp and wc logics.
WSystem gen_wsystem(const GenConfig& cfg);
OProgram gen_oprogram(const GenConfig& cfg);
PwProblem gen_pw(const GenConfig& cfg);

// Non-dominated models computed straight from the pairwise domination
// conditions with naive evaluators that do not use the library's solver or
// logic evaluation code.
std::vector<Interpretation> oracle_optimal(const WSystem& w, Sense s);

// Answer sets as subset-minimal models of the reduct, checked by brute force
// over subsets.
std::vector<Interpretation> oracle_answer_sets(const Program& p);

// Optimal answer sets per the weak-constraint domination definition.
std::vector<Interpretation> oracle_optimal_answer_sets(const OProgram& p);

// Independent satisfaction check used by the oracles.
bool oracle_satisfies(const std::vector<bool>& bits, const Vocabulary& sigma, const Theory& t);

}  // namespace wsys::testkit
