#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wsys/wsystem.hpp"

namespace wsys {

enum class Sense { max, min };

const char* sense_name(Sense s);
Sense opposite(Sense s);

struct SolveOptions {
  // Largest |σ_W| accepted by exhaustive enumeration.
  std::size_t max_vars = 24;
  // Worker threads for enumeration; results are identical for any count.
  std::size_t workers = 1;
};

// Per-level sums of one interpretation, indexed like levels(w).
using LevelSums = std::vector<Weight>;

struct SolveReport {
  Sense sense = Sense::max;
  std::vector<Level> levels;
  std::vector<Interpretation> models;
  std::vector<Interpretation> optimal;
  std::vector<LevelSums> optimal_sums;  // parallel to `optimal`

  std::map<Level, Weight> sums_by_level(std::size_t optimal_index) const;
};

// All models of the hard part over σ_W in canonical order.
// Throws CapExceeded when |σ_W| > options.max_vars.
std::vector<Interpretation> enumerate_models(const WSystem& w, const SolveOptions& options = {});

LevelSums level_sums(const WSystem& w, const Interpretation& i);

// i2 max-/min-dominates i1: equal sums above some level l and strictly
// greater/smaller at l.
bool dominates(const WSystem& w, const Interpretation& i2, const Interpretation& i1, Sense s);

// Models dominated by no model.
std::vector<Interpretation> optimal_models_domination(const WSystem& w, Sense s,
                                                      const SolveOptions& options = {});

// Level-recursive characterization: the greatest level optimizes over all
// models, every other level over the models optimal at the next greater one.
// Throws PreconditionError when l is not a level of w.
std::vector<Interpretation> l_optimal_models(const WSystem& w, Level l, Sense s,
                                             const SolveOptions& options = {});

// Models that are l-optimal for every level; all models without levels.
std::vector<Interpretation> optimal_models_recursive(const WSystem& w, Sense s,
                                                     const SolveOptions& options = {});

// Models plus recursive optimal set with per-level sums.
SolveReport solve(const WSystem& w, Sense s, const SolveOptions& options = {});

}  // namespace wsys
