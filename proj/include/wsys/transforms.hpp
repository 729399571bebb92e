#pragma once

#include <map>
#include <string>
#include <vector>

#include "wsys/encodings.hpp"
#include "wsys/solver.hpp"
#include "wsys/wsystem.hpp"

namespace wsys {

// Soft conditions of weight 0 removed.
WSystem drop_zero_weights(const WSystem& w);

// Every weight multiplied by a; throws PreconditionError unless a >= 1.
WSystem scale_weights(const WSystem& w, const Weight& a);

// The i-th smallest level becomes i.
WSystem normalize_levels(const WSystem& w);

// Every weight multiplied by -1; swaps optimal and min-optimal sets.
WSystem negate_all_weights(const WSystem& w);

// keep = max: negative conditions (T, w@l) become (complement(T), -w@l).
// keep = min: positive conditions are rewritten the same way.
WSystem eliminate_sign(const WSystem& w, Sense keep);

// Replaces one condition by its complement with negated weight.
WSystem flip_single_condition(const WSystem& w, const std::string& label);

// Removes the labeled conditions after checking that they share one level l
// and that their summed value is constant over the models optimal at the next
// greater level (over all models when l is the greatest). Throws
// SemanticRefusal when the sums differ, PreconditionError on unknown labels
// or mixed levels.
WSystem drop_invariant_conditions(const WSystem& w, const std::vector<std::string>& labels, Sense sense,
                                  const SolveOptions& options = {});

// M_0 = 1, M_i = 1 + Σ weights at level i; f_i = Π_{0<=j<i} M_j.
struct LevelFactors {
  std::vector<Weight> m;  // m[0..k-1]
  std::vector<Weight> f;  // f[1..k], f[0] unused and set to 0
};

// Throws PreconditionError unless w is strictly positive and level-normal.
LevelFactors level_factors(const WSystem& w);

// Each (T, w@i) becomes (T, f_i*w@1).
WSystem flatten_levels(const WSystem& w);

enum class Singularity { positive, negative };

bool is_singular(const WeakConstraint& c, Singularity kind);
bool is_singular(const OProgram& p, Singularity kind);

struct SingularResult {
  OProgram program;
  // fresh atom -> 0-based index of the weak constraint it replaced
  std::map<std::string, std::size_t> fresh_atoms;
};

// Introduces a^C <- body and replaces C by :~ a^C [w@l] for every weak
// constraint C that is not positively-singular, or for every constraint with
// more than one body literal when `all_multi_literal` is set (the result is
// then both positively- and negatively-singular). Fresh atoms are named
// __aux_wc<k> with k the 1-based constraint ordinal; a clash with an existing
// atom throws PreconditionError.
SingularResult to_positively_singular(const OProgram& p, bool all_multi_literal = false);
SingularResult to_negatively_singular(const OProgram& p);

enum class SingularMode { up, sat };

// The B-up and B-sat mappings for a wc condition. The polarity picks which
// singularity the condition is treated under; the overload without it infers
// it from the body size and the sign of the weight (multi-literal bodies use
// the polarity their weight allows, single literals are treated as
// positively-singular). Throws PreconditionError when the condition is not a
// wc condition or not singular for the polarity.
WCondition singular_rewrite(const WCondition& b, SingularMode mode, Singularity polarity);
WCondition singular_rewrite(const WCondition& b, SingularMode mode);

}  // namespace wsys
