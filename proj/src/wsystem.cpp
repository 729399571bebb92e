#include "wsys/wsystem.hpp"

#include <algorithm>
#include <set>

#include "wsys/error.hpp"

namespace wsys {

std::string WCondition::str() const {
  return label + ": " + theory.str() + " [" + to_string(weight) + "@" + std::to_string(level) + "]";
}

Vocabulary Ams::vocabulary() const {
  std::vector<std::string> names;
  for (const auto& m : modules) names.insert(names.end(), m.vocabulary().names().begin(), m.vocabulary().names().end());
  return Vocabulary(names);
}

WSystem::WSystem(Ams hard, std::vector<WCondition> soft)
    : hard_(std::move(hard)), soft_(std::move(soft)), vocabulary_(hard_.vocabulary()) {
  std::set<std::string> labels;
  for (const auto& b : soft_) {
    if (!labels.insert(b.label).second) throw PreconditionError("duplicate w-condition label '" + b.label + "'");
    if (b.level < 1) throw PreconditionError("w-condition '" + b.label + "' has level 0; levels are positive");
    if (!b.theory.vocabulary().subset_of(vocabulary_))
      throw VocabularyMismatch("w-condition '" + b.label + "' mentions atoms outside the hard vocabulary");
  }
}

const WCondition& WSystem::condition(const std::string& label) const {
  for (const auto& b : soft_)
    if (b.label == label) return b;
  throw PreconditionError("unknown w-condition label '" + label + "'");
}

bool WSystem::has_label(const std::string& label) const {
  return std::any_of(soft_.begin(), soft_.end(), [&](const WCondition& b) { return b.label == label; });
}

Weight weighted_eval(const Interpretation& i, const WCondition& b) {
  return satisfies(i, b.theory) ? b.weight : Weight(0);
}

std::vector<Level> levels(const WSystem& w) {
  std::set<Level> ls;
  for (const auto& b : w.soft()) ls.insert(b.level);
  return {ls.begin(), ls.end()};
}

std::vector<WCondition> slice(const WSystem& w, Level l) {
  std::vector<WCondition> out;
  for (const auto& b : w.soft())
    if (b.level == l) out.push_back(b);
  return out;
}

std::optional<Level> prev_level(const WSystem& w, Level l) {
  const auto ls = levels(w);
  auto it = std::find(ls.begin(), ls.end(), l);
  if (it == ls.end()) throw PreconditionError("level " + std::to_string(l) + " is not used by the w-system");
  if (std::next(it) == ls.end()) return std::nullopt;
  return *std::next(it);
}

Weight level_sum(const WSystem& w, const Interpretation& i, Level l) {
  Weight sum = 0;
  for (const auto& b : w.soft())
    if (b.level == l) sum += weighted_eval(i, b);
  return sum;
}

bool level_normal(const WSystem& w) {
  const auto ls = levels(w);
  for (std::size_t k = 0; k < ls.size(); ++k)
    if (ls[k] != k + 1) return false;
  return true;
}

}  // namespace wsys
