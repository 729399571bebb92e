#include "wsys/solver.hpp"

#include <algorithm>
#include <thread>

#include "wsys/error.hpp"

namespace wsys {

namespace {

constexpr std::size_t kHardVarLimit = 62;

struct Scored {
  std::vector<Interpretation> models;
  std::vector<LevelSums> sums;
  std::vector<Level> levels;
};

bool better(const Weight& a, const Weight& b, Sense s) { return s == Sense::max ? a > b : a < b; }

// Compares sum vectors from the greatest level down; true iff `cand` dominates `base`.
bool dominates_sums(const LevelSums& cand, const LevelSums& base, Sense s) {
  for (std::size_t k = cand.size(); k-- > 0;) {
    if (cand[k] == base[k]) continue;
    return better(cand[k], base[k], s);
  }
  return false;
}

Scored score(const WSystem& w, const SolveOptions& options) {
  Scored out;
  out.models = enumerate_models(w, options);
  out.levels = levels(w);
  out.sums.reserve(out.models.size());
  for (const auto& m : out.models) out.sums.push_back(level_sums(w, m));
  return out;
}

// Index sets of l-optimal models for every level, greatest level first.
std::vector<std::vector<std::size_t>> level_chain(const Scored& sc, Sense s) {
  std::vector<std::size_t> candidates(sc.models.size());
  for (std::size_t k = 0; k < candidates.size(); ++k) candidates[k] = k;
  std::vector<std::vector<std::size_t>> chain;
  for (std::size_t li = sc.levels.size(); li-- > 0;) {
    std::vector<std::size_t> next;
    if (!candidates.empty()) {
      Weight best = sc.sums[candidates.front()][li];
      for (auto c : candidates)
        if (better(sc.sums[c][li], best, s)) best = sc.sums[c][li];
      for (auto c : candidates)
        if (sc.sums[c][li] == best) next.push_back(c);
    }
    chain.push_back(next);
    candidates = std::move(next);
  }
  return chain;
}

std::vector<Interpretation> pick(const Scored& sc, const std::vector<std::size_t>& idx) {
  std::vector<Interpretation> out;
  out.reserve(idx.size());
  for (auto k : idx) out.push_back(sc.models[k]);
  return out;
}

std::vector<std::size_t> recursive_optimal(const Scored& sc, Sense s) {
  std::vector<std::size_t> result(sc.models.size());
  for (std::size_t k = 0; k < result.size(); ++k) result[k] = k;
  for (const auto& level_set : level_chain(sc, s)) {
    std::vector<std::size_t> both;
    std::set_intersection(result.begin(), result.end(), level_set.begin(), level_set.end(),
                          std::back_inserter(both));
    result = std::move(both);
  }
  return result;
}

}  // namespace

const char* sense_name(Sense s) { return s == Sense::max ? "max" : "min"; }

Sense opposite(Sense s) { return s == Sense::max ? Sense::min : Sense::max; }

std::map<Level, Weight> SolveReport::sums_by_level(std::size_t optimal_index) const {
  std::map<Level, Weight> out;
  for (std::size_t k = 0; k < levels.size(); ++k) out[levels[k]] = optimal_sums[optimal_index][k];
  return out;
}

std::vector<Interpretation> enumerate_models(const WSystem& w, const SolveOptions& options) {
  const Vocabulary& v = w.vocabulary();
  if (v.size() > options.max_vars || v.size() > kHardVarLimit)
    throw CapExceeded("w-system has " + std::to_string(v.size()) + " atoms; exhaustive enumeration is capped at " +
                      std::to_string(std::min(options.max_vars, kHardVarLimit)));
  const std::uint64_t total = std::uint64_t{1} << v.size();
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::uint64_t>(options.workers, total));

  auto scan = [&](std::uint64_t begin, std::uint64_t end, std::vector<Interpretation>& out) {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      auto i = Interpretation::from_mask(v, mask);
      bool ok = true;
      for (const auto& t : w.hard().modules) {
        if (!satisfies(i, t)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(i));
    }
  };

  if (workers == 1) {
    std::vector<Interpretation> out;
    scan(0, total, out);
    return out;
  }
  // Contiguous mask ranges keep the concatenation in canonical order.
  std::vector<std::vector<Interpretation>> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (std::size_t t = 0; t < workers; ++t) {
    const std::uint64_t begin = std::min(total, t * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    threads.emplace_back([&, t, begin, end] {
      try {
        scan(begin, end, parts[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Interpretation> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

LevelSums level_sums(const WSystem& w, const Interpretation& i) {
  const auto ls = levels(w);
  LevelSums sums(ls.size(), Weight(0));
  for (const auto& b : w.soft()) {
    auto k = static_cast<std::size_t>(std::lower_bound(ls.begin(), ls.end(), b.level) - ls.begin());
    sums[k] += weighted_eval(i, b);
  }
  return sums;
}

bool dominates(const WSystem& w, const Interpretation& i2, const Interpretation& i1, Sense s) {
  return dominates_sums(level_sums(w, i2), level_sums(w, i1), s);
}

std::vector<Interpretation> optimal_models_domination(const WSystem& w, Sense s, const SolveOptions& options) {
  const Scored sc = score(w, options);
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < sc.models.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < sc.models.size() && !dominated; ++b)
      dominated = b != a && dominates_sums(sc.sums[b], sc.sums[a], s);
    if (!dominated) keep.push_back(a);
  }
  return pick(sc, keep);
}

std::vector<Interpretation> l_optimal_models(const WSystem& w, Level l, Sense s, const SolveOptions& options) {
  const auto ls = levels(w);
  auto it = std::find(ls.begin(), ls.end(), l);
  if (it == ls.end()) throw PreconditionError("level " + std::to_string(l) + " is not used by the w-system");
  const Scored sc = score(w, options);
  const auto chain = level_chain(sc, s);
  // chain[0] is the greatest level.
  const std::size_t from_top = ls.size() - 1 - static_cast<std::size_t>(it - ls.begin());
  return pick(sc, chain[from_top]);
}

std::vector<Interpretation> optimal_models_recursive(const WSystem& w, Sense s, const SolveOptions& options) {
  const Scored sc = score(w, options);
  return pick(sc, recursive_optimal(sc, s));
}

SolveReport solve(const WSystem& w, Sense s, const SolveOptions& options) {
  Scored sc = score(w, options);
  SolveReport report;
  report.sense = s;
  report.levels = sc.levels;
  const auto idx = recursive_optimal(sc, s);
  report.optimal = pick(sc, idx);
  for (auto k : idx) report.optimal_sums.push_back(sc.sums[k]);
  report.models = std::move(sc.models);
  return report;
}

}  // namespace wsys
