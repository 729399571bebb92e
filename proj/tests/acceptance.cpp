// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "wsys/cli.hpp"
#include "wsys/error.hpp"
#include "wsys/io.hpp"
#include "wsys/transforms.hpp"
#include "wsys/translate.hpp"

using namespace wsys;
using namespace fx;

namespace {

// Collects the first few failure notes of a criterion.
struct Check {
  std::vector<std::string> notes;
  std::size_t count = 0;

  void operator()(bool ok, const std::string& what) {
    ++count;
    if (!ok && notes.size() < 5) notes.push_back(what);
  }
  bool ok() const { return notes.empty(); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string seed_note(const char* what, std::uint64_t seed) { return std::string(what) + " seed " + std::to_string(seed); }

// ---- 1

void golden(Check& c) {
  const auto timed = [&](const char* name, const std::function<void()>& f) {
    const auto t = Clock::now();
    f();
    c(seconds_since(t) < 1.0, std::string(name) + " took a second or more");
  };
  timed("partmsat", [&] {
    const WSystem w = partmsat();
    c(models(enumerate_models(w)) == sets({{"a"}, {"b"}}), "partmsat models");
    c(models(optimal_models_recursive(w, Sense::max)) == sets({{"a"}}), "partmsat max optimum");
    c(models(optimal_models_recursive(w, Sense::min)) == sets({{"b"}}), "partmsat min optimum");
    c(models(optimal_models_domination(w, Sense::max)) == sets({{"a"}}), "partmsat max by domination");
  });
  timed("pwminsat", [&] {
    c(models(optimal_models_recursive(from_pw_sat(pwminsat_problem()), Sense::min)) == sets({{"a"}}),
      "pwminsat optimum");
  });
  timed("maxpl", [&] {
    c(models(optimal_models_recursive(maxpl(), Sense::max)) == sets({{"b"}}), "maxpl optimum");
    c(models(optimal_models_domination(maxpl(), Sense::max)) == sets({{"b"}}), "maxpl optimum by domination");
  });
  timed("sampleop", [&] {
    const WSystem w = from_oprogram(sampleop());
    c(models(enumerate_models(w)) == sets({{"a"}, {"b"}}), "sampleop answer sets");
    c(models(optimal_models_recursive(w, Sense::min)) == sets({{"a"}}), "sampleop optimal answer set");
  });
  timed("pi1", [&] {
    c(models(enumerate_models(WSystem(Ams{{Theory::lp(pi1())}}, {}))) == sets({{"a"}, {"b"}}), "pi1 answer sets");
    const Program r = reduct(pi1(), Interpretation(ab(), {"a"}));
    c(r.rules() == std::vector<Rule>{Rule{"a", {}, {}}}, "pi1 reduct by {a}");
  });
}

// ---- 2

void definition_equivalence(Check& c) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const WSystem w = testkit::gen_wsystem(corpus(seed));
    for (Sense s : {Sense::max, Sense::min}) {
      const auto dom = optimal_models_domination(w, s);
      c(dom == optimal_models_recursive(w, s), seed_note("domination and recursion differ,", seed));
      c(models(dom) == models(testkit::oracle_optimal(w, s)), seed_note("solver and oracle differ,", seed));
    }
  }
}

// ---- 3

void transform_preservation(Check& c) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const WSystem w = testkit::gen_wsystem(corpus(seed));
    const ModelSet max = models(testkit::oracle_optimal(w, Sense::max));
    const ModelSet min = models(testkit::oracle_optimal(w, Sense::min));
    const auto same = [&](const WSystem& v, const char* what) {
      c(models(optimal_models_recursive(v, Sense::max)) == max, seed_note(what, seed));
      c(models(optimal_models_recursive(v, Sense::min)) == min, seed_note(what, seed));
    };
    same(drop_zero_weights(w), "drop_zero_weights");
    for (int a : {2, 3, 7}) same(scale_weights(w, a), "scale_weights");
    same(normalize_levels(w), "normalize_levels");
    same(eliminate_sign(w, Sense::max), "eliminate_sign max");
    same(eliminate_sign(w, Sense::min), "eliminate_sign min");
    for (const auto& b : w.soft()) same(flip_single_condition(w, b.label), "flip_single_condition");
    const WSystem valid = normalize_levels(eliminate_sign(drop_zero_weights(w), Sense::max));
    if (!valid.soft().empty()) same(flatten_levels(valid), "flatten_levels");
    const WSystem n = negate_all_weights(w);
    c(models(optimal_models_recursive(n, Sense::max)) == min, seed_note("negate_all_weights", seed));
    c(models(optimal_models_recursive(n, Sense::min)) == max, seed_note("negate_all_weights", seed));
  }
}

// ---- 4

void flattening(Check& c) {
  const LevelFactors f = level_factors(w1());
  c(f.m.size() == 2 && f.m[0] == 1 && f.m[1] == 4, "M_0 = 1, M_1 = 4");
  c(f.f.size() == 3 && f.f[1] == 1 && f.f[2] == 4, "f_1 = 1, f_2 = 4");
  std::vector<Weight> ws;
  const WSystem flat = flatten_levels(w1());
  for (const auto& b : flat.soft()) {
    ws.push_back(b.weight);
    c(b.level == 1, "flattened level is 1");
  }
  c(ws == std::vector<Weight>{1, 2, 4}, "flattened weights 1, 2, 4");
}

// ---- 5 and 6

testkit::GenConfig tight(std::uint64_t seed) {
  testkit::GenConfig cfg = corpus(seed);
  cfg.tight = true;
  return cfg;
}

void translation(Check& c) {
  SolveOptions big;
  big.max_vars = 30;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const OProgram p = testkit::gen_oprogram(tight(seed));
    c(is_tight(p.program()), seed_note("generated program is not tight,", seed));
    const ModelSet expected = models(testkit::oracle_optimal_answer_sets(p));
    for (Sense target : {Sense::max, Sense::min}) {
      const Translation t = oprogram_to_pw(p, target);
      c(t.problem.sense() == target, seed_note("sense", seed));
      c(projected(optimal_models_recursive(from_pw_sat(t.problem), target, big), p.vocabulary()) == expected,
        seed_note(target == Sense::max ? "max translation" : "min translation", seed));
    }
  }
  const Translation t = oprogram_to_pw(sampleop(), Sense::min);
  c(t.problem.sense() == Sense::min, "sampleop translates to a min problem");
  c(t.problem.vocabulary() == ab(), "sampleop translation needs no fresh atoms");
  c(equivalent(Theory::sat(t.problem.hard(), ab()), f1()), "sampleop hard part is F1");
  c(t.problem.soft() == std::vector<SoftClause>{{cl({"-a", "b"}), Weight(2)}}, "sampleop soft part");
}

void completion_correct(Check& c) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Program p = testkit::gen_oprogram(tight(seed)).program();
    const ClausifyResult r = clausify(completion(p), p.vocabulary().names());
    const auto ms = enumerate_models(WSystem(Ams{{Theory::sat(r.clauses, p.vocabulary().with(r.fresh))}}, {}));
    c(projected(ms, p.vocabulary()) == models(testkit::oracle_answer_sets(p)), seed_note("completion", seed));
    c(projected(ms, p.vocabulary()).size() == ms.size(), seed_note("auxiliary atoms not functional,", seed));
  }
  const Formula a = Formula::atom("a");
  const Formula b = Formula::atom("b");
  const Formula got = completion(pi1());
  const std::vector<Formula> want{Formula::iff(a, Formula::neg(b)), Formula::iff(b, Formula::neg(a))};
  bool match = got.kind() == Formula::Kind::conjunction && got.children().size() == 2;
  if (match) {
    match = std::is_permutation(got.children().begin(), got.children().end(), want.begin(), want.end());
  }
  c(match, "completion of pi1 is (a <-> -b) & (b <-> -a)");
}

// ---- 7

bool subset_of(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> meet(const std::vector<std::string>& m, const std::vector<std::string>& xi) {
  std::vector<std::string> out;
  for (const auto& a : m)
    if (std::find(xi.begin(), xi.end(), a) != xi.end()) out.push_back(a);
  return out;
}

std::vector<std::string> sym_diff(const std::vector<std::string>& m, const std::vector<std::string>& ref) {
  std::vector<std::string> out;
  std::set_symmetric_difference(m.begin(), m.end(), ref.begin(), ref.end(), std::back_inserter(out));
  return out;
}

// Brute-force solutions of a clause set over v.
ModelSet solutions(const std::vector<Clause>& f, const Vocabulary& v) {
  ModelSet out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << v.size()); ++m) {
    const auto i = Interpretation::from_mask(v, m);
    bool ok = true;
    for (const auto& cl : f) {
      bool sat = false;
      for (const auto& l : cl.literals()) sat = sat || i.holds(l.atom) == l.positive;
      ok = ok && sat;
    }
    if (ok) out.insert(sorted(i.members()));
  }
  return out;
}

// Atoms listed in `first` lead, the rest follow in vocabulary order.
std::vector<std::string> tailored(const std::vector<std::string>& first, const std::vector<std::string>& all) {
  std::vector<std::string> out = first;
  for (const auto& a : all)
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  return out;
}

void min_one_distance(Check& c) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    testkit::GenConfig cfg = corpus(seed);
    cfg.max_clauses = 6;
    const PwProblem p = testkit::gen_pw(cfg);
    const Vocabulary& v = p.vocabulary();
    const ModelSet sol = solutions(p.hard(), v);

    std::vector<std::string> xi;
    for (const auto& a : v.names())
      if (rng() % 3) xi.push_back(a);
    std::vector<std::string> xi_sorted = sorted(xi);
    std::size_t least = v.size() + 1;
    for (const auto& m : sol) least = std::min(least, meet(m, xi_sorted).size());
    const ModelSet opt = models(optimal_models_recursive(min_one(p.hard(), xi, v), Sense::max));
    c(opt.size() == static_cast<std::size_t>(std::count_if(sol.begin(), sol.end(), [&](const auto& m) {
        return meet(m, xi_sorted).size() == least;
      })),
      seed_note("min_one misses a minimum", seed));
    for (const auto& m : opt) c(meet(m, xi_sorted).size() == least, seed_note("min_one cardinality", seed));

    const auto minimal = [&](const std::vector<std::string>& m) {
      const auto mx = meet(m, xi_sorted);
      for (const auto& o : sol) {
        const auto ox = meet(o, xi_sorted);
        if (ox != mx && subset_of(ox, mx)) return false;
      }
      return true;
    };
    std::vector<std::string> perm = xi;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (const auto& m : models(optimal_models_recursive(min_one_subset(p.hard(), perm, v), Sense::max)))
      c(minimal(m), seed_note("min_one_subset soundness", seed));
    for (const auto& m : sol) {
      if (!minimal(m)) continue;
      const auto opt_t = models(optimal_models_recursive(min_one_subset(p.hard(), tailored(meet(m, xi), xi), v), Sense::max));
      c(opt_t.count(m) == 1, seed_note("min_one_subset completeness", seed));
    }

    std::vector<std::string> ref_atoms;
    for (const auto& a : v.names())
      if (rng() % 2) ref_atoms.push_back(a);
    const Interpretation ref(v, ref_atoms);
    const auto ref_sorted = sorted(ref_atoms);
    std::size_t closest = v.size() + 1;
    for (const auto& m : sol) closest = std::min(closest, sym_diff(m, ref_sorted).size());
    const ModelSet dopt = models(optimal_models_recursive(distance_sat(p.hard(), ref, v), Sense::max));
    c(dopt.size() == static_cast<std::size_t>(std::count_if(sol.begin(), sol.end(), [&](const auto& m) {
        return sym_diff(m, ref_sorted).size() == closest;
      })),
      seed_note("distance_sat misses a minimum", seed));
    for (const auto& m : dopt) c(sym_diff(m, ref_sorted).size() == closest, seed_note("distance_sat distance", seed));
    std::vector<std::string> order = v.names();
    std::shuffle(order.begin(), order.end(), rng);
    for (const auto& m : models(optimal_models_recursive(distance_sat_subset(p.hard(), ref, order, v), Sense::max))) {
      const auto dm = sym_diff(m, ref_sorted);
      for (const auto& o : sol) {
        const auto d = sym_diff(o, ref_sorted);
        c(!(d != dm && subset_of(d, dm)), seed_note("distance_sat_subset soundness", seed));
      }
    }
  }
}

// ---- 8

void singular(Check& c) {
  const WCondition c1{"c1", Theory::wc(body({"a", "-b"}), ab()), Weight(-2), 1};
  c(singular_rewrite(c1, SingularMode::up) == c1, "C1 up is C1");
  const WCondition sat = singular_rewrite(c1, SingularMode::sat);
  c(sat.theory.logic() == Logic::sat && sat.theory.clauses() == std::vector<Clause>{cl({"-a", "b"})},
    "C1 sat theory is -a | b");
  c(sat.weight == 2 && sat.level == 1, "C1 sat weight is 2@1");
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const OProgram p = testkit::gen_oprogram(corpus(seed));
    const SingularResult r = to_positively_singular(p);
    c(is_singular(r.program, Singularity::positive), seed_note("not positively singular,", seed));
    const auto before = testkit::oracle_answer_sets(p.program());
    const auto after = testkit::oracle_answer_sets(r.program.program());
    c(before.size() == after.size() && projected(after, p.vocabulary()) == models(before),
      seed_note("answer set bijection", seed));
  }
}

// ---- 9

void io(Check& c) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const WSystem w = testkit::gen_wsystem(corpus(seed));
    c(parse_wsystem(write_wsystem(w)) == w, seed_note("wsys round trip", seed));
    const OProgram p = testkit::gen_oprogram(corpus(seed));
    c(parse_lp(write_lp(p)) == p, seed_note("lp round trip", seed));
    const PwProblem q = testkit::gen_pw(corpus(seed));
    c(parse_wcnf(write_wcnf(q)) == q, seed_note("wcnf round trip", seed));
  }

  std::mt19937_64 rng(2024);
  const std::string alphabet =
      "abcxyz_ -|&()<>{}[]@:;.,%#~\n\t0123456789pwcnfhsoftardvlumapsensemaxmin";
  std::size_t diagnostics = 0;
  for (std::size_t round = 0; round < 1000000; ++round) {
    std::string s(rng() % 48, ' ');
    const unsigned raw = rng() % 4;  // share of raw bytes, in quarters
    for (auto& ch : s)
      ch = rng() % 4 < raw ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
    for (int which = 0; which < 3; ++which) {
      try {
        if (which == 0) parse_wcnf(s);
        if (which == 1) parse_lp(s);
        if (which == 2) parse_wsystem(s);
      } catch (const ParseError& e) {
        ++diagnostics;
        c(e.span().line >= 1 && e.span().column >= 1, "diagnostic without a position");
      } catch (const std::exception& e) {
        c(false, "parser " + std::to_string(which) + " threw a non-diagnostic: " + e.what());
      }
    }
  }
  c(diagnostics > 0, "fuzzing produced no diagnostics");
}

// ---- 10

std::string run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return std::to_string(code) + "\n" + out.str() + err.str();
}

std::string run_binary(const std::string& command) {
  std::string out;
  FILE* p = popen(command.c_str(), "r");
  if (!p) return "";
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  out += "\nexit " + std::to_string(pclose(p));
  return out;
}

void determinism(Check& c) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    testkit::GenConfig cfg = corpus(seed);
    cfg.max_atoms = 14;
    const std::string large = write_wsystem(testkit::gen_wsystem(cfg));
    const std::string small = write_wsystem(testkit::gen_wsystem(corpus(seed)));
    for (const auto& mode : std::vector<std::vector<std::string>>{{"solve"}, {"solve", "--json"}, {"check"}}) {
      const std::string& text = mode[0] == "check" ? small : large;
      std::vector<std::string> args = mode;
      args.insert(args.end(), {"--format", "wsys"});
      const std::string base = run_cli(args, text);
      for (const char* threads : {"1", "1", "2", "3", "8"}) {
        std::vector<std::string> a = args;
        a.insert(a.end(), {"--threads", threads});
        c(run_cli(a, text) == base, seed_note("output changed", seed));
      }
    }
  }
  const std::string lp = write_lp(testkit::gen_oprogram(tight(3)));
  const std::string base = run_cli({"translate", "--format", "lp"}, lp);
  for (int k = 0; k < 5; ++k) c(run_cli({"translate", "--format", "lp"}, lp) == base, "translate output changed");

#ifdef WSYS_BINARY
  const std::string file = std::string(WSYS_DATA_DIR) + "/examples/w1.wsys";
  const std::string first = run_binary(std::string(WSYS_BINARY) + " solve --json " + file);
  c(first.find("\"optimal\"") != std::string::npos, "binary produced no solve output");
  for (const char* threads : {"1", "2", "4", "8"})
    for (int k = 0; k < 3; ++k)
      c(run_binary(std::string(WSYS_BINARY) + " solve --json --threads " + threads + " " + file) == first,
        "binary output changed");
#endif
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"worked examples", golden},
      {"domination and recursive optimality agree on 1000 random w-systems", definition_equivalence},
      {"transforms preserve optimal and min-optimal sets", transform_preservation},
      {"level flattening arithmetic on W1", flattening},
      {"translation of 300 tight o-programs and the sample o-program", translation},
      {"completion models equal answer sets", completion_correct},
      {"min-one and distance encodings", min_one_distance},
      {"singular rewriting", singular},
      {"round trips and parser fuzzing", io},
      {"deterministic CLI output", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    const auto t = Clock::now();
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << (c.ok() ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " (" << c.count
         << " checks, " << static_cast<long>(seconds_since(t) * 1000) << " ms)";
    std::cout << line.str() << "\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
