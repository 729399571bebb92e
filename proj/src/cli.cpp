#include "wsys/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "wsys/encodings.hpp"
#include "wsys/io.hpp"
#include "wsys/solver.hpp"
#include "wsys/testkit.hpp"
#include "wsys/transforms.hpp"
#include "wsys/translate.hpp"

namespace wsys::cli {

namespace {

enum class Format { wcnf, lp, wsys };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string format;
  std::string sense;
  std::string output;
  std::size_t max_vars = 0;
  std::size_t threads = 1;
  bool json = false;
  std::string permutation;
  std::string to = "wcnf";
  std::vector<std::string> apply;
};

struct Input {
  Format format = Format::wsys;
  std::string source;
  WSystem system;
  std::optional<OProgram> program;
  std::optional<PwProblem> pw;
  Sense default_sense = Sense::max;
};

Format parse_format(const std::string& name, const std::string& path) {
  std::string f = name;
  if (f.empty()) {
    const auto dot = path.rfind('.');
    if (path == "-" || dot == std::string::npos) throw UsageError("cannot infer the input format; pass --format");
    f = path.substr(dot + 1);
  }
  if (f == "wcnf") return Format::wcnf;
  if (f == "lp") return Format::lp;
  if (f == "wsys") return Format::wsys;
  throw UsageError("unknown format '" + f + "' (expected wcnf, lp or wsys)");
}

Input load(const Options& o, std::istream& in, std::ostream& err) {
  Input x;
  x.format = parse_format(o.format, o.input);
  x.source = o.input == "-" ? "<stdin>" : o.input;
  std::string text;
  if (o.input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(o.input, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + o.input + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    switch (x.format) {
      case Format::wcnf:
        x.pw = parse_wcnf(text);
        x.system = from_pw_sat(*x.pw);
        x.default_sense = x.pw->sense();
        break;
      case Format::lp:
        x.program = parse_lp(text);
        x.system = from_oprogram(*x.program);
        x.default_sense = Sense::min;
        break;
      case Format::wsys: {
        auto parsed = parse_wsystem_with_warnings(text);
        for (const auto& w : parsed.warnings) err << "warning: " << x.source << ": " << w << "\n";
        x.system = std::move(parsed.system);
        x.default_sense = Sense::max;
        break;
      }
    }
  } catch (const ParseError& e) {
    throw ParseError(e.span(), x.source + ":" + e.span().str() + ": " + e.message());
  }
  return x;
}

Sense pick_sense(const Options& o, Sense fallback) {
  if (o.sense.empty()) return fallback;
  if (o.sense == "max") return Sense::max;
  if (o.sense == "min") return Sense::min;
  throw UsageError("unknown sense '" + o.sense + "' (expected max or min)");
}

SolveOptions solve_options(const Options& o) {
  SolveOptions s;
  s.workers = std::max<std::size_t>(1, o.threads);
  if (o.max_vars > 0) {
    s.max_vars = o.max_vars;
  } else if (const char* env = std::getenv("WSYS_MAX_VARS"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError(std::string("invalid WSYS_MAX_VARS '") + env + "'");
    s.max_vars = static_cast<std::size_t>(v);
  }
  return s;
}

std::vector<std::string> sorted_members(const Interpretation& i) {
  auto m = i.members();
  std::sort(m.begin(), m.end());
  return m;
}

std::string show(const Interpretation& i) {
  std::string s = "{";
  const auto m = sorted_members(i);
  for (std::size_t k = 0; k < m.size(); ++k) s += (k ? "," : "") + m[k];
  return s + "}";
}

using ModelSet = std::set<std::vector<std::string>>;

ModelSet model_set(const std::vector<Interpretation>& v, const std::optional<Vocabulary>& onto = std::nullopt) {
  ModelSet out;
  for (const auto& i : v) out.insert(sorted_members(onto ? project(i, *onto) : i));
  return out;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + o.output + "'");
  f << text;
}

// Replaces the soft part by (-a_i, 1@i) over the given permutation.
WSystem with_permutation(const WSystem& w, const std::string& atoms) {
  std::vector<std::string> perm;
  std::stringstream ss(atoms);
  for (std::string a; std::getline(ss, a, ',');)
    if (!a.empty()) perm.push_back(a);
  WSystem subset = min_one_subset({}, perm, w.vocabulary());
  return WSystem(w.hard(), subset.soft());
}

int cmd_solve(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Input x = load(o, in, err);
  const Sense s = pick_sense(o, x.default_sense);
  WSystem w = o.permutation.empty() ? x.system : with_permutation(x.system, o.permutation);
  const SolveReport r = solve(w, s, solve_options(o));

  std::string text;
  if (o.json) {
    nlohmann::ordered_json j;
    j["sense"] = sense_name(s);
    j["levels"] = r.levels;
    j["models"] = nlohmann::ordered_json::array();
    for (const auto& m : r.models) j["models"].push_back(sorted_members(m));
    j["optimal"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < r.optimal.size(); ++k) {
      nlohmann::ordered_json entry;
      entry["model"] = sorted_members(r.optimal[k]);
      entry["sums"] = nlohmann::ordered_json::array();
      const auto sums = r.sums_by_level(k);
      for (auto it = sums.rbegin(); it != sums.rend(); ++it)
        entry["sums"].push_back({{"level", it->first}, {"sum", to_string(it->second)}});
      j["optimal"].push_back(std::move(entry));
    }
    text = j.dump(2) + "\n";
  } else {
    text = "MODELS " + std::to_string(r.models.size()) + "\n";
    for (const auto& m : r.models) text += show(m) + "\n";
    text += "OPTIMUM " + std::to_string(r.optimal.size()) + " " + sense_name(s) + "\n";
    for (std::size_t k = 0; k < r.optimal.size(); ++k) {
      text += show(r.optimal[k]);
      const auto sums = r.sums_by_level(k);
      for (auto it = sums.rbegin(); it != sums.rend(); ++it)
        text += " " + to_string(it->second) + "@" + std::to_string(it->first);
      text += "\n";
    }
  }
  emit(o, out, text);
  return kSuccess;
}

int cmd_translate(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.to != "wcnf") throw UsageError("translate only targets wcnf");
  Input x = load(o, in, err);
  if (x.format != Format::lp) throw UsageError("translate reads lp input");
  const Sense target = pick_sense(o, Sense::min);
  Translation t = oprogram_to_pw(*x.program, target);
  emit(o, out, write_wcnf(t.problem));
  return kSuccess;
}

std::vector<std::string> split_list(const std::vector<std::string>& items, char sep) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    for (std::string part; std::getline(ss, part, sep);)
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

WSystem map_wc(const WSystem& w, SingularMode mode) {
  std::vector<WCondition> soft;
  for (const auto& b : w.soft()) soft.push_back(b.theory.logic() == Logic::wc ? singular_rewrite(b, mode) : b);
  return WSystem(w.hard(), std::move(soft));
}

int cmd_transform(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Input x = load(o, in, err);
  const Sense s = pick_sense(o, x.default_sense);
  const auto steps = split_list(o.apply, ',');
  if (steps.empty()) throw UsageError("transform needs --apply");

  std::optional<OProgram> program = x.program;
  std::optional<WSystem> w;
  auto system = [&]() -> WSystem& {
    if (!w) w = program ? from_oprogram(*program) : x.system;
    return *w;
  };
  for (const auto& step : steps) {
    const auto colon = step.find(':');
    const std::string name = step.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : step.substr(colon + 1);
    auto need_arg = [&] {
      if (arg.empty()) throw UsageError("transform '" + name + "' needs an argument (" + name + ":<arg>)");
    };
    if (name == "to_positively_singular" || name == "to_negatively_singular" || name == "to_singular") {
      if (!program) throw UsageError("'" + name + "' applies to lp input");
      if (w) throw UsageError("'" + name + "' must come before w-system transforms");
      program = name == "to_negatively_singular" ? to_negatively_singular(*program).program
                                                 : to_positively_singular(*program, name == "to_singular").program;
    } else if (name == "drop_zero_weights") {
      w = drop_zero_weights(system());
    } else if (name == "scale_weights") {
      need_arg();
      const auto a = parse_weight(arg);
      if (!a) throw UsageError("scale_weights needs an integer factor");
      w = scale_weights(system(), *a);
    } else if (name == "normalize_levels") {
      w = normalize_levels(system());
    } else if (name == "negate_all_weights") {
      w = negate_all_weights(system());
    } else if (name == "eliminate_sign") {
      const std::string keep = arg.empty() ? sense_name(s) : arg;
      if (keep != "max" && keep != "min") throw UsageError("eliminate_sign takes max or min");
      w = eliminate_sign(system(), keep == "max" ? Sense::max : Sense::min);
    } else if (name == "flip_single_condition") {
      need_arg();
      w = flip_single_condition(system(), arg);
    } else if (name == "drop_invariant_conditions") {
      need_arg();
      w = drop_invariant_conditions(system(), split_list({arg}, '+'), s, solve_options(o));
    } else if (name == "flatten_levels") {
      w = flatten_levels(system());
    } else if (name == "singular_up") {
      w = map_wc(system(), SingularMode::up);
    } else if (name == "singular_sat") {
      w = map_wc(system(), SingularMode::sat);
    } else {
      throw UsageError("unknown transform '" + name + "'");
    }
  }
  emit(o, out, write_wsystem(system()));
  return kSuccess;
}

class Checker {
 public:
  Checker(std::ostream& out) : out_(out) {}

  void claim(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const CapExceeded&) {
      throw;
    } catch (const std::exception& e) {
      out_ << "FAIL " << name << " (" << e.what() << ")\n";
      failed_ = true;
      return;
    }
    out_ << (ok ? "PASS " : "FAIL ") << name << "\n";
    failed_ = failed_ || !ok;
  }
  void skip(const std::string& name, const std::string& why) { out_ << "SKIP " << name << " (" << why << ")\n"; }
  bool failed() const { return failed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

int cmd_check(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Input x = load(o, in, err);
  const SolveOptions so = solve_options(o);
  const WSystem& w = x.system;
  if (w.vocabulary().size() > so.max_vars)
    throw CapExceeded("vocabulary has " + std::to_string(w.vocabulary().size()) + " atoms; the cap is " +
                      std::to_string(so.max_vars) + " (raise --max-vars)");
  std::ostringstream report;
  Checker c(report);

  const ModelSet omax = model_set(testkit::oracle_optimal(w, Sense::max));
  const ModelSet omin = model_set(testkit::oracle_optimal(w, Sense::min));
  auto same = [&](const WSystem& v) {
    return model_set(optimal_models_recursive(v, Sense::max, so)) == omax &&
           model_set(optimal_models_recursive(v, Sense::min, so)) == omin;
  };
  for (Sense s : {Sense::max, Sense::min}) {
    const std::string tag = std::string(" (") + sense_name(s) + ")";
    c.claim("domination and recursive optimality agree" + tag, [&] {
      return model_set(optimal_models_domination(w, s, so)) == model_set(optimal_models_recursive(w, s, so));
    });
    c.claim("solver agrees with the brute-force oracle" + tag, [&] {
      return model_set(optimal_models_recursive(w, s, so)) == (s == Sense::max ? omax : omin);
    });
  }
  c.claim("drop_zero_weights preserves optimal models", [&] { return same(drop_zero_weights(w)); });
  for (int a : {2, 3, 7})
    c.claim("scale_weights " + std::to_string(a) + " preserves optimal models",
            [&] { return same(scale_weights(w, a)); });
  c.claim("normalize_levels preserves optimal models", [&] { return same(normalize_levels(w)); });
  c.claim("negate_all_weights swaps optimal and min-optimal models", [&] {
    const WSystem n = negate_all_weights(w);
    return model_set(optimal_models_recursive(n, Sense::max, so)) == omin &&
           model_set(optimal_models_recursive(n, Sense::min, so)) == omax;
  });
  c.claim("eliminate_sign max preserves optimal models", [&] { return same(eliminate_sign(w, Sense::max)); });
  c.claim("eliminate_sign min preserves optimal models", [&] { return same(eliminate_sign(w, Sense::min)); });
  for (const auto& b : w.soft())
    c.claim("flip_single_condition " + b.label + " preserves optimal models",
            [&] { return same(flip_single_condition(w, b.label)); });
  {
    const WSystem pos = normalize_levels(drop_zero_weights(w));
    const bool positive = std::all_of(pos.soft().begin(), pos.soft().end(), [](const auto& b) { return b.weight > 0; });
    if (positive && !pos.soft().empty()) {
      c.claim("flatten_levels preserves optimal models", [&] { return same(flatten_levels(pos)); });
    } else {
      c.skip("flatten_levels preserves optimal models", "weights are not strictly positive");
    }
  }

  switch (x.format) {
    case Format::wcnf:
      c.claim("wcnf write/parse round trip", [&] { return parse_wcnf(write_wcnf(*x.pw)) == *x.pw; });
      break;
    case Format::wsys:
      c.claim("wsys write/parse round trip", [&] { return parse_wsystem(write_wsystem(w)) == w; });
      break;
    case Format::lp: {
      const OProgram& p = *x.program;
      c.claim("lp write/parse round trip", [&] { return parse_lp(write_lp(p)) == p; });
      c.claim("answer sets agree with the brute-force oracle", [&] {
        return model_set(enumerate_models(w, so)) == model_set(testkit::oracle_answer_sets(p.program()));
      });
      c.claim("optimal answer sets are the min-optimal models", [&] {
        return model_set(testkit::oracle_optimal_answer_sets(p)) == omin;
      });
      c.claim("to_positively_singular keeps answer sets in bijection", [&] {
        const SingularResult r = to_positively_singular(p);
        const auto before = enumerate_models(from_oprogram(p), so);
        const auto after = enumerate_models(from_oprogram(r.program), so);
        return before.size() == after.size() && model_set(after, p.vocabulary()) == model_set(before) &&
               model_set(optimal_models_recursive(from_oprogram(r.program), Sense::min, so), p.vocabulary()) == omin;
      });
      if (!is_tight(p.program())) {
        c.skip("completion models are the answer sets", "program is not tight");
        c.skip("translation preserves optimal answer sets", "program is not tight");
        break;
      }
      c.claim("completion models are the answer sets", [&] {
        const ClausifyResult cl = clausify(completion(p.program()), p.vocabulary().names());
        const PwProblem prob(cl.clauses, {}, Sense::max, p.vocabulary().with(cl.fresh));
        const auto models = enumerate_models(from_pw_sat(prob), so);
        return models.size() == testkit::oracle_answer_sets(p.program()).size() &&
               model_set(models, p.vocabulary()) == model_set(testkit::oracle_answer_sets(p.program()));
      });
      for (Sense target : {Sense::max, Sense::min}) {
        c.claim(std::string("translation preserves optimal answer sets (") + sense_name(target) + ")", [&] {
          const Translation t = oprogram_to_pw(p, target);
          const auto opt = optimal_models_recursive(from_pw_sat(t.problem), target, so);
          return model_set(opt, t.original) == model_set(testkit::oracle_optimal_answer_sets(p));
        });
      }
      break;
    }
  }
  emit(o, out, report.str());
  return c.failed() ? kSemantic : kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"w-system solver, transformer and translator", "wsys"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "input file, or - for stdin");
    sub->add_option("--format,--from", o.format, "input format: wcnf, lp or wsys (default: file extension)");
    sub->add_option("--sense", o.sense, "max or min (default: max for wcnf/wsys, min for lp)");
    sub->add_option("-o,--output", o.output, "write to a file instead of stdout");
    sub->add_option("--max-vars", o.max_vars, "enumeration cap on the vocabulary size (env WSYS_MAX_VARS)");
    sub->add_option("--threads", o.threads, "enumeration worker threads");
  };
  CLI::App* solve_cmd = app.add_subcommand("solve", "print models and optimal models");
  common(solve_cmd);
  solve_cmd->add_flag("--json", o.json, "JSON output");
  solve_cmd->add_option("--permutation", o.permutation,
                        "comma separated atoms a1,..,an; replaces the soft part by (-ai, 1@i)");
  CLI::App* translate_cmd = app.add_subcommand("translate", "tight lp with weak constraints to wcnf");
  common(translate_cmd);
  translate_cmd->add_option("--to", o.to, "output format (wcnf)");
  CLI::App* transform_cmd = app.add_subcommand("transform", "apply transforms and print the w-system");
  common(transform_cmd);
  transform_cmd->add_option("--apply", o.apply, "name[:arg],... applied left to right")
      ->required()
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  CLI::App* check_cmd = app.add_subcommand("check", "check the optimality claims on an instance");
  common(check_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(o, in, out, err);
    if (translate_cmd->parsed()) return cmd_translate(o, in, out, err);
    if (transform_cmd->parsed()) return cmd_transform(o, in, out, err);
    return cmd_check(o, in, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.message() << "\n";
    return kParse;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSemantic;
  }
}

}  // namespace wsys::cli
