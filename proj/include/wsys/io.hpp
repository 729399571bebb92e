#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wsys/encodings.hpp"
#include "wsys/error.hpp"
#include "wsys/wsystem.hpp"

namespace wsys {

// Classic (pre-2022) WCNF:
//   c <comment>
//   c map <var> <atom>     (optional atom names)
//   c sense max|min        (optional, default max)
//   p wcnf <nvars> <nclauses> [<top>]
//   <weight> <lit>... 0    (weight == top marks a hard clause)
// Variables without a map comment are named x<var>. All errors are
// ParseError with the offending position.
PwProblem parse_wcnf(std::string_view text);

// Canonical WCNF: map and sense comments, top = 1 + Σ soft weights, hard
// clauses first, literals by variable index.
std::string write_wcnf(const PwProblem& p);

// Ground ASP subset: facts, rules, constraints, weak constraints
// (:~ body. [w@l]) and #minimize/#maximize statements, % comments.
OProgram parse_lp(std::string_view text);
std::string write_lp(const OProgram& p);

struct WsysParse {
  WSystem system;
  std::vector<std::string> warnings;
};

// Native w-system text format; see README for the grammar.
WsysParse parse_wsystem_with_warnings(std::string_view text);
WSystem parse_wsystem(std::string_view text);
std::string write_wsystem(const WSystem& w);

// Renderings used by the writers.
std::string format_clause(const Clause& c);     // -a | b, #false when empty
std::string format_formula(const Formula& f);   // minimal parentheses
std::string format_rule(const Rule& r);         // a :- b, not c.
std::string format_weak_constraint(const WeakConstraint& c);

}  // namespace wsys
