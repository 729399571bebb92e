#include <doctest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "wsys/error.hpp"
#include "wsys/io.hpp"
#include "wsys/translate.hpp"

using namespace wsys;
using namespace fx;

namespace {

SourceSpan error_at(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.span();
  }
  FAIL("expected a parse error");
  return {};
}

std::string error_text(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.message();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_wcnf classic") {
  const PwProblem p = parse_wcnf("c sample\np wcnf 2 3 10\n10 1 2 0\n10 -1 -2 0\n2 -1 2 0\n");
  CHECK(p.vocabulary().names() == std::vector<std::string>{"x1", "x2"});
  CHECK(p.hard() == std::vector<Clause>{cl({"x1", "x2"}), cl({"-x1", "-x2"})});
  CHECK(p.soft() == std::vector<SoftClause>{{cl({"-x1", "x2"}), Weight(2)}});
  CHECK(p.sense() == Sense::max);
}

TEST_CASE("parse_wcnf without soft clauses") {
  const PwProblem p = parse_wcnf("p wcnf 2 2 5\n5 1 2 0\n5 -1 -2 0\n");
  CHECK(p.soft().empty());
  CHECK(models(enumerate_models(from_pw_sat(p))) == sets({{"x1"}, {"x2"}}));
}

TEST_CASE("duplicate soft clauses stay distinct") {
  const PwProblem p = parse_wcnf("p wcnf 1 2 9\n1 1 0\n1 1 0\n");
  REQUIRE(p.soft().size() == 2);
  const WSystem w = from_pw_sat(p);
  CHECK(level_sums(w, Interpretation(p.vocabulary(), std::vector<std::string>{"x1"}))[0] == 2);
}

TEST_CASE("parse_wcnf names, sense and multi-line clauses") {
  const PwProblem p = parse_wcnf("c map 1 a\nc map 2 b\nc sense min\np wcnf 2 1\n3 1\n -2\n 0\n");
  CHECK(p.vocabulary() == ab());
  CHECK(p.sense() == Sense::min);
  CHECK(p.hard().empty());
  CHECK(p.soft() == std::vector<SoftClause>{{cl({"a", "-b"}), Weight(3)}});
}

TEST_CASE("parse_wcnf diagnostics") {
  CHECK(error_at([] { parse_wcnf("p wcnf 2 1 10\n0 1 0\n"); }) == SourceSpan{2, 1, 14});
  CHECK(error_text([] { parse_wcnf("p wcnf 2 1 10\n11 1 0\n"); }) == "weight exceeds top");
  CHECK(error_at([] { parse_wcnf("p wcnf 2 1 10\n1 3 0\n"); }).column == 3);
  CHECK(error_text([] { parse_wcnf("p wcnf 2 1 10\n1 1 2\n"); }) == "clause is missing its terminating 0");
  CHECK(error_text([] { parse_wcnf("p cnf 2 1\n1 2 0\n"); }).find("p wcnf") != std::string::npos);
  CHECK(error_text([] { parse_wcnf("1 2 0\n"); }) == "clause before the 'p wcnf' header");
  CHECK(error_text([] { parse_wcnf("h 1 2 0\n3 -1 0\n"); }).find("new-format") != std::string::npos);
  CHECK(error_text([] { parse_wcnf("p wcnf 2 2 10\n1 1 0\n"); }).find("declares 2") != std::string::npos);
  CHECK(error_text([] { parse_wcnf("c map 1 x2\np wcnf 2 0 1\n"); }).find("two variables") != std::string::npos);
}

TEST_CASE("write_wcnf") {
  const PwProblem empty(f1_clauses(), {}, Sense::max, ab());
  const std::string text = write_wcnf(empty);
  CHECK(text == "c map 1 a\nc map 2 b\nc sense max\np wcnf 2 2 1\n1 1 2 0\n1 -1 -2 0\n");
  const Translation t = oprogram_to_pw(sampleop(), Sense::min);
  const std::string once = write_wcnf(t.problem);
  CHECK(write_wcnf(parse_wcnf(once)) == once);
  CHECK(parse_wcnf(once) == t.problem);
}

TEST_CASE("parse_lp") {
  const OProgram p = parse_lp("a :- not b. b :- not a. :~ a, not b. [-2@1]");
  CHECK(p == sampleop());
  const OProgram m = parse_lp("#minimize{2@1: a}.");
  REQUIRE(m.constraints().size() == 1);
  CHECK(m.constraints()[0] == WeakConstraint{body({"a"}), Weight(2), 1});
  const OProgram x = parse_lp("#maximize{2@1: a; 1: not b}.");
  REQUIRE(x.constraints().size() == 2);
  CHECK(x.constraints()[0].weight == -2);
  CHECK(x.constraints()[1] == WeakConstraint{body({"-b"}), Weight(-1), 1});
  const OProgram f = parse_lp("a.");
  CHECK(f.program().rules() == std::vector<Rule>{Rule{"a", {}, {}}});
  CHECK(parse_lp(":~ a. [3]").constraints()[0].level == 1);
}

TEST_CASE("parse_lp diagnostics") {
  CHECK(error_text([] { parse_lp(":~ a. [1@0]"); }) == "level must be positive");
  CHECK(error_text([] { parse_lp("__aux :- a."); }).find("reserved prefix") != std::string::npos);
  CHECK(error_text([] { parse_lp("p(X) :- q(X)."); }).find("'('") != std::string::npos);
  CHECK(error_text([] { parse_lp("A :- b."); }).find("ground atom") != std::string::npos);
  CHECK(error_at([] { parse_lp("a :- b\nc."); }) == SourceSpan{2, 1, 7});
}

TEST_CASE("format helpers") {
  CHECK(format_clause(Clause()) == "#false");
  CHECK(format_clause(cl({"b", "-a"})) == "-a | b");
  const Formula a = Formula::atom("a");
  const Formula b = Formula::atom("b");
  const Formula c = Formula::atom("c");
  CHECK(format_formula(Formula::conj({Formula::disj({a, b}), Formula::neg(c)})) == "(a | b) & -c");
  CHECK(format_formula(Formula::implies(Formula::implies(a, b), c)) == "(a -> b) -> c");
  CHECK(format_formula(Formula::implies(a, Formula::implies(b, c))) == "a -> b -> c");
  CHECK(format_rule(Rule{"a", {"b"}, {"c"}}) == "a :- b, not c.");
  CHECK(format_rule(Rule{std::nullopt, {"b"}, {}}) == ":- b.");
  CHECK(format_weak_constraint(WeakConstraint{body({"a", "-b"}), Weight(-2), 1}) == ":~ a, not b. [-2@1]");
}

TEST_CASE("parse_wsystem") {
  const WSystem w = parse_wsystem(
      "hard sat { a | b. -a | -b. }\n"
      "soft clause (a) [1]\n"
      "soft clause (b) [1@3]\n"
      "soft clause (a | -b) [2]\n"
      "soft clause (-a | b) [0]\n");
  // clause theories only span the atoms they mention
  CHECK(w.soft()[0].theory.vocabulary().names() == std::vector<std::string>{"a"});
  CHECK(w.soft()[1].weight == 1);
  CHECK(w.soft()[1].level == 3);
  CHECK(models(enumerate_models(w)) == models(enumerate_models(maxpl())));
  CHECK(levels(w) == std::vector<Level>{1, 3});
  CHECK(models(optimal_models_recursive(w, Sense::max)) == sets({{"b"}}));

  const WSystem bare = parse_wsystem("hard lp { a :- not b. b :- not a. }\n");
  CHECK(bare.soft().empty());
  CHECK(bare.hard().modules[0] == Theory::lp(pi1()));
}

TEST_CASE("soft-only atoms get a sigma module") {
  const WsysParse r = parse_wsystem_with_warnings("hard clause (a)\nsoft pl (c & a) [1]\n");
  REQUIRE(r.warnings.size() == 1);
  REQUIRE(r.system.hard().modules.size() == 2);
  CHECK(r.system.hard().modules[1] == Theory::sigma(Vocabulary{"c"}));
}

TEST_CASE("vocab line") {
  const WSystem w = parse_wsystem("vocab a b c\nhard clause (a)\n");
  CHECK(w.vocabulary().names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(enumerate_models(w).size() == 4);
  CHECK(error_text([] { parse_wsystem("vocab a\nhard clause (b)\n"); }).find("not declared") != std::string::npos);
}

TEST_CASE("parse_wsystem diagnostics") {
  CHECK(error_text([] { parse_wsystem("hard foo { a }\n"); }) == "unknown logic tag 'foo'");
  CHECK(error_at([] { parse_wsystem("hard clause (a)\nsoft clause (a) [1@0]\n"); }).line == 2);
  CHECK(error_text([] { parse_wsystem("hard clause (a) extra\n"); }).find("end of line") != std::string::npos);
  CHECK(error_text([] { parse_wsystem("soft x: clause (a) [1]\nsoft x: clause (a) [1]\n"); })
            .find("duplicate label") != std::string::npos);
  CHECK_THROWS_AS(parse_wsystem(std::string(100000, '(')), ParseError);
  CHECK_THROWS_AS(parse_wsystem("hard pl " + std::string(100000, '-')), ParseError);
}

TEST_CASE("wsys writer keeps explicit vocabularies") {
  const WSystem w(Ams{{Theory::sat({cl({"b"})}, Vocabulary{"a", "b"})}},
                  {cond("k", Theory::complement_of(Theory::lp(pi1())), 3, 2)});
  const std::string text = write_wsystem(w);
  CHECK(text == "hard clause <a b> (b)\nsoft k: compl lp { a :- not b. b :- not a. } [3@2]\n");
  CHECK(parse_wsystem(text) == w);
}

TEST_CASE("round trips on the corpus") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    CAPTURE(seed);
    const WSystem w = testkit::gen_wsystem(corpus(seed));
    const std::string text = write_wsystem(w);
    CHECK(parse_wsystem(text) == w);
    CHECK(write_wsystem(parse_wsystem(text)) == text);

    const OProgram p = testkit::gen_oprogram(corpus(seed));
    CHECK(parse_lp(write_lp(p)) == p);

    const PwProblem q = testkit::gen_pw(corpus(seed));
    CHECK(parse_wcnf(write_wcnf(q)) == q);
  }
}

TEST_CASE("random bytes only produce diagnostics") {
  std::mt19937_64 rng(99);
  const std::string alphabet = "abc xyz-|&()<>{}[]@:;.,%#\n\r\t0123456789pwcnfhsoftardvlu";
  for (int round = 0; round < 20000; ++round) {
    std::string s(rng() % 64, ' ');
    for (auto& ch : s) ch = rng() % 4 == 0 ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
    for (auto* parse : {+[](const std::string& t) { parse_wcnf(t); }, +[](const std::string& t) { parse_lp(t); },
                        +[](const std::string& t) { parse_wsystem(t); }}) {
      try {
        parse(s);
      } catch (const ParseError& e) {
        CHECK(e.span().line >= 1);
        CHECK(e.span().column >= 1);
      }
    }
  }
}

TEST_CASE("crlf line endings") {
  CHECK(parse_wcnf("c map 1 a\r\nc map 2 b\r\np wcnf 2 2 5\r\n5 1 2 0\r\n5 -1 -2 0\r\n") ==
        PwProblem(f1_clauses(), {}, Sense::max, ab()));
  CHECK(parse_lp("a :- not b.\r\nb :- not a.\r\n:~ a, not b. [-2@1]\r\n") == sampleop());
  CHECK(write_wsystem(parse_wsystem("hard clause (a | b)\r\nsoft clause (a) [1]\r\n")) ==
        "hard clause (a | b)\nsoft s1: clause (a) [1@1]\n");
}
