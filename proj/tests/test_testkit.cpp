#include <doctest.h>

#include "fixtures.hpp"
#include "wsys/io.hpp"

using namespace wsys;
using namespace fx;

TEST_CASE("generators are deterministic per seed") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(testkit::gen_wsystem(corpus(seed)) == testkit::gen_wsystem(corpus(seed)));
    CHECK(testkit::gen_oprogram(corpus(seed)) == testkit::gen_oprogram(corpus(seed)));
    CHECK(testkit::gen_pw(corpus(seed)) == testkit::gen_pw(corpus(seed)));
  }
  bool differs = false;
  for (std::uint64_t seed = 1; seed < 20; ++seed)
    differs = differs || write_wsystem(testkit::gen_wsystem(corpus(seed))) != write_wsystem(testkit::gen_wsystem(corpus(0)));
  CHECK(differs);
}

TEST_CASE("empty vocabulary") {
  testkit::GenConfig cfg;
  cfg.max_atoms = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    cfg.seed = seed;
    const WSystem w = testkit::gen_wsystem(cfg);
    CHECK(w.vocabulary().size() == 0);
    CHECK(enumerate_models(w).size() <= 1);
    CHECK(testkit::gen_oprogram(cfg).constraints().empty());
    CHECK(testkit::gen_pw(cfg).vocabulary().size() == 0);
  }
}

TEST_CASE("corpus covers the configured ranges") {
  bool multi_level = false, negative = false, zero = false, compl_seen = false;
  std::set<Logic> logics_seen;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const WSystem w = testkit::gen_wsystem(corpus(seed));
    CHECK(w.vocabulary().size() <= 8);
    CHECK(w.soft().size() <= 6);
    multi_level = multi_level || levels(w).size() > 1;
    for (const auto& b : w.soft()) {
      CHECK(b.weight >= -5);
      CHECK(b.weight <= 5);
      CHECK(b.level >= 1);
      CHECK(b.level <= 4);
      negative = negative || b.weight < 0;
      zero = zero || b.weight == 0;
      logics_seen.insert(b.theory.logic());
      compl_seen = compl_seen || b.theory.logic() == Logic::complement;
    }
    for (const auto& t : w.hard().modules) logics_seen.insert(t.logic());
  }
  CHECK(multi_level);
  CHECK(negative);
  CHECK(zero);
  CHECK(compl_seen);
  CHECK(logics_seen.size() >= 5);
}

TEST_CASE("tight generation") {
  testkit::GenConfig cfg = corpus(0);
  cfg.tight = true;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    cfg.seed = seed;
    const OProgram p = testkit::gen_oprogram(cfg);
    for (const auto& r : p.program().rules()) {
      if (!r.head) continue;
      const auto h = *p.vocabulary().index_of(*r.head);
      for (const auto& b : r.positive_body) CHECK(*p.vocabulary().index_of(b) < h);
    }
  }
}

TEST_CASE("gen_pw weights are positive") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const PwProblem p = testkit::gen_pw(corpus(seed));
    for (const auto& s : p.soft()) CHECK(s.weight >= 1);
  }
}

TEST_CASE("oracle on the sample systems") {
  CHECK(models(testkit::oracle_optimal(partmsat(), Sense::max)) == sets({{"a"}}));
  CHECK(models(testkit::oracle_optimal(partmsat(), Sense::min)) == sets({{"b"}}));
  CHECK(models(testkit::oracle_optimal(maxpl(), Sense::max)) == sets({{"b"}}));
  CHECK(models(testkit::oracle_optimal(w1(), Sense::max)) == sets({{"b"}}));
  CHECK(models(testkit::oracle_answer_sets(pi1())) == sets({{"a"}, {"b"}}));
  CHECK(models(testkit::oracle_optimal_answer_sets(sampleop())) == sets({{"a"}}));
  const Program loop({Rule{"a", {"b"}, {}}, Rule{"b", {"a"}, {}}}, ab());
  CHECK(models(testkit::oracle_answer_sets(loop)) == sets({{}}));
}

TEST_CASE("oracle_satisfies agrees with the library") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const WSystem w = testkit::gen_wsystem(small_corpus(seed));
    const Vocabulary& v = w.vocabulary();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << v.size()); ++m) {
      const auto i = Interpretation::from_mask(v, m);
      for (const auto& b : w.soft()) {
        CHECK(testkit::oracle_satisfies(i.bits(), v, b.theory) ==
              satisfies(project(i, b.theory.vocabulary()), b.theory));
      }
    }
  }
}
