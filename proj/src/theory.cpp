#include "wsys/theory.hpp"

#include "wsys/error.hpp"

namespace wsys {

namespace {

void require_within(const std::vector<std::string>& atoms, const Vocabulary& v, const char* what) {
  for (const auto& a : atoms)
    if (!v.contains(a))
      throw VocabularyMismatch(std::string(what) + " atom '" + a + "' is not in the theory vocabulary");
}

std::vector<std::string> clause_atoms(const std::vector<Clause>& clauses) {
  std::vector<std::string> out;
  for (const auto& c : clauses) {
    auto atoms = c.atoms();
    out.insert(out.end(), atoms.begin(), atoms.end());
  }
  return out;
}

std::vector<std::string> formula_atoms(const std::vector<Formula>& formulas) {
  std::vector<std::string> out;
  for (const auto& f : formulas) {
    auto atoms = f.atoms();
    out.insert(out.end(), atoms.begin(), atoms.end());
  }
  return out;
}

constexpr std::size_t kMaxEquivalenceAtoms = 30;

}  // namespace

const char* logic_name(Logic logic) {
  switch (logic) {
    case Logic::sat: return "sat";
    case Logic::pl: return "pl";
    case Logic::lp: return "lp";
    case Logic::wc: return "wc";
    case Logic::sigma: return "sigma";
    case Logic::complement: return "complement";
  }
  return "?";
}

bool operator==(const ComplementOf& a, const ComplementOf& b) {
  if (a.inner == b.inner) return true;
  if (!a.inner || !b.inner) return false;
  return *a.inner == *b.inner;
}

Theory::Theory(Logic logic, Payload payload, Vocabulary vocabulary)
    : logic_(logic), payload_(std::move(payload)), vocabulary_(std::move(vocabulary)) {}

Theory Theory::sat(std::vector<Clause> clauses, Vocabulary vocabulary) {
  require_within(clause_atoms(clauses), vocabulary, "clause");
  return Theory(Logic::sat, std::move(clauses), std::move(vocabulary));
}

Theory Theory::sat(std::vector<Clause> clauses) {
  Vocabulary v(clause_atoms(clauses));
  return Theory(Logic::sat, std::move(clauses), std::move(v));
}

Theory Theory::pl(std::vector<Formula> formulas, Vocabulary vocabulary) {
  require_within(formula_atoms(formulas), vocabulary, "formula");
  return Theory(Logic::pl, std::move(formulas), std::move(vocabulary));
}

Theory Theory::pl(std::vector<Formula> formulas) {
  Vocabulary v(formula_atoms(formulas));
  return Theory(Logic::pl, std::move(formulas), std::move(v));
}

Theory Theory::lp(Program program) {
  Vocabulary v = program.vocabulary();
  return Theory(Logic::lp, std::move(program), std::move(v));
}

Theory Theory::wc(WcBody body, Vocabulary vocabulary) {
  require_within(body.atoms(), vocabulary, "weak constraint");
  return Theory(Logic::wc, std::move(body), std::move(vocabulary));
}

Theory Theory::wc(WcBody body) {
  Vocabulary v(body.atoms());
  return Theory(Logic::wc, std::move(body), std::move(v));
}

Theory Theory::sigma(Vocabulary vocabulary) { return Theory(Logic::sigma, SigmaMarker{}, std::move(vocabulary)); }

Theory Theory::complement_of(Theory inner) {
  Vocabulary v = inner.vocabulary();
  return Theory(Logic::complement, ComplementOf{std::make_shared<const Theory>(std::move(inner))}, std::move(v));
}

std::string Theory::str() const {
  std::string s = logic_name(logic_);
  switch (logic_) {
    case Logic::sat: {
      s += "{";
      for (std::size_t k = 0; k < clauses().size(); ++k) s += (k ? ". " : "") + to_formula(clauses()[k]).str();
      return s + "}";
    }
    case Logic::pl: {
      s += "{";
      for (std::size_t k = 0; k < formulas().size(); ++k) s += (k ? ". " : "") + formulas()[k].str();
      return s + "}";
    }
    case Logic::lp: {
      s += "{";
      for (std::size_t k = 0; k < program().rules().size(); ++k) s += (k ? " " : "") + program().rules()[k].str();
      return s + "}";
    }
    case Logic::wc: {
      s += "(";
      auto lits = wc_body().literals();
      for (std::size_t k = 0; k < lits.size(); ++k) s += (k ? " & " : "") + lits[k].str();
      return s + ")";
    }
    case Logic::sigma: {
      s += "{";
      for (std::size_t k = 0; k < vocabulary_.size(); ++k) s += (k ? " " : "") + vocabulary_.name(k);
      return s + "}";
    }
    case Logic::complement: return "compl " + inner().str();
  }
  return s;
}

bool satisfies(const Interpretation& i, const Theory& t) {
  if (!t.vocabulary().subset_of(i.vocabulary()))
    throw VocabularyMismatch("theory vocabulary is not contained in the interpretation's vocabulary");
  switch (t.logic()) {
    case Logic::sat:
      for (const auto& c : t.clauses())
        if (!eval_clause(i, c)) return false;
      return true;
    case Logic::pl:
      for (const auto& f : t.formulas())
        if (!eval_formula(i, f)) return false;
      return true;
    case Logic::lp: return is_answer_set(t.program(), project(i, t.program().vocabulary()));
    case Logic::wc: return eval_wc_body(i, t.wc_body());
    case Logic::sigma: return true;
    case Logic::complement: return !satisfies(i, t.inner());
  }
  return false;
}

Theory sigma_theory(const Vocabulary& sigma) { return Theory::sigma(sigma); }

Theory complement(const Theory& t) {
  const Vocabulary& v = t.vocabulary();
  switch (t.logic()) {
    case Logic::sat: {
      const auto& cs = t.clauses();
      if (cs.empty()) return Theory::sat({Clause()}, v);
      if (cs.size() == 1) {
        if (cs[0].empty()) return Theory::sigma(v);
        std::vector<Literal> lits;
        for (const auto& l : cs[0].literals()) lits.push_back(l.negated());
        return Theory::wc(WcBody(lits), v);
      }
      std::vector<Formula> fs;
      for (const auto& c : cs) fs.push_back(to_formula(c));
      return Theory::pl({Formula::neg(Formula::conj(std::move(fs)))}, v);
    }
    case Logic::pl: {
      const auto& fs = t.formulas();
      if (fs.size() == 1) {
        if (fs[0].kind() == Formula::Kind::negation) return Theory::pl({fs[0].children()[0]}, v);
        return Theory::pl({Formula::neg(fs[0])}, v);
      }
      return Theory::pl({Formula::neg(Formula::conj(fs))}, v);
    }
    case Logic::wc: {
      std::vector<Literal> lits;
      for (const auto& l : t.wc_body().literals()) lits.push_back(l.negated());
      return Theory::sat({Clause(lits)}, v);
    }
    case Logic::sigma: return Theory::sat({Clause()}, v);
    case Logic::lp: return Theory::complement_of(t);
    case Logic::complement: return t.inner();
  }
  return t;
}

bool equivalent(const Theory& a, const Theory& b) {
  if (!a.vocabulary().same_atoms(b.vocabulary()))
    throw VocabularyMismatch("equivalence check needs theories over the same vocabulary");
  const Vocabulary& v = a.vocabulary();
  if (v.size() > kMaxEquivalenceAtoms) throw CapExceeded("equivalence check over too many atoms");
  const std::uint64_t n = std::uint64_t{1} << v.size();
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    auto i = Interpretation::from_mask(v, mask);
    if (satisfies(i, a) != satisfies(i, b)) return false;
  }
  return true;
}

std::vector<Interpretation> theory_models(const Theory& t) {
  const Vocabulary& v = t.vocabulary();
  if (v.size() > kMaxEquivalenceAtoms) throw CapExceeded("model enumeration over too many atoms");
  std::vector<Interpretation> out;
  const std::uint64_t n = std::uint64_t{1} << v.size();
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    auto i = Interpretation::from_mask(v, mask);
    if (satisfies(i, t)) out.push_back(std::move(i));
  }
  return out;
}

}  // namespace wsys
