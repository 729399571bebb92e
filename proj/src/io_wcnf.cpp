#include <algorithm>
#include <map>
#include <set>

#include "wsys/io.hpp"

namespace wsys {

namespace {

constexpr std::uint64_t kMaxVars = 1u << 20;

struct Word {
  std::string_view text;
  SourceSpan span;
};

[[noreturn]] void fail(const SourceSpan& at, const std::string& message) { throw ParseError(at, message); }

// Whitespace separated words of one line, with positions.
std::vector<Word> split(std::string_view line, SourceSpan at) {
  std::vector<Word> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
    if (k > start) {
      SourceSpan s = at;
      s.column += start;
      s.offset += start;
      out.push_back({line.substr(start, k - start), s});
    }
  }
  return out;
}

std::optional<std::uint64_t> parse_count(std::string_view s) {
  if (s.empty() || s.size() > 18) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace

PwProblem parse_wcnf(std::string_view text) {
  struct Header {
    std::uint64_t nvars = 0;
    std::uint64_t nclauses = 0;
    std::optional<Weight> top;
  };
  std::optional<Header> header;
  std::map<std::uint64_t, std::pair<std::string, SourceSpan>> names;
  Sense sense = Sense::max;

  std::vector<Clause> hard;
  std::vector<SoftClause> soft;
  std::uint64_t seen_clauses = 0;
  // Clause under construction; words may continue over several lines.
  std::optional<Weight> weight;
  SourceSpan clause_start;
  std::vector<std::pair<std::uint64_t, bool>> lits;

  SourceSpan at;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    at.offset = start;
    at.column = 1;
    const std::vector<Word> words = split(line, at);

    if (!words.empty() && words[0].text.front() == 'c' && (words[0].text == "c" || !weight)) {
      if (words[0].text != "c") {
        if (!header) fail(words[0].span, "expected a comment or the 'p wcnf' header");
        fail(words[0].span, "unexpected " + std::string(words[0].text));
      }
      if (words.size() >= 2 && words[1].text == "map") {
        if (words.size() != 4) fail(words[1].span, "expected 'c map <var> <atom>'");
        auto var = parse_count(words[2].text);
        if (!var || *var == 0) fail(words[2].span, "invalid variable in map comment");
        if (!valid_name(words[3].text)) fail(words[3].span, "invalid atom name in map comment");
        if (!names.emplace(*var, std::pair{std::string(words[3].text), words[3].span}).second)
          fail(words[2].span, "variable " + std::string(words[2].text) + " mapped twice");
      } else if (words.size() >= 2 && words[1].text == "sense") {
        if (words.size() != 3 || (words[2].text != "max" && words[2].text != "min"))
          fail(words[1].span, "expected 'c sense max' or 'c sense min'");
        sense = words[2].text == "max" ? Sense::max : Sense::min;
      }
    } else if (!words.empty() && words[0].text == "p") {
      if (header) fail(words[0].span, "duplicate header");
      if (words.size() < 2 || words[1].text != "wcnf")
        fail(words.size() < 2 ? words[0].span : words[1].span, "expected 'p wcnf <nvars> <nclauses> [<top>]'");
      if (words.size() < 4 || words.size() > 5) fail(words[0].span, "malformed header");
      Header h;
      auto nv = parse_count(words[2].text);
      auto nc = parse_count(words[3].text);
      if (!nv) fail(words[2].span, "malformed variable count");
      if (!nc) fail(words[3].span, "malformed clause count");
      if (*nv > kMaxVars) fail(words[2].span, "too many variables");
      h.nvars = *nv;
      h.nclauses = *nc;
      if (words.size() == 5) {
        h.top = parse_weight(words[4].text);
        if (!h.top || *h.top <= 0) fail(words[4].span, "malformed top weight");
      }
      header = h;
    } else if (!words.empty()) {
      if (words[0].text.front() == 'h' && !weight)
        fail(words[0].span, "new-format WCNF ('h' hard clauses) is not supported; use classic 'p wcnf' with top");
      if (!header) fail(words[0].span, "clause before the 'p wcnf' header");
      for (const auto& w : words) {
        if (!weight) {
          auto v = parse_weight(w.text);
          if (!v) fail(w.span, "malformed weight '" + std::string(w.text) + "'");
          if (*v <= 0) fail(w.span, "weight must be positive");
          if (header->top && *v > *header->top) fail(w.span, "weight exceeds top");
          weight = *v;
          clause_start = w.span;
          lits.clear();
          continue;
        }
        const bool negative = w.text.front() == '-';
        auto var = parse_count(negative ? w.text.substr(1) : w.text);
        if (!var || (negative && *var == 0)) fail(w.span, "malformed literal '" + std::string(w.text) + "'");
        if (*var == 0) {
          if (seen_clauses == header->nclauses) fail(clause_start, "more clauses than declared in the header");
          ++seen_clauses;
          std::vector<Literal> clause_lits;
          for (const auto& [v, positive] : lits) clause_lits.push_back({std::to_string(v), positive});
          Clause c(clause_lits);
          if (header->top && *weight == *header->top) {
            hard.push_back(std::move(c));
          } else {
            soft.push_back({std::move(c), *weight});
          }
          weight.reset();
          continue;
        }
        if (*var > header->nvars) fail(w.span, "literal out of range");
        lits.emplace_back(*var, !negative);
      }
    }
    ++at.line;
    start = end + 1;
  }
  at.column = 1;
  at.offset = text.size();
  if (!header) fail(at, "missing 'p wcnf' header");
  if (weight) fail(clause_start, "clause is missing its terminating 0");
  if (seen_clauses != header->nclauses)
    fail(at, "header declares " + std::to_string(header->nclauses) + " clauses, found " +
                 std::to_string(seen_clauses));

  std::vector<std::string> vocab(header->nvars);
  std::set<std::string> used;
  for (const auto& [var, entry] : names) {
    if (var > header->nvars) fail(entry.second, "map comment for variable out of range");
    vocab[var - 1] = entry.first;
  }
  for (std::uint64_t v = 1; v <= header->nvars; ++v) {
    auto& name = vocab[v - 1];
    if (name.empty()) name = "x" + std::to_string(v);
    if (!used.insert(name).second) fail(at, "atom name '" + name + "' is used by two variables");
  }
  // Clauses were built over variable numbers; rename to atoms.
  auto rename = [&](const Clause& c) {
    std::vector<Literal> out;
    for (const auto& l : c.literals()) out.push_back({vocab[std::stoull(l.atom) - 1], l.positive});
    return Clause(out);
  };
  for (auto& c : hard) c = rename(c);
  for (auto& s : soft) s.clause = rename(s.clause);
  return PwProblem(std::move(hard), std::move(soft), sense, Vocabulary(vocab));
}

std::string write_wcnf(const PwProblem& p) {
  const Vocabulary& v = p.vocabulary();
  Weight top = 1;
  for (const auto& s : p.soft()) top += s.weight;
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += "c map " + std::to_string(k + 1) + " " + v.name(k) + "\n";
  out += std::string("c sense ") + sense_name(p.sense()) + "\n";
  out += "p wcnf " + std::to_string(v.size()) + " " + std::to_string(p.hard().size() + p.soft().size()) + " " +
         to_string(top) + "\n";
  auto line = [&](const Weight& w, const Clause& c) {
    std::vector<std::pair<std::size_t, bool>> lits;
    for (const auto& l : c.literals()) lits.emplace_back(*v.index_of(l.atom) + 1, l.positive);
    std::sort(lits.begin(), lits.end());
    out += to_string(w);
    for (const auto& [var, positive] : lits) out += (positive ? " " : " -") + std::to_string(var);
    out += " 0\n";
  };
  for (const auto& c : p.hard()) line(top, c);
  for (const auto& s : p.soft()) line(s.weight, s.clause);
  return out;
}

}  // namespace wsys
