#include "wsys/vocabulary.hpp"

#include <algorithm>

#include "wsys/error.hpp"

namespace wsys {

Vocabulary::Vocabulary() : Vocabulary(std::vector<std::string>{}) {}

Vocabulary::Vocabulary(std::initializer_list<std::string> names)
    : Vocabulary(std::vector<std::string>(names)) {}

Vocabulary::Vocabulary(const std::vector<std::string>& names) {
  auto data = std::make_shared<Data>();
  for (const auto& n : names) {
    if (data->index.emplace(n, data->names.size()).second) data->names.push_back(n);
  }
  data_ = std::move(data);
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool Vocabulary::subset_of(const Vocabulary& other) const {
  if (data_ == other.data_) return true;
  return std::all_of(names().begin(), names().end(), [&](const auto& n) { return other.contains(n); });
}

bool Vocabulary::same_atoms(const Vocabulary& other) const {
  return size() == other.size() && subset_of(other);
}

Vocabulary Vocabulary::merged(const Vocabulary& other) const {
  if (other.subset_of(*this)) return *this;
  std::vector<std::string> all = names();
  all.insert(all.end(), other.names().begin(), other.names().end());
  return Vocabulary(all);
}

Vocabulary Vocabulary::with(const std::vector<std::string>& extra) const {
  return merged(Vocabulary(extra));
}

bool operator==(const Vocabulary& a, const Vocabulary& b) {
  return a.data_ == b.data_ || a.names() == b.names();
}

Interpretation::Interpretation(Vocabulary vocabulary)
    : vocabulary_(std::move(vocabulary)), bits_(vocabulary_.size(), false) {}

Interpretation::Interpretation(Vocabulary vocabulary, const std::vector<std::string>& members)
    : Interpretation(std::move(vocabulary)) {
  for (const auto& m : members) {
    auto idx = vocabulary_.index_of(m);
    if (!idx) throw VocabularyMismatch("atom '" + m + "' is not in the vocabulary");
    bits_[*idx] = true;
  }
}

Interpretation::Interpretation(Vocabulary vocabulary, std::vector<bool> bits)
    : vocabulary_(std::move(vocabulary)), bits_(std::move(bits)) {
  if (bits_.size() != vocabulary_.size()) throw PreconditionError("interpretation size differs from vocabulary");
}

Interpretation Interpretation::from_mask(const Vocabulary& vocabulary, std::uint64_t mask) {
  Interpretation i(vocabulary);
  const std::size_t n = vocabulary.size();
  for (std::size_t k = 0; k < n; ++k) i.bits_[k] = (mask >> (n - 1 - k)) & 1u;
  return i;
}

bool Interpretation::holds(std::string_view atom) const {
  auto idx = vocabulary_.index_of(atom);
  if (!idx) throw VocabularyMismatch("atom '" + std::string(atom) + "' is not in the interpretation's vocabulary");
  return bits_[*idx];
}

bool Interpretation::contains(std::string_view atom) const {
  auto idx = vocabulary_.index_of(atom);
  return idx && bits_[*idx];
}

std::vector<std::string> Interpretation::members() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k]) out.push_back(vocabulary_.name(k));
  return out;
}

std::size_t Interpretation::count() const { return std::count(bits_.begin(), bits_.end(), true); }

std::string Interpretation::str() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (!bits_[k]) continue;
    if (!first) out += ",";
    out += vocabulary_.name(k);
    first = false;
  }
  return out + "}";
}

bool operator==(const Interpretation& a, const Interpretation& b) {
  if (a.vocabulary_ == b.vocabulary_) return a.bits_ == b.bits_;
  auto ma = a.members();
  auto mb = b.members();
  std::sort(ma.begin(), ma.end());
  std::sort(mb.begin(), mb.end());
  return ma == mb;
}

bool canonical_less(const Interpretation& a, const Interpretation& b) { return a.bits() < b.bits(); }

Interpretation project(const Interpretation& i, const Vocabulary& sigma) {
  Interpretation out(sigma);
  for (std::size_t k = 0; k < sigma.size(); ++k) out.set(k, i.contains(sigma.name(k)));
  return out;
}

}  // namespace wsys
