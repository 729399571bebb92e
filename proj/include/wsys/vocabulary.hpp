#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wsys {

// An ordered finite set of atom names. Copies share the underlying storage;
// the ordering is insertion order and is the canonical atom order.
class Vocabulary {
 public:
  Vocabulary();
  Vocabulary(std::initializer_list<std::string> names);
  explicit Vocabulary(const std::vector<std::string>& names);

  std::size_t size() const { return data_->names.size(); }
  bool empty() const { return size() == 0; }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(std::size_t index) const { return data_->names[index]; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  // Every atom of this vocabulary is in `other` (order ignored).
  bool subset_of(const Vocabulary& other) const;
  bool same_atoms(const Vocabulary& other) const;

  // This vocabulary followed by the atoms of `other` not already present.
  Vocabulary merged(const Vocabulary& other) const;
  Vocabulary with(const std::vector<std::string>& extra) const;

  // Ordered equality.
  friend bool operator==(const Vocabulary& a, const Vocabulary& b);

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

// A subset of a vocabulary, stored as one membership flag per atom.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(Vocabulary vocabulary);
  Interpretation(Vocabulary vocabulary, const std::vector<std::string>& members);
  Interpretation(Vocabulary vocabulary, std::initializer_list<const char*> members)
      : Interpretation(std::move(vocabulary), std::vector<std::string>(members.begin(), members.end())) {}
  Interpretation(Vocabulary vocabulary, std::vector<bool> bits);

  // Bit k of `mask` (counting from the most significant of size() bits)
  // gives membership of atom k, so ascending masks enumerate canonical order.
  static Interpretation from_mask(const Vocabulary& vocabulary, std::uint64_t mask);

  const Vocabulary& vocabulary() const { return vocabulary_; }
  const std::vector<bool>& bits() const { return bits_; }

  bool holds(std::size_t index) const { return bits_[index]; }
  // Throws VocabularyMismatch for atoms outside the vocabulary.
  bool holds(std::string_view atom) const;
  bool contains(std::string_view atom) const;  // false outside the vocabulary

  void set(std::size_t index, bool value) { bits_[index] = value; }

  std::vector<std::string> members() const;
  std::size_t count() const;

  // Rendered as {a,b} in vocabulary order.
  std::string str() const;

  // Set equality over member names.
  friend bool operator==(const Interpretation& a, const Interpretation& b);

 private:
  Vocabulary vocabulary_;
  std::vector<bool> bits_;
};

// Canonical order over a shared vocabulary: lexicographic by atom order,
// absent before present.
bool canonical_less(const Interpretation& a, const Interpretation& b);

// Drops the members not in sigma; the result lives over sigma.
Interpretation project(const Interpretation& i, const Vocabulary& sigma);

}  // namespace wsys
