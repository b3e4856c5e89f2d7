#pragma once

#include "qfuse/index_set.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qfuse {

/// A word over the index set R: the label of a simple comodule.
/// Letters are kept canonical ([0, 2d) for ModEven) at construction.
class Word {
public:
  explicit Word(IndexSet index_set) : index_set_(index_set) {}

  Word(IndexSet index_set, std::vector<std::int64_t> letters)
      : index_set_(index_set), letters_(std::move(letters))
  {
    for (auto &l : letters_) {
      l = index_set_.canonical(l);
      if (!index_set_.contains(l))
        throw std::invalid_argument("Word: letter out of range for index set");
    }
  }

  Word(IndexSet index_set, std::initializer_list<std::int64_t> letters)
      : Word(index_set, std::vector<std::int64_t>(letters))
  {
  }

  const IndexSet &index_set() const { return index_set_; }
  const std::vector<std::int64_t> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::int64_t letter(std::size_t k) const { return letters_[k]; }

  bool operator==(const Word &other) const { return letters_ == other.letters_; }

  /// Canonical order: by length, then lexicographic on letters.
  bool operator<(const Word &other) const
  {
    if (letters_.size() != other.letters_.size())
      return letters_.size() < other.letters_.size();
    return letters_ < other.letters_;
  }

  std::string to_string() const
  {
    std::string s = "(";
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(letters_[k]);
    }
    return s + ")";
  }

private:
  IndexSet index_set_;
  std::vector<std::int64_t> letters_;
};

/// Concatenation, the monoid product on A_R.
Word concat(const Word &a, const Word &b);

/// The anti-endomorphism *: reverse and shift every letter by +1.
Word star(const Word &w);

/// t ~ u: star(t) = u or star(u) = t.
bool linked(const Word &t, const Word &u);

/// Every adjacent pair of letters differs by ±1 in R.
bool is_one_step(const Word &w);

/// w restricted to positions [begin, end).
Word subword(const Word &w, std::size_t begin, std::size_t end);

} // namespace qfuse
