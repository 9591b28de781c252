#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vhc/permutation.hpp"

namespace vhc {

/// Letters are 1-based generator indices; a negative letter is an inverse.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

Word reduce_word(Word w, bool cyclic = false);
Word inverse_word(const Word& w);

/// Generators-and-relators data without names; the common currency of the
/// homomorphism searches.
struct WordPresentation {
  std::size_t generators = 0;
  std::vector<Word> relators;

  friend bool operator==(const WordPresentation&, const WordPresentation&) = default;
};

/// Image of w under generator images (letters applied left to right).
Permutation evaluate(const Word& w, std::span<const Permutation> images, std::size_t degree);

bool satisfies_relators(const WordPresentation& p, std::span<const Permutation> images, std::size_t degree);

/// A finite presentation with single-letter lowercase generator names.
/// Relators are cyclically reduced on construction.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  /// Throws std::invalid_argument on bad names, unknown letters, or a
  /// relator that reduces to the empty word.
  GroupPresentation(std::vector<std::string> generators, const std::vector<std::string>& relators);
  GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return words_.relators; }
  const WordPresentation& words() const { return words_; }

  /// "abAB" -> {1, 2, -1, -2}.
  Word parse_word(const std::string& text) const;
  std::string format_word(const Word& w) const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  std::vector<std::string> generators_;
  WordPresentation words_;
};

}  // namespace vhc
