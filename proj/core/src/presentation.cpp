#include "vhc/presentation.hpp"

#include <cctype>
#include <stdexcept>

namespace vhc {

Word reduce_word(Word w, bool cyclic) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  if (cyclic) {
    std::size_t lo = 0;
    std::size_t hi = out.size();
    while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
      ++lo;
      --hi;
    }
    out = Word(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l = -l;
  return out;
}

Permutation evaluate(const Word& w, std::span<const Permutation> images, std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::uint32_t p = 0; p < degree; ++p) {
    std::uint32_t q = p;
    for (Letter l : w) {
      const Permutation& g = images[static_cast<std::size_t>(l > 0 ? l : -l) - 1];
      if (l > 0) {
        q = g(q);
      } else {
        // inverse image by search keeps this allocation free
        std::uint32_t r = 0;
        while (g(r) != q) ++r;
        q = r;
      }
    }
    img[p] = q;
  }
  return Permutation(std::move(img));
}

bool satisfies_relators(const WordPresentation& p, std::span<const Permutation> images, std::size_t degree) {
  if (images.size() != p.generators) return false;
  for (const Word& r : p.relators) {
    if (!evaluate(r, images, degree).is_identity()) return false;
  }
  return true;
}

namespace {

void check_names(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string& n = names[i];
    if (n.size() != 1 || !std::islower(static_cast<unsigned char>(n[0]))) {
      throw std::invalid_argument("generator names must be single lowercase letters: '" + n + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names[j] == n) throw std::invalid_argument("duplicate generator '" + n + "'");
    }
  }
}

}  // namespace

GroupPresentation::GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  check_names(generators_);
  words_.generators = generators_.size();
  for (Word& r : relators) {
    for (Letter l : r) {
      if (l == 0 || static_cast<std::size_t>(l > 0 ? l : -l) > generators_.size()) {
        throw std::invalid_argument("relator letter out of range");
      }
    }
    Word red = reduce_word(std::move(r), true);
    if (red.empty()) throw std::invalid_argument("relator reduces to the empty word");
    words_.relators.push_back(std::move(red));
  }
}

GroupPresentation::GroupPresentation(std::vector<std::string> generators, const std::vector<std::string>& relators)
    : generators_(std::move(generators)) {
  check_names(generators_);
  std::vector<Word> words;
  for (const std::string& r : relators) words.push_back(parse_word(r));
  *this = GroupPresentation(generators_, std::move(words));
}

Word GroupPresentation::parse_word(const std::string& text) const {
  Word w;
  for (char c : text) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    Letter found = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i][0] == lower) found = static_cast<Letter>(i + 1);
    }
    if (found == 0) throw std::invalid_argument(std::string("unknown generator letter '") + c + "'");
    w.push_back(std::isupper(static_cast<unsigned char>(c)) ? -found : found);
  }
  return w;
}

std::string GroupPresentation::format_word(const Word& w) const {
  std::string out;
  for (Letter l : w) {
    const char c = generators_.at(static_cast<std::size_t>(l > 0 ? l : -l) - 1)[0];
    out.push_back(l > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace vhc
