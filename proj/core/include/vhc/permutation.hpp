#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace vhc {

/// A permutation of {0, ..., d-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of 0..d-1.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Cycle on the listed points, identity elsewhere.
  static Permutation cycle(std::size_t degree, std::initializer_list<std::uint32_t> points);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Apply *this first, then `next`: result(i) = next(this(i)).
  Permutation then(const Permutation& next) const;
  /// Least point moved, or degree() when the identity.
  std::uint32_t least_moved_point() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// All permutations of degree d in lexicographic order of image lists
/// (identity first).
std::vector<Permutation> all_permutations(std::size_t degree);

/// Elements of the group generated by `gens`, sorted. Identity included.
std::vector<Permutation> generated_group(std::span<const Permutation> gens, std::size_t degree);

/// Orbit of `point` under the generators, sorted.
std::vector<std::uint32_t> orbit(std::span<const Permutation> gens, std::size_t degree, std::uint32_t point);

bool is_transitive(std::span<const Permutation> gens, std::size_t degree);

/// sigma * p * sigma^-1 in the relabelling sense: i -> sigma(p(sigma^-1(i))).
Permutation conjugate(const Permutation& p, const Permutation& sigma);

}  // namespace vhc
