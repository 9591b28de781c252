#pragma once

// Backtracking enumeration of homomorphisms from a finitely presented group
// to the symmetric group S_d.
//
// Generators are assigned in index order, images in lexicographic order of
// their image lists. A relator is checked as soon as its largest generator is
// assigned. The search space splits into independent partitions by the image
// of the first generator, which is what the parallel drivers fan out over.

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "vhc/permutation.hpp"
#include "vhc/presentation.hpp"

namespace vhc {

struct HomStats {
  std::uint64_t nodes = 0;  // partial assignments tried
  std::uint64_t homs = 0;   // complete assignments satisfying all relators

  HomStats& operator+=(const HomStats& o) {
    nodes += o.nodes;
    homs += o.homs;
    return *this;
  }
  friend bool operator==(const HomStats&, const HomStats&) = default;
};

class HomEnumerator {
 public:
  enum class Result : std::uint8_t { Completed, Stopped, Truncated };

  /// Visitor gets the index (into table()) of each generator's image and
  /// returns true to stop.
  using Visitor = std::function<bool(std::span<const std::uint32_t>)>;

  HomEnumerator(WordPresentation presentation, std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& table() const { return table_; }
  std::size_t partitions() const { return presentation_.generators == 0 ? 1 : table_.size(); }

  /// Enumerates the homomorphisms in one partition, in order.
  Result run(std::size_t partition, const Visitor& visit, HomStats& stats,
             std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max()) const;

  /// All partitions in order.
  Result run_all(const Visitor& visit, HomStats& stats,
                 std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max()) const;

  std::vector<Permutation> images(std::span<const std::uint32_t> index) const;

 private:
  bool relators_hold(std::size_t depth, std::span<const std::uint32_t> assigned) const;

  WordPresentation presentation_;
  std::size_t degree_;
  std::vector<Permutation> table_;
  std::vector<std::vector<std::uint32_t>> inverse_;       // inverse image lists
  std::vector<std::vector<std::size_t>> check_at_depth_;  // relators completed at each generator
};

}  // namespace vhc
