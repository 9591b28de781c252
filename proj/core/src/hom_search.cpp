#include "vhc/hom_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace vhc {

HomEnumerator::HomEnumerator(WordPresentation presentation, std::size_t degree)
    : presentation_(std::move(presentation)), degree_(degree), table_(all_permutations(degree)) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  for (const Permutation& p : table_) inverse_.push_back(p.inverse().images());
  check_at_depth_.resize(presentation_.generators);
  for (std::size_t r = 0; r < presentation_.relators.size(); ++r) {
    std::size_t top = 0;
    for (Letter l : presentation_.relators[r]) {
      const auto g = static_cast<std::size_t>(l > 0 ? l : -l);
      if (g == 0 || g > presentation_.generators) throw std::invalid_argument("relator letter out of range");
      top = std::max(top, g);
    }
    if (top > 0) check_at_depth_[top - 1].push_back(r);
  }
}

bool HomEnumerator::relators_hold(std::size_t depth, std::span<const std::uint32_t> assigned) const {
  for (std::size_t r : check_at_depth_[depth]) {
    const Word& w = presentation_.relators[r];
    for (std::uint32_t p = 0; p < degree_; ++p) {
      std::uint32_t q = p;
      for (Letter l : w) {
        const std::uint32_t idx = assigned[static_cast<std::size_t>(l > 0 ? l : -l) - 1];
        q = l > 0 ? table_[idx](q) : inverse_[idx][q];
      }
      if (q != p) return false;
    }
  }
  return true;
}

HomEnumerator::Result HomEnumerator::run(std::size_t partition, const Visitor& visit, HomStats& stats,
                                         std::uint64_t node_limit) const {
  const std::size_t n = presentation_.generators;
  if (n == 0) {
    // the trivial group: one homomorphism, provided every relator is empty
    ++stats.nodes;
    ++stats.homs;
    return visit({}) ? Result::Stopped : Result::Completed;
  }
  if (partition >= table_.size()) throw std::out_of_range("partition out of range");

  std::vector<std::uint32_t> assigned(n, 0);
  // iterative depth-first search; next[k] is the next image index to try at depth k
  std::vector<std::size_t> next(n, 0);
  std::size_t depth = 0;
  next[0] = partition;
  const std::size_t first_end = partition + 1;
  while (true) {
    const std::size_t end = depth == 0 ? first_end : table_.size();
    if (next[depth] >= end) {
      if (depth == 0) return Result::Completed;
      --depth;
      continue;
    }
    if (stats.nodes >= node_limit) return Result::Truncated;
    ++stats.nodes;
    assigned[depth] = static_cast<std::uint32_t>(next[depth]++);
    if (!relators_hold(depth, assigned)) continue;
    if (depth + 1 == n) {
      ++stats.homs;
      if (visit(assigned)) return Result::Stopped;
      continue;
    }
    ++depth;
    next[depth] = 0;
  }
}

HomEnumerator::Result HomEnumerator::run_all(const Visitor& visit, HomStats& stats, std::uint64_t node_limit) const {
  for (std::size_t k = 0; k < partitions(); ++k) {
    const Result r = run(k, visit, stats, node_limit);
    if (r != Result::Completed) return r;
  }
  return Result::Completed;
}

std::vector<Permutation> HomEnumerator::images(std::span<const std::uint32_t> index) const {
  std::vector<Permutation> out;
  out.reserve(index.size());
  for (std::uint32_t i : index) out.push_back(table_[i]);
  return out;
}

}  // namespace vhc
