#include "vhc/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vhc {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || hit[v]) throw std::invalid_argument("not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0u);
  return p;
}

Permutation Permutation::cycle(std::size_t degree, std::initializer_list<std::uint32_t> points) {
  Permutation p = identity(degree);
  const std::vector<std::uint32_t> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] >= degree) throw std::invalid_argument("cycle point out of range");
    p.images_[pts[i]] = pts[(i + 1) % pts.size()];
  }
  return Permutation(p.images_);
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = i;
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw std::invalid_argument("degree mismatch");
  Permutation p;
  p.images_.resize(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) p.images_[i] = next.images_[images_[i]];
  return p;
}

std::uint32_t Permutation::least_moved_point() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return static_cast<std::uint32_t>(images_.size());
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<Permutation> out;
  std::vector<std::uint32_t> v(degree);
  std::iota(v.begin(), v.end(), 0u);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> generated_group(std::span<const Permutation> gens, std::size_t degree) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    const Permutation g = queue.front();
    queue.pop_front();
    for (const Permutation& s : gens) {
      Permutation h = g.then(s);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::uint32_t> orbit(std::span<const Permutation> gens, std::size_t degree, std::uint32_t point) {
  std::vector<bool> seen(degree, false);
  seen[point] = true;
  std::deque<std::uint32_t> queue{point};
  while (!queue.empty()) {
    const std::uint32_t p = queue.front();
    queue.pop_front();
    for (const Permutation& s : gens) {
      for (std::uint32_t q : {s(p), s.inverse()(p)}) {
        if (!seen[q]) {
          seen[q] = true;
          queue.push_back(q);
        }
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < degree; ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

bool is_transitive(std::span<const Permutation> gens, std::size_t degree) {
  return degree == 0 || orbit(gens, degree, 0).size() == degree;
}

Permutation conjugate(const Permutation& p, const Permutation& sigma) {
  std::vector<std::uint32_t> out(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i) out[sigma(i)] = sigma(p(i));
  return Permutation(std::move(out));
}

}  // namespace vhc
