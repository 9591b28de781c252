#include "vhc/quotient_search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <stdexcept>

#include "parallel.hpp"
#include "vhc/hom_search.hpp"

namespace vhc {

namespace {

struct PartitionStats {
  HomStats homs;
  std::uint64_t realized = 0;
};

// Returns true when the homomorphism is a witness; may bump `realized`.
using Predicate =
    std::function<bool(const HomEnumerator&, std::span<const std::uint32_t>, std::uint64_t& realized)>;

void add(SearchStats& stats, const PartitionStats& p) {
  stats.nodes += p.homs.nodes;
  stats.homs_tried += p.homs.homs;
  stats.covers_realized += p.realized;
}

// First witness in backtracking order at one degree. The winner is the
// earliest partition holding a witness, and the reported work is what a
// serial search would have done to reach it.
std::optional<std::vector<std::uint32_t>> search_degree(const HomEnumerator& en, const Predicate& pred,
                                                        const SearchBudget& budget, SearchStats& stats) {
  const std::size_t n = en.partitions();
  if (budget.max_nodes) {
    PartitionStats p;
    p.homs.nodes = stats.nodes;
    std::optional<std::vector<std::uint32_t>> hit;
    const auto result = en.run_all(
        [&](std::span<const std::uint32_t> idx) {
          if (!pred(en, idx, p.realized)) return false;
          hit.emplace(idx.begin(), idx.end());
          return true;
        },
        p.homs, *budget.max_nodes);
    p.homs.nodes -= stats.nodes;
    add(stats, p);
    if (result == HomEnumerator::Result::Truncated) stats.truncated = true;
    return hit;
  }

  std::vector<PartitionStats> part(n);
  std::vector<std::optional<std::vector<std::uint32_t>>> hits(n);
  std::atomic<std::size_t> best{n};
  detail::for_each_index(n, budget.workers, [&](std::size_t k) {
    if (best.load() < k) return;
    en.run(
        k,
        [&](std::span<const std::uint32_t> idx) {
          if (best.load() < k) return true;
          if (!pred(en, idx, part[k].realized)) return false;
          hits[k].emplace(idx.begin(), idx.end());
          std::size_t cur = best.load();
          while (k < cur && !best.compare_exchange_weak(cur, k)) {
          }
          return true;
        },
        part[k].homs);
  });
  const std::size_t winner = best.load();
  for (std::size_t k = 0; k < std::min(winner + 1, n); ++k) add(stats, part[k]);
  if (winner < n) return hits[winner];
  return std::nullopt;
}

SearchOutcome drive(const WordPresentation& p, const SearchBudget& budget, const Predicate& pred,
                    const std::function<void(SearchOutcome&, const HomEnumerator&, std::span<const std::uint32_t>)>& fill) {
  if (budget.max_degree == 0) throw std::invalid_argument("max degree must be at least 1");
  SearchOutcome out;
  out.budget = budget;
  for (std::size_t d = 1; d <= budget.max_degree; ++d) {
    out.stats.degree_reached = d;
    const HomEnumerator en(p, d);
    const auto hit = search_degree(en, pred, budget, out.stats);
    if (hit) {
      out.status = SearchStatus::Found;
      fill(out, en, *hit);
      return out;
    }
    if (out.stats.truncated) break;
  }
  return out;
}

void check_word(const WordPresentation& p, const Word& w) {
  for (Letter l : w) {
    const auto g = static_cast<std::size_t>(l > 0 ? l : -l);
    if (g == 0 || g > p.generators) throw std::invalid_argument("word uses a letter outside the generators");
  }
}

}  // namespace

SearchOutcome element_survives(const WordPresentation& p, const Word& w, const SearchBudget& budget) {
  check_word(p, w);
  return drive(
      p, budget,
      [&](const HomEnumerator& en, std::span<const std::uint32_t> idx, std::uint64_t&) {
        return !evaluate(w, en.images(idx), en.degree()).is_identity();
      },
      [&](SearchOutcome& out, const HomEnumerator& en, std::span<const std::uint32_t> idx) {
        QuotientWitness qw;
        qw.degree = en.degree();
        qw.images = en.images(idx);
        qw.word = w;
        qw.word_image = evaluate(w, qw.images, qw.degree);
        out.quotient = std::move(qw);
      });
}

SearchOutcome element_survives(const GroupPresentation& p, const Word& w, const SearchBudget& budget) {
  return element_survives(p.words(), w, budget);
}

SearchOutcome probe_profinite_triviality(const GroupPresentation& p, const SearchBudget& budget) {
  const WordPresentation wp = p.words();
  return drive(
      wp, budget,
      [](const HomEnumerator&, std::span<const std::uint32_t> idx, std::uint64_t&) {
        // index 0 is the identity in lexicographic order
        return std::any_of(idx.begin(), idx.end(), [](std::uint32_t i) { return i != 0; });
      },
      [](SearchOutcome& out, const HomEnumerator& en, std::span<const std::uint32_t> idx) {
        QuotientWitness qw;
        qw.degree = en.degree();
        qw.images = en.images(idx);
        const auto g = static_cast<std::size_t>(std::find_if(idx.begin(), idx.end(), [](std::uint32_t i) { return i != 0; }) -
                                                idx.begin());
        qw.word = {static_cast<Letter>(g + 1)};
        qw.word_image = qw.images[g];
        out.quotient = std::move(qw);
      });
}

SearchOutcome loop_survives(const SquareComplex& l, VertexId basepoint, const EdgePath& gamma,
                            const SearchBudget& budget) {
  if (!is_based_loop(l, gamma) || gamma.start != basepoint) {
    throw std::invalid_argument("gamma is not a loop at the basepoint");
  }
  const Pi1Presentation pi1 = pi1_presentation(l, basepoint);
  return element_survives(pi1.words, pi1.rewrite(gamma), budget);
}

namespace {

std::vector<std::uint32_t> clean_components(const Cover& c, const Hyperplane& y) {
  const TotalSpace t = total_space(c);
  std::vector<std::uint32_t> ids;
  for (const Hyperplane& w : preimage_hyperplane_components(c, t, y)) {
    if (is_clean(t.complex, w).clean) ids.push_back(w.id());
  }
  return ids;
}

std::size_t component_count(const Cover& c, const Hyperplane& y) {
  return preimage_hyperplane_components(c, total_space(c), y).size();
}

}  // namespace

SearchOutcome semi_decide_virtually_clean(const SquareComplex& x, const Hyperplane& y, const SearchBudget& budget,
                                          CleanMode mode) {
  if (y.dual_edges.empty() || hyperplane_of(x, y.dual_edges.front()) != y) {
    throw std::invalid_argument("not a hyperplane of the complex");
  }
  auto base = std::make_shared<const SquareComplex>(x);
  const Pi1Presentation pi1 = pi1_presentation(x, 0);

  auto checked_cover = [&](const Cover& c) { return mode == CleanMode::Each ? regular_closure(c) : c; };
  auto accepts = [&](const Cover& checked, const std::vector<std::uint32_t>& clean) {
    if (mode == CleanMode::Some) return !clean.empty();
    return clean.size() == component_count(checked, y);
  };
  return drive(
      pi1.words, budget,
      [&](const HomEnumerator& en, std::span<const std::uint32_t> idx, std::uint64_t& realized) {
        const std::vector<Permutation> images = en.images(idx);
        if (!is_transitive(images, en.degree())) return false;
        const Cover checked = checked_cover(cover_from_images(base, pi1, images, en.degree()));
        ++realized;
        return accepts(checked, clean_components(checked, y));
      },
      [&](SearchOutcome& out, const HomEnumerator& en, std::span<const std::uint32_t> idx) {
        CoverWitness cw;
        cw.cover = cover_from_images(base, pi1, en.images(idx), en.degree());
        cw.hyperplane = y.id();
        cw.mode = mode;
        cw.checked = checked_cover(cw.cover);
        cw.clean_components = clean_components(cw.checked, y);
        out.cover = std::move(cw);
      });
}

bool verify_quotient_witness(const WordPresentation& p, const QuotientWitness& w) {
  if (w.images.size() != p.generators) return false;
  for (const Permutation& g : w.images) {
    if (g.degree() != w.degree) return false;
  }
  if (!satisfies_relators(p, w.images, w.degree)) return false;
  const Permutation image = evaluate(w.word, w.images, w.degree);
  return image == w.word_image && !image.is_identity();
}

bool verify_cover_witness(const SquareComplex& x, const CoverWitness& w) {
  if (!w.cover.base || !(*w.cover.base == x)) return false;
  if (!validate_cover(w.cover) || !is_connected(w.cover)) return false;
  const auto ys = hyperplanes(x);
  const auto y = std::find_if(ys.begin(), ys.end(), [&](const Hyperplane& h) { return h.id() == w.hyperplane; });
  if (y == ys.end()) return false;
  const Cover checked = w.mode == CleanMode::Each ? regular_closure(w.cover) : w.cover;
  if (!(checked == w.checked)) return false;
  if (w.mode == CleanMode::Each && !is_normal(checked)) return false;
  const auto clean = clean_components(checked, *y);
  if (clean != w.clean_components) return false;
  return w.mode == CleanMode::Some ? !clean.empty() : clean.size() == component_count(checked, *y);
}

Cover witness_cover(std::shared_ptr<const SquareComplex> l, VertexId basepoint, const QuotientWitness& w) {
  const Pi1Presentation pi1 = pi1_presentation(*l, basepoint);
  return cover_from_images(std::move(l), pi1, w.images, w.degree);
}

CleanLift survival_to_clean_lift(const DoubledComplex& x, std::shared_ptr<const SquareComplex> x_complex,
                                 const QuotientWitness& w) {
  auto l = std::make_shared<const SquareComplex>(x.base.complex);
  const Cover r = witness_cover(l, x.base.basepoint, w);
  const Permutation gamma_image = word_permutation(r, x.gamma.word);
  const std::uint32_t dagger = gamma_image.least_moved_point();
  if (dagger == gamma_image.degree()) throw std::invalid_argument("witness does not move gamma");

  CleanLift out{pullback_cover(r, std::move(x_complex), x.rho), {}, {}, dagger, {}};
  out.space = total_space(out.cover);
  const VertexId target = out.space.vertex(x.basepoint(0), dagger);
  for (const Hyperplane& comp : preimage_hyperplane_components(out.cover, out.space, x.y)) {
    const TwoSidedness ts = is_two_sided(out.space.complex, comp);
    if (!ts.two_sided) continue;
    for (std::uint8_t side = 0; side < 2; ++side) {
      const PushingMap pm = pushing_map(out.space.complex, comp, *ts.co_orientation, side);
      if (std::find(pm.node_image.begin(), pm.node_image.end(), target) != pm.node_image.end()) {
        out.component = comp;
        out.report = is_clean(out.space.complex, comp);
        return out;
      }
    }
  }
  throw std::logic_error("no lift of Y meets the chosen basepoint");
}

std::optional<LoopLift> clean_lift_to_loop_lift(const DoubledComplex& x, const Cover& z, const Hyperplane& w) {
  const TotalSpace t = total_space(z);
  const TwoSidedness ts = is_two_sided(t.complex, w);
  if (!ts.two_sided) return std::nullopt;
  std::optional<std::uint32_t> dagger;
  for (std::uint8_t side = 0; side < 2 && !dagger; ++side) {
    const PushingMap pm = pushing_map(t.complex, w, *ts.co_orientation, side);
    for (std::uint32_t s = 0; s < z.degree; ++s) {
      if (std::find(pm.node_image.begin(), pm.node_image.end(), t.vertex(x.basepoint(0), s)) != pm.node_image.end()) {
        dagger = s;
        break;
      }
    }
  }
  if (!dagger) return std::nullopt;
  auto l = std::make_shared<const SquareComplex>(x.base.complex);
  const Cover restricted = pullback_cover(z, l, x.inclusion(0));
  LoopLift out;
  out.dagger = *dagger;
  out.lift = lift_path(restricted, x.gamma, *dagger);
  out.closed = out.lift.end_sheet == *dagger;
  return out;
}

}  // namespace vhc
