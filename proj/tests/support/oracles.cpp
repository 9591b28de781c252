#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace vhc::testing {

namespace {

std::size_t pick(std::mt19937& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

VertexId start_of(const SquareComplex& x, OrientedEdge o) { return o.forward ? x.edges[o.edge].tail : x.edges[o.edge].head; }
VertexId end_of(const SquareComplex& x, OrientedEdge o) { return o.forward ? x.edges[o.edge].head : x.edges[o.edge].tail; }

std::vector<OrientedEdge> steps_from(const SquareComplex& x, VertexId v, Label l) {
  std::vector<OrientedEdge> out;
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    if (x.edges[e].label != l) continue;
    if (x.edges[e].tail == v) out.push_back({e, true});
    if (x.edges[e].head == v) out.push_back({e, false});
  }
  return out;
}

OrientedEdge random_step(std::mt19937& rng, SquareComplex& x, VertexId v, Label l) {
  auto steps = steps_from(x, v, l);
  if (steps.empty() || pick(rng, 4) == 0) {
    const auto w = static_cast<VertexId>(pick(rng, x.vertex_count));
    return {x.add_edge(v, w, l), true};
  }
  return steps[pick(rng, steps.size())];
}

}  // namespace

SquareComplex random_vh_complex(std::mt19937& rng, std::size_t max_squares) {
  SquareComplex x;
  const std::size_t n = 1 + pick(rng, 4);
  for (std::size_t i = 0; i < n; ++i) x.add_vertex();
  const std::size_t edges = 1 + pick(rng, 4);
  for (std::size_t i = 0; i < edges; ++i) {
    x.add_edge(static_cast<VertexId>(pick(rng, n)), static_cast<VertexId>(pick(rng, n)), pick(rng, 2) ? Label::V : Label::H);
  }
  const std::size_t squares = pick(rng, max_squares + 1);
  for (std::size_t k = 0; k < squares; ++k) {
    const Label first = pick(rng, 2) ? Label::V : Label::H;
    const Label second = first == Label::V ? Label::H : Label::V;
    const auto u = static_cast<VertexId>(pick(rng, n));
    const OrientedEdge s0 = random_step(rng, x, u, first);
    const OrientedEdge s1 = random_step(rng, x, end_of(x, s0), second);
    const OrientedEdge s2 = random_step(rng, x, end_of(x, s1), first);
    const VertexId z = end_of(x, s2);
    std::vector<OrientedEdge> closing;
    for (OrientedEdge s : steps_from(x, z, second)) {
      if (end_of(x, s) == u) closing.push_back(s);
    }
    const OrientedEdge s3 =
        closing.empty() || pick(rng, 4) == 0 ? OrientedEdge{x.add_edge(z, u, second), true} : closing[pick(rng, closing.size())];
    x.add_square({s0, s1, s2, s3});
  }
  return x;
}

std::vector<OracleHyperplane> oracle_hyperplanes(const SquareComplex& x) {
  std::vector<EdgeId> cls(x.edges.size());
  for (EdgeId e = 0; e < cls.size(); ++e) cls[e] = e;
  for (bool changed = true; changed;) {
    changed = false;
    for (const EdgeWord& s : x.squares) {
      for (int p = 0; p < 2; ++p) {
        const EdgeId a = cls[s[p].edge], b = cls[s[p + 2].edge];
        if (a == b) continue;
        const EdgeId keep = std::min(a, b), drop = std::max(a, b);
        for (EdgeId& c : cls) {
          if (c == drop) c = keep;
        }
        changed = true;
      }
    }
  }

  std::vector<OracleHyperplane> out;
  for (EdgeId root = 0; root < cls.size(); ++root) {
    if (cls[root] != root) continue;
    OracleHyperplane h;
    for (EdgeId e = 0; e < cls.size(); ++e) {
      if (cls[e] == root) h.edges.push_back(e);
    }
    std::map<EdgeId, std::size_t> index;
    for (std::size_t i = 0; i < h.edges.size(); ++i) index[h.edges[i]] = i;

    struct Mid {
      SquareId square;
      int pair;
    };
    std::vector<Mid> mids;
    bool crossing = false;
    for (SquareId s = 0; s < x.squares.size(); ++s) {
      const bool p0 = index.contains(x.squares[s][0].edge);
      const bool p1 = index.contains(x.squares[s][1].edge);
      if (p0) mids.push_back({s, 0});
      if (p1) mids.push_back({s, 1});
      crossing = crossing || (p0 && p1);
    }

    std::optional<bool> verdict;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.edges.size()); ++mask) {
      // bit set: the head of the edge is on side 0
      auto side_of = [&](EdgeId e, bool head) -> int {
        const bool head_on_0 = (mask >> index[e]) & 1;
        return head == head_on_0 ? 0 : 1;
      };
      bool consistent = true;
      for (const Mid& m : mids) {
        const EdgeWord& q = x.squares[m.square];
        const OrientedEdge a = q[m.pair], b = q[m.pair + 2];
        // the corner shared with the side after b is the start of a and the end of b
        const int sa = side_of(a.edge, !a.forward);
        const int sb = side_of(b.edge, b.forward);
        consistent = consistent && sa == sb;
      }
      if (!consistent) continue;
      bool clean = !crossing;
      for (int side = 0; side < 2 && clean; ++side) {
        std::set<VertexId> verts;
        for (EdgeId e : h.edges) {
          const bool head = side_of(e, true) == side;
          if (!verts.insert(head ? x.edges[e].head : x.edges[e].tail).second) clean = false;
        }
        std::set<EdgeId> arcs;
        for (const Mid& m : mids) {
          const EdgeWord& q = x.squares[m.square];
          const OrientedEdge a = q[m.pair];
          const bool far_side = side_of(a.edge, !a.forward) == side;  // the side after the opposite edge
          const EdgeId arc = far_side ? q[(m.pair + 3) % 4].edge : q[m.pair + 1].edge;
          if (!arcs.insert(arc).second) clean = false;
        }
      }
      if (verdict && *verdict != clean) h.orientation_independent = false;
      if (!verdict) verdict = clean;
    }
    h.clean = verdict.value_or(false);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<Cover> brute_force_covers(std::shared_ptr<const SquareComplex> x, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t m = x->edges.size();
  std::vector<std::size_t> choice(m, 0);
  std::vector<Cover> out;
  while (true) {
    bool ok = true;
    for (const EdgeWord& s : x->squares) {
      for (std::uint32_t sheet = 0; sheet < degree && ok; ++sheet) {
        std::uint32_t q = sheet;
        for (OrientedEdge o : s) {
          const auto& img = perms[choice[o.edge]];
          if (o.forward) {
            q = img[q];
          } else {
            q = static_cast<std::uint32_t>(std::find(img.begin(), img.end(), q) - img.begin());
          }
        }
        ok = q == sheet;
      }
    }
    if (ok) {
      Cover c;
      c.base = x;
      c.degree = degree;
      for (std::size_t e = 0; e < m; ++e) c.perm.emplace_back(perms[choice[e]]);
      out.push_back(std::move(c));
    }
    std::size_t k = 0;
    while (k < m && ++choice[k] == perms.size()) choice[k++] = 0;
    if (k == m) break;
  }
  return out;
}

std::vector<EdgePath> loops_up_to(const SquareComplex& x, VertexId v, std::size_t max_length) {
  std::vector<EdgePath> out;
  std::vector<EdgePath> frontier{{v, {}}};
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::vector<EdgePath> next;
    for (const EdgePath& p : frontier) {
      const VertexId here = p.word.empty() ? p.start : end_of(x, p.word.back());
      if (here == v) out.push_back(p);
      if (len == max_length) continue;
      for (EdgeId e = 0; e < x.edges.size(); ++e) {
        for (bool f : {true, false}) {
          const OrientedEdge o{e, f};
          if (start_of(x, o) != here) continue;
          EdgePath q = p;
          q.word.push_back(o);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

GroupPresentation random_presentation(std::mt19937& rng, std::size_t max_generators, std::size_t max_relator_length) {
  const std::size_t n = 1 + pick(rng, max_generators);
  std::vector<std::string> names;
  for (std::size_t g = 0; g < n; ++g) names.push_back(std::string(1, static_cast<char>('a' + g)));
  std::vector<Word> relators;
  const std::size_t count = pick(rng, 3);
  while (relators.size() < count) {
    Word w;
    const std::size_t len = 1 + pick(rng, max_relator_length);
    for (std::size_t i = 0; i < len; ++i) {
      const auto g = static_cast<Letter>(1 + pick(rng, n));
      w.push_back(pick(rng, 2) ? g : -g);
    }
    if (!reduce_word(w, true).empty()) relators.push_back(w);
  }
  return GroupPresentation(names, relators);
}

}  // namespace vhc::testing
