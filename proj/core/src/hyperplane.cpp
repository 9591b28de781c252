#include "vhc/hyperplane.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "union_find.hpp"

namespace vhc {

std::optional<std::size_t> Hyperplane::node_of(EdgeId e) const {
  const auto it = std::lower_bound(dual_edges.begin(), dual_edges.end(), e);
  if (it == dual_edges.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - dual_edges.begin());
}

std::vector<Hyperplane> hyperplanes(const SquareComplex& x) {
  if (!validate(x).ok()) throw std::invalid_argument("complex is structurally invalid");
  detail::UnionFind uf(x.edges.size());
  for (const EdgeWord& w : x.squares) {
    uf.unite(w[0].edge, w[2].edge);
    uf.unite(w[1].edge, w[3].edge);
  }
  // classes keyed by representative, ordered by least edge
  std::map<std::size_t, std::size_t> index_of_root;
  std::vector<Hyperplane> out;
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    auto [it, inserted] = index_of_root.try_emplace(uf.find(e), out.size());
    if (inserted) {
      out.emplace_back();
      out.back().label = x.edges[e].label;
    }
    out[it->second].dual_edges.push_back(e);
  }
  for (SquareId s = 0; s < x.squares.size(); ++s) {
    for (std::uint8_t p = 0; p < 2; ++p) {
      out[index_of_root[uf.find(x.squares[s][p].edge)]].midcubes.push_back({s, p});
    }
  }
  return out;
}

Hyperplane hyperplane_of(const SquareComplex& x, EdgeId e) {
  for (Hyperplane& y : hyperplanes(x)) {
    if (y.node_of(e)) return std::move(y);
  }
  throw std::out_of_range("unknown edge " + std::to_string(e + 1));
}

std::pair<EdgeId, EdgeId> midcube_ends(const SquareComplex& x, const Midcube& m) {
  const EdgeWord& w = x.squares[m.square];
  return {w[m.pair].edge, w[m.pair + 2].edge};
}

CoOrientation CoOrientation::swapped() const {
  CoOrientation c = *this;
  for (auto& f : c.flip) f ^= 1u;
  return c;
}

namespace {

struct Arc {
  std::size_t to;
  std::uint8_t parity;
  std::size_t midcube;
};

// Relative flip forced by a midcube: the two dual sides of a square keep the
// same transverse orientation iff they are traversed in opposite directions.
std::uint8_t midcube_parity(const SquareComplex& x, const Midcube& m) {
  const EdgeWord& w = x.squares[m.square];
  return w[m.pair].forward == w[m.pair + 2].forward ? 1 : 0;
}

}  // namespace

TwoSidedness is_two_sided(const SquareComplex& x, const Hyperplane& y) {
  const std::size_t n = y.dual_edges.size();
  std::vector<std::vector<Arc>> adj(n);
  for (std::size_t k = 0; k < y.midcubes.size(); ++k) {
    const auto [e, f] = midcube_ends(x, y.midcubes[k]);
    const auto u = y.node_of(e);
    const auto v = y.node_of(f);
    if (!u || !v) throw std::invalid_argument("hyperplane does not belong to this complex");
    const std::uint8_t par = midcube_parity(x, y.midcubes[k]);
    adj[*u].push_back({*v, par, k});
    if (*u != *v) adj[*v].push_back({*u, par, k});
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::uint8_t> flip(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> parent(n, kNone), parent_arc(n, kNone), depth(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const Arc& a : adj[u]) {
        if (!seen[a.to]) {
          seen[a.to] = true;
          flip[a.to] = flip[u] ^ a.parity;
          parent[a.to] = u;
          parent_arc[a.to] = a.midcube;
          depth[a.to] = depth[u] + 1;
          queue.push_back(a.to);
        } else if ((flip[u] ^ flip[a.to]) != a.parity) {
          // odd cycle: tree paths to the common ancestor plus this arc
          std::vector<std::size_t> left, right;
          std::size_t p = u, q = a.to;
          while (depth[p] > depth[q]) left.push_back(parent_arc[p]), p = parent[p];
          while (depth[q] > depth[p]) right.push_back(parent_arc[q]), q = parent[q];
          while (p != q) {
            left.push_back(parent_arc[p]), p = parent[p];
            right.push_back(parent_arc[q]), q = parent[q];
          }
          TwoSidedness out;
          for (std::size_t k : left) out.odd_cycle.push_back(y.midcubes[k]);
          for (auto it = right.rbegin(); it != right.rend(); ++it) out.odd_cycle.push_back(y.midcubes[*it]);
          out.odd_cycle.push_back(y.midcubes[a.midcube]);
          return out;
        }
      }
    }
  }
  return {true, CoOrientation{std::move(flip)}, {}};
}

bool self_crossing(const SquareComplex& x, const Hyperplane& y) {
  (void)x;
  std::set<SquareId> seen;
  for (const Midcube& m : y.midcubes) {
    if (!seen.insert(m.square).second) return true;
  }
  return false;
}

PushingMap pushing_map(const SquareComplex& x, const Hyperplane& y, const CoOrientation& co, std::uint8_t side) {
  if (side > 1) throw std::invalid_argument("side must be 0 or 1");
  if (co.flip.size() != y.dual_edges.size()) throw std::invalid_argument("co-orientation does not fit hyperplane");
  PushingMap pm;
  pm.side = side;
  for (std::size_t i = 0; i < y.dual_edges.size(); ++i) {
    const Edge& e = x.edges[y.dual_edges[i]];
    pm.node_image.push_back(co.flip[i] == side ? e.tail : e.head);
  }
  for (const Midcube& m : y.midcubes) {
    const EdgeWord& w = x.squares[m.square];
    const OrientedEdge dual = w[m.pair];
    const std::size_t i = *y.node_of(dual.edge);
    // the parallel side touching the tail of the dual edge
    const std::size_t tail_side = dual.forward ? (m.pair + 3) % 4 : (m.pair + 1) % 4;
    const std::size_t head_side = (tail_side + 2) % 4;
    pm.arc_image.push_back(w[co.flip[i] == side ? tail_side : head_side].edge);
  }
  return pm;
}

PushingMap pushing_map(const SquareComplex& x, const Hyperplane& y, std::uint8_t side) {
  const TwoSidedness ts = is_two_sided(x, y);
  if (!ts.two_sided) throw std::invalid_argument("hyperplane is one-sided");
  return pushing_map(x, y, *ts.co_orientation, side);
}

CleanlinessReport is_clean(const SquareComplex& x, const Hyperplane& y) {
  CleanlinessReport r;
  r.hyperplane = y.id();
  r.self_crossing = self_crossing(x, y);
  const TwoSidedness ts = is_two_sided(x, y);
  r.two_sided = ts.two_sided;
  if (r.two_sided) {
    for (std::uint8_t side = 0; side < 2; ++side) {
      const PushingMap pm = pushing_map(x, y, *ts.co_orientation, side);
      for (std::size_t i = 0; i < pm.node_image.size(); ++i) {
        for (std::size_t j = i + 1; j < pm.node_image.size(); ++j) {
          if (pm.node_image[i] != pm.node_image[j]) continue;
          OsculationWitness w;
          w.side = side;
          w.kind = OsculationWitness::Kind::Vertex;
          w.edge_a = y.dual_edges[i];
          w.edge_b = y.dual_edges[j];
          w.image = pm.node_image[i];
          r.osculation_witnesses.push_back(w);
        }
      }
      for (std::size_t i = 0; i < pm.arc_image.size(); ++i) {
        for (std::size_t j = i + 1; j < pm.arc_image.size(); ++j) {
          if (pm.arc_image[i] != pm.arc_image[j]) continue;
          OsculationWitness w;
          w.side = side;
          w.kind = OsculationWitness::Kind::Edge;
          w.midcube_a = y.midcubes[i];
          w.midcube_b = y.midcubes[j];
          w.image = pm.arc_image[i];
          r.osculation_witnesses.push_back(w);
        }
      }
    }
  }
  r.clean = r.two_sided && !r.self_crossing && r.osculation_witnesses.empty();
  return r;
}

bool inter_osculates(const SquareComplex& x, const Hyperplane& y1, const Hyperplane& y2) {
  if (y1 == y2) throw std::invalid_argument("inter-osculation needs two distinct hyperplanes");
  std::set<SquareId> in1;
  for (const Midcube& m : y1.midcubes) in1.insert(m.square);
  const bool cross = std::any_of(y2.midcubes.begin(), y2.midcubes.end(),
                                 [&](const Midcube& m) { return in1.contains(m.square); });
  if (!cross) return false;

  std::set<std::pair<EdgeEnd, EdgeEnd>> corners;
  for (SquareId s = 0; s < x.squares.size(); ++s) {
    for (std::uint8_t i = 0; i < 4; ++i) {
      const Corner c = square_corner(x, s, i);
      corners.emplace(c.a, c.b);
      corners.emplace(c.b, c.a);
    }
  }
  auto vertex_at = [&](EdgeEnd ee) { return ee.end == End::Tail ? x.edges[ee.edge].tail : x.edges[ee.edge].head; };
  for (EdgeId e1 : y1.dual_edges) {
    for (EdgeId e2 : y2.dual_edges) {
      for (End end1 : {End::Tail, End::Head}) {
        for (End end2 : {End::Tail, End::Head}) {
          const EdgeEnd a{e1, end1};
          const EdgeEnd b{e2, end2};
          if (vertex_at(a) == vertex_at(b) && !corners.contains({a, b})) return true;
        }
      }
    }
  }
  return false;
}

bool is_complex_clean(const SquareComplex& x) {
  if (!check_vh(x)) throw std::invalid_argument("complex is not VH");
  for (const Hyperplane& y : hyperplanes(x)) {
    if (!is_clean(x, y).clean) return false;
  }
  return true;
}

bool is_special(const SquareComplex& x) {
  if (!is_complex_clean(x)) return false;
  const auto ys = hyperplanes(x);
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      if (inter_osculates(x, ys[i], ys[j])) return false;
    }
  }
  return true;
}

}  // namespace vhc
