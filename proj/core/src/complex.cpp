#include "vhc/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "union_find.hpp"

namespace vhc {

char label_char(Label l) { return l == Label::V ? 'V' : 'H'; }

OrientedEdge OrientedEdge::from_signed_id(std::int64_t id) {
  if (id == 0) return {kInvalidEdge, true};
  const std::int64_t mag = id > 0 ? id : -id;
  if (mag - 1 >= std::int64_t{kInvalidEdge}) return {kInvalidEdge, id > 0};
  return {static_cast<EdgeId>(mag - 1), id > 0};
}

EdgeWord reversed_word(std::span<const OrientedEdge> w) {
  EdgeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->reversed());
  return out;
}

std::int64_t euler_characteristic(const SquareComplex& x) {
  return std::int64_t{x.vertex_count} - static_cast<std::int64_t>(x.edges.size()) +
         static_cast<std::int64_t>(x.squares.size());
}

UnionOffsets append_disjoint(SquareComplex& whole, const SquareComplex& part) {
  UnionOffsets off{whole.vertex_count, static_cast<EdgeId>(whole.edges.size()),
                   static_cast<SquareId>(whole.squares.size())};
  whole.vertex_count += part.vertex_count;
  for (const Edge& e : part.edges) whole.add_edge(e.tail + off.vertex, e.head + off.vertex, e.label);
  for (const EdgeWord& w : part.squares) {
    EdgeWord shifted = w;
    for (OrientedEdge& s : shifted) s.edge += off.edge;
    whole.add_square(std::move(shifted));
  }
  return off;
}

std::string violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::BadEdgeEndpoint: return "edge-endpoint";
    case ViolationKind::BadEdgeReference: return "edge-reference";
    case ViolationKind::BoundaryLength: return "boundary-length";
    case ViolationKind::NotClosed: return "not-closed";
    case ViolationKind::VhAlternation: return "vh-alternation";
  }
  return "unknown";
}

ValidationReport validate(const SquareComplex& x) {
  ValidationReport report;
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    const Edge& edge = x.edges[e];
    if (edge.tail >= x.vertex_count || edge.head >= x.vertex_count) {
      std::ostringstream os;
      os << "endpoint out of range (tail " << edge.tail << ", head " << edge.head << ", "
         << x.vertex_count << " vertices)";
      report.violations.push_back({ViolationKind::BadEdgeEndpoint, e, os.str()});
    }
  }
  const bool endpoints_ok = report.ok();

  for (SquareId s = 0; s < x.squares.size(); ++s) {
    const EdgeWord& w = x.squares[s];
    const bool refs_ok = std::all_of(w.begin(), w.end(), [&](OrientedEdge o) { return o.edge < x.edges.size(); });
    if (!refs_ok) {
      report.violations.push_back({ViolationKind::BadEdgeReference, s, "boundary refers to a missing edge"});
      continue;
    }
    if (w.size() != 4) {
      report.violations.push_back(
          {ViolationKind::BoundaryLength, s, "boundary has length " + std::to_string(w.size()) + ", expected 4"});
    }
    if (!endpoints_ok || w.empty()) continue;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const OrientedEdge next = w[(i + 1) % w.size()];
      if (x.finish(w[i]) != x.start(next)) {
        report.violations.push_back({ViolationKind::NotClosed, s,
                                     "step " + std::to_string(i + 1) + " ends at vertex " +
                                         std::to_string(x.finish(w[i])) + " but step " +
                                         std::to_string((i + 1) % w.size() + 1) + " starts at vertex " +
                                         std::to_string(x.start(next))});
        break;
      }
    }
  }
  return report;
}

std::vector<Violation> vh_violations(const SquareComplex& x) {
  if (!validate(x).ok()) throw std::invalid_argument("complex is structurally invalid");
  std::vector<Violation> out;
  for (SquareId s = 0; s < x.squares.size(); ++s) {
    const EdgeWord& w = x.squares[s];
    for (std::size_t i = 0; i < 4; ++i) {
      const Label a = x.edges[w[i].edge].label;
      const Label b = x.edges[w[(i + 1) % 4].edge].label;
      if (a == b) {
        std::string labels;
        for (OrientedEdge o : w) labels.push_back(label_char(x.edges[o.edge].label));
        out.push_back({ViolationKind::VhAlternation, s, "boundary labels " + labels + " do not alternate"});
        break;
      }
    }
  }
  return out;
}

bool check_vh(const SquareComplex& x) { return vh_violations(x).empty(); }

Corner square_corner(const SquareComplex& x, SquareId s, std::uint8_t i) {
  const EdgeWord& w = x.squares[s];
  const OrientedEdge in = w[i];
  const OrientedEdge out = w[(i + 1) % 4];
  // arriving along `in` we reach its head (forward) or tail (reversed);
  // leaving along `out` we start from its tail (forward) or head (reversed)
  const EdgeEnd a{in.edge, in.forward ? End::Head : End::Tail};
  const EdgeEnd b{out.edge, out.forward ? End::Tail : End::Head};
  return {a, b, s, i};
}

VertexLink vertex_link(const SquareComplex& x, VertexId v) {
  if (v >= x.vertex_count) throw std::out_of_range("unknown vertex " + std::to_string(v));
  if (!validate(x).ok()) throw std::invalid_argument("complex is structurally invalid");
  VertexLink link{v, {}, {}};
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    if (x.edges[e].tail == v) link.nodes.push_back({e, End::Tail});
    if (x.edges[e].head == v) link.nodes.push_back({e, End::Head});
  }
  for (SquareId s = 0; s < x.squares.size(); ++s) {
    for (std::uint8_t i = 0; i < 4; ++i) {
      if (x.finish(x.squares[s][i]) == v) link.corners.push_back(square_corner(x, s, i));
    }
  }
  return link;
}

bool check_npc(const SquareComplex& x) {
  if (!check_vh(x)) throw std::invalid_argument("complex is not VH");
  // corners grouped by vertex, as normalized node pairs
  std::vector<std::vector<std::pair<EdgeEnd, EdgeEnd>>> by_vertex(x.vertex_count);
  for (SquareId s = 0; s < x.squares.size(); ++s) {
    for (std::uint8_t i = 0; i < 4; ++i) {
      Corner c = square_corner(x, s, i);
      if (c.a == c.b) return false;
      if (c.b < c.a) std::swap(c.a, c.b);
      by_vertex[x.finish(x.squares[s][i])].emplace_back(c.a, c.b);
    }
  }
  for (auto& corners : by_vertex) {
    std::sort(corners.begin(), corners.end());
    if (std::adjacent_find(corners.begin(), corners.end()) != corners.end()) return false;
    std::map<EdgeEnd, std::set<EdgeEnd>> adj;
    for (const auto& [a, b] : corners) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
    for (const auto& [a, b] : corners) {
      const auto& na = adj[a];
      const auto& nb = adj[b];
      for (const EdgeEnd& c : na) {
        if (nb.contains(c)) return false;
      }
    }
  }
  return true;
}

std::optional<VertexId> path_end(const SquareComplex& x, const EdgePath& p) {
  if (p.start >= x.vertex_count) return std::nullopt;
  VertexId at = p.start;
  for (OrientedEdge o : p.word) {
    if (o.edge >= x.edges.size()) return std::nullopt;
    if (x.start(o) != at) return std::nullopt;
    at = x.finish(o);
  }
  return at;
}

bool is_valid_path(const SquareComplex& x, const EdgePath& p) { return path_end(x, p).has_value(); }

bool is_based_loop(const SquareComplex& x, const EdgePath& p) {
  const auto end = path_end(x, p);
  return end && *end == p.start;
}

EdgePath concatenate(const SquareComplex& x, const EdgePath& p, const EdgePath& q) {
  const auto end = path_end(x, p);
  if (!end) throw std::invalid_argument("first path is not a valid edge path");
  if (!is_valid_path(x, q)) throw std::invalid_argument("second path is not a valid edge path");
  if (*end != q.start) {
    throw std::invalid_argument("endpoint mismatch: first path ends at " + std::to_string(*end) +
                                ", second starts at " + std::to_string(q.start));
  }
  EdgePath out = p;
  out.word.insert(out.word.end(), q.word.begin(), q.word.end());
  return out;
}

EdgePath reversed_path(const SquareComplex& x, const EdgePath& p) {
  const auto end = path_end(x, p);
  if (!end) throw std::invalid_argument("not a valid edge path");
  return {*end, reversed_word(p.word)};
}

std::vector<VertexId> path_vertices(const SquareComplex& x, const EdgePath& p) {
  std::vector<VertexId> out{p.start};
  for (OrientedEdge o : p.word) out.push_back(x.finish(o));
  return out;
}

EdgeWord free_reduce(EdgeWord w, bool cyclic) {
  EdgeWord out;
  out.reserve(w.size());
  for (OrientedEdge o : w) {
    if (!out.empty() && out.back() == o.reversed()) {
      out.pop_back();
    } else {
      out.push_back(o);
    }
  }
  if (cyclic) {
    std::size_t lo = 0;
    std::size_t hi = out.size();
    while (hi - lo >= 2 && out[lo] == out[hi - 1].reversed()) {
      ++lo;
      --hi;
    }
    out = EdgeWord(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return out;
}

std::vector<std::uint32_t> components(const SquareComplex& x, const std::optional<std::vector<bool>>& edge_mask) {
  detail::UnionFind uf(x.vertex_count);
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    if (edge_mask && !(*edge_mask)[e]) continue;
    uf.unite(x.edges[e].tail, x.edges[e].head);
  }
  std::vector<std::uint32_t> out(x.vertex_count);
  std::map<std::size_t, std::uint32_t> ids;
  for (VertexId v = 0; v < x.vertex_count; ++v) {
    auto [it, inserted] = ids.try_emplace(uf.find(v), static_cast<std::uint32_t>(ids.size()));
    out[v] = it->second;
  }
  return out;
}

}  // namespace vhc
