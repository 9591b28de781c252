#include "vhc/cellular_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "union_find.hpp"

namespace vhc {

namespace {

bool is_rotation(const EdgeWord& a, const EdgeWord& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = a[(i + r) % a.size()] == b[i];
    if (same) return true;
  }
  return false;
}

std::map<EdgeId, long> one_chain(const EdgeWord& w) {
  std::map<EdgeId, long> c;
  for (OrientedEdge o : w) c[o.edge] += o.forward ? 1 : -1;
  std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  return c;
}

}  // namespace

CellularMap identity_map(const SquareComplex& x) {
  CellularMap f;
  f.vertex_map.resize(x.vertex_count);
  std::iota(f.vertex_map.begin(), f.vertex_map.end(), VertexId{0});
  for (EdgeId e = 0; e < x.edges.size(); ++e) f.edge_map.push_back({OrientedEdge{e, true}});
  for (SquareId s = 0; s < x.squares.size(); ++s) f.square_map.push_back(SquareImage::square(s));
  return f;
}

EdgePath map_path(const CellularMap& f, const EdgePath& p) {
  EdgePath out{f.vertex_map.at(p.start), {}};
  for (OrientedEdge o : p.word) {
    const EdgeWord& img = f.edge_map.at(o.edge);
    if (o.forward) {
      out.word.insert(out.word.end(), img.begin(), img.end());
    } else {
      const EdgeWord r = reversed_word(img);
      out.word.insert(out.word.end(), r.begin(), r.end());
    }
  }
  return out;
}

std::vector<std::string> check_cellular_map(const SquareComplex& source, const SquareComplex& target,
                                            const CellularMap& f) {
  std::vector<std::string> problems;
  if (f.vertex_map.size() != source.vertex_count) problems.push_back("vertex map has wrong size");
  if (f.edge_map.size() != source.edges.size()) problems.push_back("edge map has wrong size");
  if (f.square_map.size() != source.squares.size()) problems.push_back("square map has wrong size");
  if (!problems.empty()) return problems;

  for (VertexId v = 0; v < source.vertex_count; ++v) {
    if (f.vertex_map[v] >= target.vertex_count) problems.push_back("vertex " + std::to_string(v) + " maps out of range");
  }
  if (!problems.empty()) return problems;

  for (std::size_t d = 0; d < f.discs.size(); ++d) {
    if (!is_based_loop(target, f.discs[d])) problems.push_back("disc " + std::to_string(d) + " is not a closed path");
  }
  for (EdgeId e = 0; e < source.edges.size(); ++e) {
    const EdgePath img{f.vertex_map[source.edges[e].tail], f.edge_map[e]};
    const auto end = path_end(target, img);
    if (!end || *end != f.vertex_map[source.edges[e].head]) {
      problems.push_back("edge " + std::to_string(e + 1) + " image does not join the images of its endpoints");
    }
  }
  if (!problems.empty()) return problems;

  for (SquareId s = 0; s < source.squares.size(); ++s) {
    const EdgeWord& bd = source.squares[s];
    const EdgeWord img = map_path(f, {source.start(bd.front()), bd}).word;
    const SquareImage& si = f.square_map[s];
    bool ok = false;
    switch (si.kind) {
      case SquareImage::Kind::Square:
        ok = si.index < target.squares.size() && is_rotation(img, target.squares[si.index]);
        break;
      case SquareImage::Kind::Collapse:
        ok = free_reduce(img, true).empty();
        break;
      case SquareImage::Kind::Disc: {
        if (si.index >= f.discs.size()) break;
        const EdgeWord red = free_reduce(img, true);
        const EdgeWord disc = free_reduce(f.discs[si.index].word, true);
        ok = red.empty() || is_rotation(red, disc) || is_rotation(red, reversed_word(disc));
        break;
      }
      case SquareImage::Kind::Region: {
        EdgeWord all;
        bool in_range = true;
        for (SquareId t : si.region) {
          if (t >= target.squares.size()) {
            in_range = false;
            break;
          }
          all.insert(all.end(), target.squares[t].begin(), target.squares[t].end());
        }
        ok = in_range && one_chain(all) == one_chain(img);
        break;
      }
    }
    if (!ok) problems.push_back("square " + std::to_string(s + 1) + " boundary does not match its image");
  }
  return problems;
}

namespace {

struct GridBuilder {
  const SquareComplex& x;
  const std::vector<std::uint32_t>& factor;
  Subdivision& sub;
  // interior vertices of each original edge, tail to head (excluding endpoints)
  std::vector<std::vector<VertexId>> inner;

  VertexId chain_vertex(EdgeId e, std::uint32_t t) const {
    if (t == 0) return x.edges[e].tail;
    if (t == factor[e]) return x.edges[e].head;
    return inner[e][t - 1];
  }
  // point at distance t along the traversal of step o
  VertexId step_point(OrientedEdge o, std::uint32_t t) const {
    return o.forward ? chain_vertex(o.edge, t) : chain_vertex(o.edge, factor[o.edge] - t);
  }
  // piece number t along the traversal of step o, oriented along the traversal
  OrientedEdge step_piece(OrientedEdge o, std::uint32_t t) const {
    const auto& ch = sub.chain[o.edge];
    return o.forward ? OrientedEdge{ch[t], true} : OrientedEdge{ch[factor[o.edge] - 1 - t], false};
  }
};

}  // namespace

Subdivision subdivide_edges(const SquareComplex& x, const std::vector<std::uint32_t>& requested) {
  if (requested.size() != x.edges.size()) throw std::invalid_argument("one factor per edge is required");
  if (std::any_of(requested.begin(), requested.end(), [](std::uint32_t k) { return k == 0; })) {
    throw std::invalid_argument("subdivision factor must be positive");
  }
  if (!check_vh(x)) throw std::invalid_argument("complex is not VH");

  // effective factor: lcm over each class of opposite sides
  detail::UnionFind uf(x.edges.size());
  for (const EdgeWord& w : x.squares) {
    uf.unite(w[0].edge, w[2].edge);
    uf.unite(w[1].edge, w[3].edge);
  }
  std::map<std::size_t, std::uint32_t> class_lcm;
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    auto [it, inserted] = class_lcm.try_emplace(uf.find(e), 1u);
    it->second = std::lcm(it->second, requested[e]);
  }

  Subdivision sub;
  sub.factor.resize(x.edges.size());
  for (EdgeId e = 0; e < x.edges.size(); ++e) sub.factor[e] = class_lcm[uf.find(e)];

  SquareComplex& y = sub.complex;
  y.vertex_count = x.vertex_count;
  GridBuilder g{x, sub.factor, sub, std::vector<std::vector<VertexId>>(x.edges.size())};
  sub.chain.resize(x.edges.size());
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    for (std::uint32_t t = 1; t < sub.factor[e]; ++t) g.inner[e].push_back(y.add_vertex());
  }
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    for (std::uint32_t t = 0; t < sub.factor[e]; ++t) {
      sub.chain[e].push_back(y.add_edge(g.chain_vertex(e, t), g.chain_vertex(e, t + 1), x.edges[e].label));
    }
  }

  CellularMap& f = sub.map;
  f.vertex_map.resize(x.vertex_count);
  std::iota(f.vertex_map.begin(), f.vertex_map.end(), VertexId{0});
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    EdgeWord w;
    for (EdgeId piece : sub.chain[e]) w.push_back({piece, true});
    f.edge_map.push_back(std::move(w));
  }

  for (const EdgeWord& w : x.squares) {
    // grid coordinates: i along step 0 (0..ka), j along step 1 (0..kb)
    const std::uint32_t ka = sub.factor[w[0].edge];
    const std::uint32_t kb = sub.factor[w[1].edge];
    const Label la = x.edges[w[0].edge].label;
    const Label lb = x.edges[w[1].edge].label;

    std::vector<VertexId> interior;  // (i,j) for 0<i<ka, 0<j<kb
    for (std::uint32_t j = 1; j < kb; ++j)
      for (std::uint32_t i = 1; i < ka; ++i) interior.push_back(y.add_vertex());
    auto point = [&](std::uint32_t i, std::uint32_t j) -> VertexId {
      if (j == 0) return g.step_point(w[0], i);
      if (i == ka) return g.step_point(w[1], j);
      if (j == kb) return g.step_point(w[2], ka - i);
      if (i == 0) return g.step_point(w[3], kb - j);
      return interior[(j - 1) * (ka - 1) + (i - 1)];
    };

    // interior edges: rows (i,j)->(i+1,j) for 0<j<kb; columns (i,j)->(i,j+1) for 0<i<ka
    std::vector<EdgeId> rows;
    for (std::uint32_t j = 1; j < kb; ++j)
      for (std::uint32_t i = 0; i < ka; ++i) rows.push_back(y.add_edge(point(i, j), point(i + 1, j), la));
    std::vector<EdgeId> cols;
    for (std::uint32_t i = 1; i < ka; ++i)
      for (std::uint32_t j = 0; j < kb; ++j) cols.push_back(y.add_edge(point(i, j), point(i, j + 1), lb));

    auto row_edge = [&](std::uint32_t i, std::uint32_t j) -> OrientedEdge {  // (i,j)->(i+1,j)
      if (j == 0) return g.step_piece(w[0], i);
      if (j == kb) return g.step_piece(w[2], ka - 1 - i).reversed();
      return {rows[(j - 1) * ka + i], true};
    };
    auto col_edge = [&](std::uint32_t i, std::uint32_t j) -> OrientedEdge {  // (i,j)->(i,j+1)
      if (i == ka) return g.step_piece(w[1], j);
      if (i == 0) return g.step_piece(w[3], kb - 1 - j).reversed();
      return {cols[(i - 1) * kb + j], true};
    };

    std::vector<SquareId> region;
    for (std::uint32_t j = 0; j < kb; ++j) {
      for (std::uint32_t i = 0; i < ka; ++i) {
        region.push_back(y.add_square({row_edge(i, j), col_edge(i + 1, j), row_edge(i, j + 1).reversed(),
                                       col_edge(i, j).reversed()}));
      }
    }
    f.square_map.push_back(SquareImage::of_region(std::move(region)));
  }
  return sub;
}

EdgePath subdivide_path(const Subdivision& sub, const EdgePath& p) { return map_path(sub.map, p); }

}  // namespace vhc
