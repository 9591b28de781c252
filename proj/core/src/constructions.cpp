#include "vhc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vhc {

PointedVhPair make_pointed_pair(SquareComplex l, VertexId basepoint) {
  if (!validate(l).ok()) throw std::invalid_argument("complex is structurally invalid");
  if (!check_vh(l)) throw std::invalid_argument("complex is not VH");
  if (basepoint >= l.vertex_count) throw std::invalid_argument("basepoint out of range");
  std::vector<bool> mask(l.edges.size());
  for (EdgeId e = 0; e < l.edges.size(); ++e) mask[e] = l.edges[e].label == Label::V;
  const auto comp = components(l, mask);
  PointedVhPair pair;
  for (EdgeId e = 0; e < l.edges.size(); ++e) {
    if (mask[e] && comp[l.edges[e].tail] == comp[basepoint]) pair.vertical.push_back(e);
  }
  pair.basepoint = basepoint;
  pair.complex = std::move(l);
  return pair;
}

PresentationComplex presentation_complex(const GroupPresentation& p) {
  if (p.generators().empty() && !p.relators().empty()) {
    throw std::invalid_argument("relators without generators");
  }
  PresentationComplex k;
  k.wedge.vertex_count = 1;
  for (std::size_t g = 0; g < p.generators().size(); ++g) k.wedge.add_edge(0, 0, Label::V);
  for (const Word& r : p.relators()) {
    EdgePath loop{0, {}};
    for (Letter l : r) loop.word.push_back({static_cast<EdgeId>((l > 0 ? l : -l) - 1), l > 0});
    k.relator_loops.push_back(std::move(loop));
  }
  return k;
}

bool is_simple_loop(const SquareComplex& x, const EdgePath& p) {
  if (!is_based_loop(x, p)) return false;
  std::set<EdgeId> edges;
  for (OrientedEdge o : p.word) {
    if (!edges.insert(o.edge).second) return false;
  }
  const auto verts = path_vertices(x, p);
  const std::set<VertexId> distinct(verts.begin(), verts.end() - 1);
  return distinct.size() + 1 == verts.size();
}

namespace {

void check_vertical_loop(const SquareComplex& x, const EdgePath& c, const char* what) {
  if (!is_valid_path(x, c)) throw std::invalid_argument(std::string(what) + " is not a valid edge path");
  for (OrientedEdge o : c.word) {
    if (x.edges[o.edge].label != Label::V) throw std::invalid_argument(std::string(what) + " is not vertical");
  }
  if (!is_simple_loop(x, c)) throw std::invalid_argument(std::string(what) + " is not a simple closed loop");
}

}  // namespace

JpBuild build_jp(const SquareComplex& j, const EdgePath& c, const GroupPresentation& p) {
  if (!validate(j).ok() || !check_vh(j)) throw std::invalid_argument("J is not a valid VH complex");
  check_vertical_loop(j, c, "c");
  if (c.word.empty()) throw std::invalid_argument("c is empty");
  for (const Word& r : p.relators()) {
    if (r.empty()) throw std::invalid_argument("relator of length 0");
  }

  const PresentationComplex k = presentation_complex(p);
  const auto len_c = static_cast<std::uint32_t>(c.word.size());

  JpBuild out;
  std::uint32_t s = 1;
  for (const Word& r : p.relators()) {
    const auto len_r = static_cast<std::uint32_t>(r.size());
    s = std::lcm(s, len_c / std::gcd(len_c, len_r));
  }
  out.v_factor = s;

  const Subdivision v_sub = subdivide_edges(k.wedge, std::vector<std::uint32_t>(k.wedge.edges.size(), s));
  SquareComplex jp = v_sub.complex;
  out.generator_chains = v_sub.chain;
  for (const EdgePath& r : k.relator_loops) out.relator_loops.push_back(subdivide_path(v_sub, r));

  // phi's target: V, then a cone vertex and spoke per relator
  out.k_target = v_sub.complex;
  std::vector<VertexId> cone;
  std::vector<EdgeId> spoke;
  for (std::size_t r = 0; r < out.relator_loops.size(); ++r) {
    cone.push_back(out.k_target.add_vertex());
    spoke.push_back(out.k_target.add_edge(0, cone.back(), Label::H));
  }
  CellularMap& phi = out.phi;
  phi = identity_map(v_sub.complex);
  phi.discs = out.relator_loops;

  std::set<EdgeId> c_edges;
  for (OrientedEdge o : c.word) c_edges.insert(o.edge);

  for (std::size_t r = 0; r < out.relator_loops.size(); ++r) {
    const EdgePath& rel = out.relator_loops[r];
    const auto len = static_cast<std::uint32_t>(rel.word.size());
    JpCopy copy;
    copy.factor = len / len_c;

    std::vector<std::uint32_t> factors(j.edges.size(), 1);
    for (EdgeId e : c_edges) factors[e] = copy.factor;
    const Subdivision j_sub = subdivide_edges(j, factors);
    EdgePath c_sub = subdivide_path(j_sub, c);
    if (c_sub.word.size() != len) throw std::logic_error("length matching failed");

    copy.offsets = append_disjoint(jp, j_sub.complex);
    c_sub.start += copy.offsets.vertex;
    for (OrientedEdge& o : c_sub.word) o.edge += copy.offsets.edge;
    copy.loop = c_sub;

    for (VertexId v = 0; v < j_sub.complex.vertex_count; ++v) phi.vertex_map.push_back(cone[r]);
    for (EdgeId e = 0; e < j_sub.complex.edges.size(); ++e) phi.edge_map.emplace_back();
    for (SquareId q = 0; q < j_sub.complex.squares.size(); ++q) phi.square_map.push_back(SquareImage::collapse());

    const auto rel_verts = path_vertices(jp, rel);
    const auto c_verts = path_vertices(jp, c_sub);
    EdgeWord back;  // reversed prefix of the relator loop, from vertex i back to *
    for (std::uint32_t i = 0; i < len; ++i) {
      copy.rungs.push_back(jp.add_edge(rel_verts[i], c_verts[i], Label::H));
      EdgeWord img = back;
      img.push_back({spoke[r], true});
      phi.edge_map.push_back(std::move(img));
      back.insert(back.begin(), rel.word[i].reversed());
    }
    for (std::uint32_t i = 0; i < len; ++i) {
      copy.cylinder.push_back(jp.add_square({rel.word[i], {copy.rungs[(i + 1) % len], true}, c_sub.word[i].reversed(),
                                             {copy.rungs[i], false}}));
      phi.square_map.push_back(SquareImage::disc(static_cast<std::uint32_t>(r)));
    }
    out.copies.push_back(std::move(copy));
  }

  out.npc = check_npc(jp);
  out.pair = make_pointed_pair(std::move(jp), 0);
  return out;
}

AttachedLoop attach_loop(const PointedVhPair& l) {
  AttachedLoop out{l, 0};
  out.alpha = out.pair.complex.add_edge(l.basepoint, l.basepoint, Label::V);
  out.pair.vertical.push_back(out.alpha);
  return out;
}

CellularMap DoubledComplex::inclusion(int k) const {
  const SquareComplex& l = base.complex;
  CellularMap f;
  for (VertexId v = 0; v < l.vertex_count; ++v) f.vertex_map.push_back(copy[k].vertex + v);
  for (EdgeId e = 0; e < l.edges.size(); ++e) f.edge_map.push_back({OrientedEdge{copy[k].edge + e, true}});
  for (SquareId s = 0; s < l.squares.size(); ++s) f.square_map.push_back(SquareImage::square(copy[k].square + s));
  return f;
}

DoubledComplex build_xn(const PointedVhPair& l, const EdgePath& gamma) {
  const SquareComplex& base = l.complex;
  if (!is_valid_path(base, gamma)) throw std::invalid_argument("gamma is not a valid edge path");
  if (gamma.start != l.basepoint) throw std::invalid_argument("gamma is not based at the basepoint");
  const std::set<EdgeId> vertical(l.vertical.begin(), l.vertical.end());
  for (OrientedEdge o : gamma.word) {
    if (!vertical.contains(o.edge)) throw std::invalid_argument("gamma is not in the vertical component");
  }
  if (!is_simple_loop(base, gamma)) throw std::invalid_argument("gamma is not simple");

  DoubledComplex d;
  d.base = l;
  d.gamma = gamma;
  d.extended = attach_loop(l);
  const SquareComplex& lp = d.extended.pair.complex;
  d.gamma_prime = gamma;
  d.gamma_prime.word.push_back({d.extended.alpha, true});

  SquareComplex& x = d.complex;
  d.copy[0] = append_disjoint(x, lp);
  d.copy[1] = append_disjoint(x, lp);

  const auto& gp = d.gamma_prime.word;
  const std::size_t len = gp.size();
  const auto verts = path_vertices(lp, d.gamma_prime);
  for (std::size_t i = 0; i < len; ++i) {
    d.rungs.push_back(x.add_edge(d.copy[0].vertex + verts[i], d.copy[1].vertex + verts[i], Label::H));
  }
  for (std::size_t i = 0; i < len; ++i) {
    const OrientedEdge side0{d.copy[0].edge + gp[i].edge, gp[i].forward};
    const OrientedEdge side1{d.copy[1].edge + gp[i].edge, gp[i].forward};
    d.annulus.push_back(x.add_square({side0, {d.rungs[(i + 1) % len], true}, side1.reversed(), {d.rungs[i], false}}));
  }
  d.y = hyperplane_of(x, d.rungs.front());

  // rho: both copies of L' fold onto L' (alpha -> reversed gamma), the
  // annulus is crushed onto gamma'
  auto fold = [&](EdgeId e) -> EdgeWord {
    if (e == d.extended.alpha) return reversed_word(gamma.word);
    return {OrientedEdge{e, true}};
  };
  for (int k = 0; k < 2; ++k) {
    for (VertexId v = 0; v < lp.vertex_count; ++v) d.rho.vertex_map.push_back(v);
    for (EdgeId e = 0; e < lp.edges.size(); ++e) d.rho.edge_map.push_back(fold(e));
    for (SquareId s = 0; s < lp.squares.size(); ++s) d.rho.square_map.push_back(SquareImage::square(s));
  }
  for (std::size_t i = 0; i < len; ++i) d.rho.edge_map.emplace_back();
  for (std::size_t i = 0; i < len; ++i) d.rho.square_map.push_back(SquareImage::collapse());

  d.npc = check_npc(x);
  return d;
}

std::vector<EdgePath> enumerate_simple_loops(const SquareComplex& x, const std::vector<EdgeId>& edges,
                                             VertexId basepoint) {
  if (basepoint >= x.vertex_count) throw std::invalid_argument("basepoint is not a vertex");
  std::vector<std::vector<OrientedEdge>> out(x.vertex_count);
  for (EdgeId e : edges) {
    out[x.edges[e].tail].push_back({e, true});
    out[x.edges[e].head].push_back({e, false});
  }
  for (auto& steps : out) std::sort(steps.begin(), steps.end());

  std::vector<EdgePath> loops;
  std::vector<bool> on_path(x.vertex_count, false);
  std::set<EdgeId> used;
  EdgeWord word;
  // depth-first over embedded paths from the basepoint
  std::function<void(VertexId)> dfs = [&](VertexId u) {
    for (OrientedEdge s : out[u]) {
      if (used.contains(s.edge)) continue;
      const VertexId w = x.finish(s);
      if (w == basepoint) {
        word.push_back(s);
        loops.push_back({basepoint, word});
        word.pop_back();
        continue;
      }
      if (on_path[w]) continue;
      used.insert(s.edge);
      on_path[w] = true;
      word.push_back(s);
      dfs(w);
      word.pop_back();
      on_path[w] = false;
      used.erase(s.edge);
    }
  };
  on_path[basepoint] = true;
  dfs(basepoint);
  std::sort(loops.begin(), loops.end(), [](const EdgePath& a, const EdgePath& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return loops;
}

PairEnumerator::PairEnumerator(Source source, SquareComplex j, EdgePath c)
    : source_(std::move(source)), j_(std::move(j)), c_(std::move(c)) {}

PairEnumerator::Source PairEnumerator::from_list(std::vector<GroupPresentation> list) {
  auto shared = std::make_shared<std::vector<GroupPresentation>>(std::move(list));
  auto next = std::make_shared<std::size_t>(0);
  return [shared, next]() -> std::optional<GroupPresentation> {
    if (*next >= shared->size()) return std::nullopt;
    return (*shared)[(*next)++];
  };
}

bool PairEnumerator::load(std::size_t n) {
  while (entries_.size() <= n && !exhausted_) {
    std::optional<GroupPresentation> p = source_();
    if (!p) {
      exhausted_ = true;
      break;
    }
    auto build = std::make_shared<const JpBuild>(build_jp(j_, c_, *p));
    auto loops = enumerate_simple_loops(build->pair.complex, build->pair.vertical, build->pair.basepoint);
    entries_.push_back({std::move(build), std::move(loops)});
  }
  return n < entries_.size();
}

std::optional<PairItem> PairEnumerator::next() {
  while (true) {
    if (position_ > diagonal_) {
      ++diagonal_;
      position_ = 0;
    }
    if (position_ == 0 && exhausted_) {
      // stop once every loaded presentation has had all its loops visited
      bool more = false;
      for (std::size_t n = 0; n < entries_.size(); ++n) more |= diagonal_ < n + entries_[n].loops.size();
      if (!more) return std::nullopt;
    }
    const std::size_t n = position_;
    const std::size_t k = diagonal_ - position_;
    ++position_;
    if (!load(n)) {
      position_ = diagonal_ + 1;  // nothing further on this diagonal
      continue;
    }
    const Entry& e = entries_[n];
    if (k >= e.loops.size()) continue;
    PairItem item;
    item.m = emitted_++;
    item.presentation = n;
    item.loop = k;
    item.l = e.build;
    item.gamma = e.loops[k];
    item.x = std::make_shared<const DoubledComplex>(build_xn(e.build->pair, item.gamma));
    return item;
  }
}

}  // namespace vhc
