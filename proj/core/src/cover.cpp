#include "vhc/cover.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "parallel.hpp"
#include "vhc/hom_search.hpp"

namespace vhc {

namespace {

struct Forest {
  std::vector<bool> in_tree;
  std::vector<VertexId> root;                  // per vertex
  std::vector<std::optional<OrientedEdge>> up;  // tree step from parent into the vertex
  std::vector<VertexId> order;                  // BFS order
};

// Breadth-first spanning forest, roots taken in vertex order starting with
// `first`; neighbours are scanned by increasing edge id.
Forest spanning_forest(const SquareComplex& x, VertexId first) {
  std::vector<std::vector<OrientedEdge>> out(x.vertex_count);
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    out[x.edges[e].tail].push_back({e, true});
    if (x.edges[e].head != x.edges[e].tail) out[x.edges[e].head].push_back({e, false});
  }
  for (auto& steps : out) std::sort(steps.begin(), steps.end());

  Forest f;
  f.in_tree.assign(x.edges.size(), false);
  f.root.assign(x.vertex_count, 0);
  f.up.assign(x.vertex_count, std::nullopt);
  std::vector<bool> seen(x.vertex_count, false);
  auto grow = [&](VertexId r) {
    seen[r] = true;
    f.root[r] = r;
    std::deque<VertexId> queue{r};
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      f.order.push_back(u);
      for (OrientedEdge s : out[u]) {
        const VertexId w = x.finish(s);
        if (seen[w]) continue;
        seen[w] = true;
        f.root[w] = r;
        f.in_tree[s.edge] = true;
        f.up[w] = s;
        queue.push_back(w);
      }
    }
  };
  if (x.vertex_count > 0) grow(first);
  for (VertexId v = 0; v < x.vertex_count; ++v) {
    if (!seen[v]) grow(v);
  }
  return f;
}

void check_shape(const Cover& c) {
  if (!c.base) throw std::invalid_argument("cover has no base");
  if (c.degree == 0) throw std::invalid_argument("cover degree must be positive");
  if (c.perm.size() != c.base->edges.size()) throw std::invalid_argument("one permutation per edge is required");
  for (const Permutation& p : c.perm) {
    if (p.degree() != c.degree) throw std::invalid_argument("permutation arity differs from the cover degree");
  }
}

std::vector<Permutation> monodromy_generators(const Cover& fixed) {
  std::vector<Permutation> gens;
  for (EdgeId e = 0; e < fixed.perm.size(); ++e) {
    if (!fixed.perm[e].is_identity()) gens.push_back(fixed.perm[e]);
  }
  return gens;
}

bool base_connected(const SquareComplex& x) {
  const auto comp = components(x);
  return std::all_of(comp.begin(), comp.end(), [](std::uint32_t c) { return c == 0; });
}

}  // namespace

Cover Cover::trivial(std::shared_ptr<const SquareComplex> base, std::size_t degree) {
  Cover c;
  c.degree = degree;
  c.perm.assign(base->edges.size(), Permutation::identity(degree));
  c.base = std::move(base);
  return c;
}

std::uint32_t lift_sheet(const Cover& c, const EdgeWord& w, std::uint32_t sheet) {
  for (OrientedEdge o : w) {
    const Permutation& p = c.perm.at(o.edge);
    if (o.forward) {
      sheet = p(sheet);
    } else {
      std::uint32_t r = 0;
      while (p(r) != sheet) ++r;
      sheet = r;
    }
  }
  return sheet;
}

Permutation word_permutation(const Cover& c, const EdgeWord& w) {
  Permutation out = Permutation::identity(c.degree);
  for (OrientedEdge o : w) out = out.then(o.forward ? c.perm.at(o.edge) : c.perm.at(o.edge).inverse());
  return out;
}

bool validate_cover(const Cover& c) {
  check_shape(c);
  for (const EdgeWord& w : c.base->squares) {
    if (!word_permutation(c, w).is_identity()) return false;
  }
  return true;
}

TotalSpace total_space(const Cover& c) {
  if (!validate_cover(c)) throw std::invalid_argument("square relations fail; not a cover");
  const SquareComplex& x = *c.base;
  const auto d = static_cast<std::uint32_t>(c.degree);
  TotalSpace t;
  t.degree = d;
  t.complex.vertex_count = x.vertex_count * d;
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    for (std::uint32_t s = 0; s < d; ++s) {
      t.complex.add_edge(x.edges[e].tail * d + s, x.edges[e].head * d + c.perm[e](s), x.edges[e].label);
    }
  }
  for (const EdgeWord& w : x.squares) {
    for (std::uint32_t s = 0; s < d; ++s) {
      EdgeWord lifted;
      std::uint32_t sheet = s;
      for (OrientedEdge o : w) {
        if (o.forward) {
          lifted.push_back({o.edge * d + sheet, true});
          sheet = c.perm[o.edge](sheet);
        } else {
          sheet = c.perm[o.edge].inverse()(sheet);
          lifted.push_back({o.edge * d + sheet, false});
        }
      }
      t.complex.add_square(std::move(lifted));
    }
  }
  CellularMap& p = t.projection;
  for (VertexId v = 0; v < t.complex.vertex_count; ++v) p.vertex_map.push_back(v / d);
  for (EdgeId e = 0; e < t.complex.edges.size(); ++e) p.edge_map.push_back({OrientedEdge{e / d, true}});
  for (SquareId q = 0; q < t.complex.squares.size(); ++q) p.square_map.push_back(SquareImage::square(q / d));
  return t;
}

Cover gauge_fixed(const Cover& c) {
  check_shape(c);
  const SquareComplex& x = *c.base;
  const Forest f = spanning_forest(x, 0);
  // label[v] maps a sheet at the component root to the same-named sheet at v
  std::vector<Permutation> label(x.vertex_count, Permutation::identity(c.degree));
  for (VertexId v : f.order) {
    if (!f.up[v]) continue;
    const OrientedEdge s = *f.up[v];
    const VertexId u = x.start(s);
    label[v] = label[u].then(s.forward ? c.perm[s.edge] : c.perm[s.edge].inverse());
  }
  Cover out = c;
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    const Edge& edge = x.edges[e];
    out.perm[e] = label[edge.tail].then(c.perm[e]).then(label[edge.head].inverse());
  }
  return out;
}

bool is_connected(const Cover& c) {
  check_shape(c);
  if (!base_connected(*c.base)) return false;
  const Cover fixed = gauge_fixed(c);
  return is_transitive(monodromy_generators(fixed), c.degree);
}

bool is_normal(const Cover& c) {
  if (!is_connected(c)) return false;
  const auto gens = monodromy_generators(gauge_fixed(c));
  const std::size_t d = c.degree;
  // a deck transformation is determined by the image of sheet 0; build it
  // along the Schreier graph and check it commutes with every generator
  for (std::uint32_t target = 0; target < d; ++target) {
    std::vector<std::int64_t> sigma(d, -1);
    sigma[0] = target;
    std::deque<std::uint32_t> queue{0};
    bool ok = true;
    while (!queue.empty() && ok) {
      const std::uint32_t p = queue.front();
      queue.pop_front();
      for (const Permutation& g : gens) {
        const std::uint32_t q = g(p);
        const auto image = static_cast<std::int64_t>(g(static_cast<std::uint32_t>(sigma[p])));
        if (sigma[q] < 0) {
          sigma[q] = image;
          queue.push_back(q);
        } else if (sigma[q] != image) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) return false;
  }
  return true;
}

Cover regular_closure(const Cover& c) {
  if (!is_connected(c)) throw std::invalid_argument("regular closure needs a connected cover");
  const Cover fixed = gauge_fixed(c);
  const std::vector<Permutation> group = generated_group(monodromy_generators(fixed), c.degree);
  std::map<Permutation, std::uint32_t> index;
  for (std::uint32_t i = 0; i < group.size(); ++i) index.emplace(group[i], i);

  Cover out;
  out.base = c.base;
  out.degree = group.size();
  for (const Permutation& g : fixed.perm) {
    std::vector<std::uint32_t> img(group.size());
    for (std::uint32_t i = 0; i < group.size(); ++i) img[i] = index.at(group[i].then(g));
    out.perm.emplace_back(std::move(img));
  }
  return out;
}

PathLift lift_path(const Cover& c, const EdgePath& path, std::uint32_t start_sheet) {
  check_shape(c);
  if (!is_valid_path(*c.base, path)) throw std::invalid_argument("path is not valid in the base");
  if (start_sheet >= c.degree) throw std::out_of_range("start sheet out of range");
  const auto d = static_cast<std::uint32_t>(c.degree);
  PathLift lift{{path.start * d + start_sheet, {}}, start_sheet};
  std::uint32_t sheet = start_sheet;
  for (OrientedEdge o : path.word) {
    if (o.forward) {
      lift.path.word.push_back({o.edge * d + sheet, true});
      sheet = c.perm[o.edge](sheet);
    } else {
      sheet = c.perm[o.edge].inverse()(sheet);
      lift.path.word.push_back({o.edge * d + sheet, false});
    }
  }
  lift.end_sheet = sheet;
  return lift;
}

std::vector<Hyperplane> preimage_hyperplane_components(const Cover& c, const TotalSpace& t, const Hyperplane& y) {
  if (y.dual_edges.empty() || hyperplane_of(*c.base, y.dual_edges.front()) != y) {
    throw std::invalid_argument("hyperplane does not belong to the base of this cover");
  }
  std::vector<Hyperplane> out;
  for (Hyperplane& h : hyperplanes(t.complex)) {
    if (y.node_of(static_cast<EdgeId>(h.dual_edges.front() / t.degree))) out.push_back(std::move(h));
  }
  return out;
}

std::vector<Hyperplane> preimage_hyperplane_components(const Cover& c, const Hyperplane& y) {
  return preimage_hyperplane_components(c, total_space(c), y);
}

Word Pi1Presentation::rewrite(const EdgePath& path) const {
  Word w;
  for (OrientedEdge o : path.word) {
    const std::int32_t g = generator_of.at(o.edge);
    if (g >= 0) w.push_back(o.forward ? g + 1 : -(g + 1));
  }
  return w;
}

Pi1Presentation pi1_presentation(const SquareComplex& x, VertexId basepoint) {
  if (basepoint >= x.vertex_count) throw std::out_of_range("basepoint out of range");
  if (!base_connected(x)) throw std::invalid_argument("complex is disconnected");
  const Forest f = spanning_forest(x, basepoint);
  Pi1Presentation p;
  p.basepoint = basepoint;
  p.in_tree = f.in_tree;
  p.generator_of.assign(x.edges.size(), -1);
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    if (f.in_tree[e]) continue;
    p.generator_of[e] = static_cast<std::int32_t>(p.generator_edges.size());
    p.generator_edges.push_back(e);
  }
  p.words.generators = p.generator_edges.size();
  for (const EdgeWord& w : x.squares) p.words.relators.push_back(p.rewrite({x.start(w.front()), w}));
  return p;
}

Cover cover_from_images(std::shared_ptr<const SquareComplex> base, const Pi1Presentation& pi1,
                        const std::vector<Permutation>& images, std::size_t degree) {
  if (images.size() != pi1.generator_edges.size()) throw std::invalid_argument("one image per generator is required");
  Cover c = Cover::trivial(std::move(base), degree);
  for (std::size_t g = 0; g < images.size(); ++g) c.perm[pi1.generator_edges[g]] = images[g];
  return c;
}

bool is_conjugacy_canonical(std::span<const Permutation> images, std::span<const Permutation> all_of_degree) {
  for (const Permutation& sigma : all_of_degree) {
    for (const Permutation& g : images) {
      const Permutation h = conjugate(g, sigma);
      if (h < g) return false;
      if (g < h) break;
    }
  }
  return true;
}

std::vector<Cover> enumerate_covers(std::shared_ptr<const SquareComplex> x, std::size_t degree, CoverFilter filter,
                                    std::size_t workers) {
  const Pi1Presentation pi1 = pi1_presentation(*x, 0);
  const HomEnumerator homs(pi1.words, degree);
  std::vector<std::vector<Cover>> parts(homs.partitions());
  detail::for_each_index(homs.partitions(), workers, [&](std::size_t k) {
    HomStats stats;
    homs.run(
        k,
        [&](std::span<const std::uint32_t> idx) {
          const std::vector<Permutation> images = homs.images(idx);
          if (filter.connected && !is_transitive(images, degree)) return false;
          if (filter.up_to_conjugacy && !is_conjugacy_canonical(images, homs.table())) return false;
          parts[k].push_back(cover_from_images(x, pi1, images, degree));
          return false;
        },
        stats);
  });
  std::vector<Cover> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

Cover pullback_cover(const Cover& c, std::shared_ptr<const SquareComplex> source, const CellularMap& f) {
  check_shape(c);
  const auto problems = check_cellular_map(*source, *c.base, f);
  if (!problems.empty()) throw std::invalid_argument("map is incompatible with the cover's base: " + problems.front());
  for (const EdgePath& disc : f.discs) {
    if (!word_permutation(c, disc.word).is_identity()) {
      throw std::invalid_argument("cover does not extend over the target's 2-cells");
    }
  }
  Cover out;
  out.base = std::move(source);
  out.degree = c.degree;
  for (const EdgeWord& img : f.edge_map) out.perm.push_back(word_permutation(c, img));
  return out;
}

}  // namespace vhc
