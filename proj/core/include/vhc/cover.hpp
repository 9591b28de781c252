#pragma once

// Finite-sheeted covers in permutation form.
//
// A degree-d cover of X assigns to each edge e a permutation perm[e] of the
// sheets {0..d-1}: the lift of e starting on sheet s at tail(e) ends on sheet
// perm[e](s) at head(e). Sheets of the total space are numbered cell-major:
// the lift of cell c on sheet s has id c*d + s.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "vhc/cellular_map.hpp"
#include "vhc/complex.hpp"
#include "vhc/hyperplane.hpp"
#include "vhc/permutation.hpp"
#include "vhc/presentation.hpp"

namespace vhc {

struct Cover {
  std::shared_ptr<const SquareComplex> base;
  std::size_t degree = 1;
  std::vector<Permutation> perm;  // one per base edge

  /// Identity permutations on every edge.
  static Cover trivial(std::shared_ptr<const SquareComplex> base, std::size_t degree = 1);

  friend bool operator==(const Cover& a, const Cover& b) {
    return a.degree == b.degree && a.perm == b.perm && (a.base == b.base || (a.base && b.base && *a.base == *b.base));
  }
};

/// Sheet reached by lifting a word of oriented edges from `sheet`.
std::uint32_t lift_sheet(const Cover& c, const EdgeWord& w, std::uint32_t sheet);
/// Composite permutation of a word of oriented edges.
Permutation word_permutation(const Cover& c, const EdgeWord& w);

/// True iff every square boundary lifts closed from every sheet.
/// Throws std::invalid_argument when a permutation has the wrong degree or
/// the edge count does not match the base.
bool validate_cover(const Cover& c);

struct TotalSpace {
  SquareComplex complex;
  CellularMap projection;
  std::size_t degree = 1;

  VertexId vertex(VertexId v, std::uint32_t sheet) const { return static_cast<VertexId>(v * degree + sheet); }
  EdgeId edge(EdgeId e, std::uint32_t sheet) const { return static_cast<EdgeId>(e * degree + sheet); }
};

/// Throws std::invalid_argument for an invalid cover.
TotalSpace total_space(const Cover& c);

bool is_connected(const Cover& c);
/// Connected, and the deck group acts transitively on fibres.
bool is_normal(const Cover& c);

/// Sheets relabelled so that spanning-tree edges (from pi1_presentation at
/// vertex 0 of each component) carry the identity.
Cover gauge_fixed(const Cover& c);

/// The normal cover given by the monodromy group acting on itself by left
/// translation; its degree is the group order. Throws std::invalid_argument
/// on a disconnected cover.
Cover regular_closure(const Cover& c);

struct PathLift {
  EdgePath path;  // in the total space
  std::uint32_t end_sheet = 0;
};

/// Unique lift starting at (path.start, start_sheet).
/// Throws std::invalid_argument for a path that is invalid in the base.
PathLift lift_path(const Cover& c, const EdgePath& path, std::uint32_t start_sheet);

/// Components of the preimage of y, as hyperplanes of the total space.
/// Throws std::invalid_argument if y is not a hyperplane of the base.
std::vector<Hyperplane> preimage_hyperplane_components(const Cover& c, const Hyperplane& y);
std::vector<Hyperplane> preimage_hyperplane_components(const Cover& c, const TotalSpace& t, const Hyperplane& y);

/// Spanning-tree presentation of the fundamental group.
struct Pi1Presentation {
  VertexId basepoint = 0;
  std::vector<bool> in_tree;               // per edge
  std::vector<EdgeId> generator_edges;     // non-tree edges, increasing
  std::vector<std::int32_t> generator_of;  // per edge: generator index or -1
  WordPresentation words;                  // one relator per square

  /// The word of a path with tree edges deleted.
  Word rewrite(const EdgePath& path) const;
};

/// Breadth-first spanning tree from `basepoint`, neighbours by edge id.
/// Throws std::invalid_argument for a disconnected complex.
Pi1Presentation pi1_presentation(const SquareComplex& x, VertexId basepoint = 0);

/// The cover whose generator edges carry `images` and tree edges the identity.
Cover cover_from_images(std::shared_ptr<const SquareComplex> base, const Pi1Presentation& pi1,
                        const std::vector<Permutation>& images, std::size_t degree);

struct CoverFilter {
  bool connected = false;
  bool up_to_conjugacy = false;
};

/// True iff the tuple is lexicographically least among its conjugates under
/// simultaneous relabelling of sheets.
bool is_conjugacy_canonical(std::span<const Permutation> images, std::span<const Permutation> all_of_degree);

/// All covers of degree exactly d, in backtracking order. Partitions of the
/// search run on `workers` threads; the output order does not depend on it.
std::vector<Cover> enumerate_covers(std::shared_ptr<const SquareComplex> x, std::size_t degree, CoverFilter filter = {},
                                    std::size_t workers = 1);

/// Pull c back along f: source -> c.base. Collapsed edges get the identity,
/// an edge mapping to a path gets the composite permutation. Formal 2-cells
/// of f's target must lift closed. Throws std::invalid_argument otherwise.
Cover pullback_cover(const Cover& c, std::shared_ptr<const SquareComplex> source, const CellularMap& f);

}  // namespace vhc
