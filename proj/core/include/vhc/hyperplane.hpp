#pragma once

// Hyperplanes of a square complex: classes of edges under "opposite sides of
// a square", their carriers, pushing maps, and the cleanness predicates.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vhc/complex.hpp"

namespace vhc {

/// The midcube of square `square` joining the sides at positions
/// `pair` and `pair + 2` (pair is 0 or 1).
struct Midcube {
  SquareId square = 0;
  std::uint8_t pair = 0;

  friend bool operator==(const Midcube&, const Midcube&) = default;
  friend auto operator<=>(const Midcube&, const Midcube&) = default;
};

struct Hyperplane {
  std::vector<EdgeId> dual_edges;  // sorted
  std::vector<Midcube> midcubes;   // sorted
  Label label = Label::V;          // label of the least dual edge

  /// Identifier used in documents: least dual edge id, 1-based.
  std::uint32_t id() const { return dual_edges.front() + 1; }
  /// Index of edge e within dual_edges, or nullopt.
  std::optional<std::size_t> node_of(EdgeId e) const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// All hyperplanes, ordered by least dual edge. Every edge lies in exactly
/// one. Requires a structurally valid complex (VH is not required).
std::vector<Hyperplane> hyperplanes(const SquareComplex& x);

/// The hyperplane containing edge e.
Hyperplane hyperplane_of(const SquareComplex& x, EdgeId e);

/// Endpoints of the midcube arc: the dual edges at positions pair and pair+2.
std::pair<EdgeId, EdgeId> midcube_ends(const SquareComplex& x, const Midcube& m);

/// Transverse orientation per dual edge (aligned with dual_edges):
/// flip[i] == 0 means side 0 of the carrier contains the tail of the edge.
struct CoOrientation {
  std::vector<std::uint8_t> flip;

  CoOrientation swapped() const;
  friend bool operator==(const CoOrientation&, const CoOrientation&) = default;
};

struct TwoSidedness {
  bool two_sided = false;
  std::optional<CoOrientation> co_orientation;  // normalized: least dual edge has flip 0
  std::vector<Midcube> odd_cycle;               // witness when one-sided
};

/// Parity propagation over the midcube constraints.
TwoSidedness is_two_sided(const SquareComplex& x, const Hyperplane& y);

/// True iff some square has both of its midcubes in y.
bool self_crossing(const SquareComplex& x, const Hyperplane& y);

/// The graph morphism y -> 1-skeleton on one side of the carrier.
struct PushingMap {
  std::uint8_t side = 0;
  std::vector<VertexId> node_image;  // aligned with dual_edges
  std::vector<EdgeId> arc_image;     // aligned with midcubes
};

/// Throws std::invalid_argument when the co-orientation does not fit y.
PushingMap pushing_map(const SquareComplex& x, const Hyperplane& y, const CoOrientation& co, std::uint8_t side);
/// Convenience overload; throws std::invalid_argument for one-sided y.
PushingMap pushing_map(const SquareComplex& x, const Hyperplane& y, std::uint8_t side);

struct OsculationWitness {
  enum class Kind : std::uint8_t { Vertex, Edge };
  std::uint8_t side = 0;
  Kind kind = Kind::Vertex;
  // Vertex: two dual edges pushed to one vertex. Edge: two midcubes pushed to one edge.
  EdgeId edge_a = 0;
  EdgeId edge_b = 0;
  Midcube midcube_a{};
  Midcube midcube_b{};
  std::uint32_t image = 0;  // vertex id or edge id

  friend bool operator==(const OsculationWitness&, const OsculationWitness&) = default;
};

struct CleanlinessReport {
  std::uint32_t hyperplane = 0;  // least dual edge id, 1-based
  bool two_sided = false;
  bool self_crossing = false;
  std::vector<OsculationWitness> osculation_witnesses;
  bool clean = false;

  friend bool operator==(const CleanlinessReport&, const CleanlinessReport&) = default;
};

CleanlinessReport is_clean(const SquareComplex& x, const Hyperplane& y);

/// Two distinct hyperplanes that cross in some square and also meet at a
/// vertex where some pair of their edge-ends spans no corner.
/// Throws std::invalid_argument if y1 == y2.
bool inter_osculates(const SquareComplex& x, const Hyperplane& y1, const Hyperplane& y2);

bool is_complex_clean(const SquareComplex& x);
bool is_special(const SquareComplex& x);

}  // namespace vhc
