#pragma once

// Finite square complexes with a vertical/horizontal edge partition.
//
// A complex is stored combinatorially: a vertex count, a list of edges with
// endpoints and a V/H label, and a list of squares given by boundary words of
// oriented edges. Edge ids are 0-based in memory and 1-based (signed) in files.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vhc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using SquareId = std::uint32_t;

inline constexpr EdgeId kInvalidEdge = std::numeric_limits<EdgeId>::max();

enum class Label : std::uint8_t { V, H };

char label_char(Label l);

enum class End : std::uint8_t { Tail, Head };

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;
  Label label = Label::V;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An edge traversed in a chosen direction.
struct OrientedEdge {
  EdgeId edge = 0;
  bool forward = true;

  OrientedEdge reversed() const { return {edge, !forward}; }

  /// Signed 1-based id as used in documents.
  std::int64_t signed_id() const {
    return forward ? std::int64_t{edge} + 1 : -(std::int64_t{edge} + 1);
  }
  static OrientedEdge from_signed_id(std::int64_t id);

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
  friend auto operator<=>(const OrientedEdge& a, const OrientedEdge& b) {
    if (a.edge != b.edge) return a.edge <=> b.edge;
    // forward sorts before reversed
    return b.forward <=> a.forward;
  }
};

using EdgeWord = std::vector<OrientedEdge>;

EdgeWord reversed_word(std::span<const OrientedEdge> w);

struct SquareComplex {
  std::uint32_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<EdgeWord> squares;

  VertexId add_vertex() { return vertex_count++; }
  EdgeId add_edge(VertexId tail, VertexId head, Label label) {
    edges.push_back({tail, head, label});
    return static_cast<EdgeId>(edges.size() - 1);
  }
  SquareId add_square(EdgeWord boundary) {
    squares.push_back(std::move(boundary));
    return static_cast<SquareId>(squares.size() - 1);
  }

  VertexId start(OrientedEdge e) const {
    return e.forward ? edges[e.edge].tail : edges[e.edge].head;
  }
  VertexId finish(OrientedEdge e) const {
    return e.forward ? edges[e.edge].head : edges[e.edge].tail;
  }

  friend bool operator==(const SquareComplex&, const SquareComplex&) = default;
};

std::int64_t euler_characteristic(const SquareComplex& x);

/// Appends `part` to `whole` as a disjoint union; returns the vertex and edge
/// offsets at which the part's cells were placed.
struct UnionOffsets {
  VertexId vertex = 0;
  EdgeId edge = 0;
  SquareId square = 0;
};
UnionOffsets append_disjoint(SquareComplex& whole, const SquareComplex& part);

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind : std::uint8_t {
  BadEdgeEndpoint,
  BadEdgeReference,
  BoundaryLength,
  NotClosed,
  VhAlternation,
};

std::string violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  /// Offending edge (BadEdgeEndpoint) or square (all others), 0-based.
  std::uint32_t cell = 0;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Structural checks: endpoint and edge-reference integrity, boundary length 4
/// and closure of every boundary word. Never throws.
ValidationReport validate(const SquareComplex& x);

/// VH alternation failures of a structurally valid complex, one per square.
std::vector<Violation> vh_violations(const SquareComplex& x);

/// True iff every square's boundary alternates V/H cyclically.
/// Throws std::invalid_argument on structurally invalid input.
bool check_vh(const SquareComplex& x);

// ---------------------------------------------------------------------------
// Links

struct EdgeEnd {
  EdgeId edge = 0;
  End end = End::Tail;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

struct Corner {
  EdgeEnd a;
  EdgeEnd b;
  SquareId square = 0;
  std::uint8_t position = 0;  // corner between boundary steps position and position+1
};

struct VertexLink {
  VertexId vertex = 0;
  std::vector<EdgeEnd> nodes;
  std::vector<Corner> corners;
};

/// The corner at the end of step i of square s (0 <= i < 4).
Corner square_corner(const SquareComplex& x, SquareId s, std::uint8_t i);

VertexLink vertex_link(const SquareComplex& x, VertexId v);

/// Gromov link condition specialised to VH complexes: every link is a simple
/// graph (no corner joins a node to itself, no two corners join the same
/// pair) with no 3-cycles. Throws std::invalid_argument on non-VH input.
bool check_npc(const SquareComplex& x);

// ---------------------------------------------------------------------------
// Edge paths

struct EdgePath {
  VertexId start = 0;
  EdgeWord word;

  std::size_t length() const { return word.size(); }
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

/// Checks consecutive endpoints; returns the end vertex or nullopt.
std::optional<VertexId> path_end(const SquareComplex& x, const EdgePath& p);
bool is_valid_path(const SquareComplex& x, const EdgePath& p);
bool is_based_loop(const SquareComplex& x, const EdgePath& p);

/// p followed by q. Throws std::invalid_argument if end(p) != start(q).
EdgePath concatenate(const SquareComplex& x, const EdgePath& p, const EdgePath& q);

EdgePath reversed_path(const SquareComplex& x, const EdgePath& p);

/// Vertices visited by a valid path, including start and end.
std::vector<VertexId> path_vertices(const SquareComplex& x, const EdgePath& p);

/// Freely reduce a word (cancel e e^-1); `cyclic` also reduces around the ends.
EdgeWord free_reduce(EdgeWord w, bool cyclic = false);

/// Connected components of the 1-skeleton restricted to `edges` (all edges if
/// empty optional). Returns a component index per vertex.
std::vector<std::uint32_t> components(const SquareComplex& x,
                                      const std::optional<std::vector<bool>>& edge_mask = std::nullopt);

}  // namespace vhc
