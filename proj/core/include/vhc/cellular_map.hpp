#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vhc/complex.hpp"

namespace vhc {

/// Where a source square goes.
///  - Square: onto a target square (boundary matches up to rotation).
///  - Collapse: into the 1-skeleton; the image boundary reduces to nothing.
///  - Disc: onto a formal 2-cell of the target, listed in CellularMap::discs.
///  - Region: onto a union of target squares (used by subdivision).
struct SquareImage {
  enum class Kind : std::uint8_t { Square, Collapse, Disc, Region };
  Kind kind = Kind::Collapse;
  std::uint32_t index = 0;             // target square or disc
  std::vector<SquareId> region;        // Region only

  static SquareImage square(SquareId s) { return {Kind::Square, s, {}}; }
  static SquareImage collapse() { return {Kind::Collapse, 0, {}}; }
  static SquareImage disc(std::uint32_t d) { return {Kind::Disc, d, {}}; }
  static SquareImage of_region(std::vector<SquareId> r) { return {Kind::Region, 0, std::move(r)}; }

  friend bool operator==(const SquareImage&, const SquareImage&) = default;
};

/// A cellular map between square complexes. Edges map to edge paths (an
/// empty path collapses the edge to a vertex). The target may carry formal
/// 2-cells (`discs`), given by closed boundary paths, that are not squares.
struct CellularMap {
  std::vector<VertexId> vertex_map;
  std::vector<EdgeWord> edge_map;
  std::vector<SquareImage> square_map;
  std::vector<EdgePath> discs;

  friend bool operator==(const CellularMap&, const CellularMap&) = default;
};

CellularMap identity_map(const SquareComplex& x);

/// Image of a source path under f (concatenated edge images, unreduced).
EdgePath map_path(const CellularMap& f, const EdgePath& p);

/// Consistency problems of f as a map source -> target; empty when f is
/// cellular and commutes with boundaries.
std::vector<std::string> check_cellular_map(const SquareComplex& source, const SquareComplex& target,
                                            const CellularMap& f);

/// Result of subdividing edges.
///
/// `map` goes from the original complex into the subdivision: every original
/// edge maps to its chain of pieces and every original square to the grid of
/// squares that replaces it.
struct Subdivision {
  SquareComplex complex;
  CellularMap map;
  std::vector<std::uint32_t> factor;      // effective factor per original edge
  std::vector<std::vector<EdgeId>> chain;  // pieces of each original edge, tail to head
};

/// Subdivides every edge e into factor[e] pieces. Opposite sides of a square
/// must be cut alike, so the factor actually used on an edge is the lcm of the
/// requested factors over its hyperplane class; each square becomes a grid.
/// Throws std::invalid_argument on a zero factor or non-VH input.
Subdivision subdivide_edges(const SquareComplex& x, const std::vector<std::uint32_t>& factor);

/// Transports a path of the original complex into the subdivision.
EdgePath subdivide_path(const Subdivision& sub, const EdgePath& p);

}  // namespace vhc
