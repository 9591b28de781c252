#pragma once

#include <string>

#include "vhc/cellular_map.hpp"
#include "vhc/complex.hpp"

namespace vhc::testing {

inline std::string fixture_path(const std::string& name) { return std::string(VHC_FIXTURE_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(VHC_GOLDEN_DIR) + "/" + name; }

inline OrientedEdge fwd(EdgeId e) { return {e, true}; }
inline OrientedEdge rev(EdgeId e) { return {e, false}; }

// a = edge 0 (V), b = edge 1 (H), square a b A B
inline SquareComplex torus() {
  SquareComplex x;
  x.add_vertex();
  x.add_edge(0, 0, Label::V);
  x.add_edge(0, 0, Label::H);
  x.add_square({fwd(0), fwd(1), rev(0), rev(1)});
  return x;
}

// square a b a B: the hyperplane of a is one-sided
inline SquareComplex klein() {
  SquareComplex x;
  x.add_vertex();
  x.add_edge(0, 0, Label::V);
  x.add_edge(0, 0, Label::H);
  x.add_square({fwd(0), fwd(1), fwd(0), rev(1)});
  return x;
}

// a, b vertical, x horizontal; square a x B X
inline SquareComplex theta() {
  SquareComplex x;
  x.add_vertex();
  x.add_edge(0, 0, Label::V);
  x.add_edge(0, 0, Label::V);
  x.add_edge(0, 0, Label::H);
  x.add_square({fwd(0), fwd(2), rev(1), rev(2)});
  return x;
}

inline SquareComplex wedge() {
  SquareComplex x;
  x.add_vertex();
  x.add_edge(0, 0, Label::V);
  x.add_edge(0, 0, Label::H);
  return x;
}

inline SquareComplex circle() {
  SquareComplex x;
  x.add_vertex();
  x.add_edge(0, 0, Label::V);
  return x;
}

// torus with a cut in two
inline SquareComplex subdivided_torus() { return subdivide_edges(torus(), {2, 1}).complex; }

}  // namespace vhc::testing
