#pragma once

// Gluing constructions: presentation wedges, the complex J_P obtained by
// attaching copies of a VH complex J along relator loops, the loop-extended
// complex L' = L + alpha, and the doubled complex X = L' + annulus + L' with
// its annular hyperplane Y and retraction rho: X -> L.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "vhc/cellular_map.hpp"
#include "vhc/complex.hpp"
#include "vhc/hyperplane.hpp"
#include "vhc/presentation.hpp"

namespace vhc {

/// (L, V, *): a VH complex, one connected component V of its vertical
/// subgraph, and a vertex * of V.
struct PointedVhPair {
  SquareComplex complex;
  std::vector<EdgeId> vertical;  // edges of V, sorted
  VertexId basepoint = 0;
};

/// Takes V to be the component of the V-labelled subgraph containing *.
/// Throws std::invalid_argument if the complex is not a valid VH complex.
PointedVhPair make_pointed_pair(SquareComplex l, VertexId basepoint);

/// Wedge of one V-labelled loop per generator at vertex 0, and one loop per
/// relator spelling it out. The 2-cells are not realised.
struct PresentationComplex {
  SquareComplex wedge;
  VertexId basepoint = 0;
  std::vector<EdgePath> relator_loops;
};

PresentationComplex presentation_complex(const GroupPresentation& p);

/// Embedded closed path: no repeated edge, no repeated vertex except that
/// the end equals the start.
bool is_simple_loop(const SquareComplex& x, const EdgePath& p);

struct JpCopy {
  UnionOffsets offsets;          // where the subdivided copy of J sits in J_P
  std::uint32_t factor = 1;      // subdivision factor applied along c
  EdgePath loop;                 // image of c in J_P
  std::vector<EdgeId> rungs;     // rung i joins relator vertex i to loop vertex i
  std::vector<SquareId> cylinder;
};

struct JpBuild {
  PointedVhPair pair;                          // (J_P, V, *)
  std::vector<EdgePath> relator_loops;         // in V
  std::vector<std::vector<EdgeId>> generator_chains;  // pieces of each generator loop
  std::uint32_t v_factor = 1;                  // subdivision factor applied to V
  std::vector<JpCopy> copies;
  /// Target of phi: V together with one cone vertex and spoke per relator;
  /// phi.discs are the relator loops, standing for the 2-cells of the
  /// presentation complex.
  SquareComplex k_target;
  CellularMap phi;
  bool npc = false;
};

/// Throws std::invalid_argument when J is not VH, c is not a simple closed
/// vertical loop, or a relator is empty.
JpBuild build_jp(const SquareComplex& j, const EdgePath& c, const GroupPresentation& p);

struct AttachedLoop {
  PointedVhPair pair;  // (L', V', *)
  EdgeId alpha = 0;
};

AttachedLoop attach_loop(const PointedVhPair& l);

struct DoubledComplex {
  SquareComplex complex;       // X
  PointedVhPair base;          // (L, V, *)
  AttachedLoop extended;       // (L', V', *) with alpha
  EdgePath gamma;              // in L
  EdgePath gamma_prime;        // gamma . alpha in L'
  UnionOffsets copy[2];        // placement of the two copies of L'
  std::vector<EdgeId> rungs;   // rung i joins the two copies of gamma' vertex i
  std::vector<SquareId> annulus;
  Hyperplane y;                // dual to the rungs
  CellularMap rho;             // X -> L
  bool npc = false;

  /// Basepoint of copy k (0 or 1) in X.
  VertexId basepoint(int k) const { return copy[k].vertex + base.basepoint; }
  /// Inclusion of L as part of copy k.
  CellularMap inclusion(int k) const;
};

/// Throws std::invalid_argument when gamma is not a simple loop at * made of
/// edges of V.
DoubledComplex build_xn(const PointedVhPair& l, const EdgePath& gamma);

/// Simple loops at * in the subgraph spanned by `edges`, both directions,
/// ordered by length and then by word.
std::vector<EdgePath> enumerate_simple_loops(const SquareComplex& x, const std::vector<EdgeId>& edges,
                                             VertexId basepoint);

struct PairItem {
  std::size_t m = 0;           // position in the stream
  std::size_t presentation = 0;
  std::size_t loop = 0;
  std::shared_ptr<const JpBuild> l;
  EdgePath gamma;
  std::shared_ptr<const DoubledComplex> x;
};

/// Diagonal enumeration of (presentation index, simple loop index) pairs:
/// (0,0), (0,1), (1,0), (0,2), (1,1), (2,0), ... skipping pairs whose loop
/// index is out of range.
class PairEnumerator {
 public:
  using Source = std::function<std::optional<GroupPresentation>()>;

  PairEnumerator(Source source, SquareComplex j, EdgePath c);
  static Source from_list(std::vector<GroupPresentation> list);

  std::optional<PairItem> next();

 private:
  struct Entry {
    std::shared_ptr<const JpBuild> build;
    std::vector<EdgePath> loops;
  };
  bool load(std::size_t n);

  Source source_;
  SquareComplex j_;
  EdgePath c_;
  std::vector<Entry> entries_;
  bool exhausted_ = false;
  std::size_t diagonal_ = 0;
  std::size_t position_ = 0;
  std::size_t emitted_ = 0;
};

}  // namespace vhc
