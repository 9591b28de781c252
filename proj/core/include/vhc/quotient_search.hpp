#pragma once

// Bounded searches over homomorphisms to S_d and over finite covers.
//
// A search either finds a witness or reports that its budget ran out; it
// never concludes that no witness exists. Degrees are tried in increasing
// order, and within a degree the first witness in backtracking order wins,
// independently of the number of worker threads.

#include <cstdint>
#include <optional>
#include <vector>

#include "vhc/constructions.hpp"
#include "vhc/cover.hpp"
#include "vhc/hyperplane.hpp"
#include "vhc/permutation.hpp"
#include "vhc/presentation.hpp"

namespace vhc {

struct SearchBudget {
  std::size_t max_degree = 1;
  std::optional<std::uint64_t> max_nodes;  // total backtracking nodes; forces a serial search
  bool deterministic = true;
  std::size_t workers = 1;
};

struct SearchStats {
  std::uint64_t homs_tried = 0;
  std::uint64_t nodes = 0;
  std::uint64_t covers_realized = 0;
  std::size_t degree_reached = 0;  // last degree entered
  bool truncated = false;          // the node limit was hit

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct QuotientWitness {
  std::size_t degree = 1;
  std::vector<Permutation> images;  // one per generator
  Word word;                        // the surviving element
  Permutation word_image;
};

enum class CleanMode : std::uint8_t { Some, Each };

struct CoverWitness {
  Cover cover;                   // the cover found by the search
  std::uint32_t hyperplane = 0;  // id of the base hyperplane
  CleanMode mode = CleanMode::Some;
  /// Cover whose preimage components were checked: `cover` itself in Some
  /// mode, its regular closure in Each mode.
  Cover checked;
  /// Ids of the clean components in the total space of `checked`.
  std::vector<std::uint32_t> clean_components;
};

enum class SearchStatus : std::uint8_t { Found, Exhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  SearchBudget budget;
  SearchStats stats;
  std::optional<QuotientWitness> quotient;
  std::optional<CoverWitness> cover;

  bool found() const { return status == SearchStatus::Found; }
};

/// Throws std::invalid_argument for a letter outside the generators or a
/// zero degree bound.
SearchOutcome element_survives(const WordPresentation& p, const Word& w, const SearchBudget& budget);
SearchOutcome element_survives(const GroupPresentation& p, const Word& w, const SearchBudget& budget);

/// Looks for a homomorphism moving some generator.
SearchOutcome probe_profinite_triviality(const GroupPresentation& p, const SearchBudget& budget);

/// element_survives over pi1_presentation(l, basepoint). Throws
/// std::invalid_argument when gamma is not a loop at the basepoint.
SearchOutcome loop_survives(const SquareComplex& l, VertexId basepoint, const EdgePath& gamma,
                            const SearchBudget& budget);

/// Searches connected covers of degree <= max_degree for one in which some
/// lift (Some) or every lift, after passing to the regular closure (Each), of
/// y is clean.
SearchOutcome semi_decide_virtually_clean(const SquareComplex& x, const Hyperplane& y, const SearchBudget& budget,
                                          CleanMode mode = CleanMode::Some);

/// Re-checks a quotient witness from scratch.
bool verify_quotient_witness(const WordPresentation& p, const QuotientWitness& w);
/// Re-checks a cover witness from scratch.
bool verify_cover_witness(const SquareComplex& x, const CoverWitness& w);

/// Cover of the base built from a loop_survives witness.
Cover witness_cover(std::shared_ptr<const SquareComplex> l, VertexId basepoint, const QuotientWitness& w);

/// A lift of Y in a cover of X, checked for cleanness.
struct CleanLift {
  Cover cover;
  TotalSpace space;
  Hyperplane component;
  std::uint32_t dagger = 0;  // sheet over the copy-1 basepoint
  CleanlinessReport report;
};

/// Builds the cover R of L from a survival witness of gamma, pulls it back
/// along rho, and picks the component of the preimage of Y whose carrier
/// meets the copy-1 basepoint on the sheet moved least by gamma.
/// Throws std::invalid_argument if the witness does not move gamma.
CleanLift survival_to_clean_lift(const DoubledComplex& x, std::shared_ptr<const SquareComplex> x_complex,
                                 const QuotientWitness& w);

struct LoopLift {
  std::uint32_t dagger = 0;
  PathLift lift;
  bool closed = true;
};

/// From a cover z of X and a component w of the preimage of Y: takes the
/// least sheet over the copy-1 basepoint in the image of a pushing map of w,
/// restricts z to copy 1 of L and lifts gamma there. Returns nullopt if w
/// does not touch the copy-1 basepoint.
std::optional<LoopLift> clean_lift_to_loop_lift(const DoubledComplex& x, const Cover& z, const Hyperplane& w);

}  // namespace vhc
