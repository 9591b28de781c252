#pragma once

// JSON documents: complexes, paths, presentations, covers, cellular maps,
// cleanliness reports, construction manifests and search witnesses.
// Writers are canonical (fixed key order, two-space indent, trailing
// newline), so equal values give identical bytes.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vhc/cellular_map.hpp"
#include "vhc/complex.hpp"
#include "vhc/constructions.hpp"
#include "vhc/cover.hpp"
#include "vhc/hyperplane.hpp"
#include "vhc/presentation.hpp"
#include "vhc/quotient_search.hpp"

namespace vhc::io {

/// Malformed document: bad JSON, missing or mistyped fields.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::filesystem::path& p);
void write_text(const std::filesystem::path& p, std::string_view text);

/// Edge references and square lengths are not checked here; validate()
/// reports them. Edge ids must be exactly 1..n.
SquareComplex parse_complex(std::string_view text);
std::string format_complex(const SquareComplex& x);
SquareComplex read_complex(const std::filesystem::path& p);

EdgePath parse_path(std::string_view text);
std::string format_path(const EdgePath& p);

GroupPresentation parse_presentation(std::string_view text);
std::string format_presentation(const GroupPresentation& p);

/// Edges missing from "perm" get the identity.
Cover parse_cover(std::string_view text, std::shared_ptr<const SquareComplex> base);
std::string format_cover(const Cover& c, std::string_view base_ref);

std::string format_map(const CellularMap& f);
CellularMap parse_map(std::string_view text);

std::string format_report(const CleanlinessReport& r);

struct Manifest {
  std::string kind;  // "jp" or "xn"
  std::string complex;
  VertexId basepoint = 0;
  std::vector<EdgeId> vertical;
  std::optional<EdgeId> alpha;
  std::optional<EdgePath> gamma;  // in the constructed complex (copy 1 for xn)
  std::vector<SquareId> annulus;
  std::optional<std::uint32_t> y;  // least dual edge id, 1-based
  bool npc = false;
};

std::string format_manifest(const Manifest& m);
Manifest parse_manifest(std::string_view text);
Manifest jp_manifest(const JpBuild& b, std::string_view complex_ref);
Manifest xn_manifest(const DoubledComplex& d, std::string_view complex_ref);

/// Search outcome document. Quotient searches pass their presentation,
/// which is recorded; cover searches pass nullptr. `loop` names the
/// certified loop when there is one.
std::string format_witness(const SearchOutcome& o, const WordPresentation* presentation,
                           const std::optional<EdgePath>& loop, std::string_view base_ref);

/// Re-checks a FOUND document from its serialized form. `base` is needed
/// for cover witnesses and loop certificates. Returns false for EXHAUSTED.
bool verify_witness(std::string_view text, const SquareComplex* base);

}  // namespace vhc::io
