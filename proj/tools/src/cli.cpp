#include "vhc_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "vhc/complex.hpp"
#include "vhc/constructions.hpp"
#include "vhc/cover.hpp"
#include "vhc/hyperplane.hpp"
#include "vhc/io.hpp"
#include "vhc/quotient_search.hpp"

namespace vhc::cli {

namespace {

namespace fs = std::filesystem;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t env_workers() {
  const char* v = std::getenv("VHC_WORKERS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  const unsigned long n = std::strtoul(v, &end, 10);
  if (*end != '\0' || n == 0) throw InputError("VHC_WORKERS must be a positive integer");
  return n;
}

// Inline JSON when the argument starts with '{', otherwise a file name.
std::string document(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  return io::read_text(arg);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* ok_fail(bool b) { return b ? "ok" : "FAIL"; }

std::string join_ids(const std::vector<EdgeId>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i] + 1);
  return s;
}

SquareComplex load_valid(const std::string& file, bool need_vh) {
  SquareComplex x = io::read_complex(file);
  const ValidationReport r = validate(x);
  if (!r.ok()) {
    throw InputError("invalid complex: " + std::string(violation_kind_name(r.violations.front().kind)) + " at " +
                     std::to_string(r.violations.front().cell + 1) + ": " + r.violations.front().detail);
  }
  if (need_vh && !check_vh(x)) throw InputError("complex is not VH");
  return x;
}

Hyperplane find_hyperplane(const SquareComplex& x, std::uint32_t id) {
  for (Hyperplane& y : hyperplanes(x)) {
    if (y.id() == id) return y;
  }
  throw InputError("no hyperplane with id " + std::to_string(id));
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const SquareComplex x = io::read_complex(file);
  const ValidationReport r = validate(x);
  for (const Violation& v : r.violations) {
    out << "violation " << violation_kind_name(v.kind) << ' '
        << (v.kind == ViolationKind::BadEdgeEndpoint ? "edge " : "square ") << v.cell + 1 << ": " << v.detail << '\n';
  }
  out << "structure: " << ok_fail(r.ok()) << '\n';
  if (!r.ok()) {
    out << "vh: skipped\nnpc: skipped\n";
    return kFailed;
  }
  const auto vh = vh_violations(x);
  for (const Violation& v : vh) {
    out << "violation " << violation_kind_name(v.kind) << " square " << v.cell + 1 << ": " << v.detail << '\n';
  }
  out << "vh: " << ok_fail(vh.empty()) << '\n';
  if (!vh.empty()) {
    out << "npc: skipped\n";
    return kFailed;
  }
  const bool npc = check_npc(x);
  out << "npc: " << ok_fail(npc) << '\n';
  return npc ? kOk : kFailed;
}

void print_report(std::ostream& out, const Hyperplane& y, const CleanlinessReport& r) {
  out << "hyperplane " << y.id() << " label " << (y.label == Label::V ? 'V' : 'H') << " edges "
      << join_ids(y.dual_edges) << " midcubes " << y.midcubes.size() << '\n';
  out << "  two-sided " << yes_no(r.two_sided) << " self-crossing " << yes_no(r.self_crossing) << " clean "
      << yes_no(r.clean) << '\n';
  for (const OsculationWitness& w : r.osculation_witnesses) {
    if (w.kind == OsculationWitness::Kind::Vertex) {
      out << "  witness side " << int{w.side} << " vertex: edges " << w.edge_a + 1 << ',' << w.edge_b + 1
          << " -> vertex " << w.image << '\n';
    } else {
      out << "  witness side " << int{w.side} << " edge: squares " << w.midcube_a.square + 1 << ','
          << w.midcube_b.square + 1 << " -> edge " << w.image + 1 << '\n';
    }
  }
}

int cmd_hyperplanes(const std::string& file, bool clean, bool special, bool json, std::ostream& out) {
  const SquareComplex x = load_valid(file, true);
  const auto ys = hyperplanes(x);
  bool all_clean = true;
  std::vector<CleanlinessReport> reports;
  for (const Hyperplane& y : ys) {
    reports.push_back(is_clean(x, y));
    all_clean = all_clean && reports.back().clean;
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> osculating;
  if (special) {
    for (std::size_t i = 0; i < ys.size(); ++i) {
      for (std::size_t j = i + 1; j < ys.size(); ++j) {
        if (inter_osculates(x, ys[i], ys[j])) osculating.emplace_back(ys[i].id(), ys[j].id());
      }
    }
  }
  if (json) {
    out << '[';
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::string doc = io::format_report(reports[i]);
      doc.pop_back();
      out << (i ? ",\n" : "\n") << doc;
    }
    out << "\n]\n";
  } else {
    out << "hyperplanes: " << ys.size() << '\n';
    for (std::size_t i = 0; i < ys.size(); ++i) print_report(out, ys[i], reports[i]);
    if (special) {
      for (const auto& [a, b] : osculating) out << "inter-osculation " << a << ' ' << b << '\n';
    }
    if (clean || special) out << "clean: " << yes_no(all_clean) << '\n';
    if (special) out << "special: " << yes_no(all_clean && osculating.empty()) << '\n';
  }
  if (special && !(all_clean && osculating.empty())) return kFailed;
  if (clean && !all_clean) return kFailed;
  return kOk;
}

int cmd_covers(const std::string& file, std::size_t degree, bool connected, bool conj, const std::string& out_dir,
               std::ostream& out) {
  auto x = std::make_shared<const SquareComplex>(load_valid(file, false));
  if (degree == 0) throw InputError("degree must be positive");
  const auto comp = components(*x);
  if (comp.empty() || std::any_of(comp.begin(), comp.end(), [](std::uint32_t c) { return c != 0; })) {
    throw InputError("complex is empty or not connected");
  }
  const auto covers = enumerate_covers(x, degree, {connected, conj}, env_workers());
  if (!out_dir.empty()) {
    for (std::size_t i = 0; i < covers.size(); ++i) {
      std::ostringstream name;
      name << "cover_" << std::setw(4) << std::setfill('0') << i + 1 << ".json";
      io::write_text(fs::path(out_dir) / name.str(), io::format_cover(covers[i], file));
    }
  }
  out << "count " << covers.size() << '\n';
  return kOk;
}

struct JpArgs {
  std::string j, loop, presentation, out, manifest, phi;
};

int cmd_construct_jp(const JpArgs& a, std::ostream& out) {
  const SquareComplex j = io::read_complex(a.j);
  const EdgePath c = io::parse_path(document(a.loop));
  const GroupPresentation p = io::parse_presentation(document(a.presentation));
  const JpBuild b = build_jp(j, c, p);
  io::write_text(a.out, io::format_complex(b.pair.complex));
  if (!a.manifest.empty()) io::write_text(a.manifest, io::format_manifest(io::jp_manifest(b, a.out)));
  if (!a.phi.empty()) io::write_text(a.phi, io::format_map(b.phi));
  const SquareComplex& x = b.pair.complex;
  out << "vertices " << x.vertex_count << " edges " << x.edges.size() << " squares " << x.squares.size() << '\n';
  out << "copies " << b.copies.size() << " v-factor " << b.v_factor << '\n';
  out << "npc: " << ok_fail(b.npc) << '\n';
  return kOk;
}

struct XnArgs {
  std::string complex, gamma, out, manifest;
  std::optional<VertexId> basepoint;
};

int cmd_construct_xn(const XnArgs& a, std::ostream& out) {
  SquareComplex l = io::read_complex(a.complex);
  const EdgePath gamma = io::parse_path(document(a.gamma));
  const VertexId base = a.basepoint.value_or(gamma.start);
  const DoubledComplex d = build_xn(make_pointed_pair(std::move(l), base), gamma);
  io::write_text(a.out, io::format_complex(d.complex));
  if (!a.manifest.empty()) io::write_text(a.manifest, io::format_manifest(io::xn_manifest(d, a.out)));
  const SquareComplex& x = d.complex;
  out << "vertices " << x.vertex_count << " edges " << x.edges.size() << " squares " << x.squares.size() << '\n';
  out << "y " << d.y.id() << '\n';
  out << "npc: " << ok_fail(d.npc) << '\n';
  return kOk;
}

struct SearchArgs {
  std::string complex, manifest, loop, presentation, out, mode = "some";
  std::optional<std::uint32_t> hyperplane;
  std::optional<VertexId> basepoint;
  std::size_t max_degree = 1;
  std::optional<std::uint64_t> max_nodes;
  bool deterministic = false;
};

SearchBudget budget_of(const SearchArgs& a) {
  if (a.max_degree == 0) throw InputError("--max-degree must be at least 1");
  SearchBudget b;
  b.max_degree = a.max_degree;
  b.max_nodes = a.max_nodes;
  b.deterministic = a.deterministic;
  b.workers = env_workers();
  return b;
}

int finish_search(const SearchArgs& a, const SearchOutcome& o, const std::string& doc, std::ostream& out) {
  if (!a.out.empty()) io::write_text(a.out, doc);
  if (o.found()) {
    const std::size_t d = o.quotient ? o.quotient->degree : o.cover->cover.degree;
    out << "FOUND degree " << d << '\n';
  } else {
    out << "EXHAUSTED max-degree " << o.budget.max_degree << " homs " << o.stats.homs_tried << " nodes "
        << o.stats.nodes << (o.stats.truncated ? " truncated" : "") << '\n';
  }
  if (a.out.empty()) out << doc;
  return o.found() ? kOk : kFailed;
}

int cmd_search_vclean(SearchArgs a, std::ostream& out) {
  if (a.mode != "some" && a.mode != "each") throw InputError("--mode must be some or each");
  if (!a.manifest.empty()) {
    const io::Manifest m = io::parse_manifest(io::read_text(a.manifest));
    if (!a.hyperplane) {
      if (!m.y) throw InputError("manifest names no hyperplane");
      a.hyperplane = m.y;
    }
    if (a.complex.empty()) {
      const fs::path ref(m.complex);
      a.complex = ref.is_absolute() || fs::exists(ref) ? ref.string() : (fs::path(a.manifest).parent_path() / ref).string();
    }
  }
  if (a.complex.empty()) throw InputError("--complex or --manifest is required");
  if (!a.hyperplane) throw InputError("--hyperplane or --manifest is required");
  const SquareComplex x = load_valid(a.complex, true);
  const Hyperplane y = find_hyperplane(x, *a.hyperplane);
  const SearchOutcome o =
      semi_decide_virtually_clean(x, y, budget_of(a), a.mode == "each" ? CleanMode::Each : CleanMode::Some);
  return finish_search(a, o, io::format_witness(o, nullptr, std::nullopt, a.complex), out);
}

int cmd_search_loop(const SearchArgs& a, std::ostream& out) {
  if (a.complex.empty() || a.loop.empty()) throw InputError("--complex and --loop are required");
  const SquareComplex x = load_valid(a.complex, false);
  const EdgePath gamma = io::parse_path(document(a.loop));
  const VertexId base = a.basepoint.value_or(gamma.start);
  const SearchOutcome o = loop_survives(x, base, gamma, budget_of(a));
  const Pi1Presentation pi1 = pi1_presentation(x, base);
  return finish_search(a, o, io::format_witness(o, &pi1.words, gamma, a.complex), out);
}

int cmd_search_probe(const SearchArgs& a, std::ostream& out) {
  if (a.presentation.empty()) throw InputError("--presentation is required");
  const GroupPresentation p = io::parse_presentation(document(a.presentation));
  const SearchOutcome o = probe_profinite_triviality(p, budget_of(a));
  return finish_search(a, o, io::format_witness(o, &p.words(), std::nullopt, ""), out);
}

void add_search_options(CLI::App* s, SearchArgs& a) {
  s->add_option("--max-degree", a.max_degree, "Largest degree to search")->required();
  s->add_option("--max-nodes", a.max_nodes, "Backtracking node limit");
  s->add_flag("--deterministic", a.deterministic, "Record that the run must be reproducible");
  s->add_option("--out", a.out, "Witness file (default: standard output)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tools for VH square complexes: hyperplanes, covers, constructions and searches", "vhc"};
  app.require_subcommand(1);

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "Structural, VH and NPC checks");
  validate_cmd->add_option("file", file, "Complex document")->required();

  bool clean = false, special = false, json = false;
  auto* hyper_cmd = app.add_subcommand("hyperplanes", "List hyperplanes with cleanliness reports");
  hyper_cmd->add_option("file", file, "Complex document")->required();
  hyper_cmd->add_flag("--clean", clean, "Fail unless every hyperplane is clean");
  hyper_cmd->add_flag("--special", special, "Also check inter-osculation; fail unless special");
  hyper_cmd->add_flag("--json", json, "Print reports as JSON");

  std::size_t degree = 0;
  bool connected = false, conj = false;
  std::string out_dir;
  auto* covers_cmd = app.add_subcommand("covers", "Enumerate covers of one degree");
  covers_cmd->add_option("file", file, "Complex document")->required();
  covers_cmd->add_option("--degree", degree, "Number of sheets")->required();
  covers_cmd->add_flag("--connected", connected, "Only connected covers");
  covers_cmd->add_flag("--up-to-conjugacy", conj, "One cover per isomorphism class");
  covers_cmd->add_option("--out-dir", out_dir, "Write each cover here");

  auto* construct_cmd = app.add_subcommand("construct", "Build J_P or X_n");
  construct_cmd->require_subcommand(1);
  JpArgs jp;
  auto* jp_cmd = construct_cmd->add_subcommand("jp", "Attach copies of J along relator loops");
  jp_cmd->add_option("--j", jp.j, "Complex J")->required();
  jp_cmd->add_option("--loop", jp.loop, "Simple vertical loop c in J")->required();
  jp_cmd->add_option("--presentation", jp.presentation, "Group presentation")->required();
  jp_cmd->add_option("--out", jp.out, "Output complex")->required();
  jp_cmd->add_option("--manifest", jp.manifest, "Output manifest");
  jp_cmd->add_option("--phi", jp.phi, "Output crushing map");
  XnArgs xn;
  auto* xn_cmd = construct_cmd->add_subcommand("xn", "Double L' along gamma'");
  xn_cmd->add_option("--complex", xn.complex, "Complex L")->required();
  xn_cmd->add_option("--basepoint", xn.basepoint, "Basepoint (default: start of gamma)");
  xn_cmd->add_option("--gamma", xn.gamma, "Simple vertical loop at the basepoint")->required();
  xn_cmd->add_option("--out", xn.out, "Output complex")->required();
  xn_cmd->add_option("--manifest", xn.manifest, "Output manifest");

  auto* search_cmd = app.add_subcommand("search", "Bounded searches over finite covers and quotients");
  search_cmd->require_subcommand(1);
  SearchArgs sa;
  auto* vclean_cmd = search_cmd->add_subcommand("vclean", "Look for a cover with clean lifts of a hyperplane");
  vclean_cmd->add_option("--complex", sa.complex, "Complex document");
  vclean_cmd->add_option("--hyperplane", sa.hyperplane, "Hyperplane id (least dual edge)");
  vclean_cmd->add_option("--manifest", sa.manifest, "Construction manifest naming the hyperplane");
  vclean_cmd->add_option("--mode", sa.mode, "some or each");
  add_search_options(vclean_cmd, sa);
  auto* loop_cmd = search_cmd->add_subcommand("loop-survival", "Look for a finite quotient where a loop survives");
  loop_cmd->add_option("--complex", sa.complex, "Complex document")->required();
  loop_cmd->add_option("--loop", sa.loop, "Based loop")->required();
  loop_cmd->add_option("--basepoint", sa.basepoint, "Basepoint (default: start of the loop)");
  add_search_options(loop_cmd, sa);
  auto* probe_cmd = search_cmd->add_subcommand("profinite-probe", "Look for a nontrivial finite quotient");
  probe_cmd->add_option("--presentation", sa.presentation, "Group presentation")->required();
  add_search_options(probe_cmd, sa);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate_cmd) return cmd_validate(file, out);
    if (*hyper_cmd) return cmd_hyperplanes(file, clean, special, json, out);
    if (*covers_cmd) return cmd_covers(file, degree, connected, conj, out_dir, out);
    if (*jp_cmd) return cmd_construct_jp(jp, out);
    if (*xn_cmd) return cmd_construct_xn(xn, out);
    if (*vclean_cmd) return cmd_search_vclean(sa, out);
    if (*loop_cmd) return cmd_search_loop(sa, out);
    if (*probe_cmd) return cmd_search_probe(sa, out);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace vhc::cli
