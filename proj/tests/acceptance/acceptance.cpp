// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vhc/constructions.hpp"
#include "vhc/cover.hpp"
#include "vhc/hom_search.hpp"
#include "vhc/hyperplane.hpp"
#include "vhc/io.hpp"
#include "vhc/quotient_search.hpp"
#include "vhc_cli/cli.hpp"

using namespace vhc;
using namespace vhc::testing;
namespace fs = std::filesystem;

namespace {

// Collects failed checks; a criterion passes when none failed.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::ostringstream s;
    s << failed_ << " of " << checks_ << " checks failed";
    for (const std::string& f : failures_) s << "; " << f;
    return s.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::shared_ptr<const SquareComplex> share(SquareComplex x) { return std::make_shared<const SquareComplex>(std::move(x)); }

SearchBudget upto(std::size_t d) {
  SearchBudget b;
  b.max_degree = d;
  return b;
}

std::vector<std::pair<std::string, SquareComplex>> base_fixtures() {
  std::vector<std::pair<std::string, SquareComplex>> out;
  for (const char* name : {"torus", "klein", "theta", "wedge", "circle"}) {
    out.emplace_back(name, io::read_complex(fixture_path(std::string(name) + ".json")));
  }
  return out;
}

std::vector<SquareComplex> random_set() {
  std::mt19937 rng(20240601);
  std::vector<SquareComplex> out;
  while (out.size() < 200) out.push_back(random_vh_complex(rng, 8));
  return out;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

struct CliRun {
  int status;
  std::string out;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "vhc_acceptance";
  fs::create_directories(dir);
  return dir;
}

void criterion_1(Checker& c) {
  for (const char* name : {"torus", "klein"}) {
    const SquareComplex x = io::read_complex(fixture_path(std::string(name) + ".json"));
    c.expect(validate(x).ok() && check_vh(x) && check_npc(x), std::string(name) + " checks");
  }
  const std::map<std::string, ViolationKind> expected{
      {"bad_length", ViolationKind::BoundaryLength},
      {"bad_reference", ViolationKind::BadEdgeReference},
      {"bad_alternation", ViolationKind::VhAlternation},
  };
  for (const auto& [name, kind] : expected) {
    const SquareComplex x = io::read_complex(fixture_path(name + ".json"));
    std::vector<Violation> found = validate(x).violations;
    if (found.empty()) found = vh_violations(x);
    c.expect(!found.empty() && found.front().kind == kind, name + " violation class");
  }
  for (const char* name : {"torus", "klein", "bad_length", "bad_reference", "bad_alternation"}) {
    const CliRun r = cli_run({"validate", fixture_path(std::string(name) + ".json")});
    c.expect(r.out == io::read_text(golden_path(std::string("validate_") + name + ".txt")), std::string(name) + " golden");
  }
  c.expect(cli_run({"validate", fixture_path("malformed.json")}).status == cli::kInputError, "malformed exit 2");
}

void criterion_2(Checker& c) {
  for (const SquareComplex& x : random_set()) {
    const auto ys = hyperplanes(x);
    std::size_t dual = 0, mids = 0;
    for (const Hyperplane& y : ys) {
      dual += y.dual_edges.size();
      mids += y.midcubes.size();
      c.expect(!self_crossing(x, y), "self-crossing");
    }
    c.expect(dual == x.edges.size(), "dual edges partition the edges");
    c.expect(mids == 2 * x.squares.size(), "two midcubes per square");
  }
}

void criterion_3(Checker& c) {
  std::vector<SquareComplex> all = random_set();
  for (auto& [name, x] : base_fixtures()) all.push_back(x);
  all.push_back(subdivided_torus());
  for (const SquareComplex& x : all) {
    const auto ys = hyperplanes(x);
    const auto oracle = oracle_hyperplanes(x);
    c.expect(ys.size() == oracle.size(), "hyperplane count");
    for (std::size_t i = 0; i < std::min(ys.size(), oracle.size()); ++i) {
      c.expect(ys[i].dual_edges == oracle[i].edges, "hyperplane classes");
      c.expect(is_clean(x, ys[i]).clean == oracle[i].clean, "cleanness verdict");
    }
  }
}

void criterion_4(Checker& c) {
  const auto t = share(torus());
  const std::size_t sigma[] = {0, 1, 3, 4, 7, 6};
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = enumerate_covers(t, d, {true, true}).size();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(n == sigma[d], "count at degree " + std::to_string(d) + " is " + std::to_string(n));
    c.expect(secs <= 60.0, "time at degree " + std::to_string(d));
  }
}

void criterion_5(Checker& c) {
  std::mt19937 rng(77);
  std::vector<std::shared_ptr<const SquareComplex>> bases;
  for (auto& [name, x] : base_fixtures()) bases.push_back(share(x));
  bases.push_back(share(subdivided_torus()));
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Cover>> cache;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t b = rng() % bases.size();
    const std::size_t d = 1 + rng() % 4;
    auto& covers = cache[{b, d}];
    if (covers.empty()) covers = enumerate_covers(bases[b], d, {true, false});
    const Cover& cover = covers[rng() % covers.size()];
    const Cover r = regular_closure(cover);
    c.expect(validate_cover(r) && is_normal(r), "closure is normal");
    c.expect(factorial(d) % r.degree == 0, "closure degree divides d!");
  }
}

void criterion_6(Checker& c) {
  for (auto& [name, x] : base_fixtures()) {
    const auto b = share(x);
    const auto loops = loops_up_to(x, 0, 3);
    for (std::size_t d = 1; d <= 4; ++d) {
      // at each loop, does some cover of degree <= d lift it open?
      std::vector<bool> open(loops.size(), false);
      for (std::size_t k = 1; k <= d; ++k) {
        for (const Cover& cover : brute_force_covers(b, k)) {
          for (std::size_t i = 0; i < loops.size(); ++i) {
            for (std::uint32_t s = 0; s < k && !open[i]; ++s) open[i] = lift_path(cover, loops[i], s).end_sheet != s;
          }
        }
      }
      for (std::size_t i = 0; i < loops.size(); ++i) {
        c.expect(loop_survives(x, 0, loops[i], upto(d)).found() == open[i], name + " loop verdict at d=" + std::to_string(d));
      }
    }
  }
}

void criterion_7(Checker& c) {
  const PointedVhPair pair = make_pointed_pair(torus(), 0);
  const EdgePath gamma{0, {fwd(0)}};
  const DoubledComplex x = build_xn(pair, gamma);
  const auto xc = share(x.complex);

  const SearchOutcome s = loop_survives(pair.complex, pair.basepoint, gamma, upto(2));
  c.expect(s.found() && s.quotient->degree == 2, "survival witness at degree 2");
  if (!s.found()) return;
  const CleanLift lift = survival_to_clean_lift(x, xc, *s.quotient);
  c.expect(validate_cover(lift.cover), "pulled-back cover is valid");
  c.expect(lift.report.clean && is_clean(lift.space.complex, lift.component).clean, "designated lift is clean");

  const auto back = clean_lift_to_loop_lift(x, lift.cover, lift.component);
  c.expect(back.has_value() && !back->closed, "clean lift gives an open lift of gamma");

  const SearchOutcome v = semi_decide_virtually_clean(x.complex, x.y, upto(2));
  c.expect(v.found(), "cleanness certificate at degree 2");
  if (!v.found()) return;
  const TotalSpace ts = total_space(v.cover->checked);
  bool converted = false;
  for (const Hyperplane& w : preimage_hyperplane_components(v.cover->checked, ts, x.y)) {
    if (!is_clean(ts.complex, w).clean) continue;
    const auto lifted = clean_lift_to_loop_lift(x, v.cover->checked, w);
    if (!lifted) continue;
    converted = true;
    c.expect(!lifted->closed, "certificate gives an open lift of gamma");
  }
  c.expect(converted, "some clean component meets the basepoint fibre");
}

void criterion_8(Checker& c) {
  std::vector<DoubledComplex> outputs;
  for (const SquareComplex& l : {torus(), klein(), theta(), circle(), subdivided_torus()}) {
    const PointedVhPair pair = make_pointed_pair(l, 0);
    for (const EdgePath& g : enumerate_simple_loops(pair.complex, pair.vertical, pair.basepoint)) {
      outputs.push_back(build_xn(pair, g));
    }
  }
  std::mt19937 rng(8);
  std::vector<GroupPresentation> list;
  for (int i = 0; i < 4; ++i) list.push_back(random_presentation(rng, 2, 3));
  PairEnumerator en(PairEnumerator::from_list(list), torus(), {0, {fwd(0)}});
  for (int i = 0; i < 12; ++i) {
    const auto item = en.next();
    if (!item) break;
    outputs.push_back(*item->x);
  }
  for (const DoubledComplex& x : outputs) {
    if (x.gamma.word.empty()) continue;
    const CleanlinessReport r = is_clean(x.complex, x.y);
    bool collision = false;
    for (const OsculationWitness& w : r.osculation_witnesses) {
      collision = collision || (w.kind == OsculationWitness::Kind::Vertex &&
                                (w.image == x.basepoint(0) || w.image == x.basepoint(1)));
    }
    c.expect(!r.clean && collision, "basepoint collision");
  }
  c.expect(outputs.size() > 10, "enough outputs");
}

// Monodromy group of the cover restricted to the subgraph `edges`, at v.
std::vector<Permutation> loop_group(const Cover& z, const std::vector<EdgeId>& edges, VertexId v) {
  const SquareComplex& x = *z.base;
  std::map<VertexId, Permutation> to;  // composite along a tree path from v
  to.emplace(v, Permutation::identity(z.degree));
  std::vector<VertexId> queue{v};
  std::vector<Permutation> gens;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (EdgeId e : edges) {
      const Edge& ed = x.edges[e];
      for (bool forward : {true, false}) {
        const VertexId from = forward ? ed.tail : ed.head;
        const VertexId next = forward ? ed.head : ed.tail;
        if (from != u) continue;
        const Permutation step = forward ? z.perm[e] : z.perm[e].inverse();
        const Permutation reach = to.at(u).then(step);
        const auto it = to.find(next);
        if (it == to.end()) {
          to.emplace(next, reach);
          queue.push_back(next);
        } else {
          gens.push_back(reach.then(it->second.inverse()));
        }
      }
    }
  }
  return generated_group(gens, z.degree);
}

void criterion_9(Checker& c) {
  std::mt19937 rng(9);
  const EdgePath loop_a{0, {fwd(0)}};
  for (int trial = 0; trial < 20; ++trial) {
    const GroupPresentation p = random_presentation(rng, 3, 6);
    const JpBuild b = build_jp(torus(), loop_a, p);
    const SquareComplex& jp = b.pair.complex;
    c.expect(validate(jp).ok() && check_vh(jp), "J_P is a valid VH complex");
    c.expect(check_cellular_map(jp, b.k_target, b.phi).empty(), "phi is cellular");
    const auto jp_shared = share(jp);
    const auto k_shared = share(b.k_target);

    for (std::size_t d = 1; d <= 3; ++d) {
      HomEnumerator en(p.words(), d);
      HomStats stats;
      en.run_all(
          [&](std::span<const std::uint32_t> idx) {
            const std::vector<Permutation> images = en.images(idx);
            Cover k = Cover::trivial(k_shared, d);
            for (std::size_t g = 0; g < images.size(); ++g) k.perm[b.generator_chains[g].front()] = images[g];
            const Cover z = pullback_cover(k, jp_shared, b.phi);
            c.expect(validate_cover(z), "pulled-back cover is valid");
            c.expect(loop_group(z, b.pair.vertical, b.pair.basepoint) == generated_group(images, d),
                     "loops of V generate the quotient");
            return false;
          },
          stats);
    }
  }
}

void criterion_10(Checker& c) {
  const fs::path dir = scratch_dir();
  const fs::path xn = dir / "xn.json", manifest = dir / "xn_manifest.json";
  c.expect(cli_run({"construct", "xn", "--complex", fixture_path("circle.json"), "--gamma", fixture_path("loop_a.json"),
                    "--out", xn.string(), "--manifest", manifest.string()})
               .status == cli::kOk,
           "construct xn");

  struct Job {
    std::vector<std::string> args;
    std::string base;  // complex needed to re-check the witness
  };
  const std::vector<Job> jobs{
      {{"search", "vclean", "--complex", fixture_path("theta.json"), "--hyperplane", "1", "--max-degree", "2"},
       fixture_path("theta.json")},
      {{"search", "vclean", "--complex", fixture_path("theta.json"), "--hyperplane", "1", "--max-degree", "2", "--mode",
        "each"},
       fixture_path("theta.json")},
      {{"search", "vclean", "--manifest", manifest.string(), "--max-degree", "2"}, xn.string()},
      {{"search", "vclean", "--complex", fixture_path("torus.json"), "--hyperplane", "1", "--max-degree", "1"},
       fixture_path("torus.json")},
      {{"search", "loop-survival", "--complex", fixture_path("torus.json"), "--loop", fixture_path("loop_a.json"),
        "--max-degree", "2"},
       fixture_path("torus.json")},
      {{"search", "loop-survival", "--complex", fixture_path("theta.json"), "--loop", R"({"start": 0, "word": [1, -2]})",
        "--max-degree", "3"},
       fixture_path("theta.json")},
      {{"search", "profinite-probe", "--presentation", fixture_path("z2.json"), "--max-degree", "3"}, ""},
      {{"search", "profinite-probe", "--presentation", fixture_path("trivial_group.json"), "--max-degree", "3"}, ""},
  };
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    std::set<std::string> outputs;
    for (const char* workers : {"1", "4"}) {
      setenv("VHC_WORKERS", workers, 1);
      for (int rep = 0; rep < 3; ++rep) {
        const fs::path out = dir / ("witness_" + std::to_string(j) + ".json");
        std::vector<std::string> args = jobs[j].args;
        args.insert(args.end(), {"--deterministic", "--out", out.string()});
        const CliRun r = cli_run(args);
        c.expect(r.status == cli::kOk || r.status == cli::kFailed, "search ran");
        const std::string text = io::read_text(out);
        outputs.insert(text);
        if (r.status == cli::kOk) {
          std::optional<SquareComplex> base;
          if (!jobs[j].base.empty()) base = io::read_complex(jobs[j].base);
          c.expect(io::verify_witness(text, base ? &*base : nullptr), "witness re-validates, job " + std::to_string(j));
        }
      }
    }
    unsetenv("VHC_WORKERS");
    c.expect(outputs.size() == 1, "byte-identical outputs, job " + std::to_string(j));
  }
}

void criterion_11(Checker& c) {
  const GroupPresentation trivial({"a", "b"}, std::vector<std::string>{"abABB", "baBAA"});
  c.expect(probe_profinite_triviality(trivial, upto(4)).status == SearchStatus::Exhausted, "trivial group EXHAUSTED");
  const SearchOutcome z2 = probe_profinite_triviality(GroupPresentation({"a"}, std::vector<std::string>{"aa"}), upto(2));
  c.expect(z2.found() && z2.quotient->degree == 2, "Z/2 FOUND at degree 2");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"validation suite", criterion_1},
      {"hyperplane partition", criterion_2},
      {"cleanness oracle equivalence", criterion_3},
      {"torus cover counts", criterion_4},
      {"regular closures are normal", criterion_5},
      {"loop survival matches open lifts", criterion_6},
      {"survival and cleanness pipeline", criterion_7},
      {"basepoint osculation of Y", criterion_8},
      {"J_P validity and finite-level surjectivity", criterion_9},
      {"witness soundness and determinism", criterion_10},
      {"profinite probes", criterion_11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << (i + 1) << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << c.checks() << " checks, " << secs << " s)";
    if (!c.ok()) std::cout << "  " << c.summary();
    std::cout << std::endl;
    failed += c.ok() ? 0 : 1;
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
