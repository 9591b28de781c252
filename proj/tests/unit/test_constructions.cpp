#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "vhc/constructions.hpp"

using namespace vhc;
using namespace vhc::testing;

namespace {

const EdgePath loop_a{0, {fwd(0)}};

void check_jp(const JpBuild& b, const GroupPresentation& p) {
  const SquareComplex& x = b.pair.complex;
  CHECK(validate(x).ok());
  CHECK(check_vh(x));
  CHECK(b.npc == check_npc(x));
  CHECK(check_cellular_map(x, b.k_target, b.phi).empty());
  REQUIRE(b.relator_loops.size() == p.relators().size());
  REQUIRE(b.copies.size() == p.relators().size());
  CHECK(b.generator_chains.size() == p.generators().size());
  for (const auto& chain : b.generator_chains) CHECK(chain.size() == b.v_factor);
  for (std::size_t j = 0; j < b.copies.size(); ++j) {
    const EdgePath& r = b.relator_loops[j];
    CHECK(is_based_loop(x, r));
    CHECK(r.start == b.pair.basepoint);
    CHECK(r.length() == p.relators()[j].size() * b.v_factor);
    for (OrientedEdge o : r.word) {
      CHECK(std::binary_search(b.pair.vertical.begin(), b.pair.vertical.end(), o.edge));
    }
    const JpCopy& c = b.copies[j];
    CHECK(c.loop.length() == r.length());
    CHECK(c.rungs.size() == r.length());
    CHECK(c.cylinder.size() == r.length());
    for (EdgeId e : c.rungs) CHECK(x.edges[e].label == Label::H);
  }
}

}  // namespace

TEST_CASE("presentation complexes") {
  const GroupPresentation p({"a", "b"}, std::vector<std::string>{"abAB", "aa"});
  const PresentationComplex pc = presentation_complex(p);
  CHECK(pc.wedge.vertex_count == 1);
  CHECK(pc.wedge.edges.size() == 2);
  CHECK(pc.wedge.squares.empty());
  REQUIRE(pc.relator_loops.size() == 2);
  CHECK(pc.relator_loops[0].word == EdgeWord{fwd(0), fwd(1), rev(0), rev(1)});
  CHECK(pc.relator_loops[1].word == EdgeWord{fwd(0), fwd(0)});
}

TEST_CASE("pointed pairs") {
  const PointedVhPair t = make_pointed_pair(torus(), 0);
  CHECK(t.vertical == std::vector<EdgeId>{0});
  const PointedVhPair th = make_pointed_pair(theta(), 0);
  CHECK(th.vertical == std::vector<EdgeId>{0, 1});
  SquareComplex bad = torus();
  bad.edges[1].label = Label::V;
  CHECK_THROWS_AS(make_pointed_pair(bad, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_pointed_pair(torus(), 3), std::invalid_argument);
}

TEST_CASE("simple loops") {
  CHECK(is_simple_loop(torus(), loop_a));
  CHECK_FALSE(is_simple_loop(torus(), {0, {fwd(0), fwd(0)}}));
  // the constant loop counts as embedded; enumeration leaves it out
  CHECK(is_simple_loop(torus(), {0, {}}));
  SquareComplex point;
  point.vertex_count = 1;
  CHECK(enumerate_simple_loops(point, {}, 0).empty());
  CHECK(enumerate_simple_loops(wedge(), {0, 1}, 0).size() == 4);
  CHECK(enumerate_simple_loops(torus(), {0}, 0).size() == 2);

  SquareComplex tri;
  tri.vertex_count = 3;
  tri.add_edge(0, 1, Label::V);
  tri.add_edge(1, 2, Label::V);
  tri.add_edge(2, 0, Label::V);
  const auto loops = enumerate_simple_loops(tri, {0, 1, 2}, 0);
  REQUIRE(loops.size() == 2);
  CHECK(loops[0].word == EdgeWord{fwd(0), fwd(1), fwd(2)});
  CHECK(loops[1].length() == 3);
  CHECK(enumerate_simple_loops(tri, {0, 1}, 0).empty());
}

TEST_CASE("J_P over the torus") {
  const GroupPresentation single({"a"}, std::vector<std::string>{"a"});
  check_jp(build_jp(torus(), loop_a, single), single);

  const GroupPresentation free({"a", "b"}, std::vector<Word>{});
  const JpBuild f = build_jp(torus(), loop_a, free);
  check_jp(f, free);
  // no relators: the complex is just the wedge of generator loops
  CHECK(f.pair.complex.vertex_count == 1);
  CHECK(f.pair.complex.edges.size() == 2);
  CHECK(f.pair.complex.squares.empty());

  const GroupPresentation comm({"a", "b"}, std::vector<std::string>{"abAB"});
  const JpBuild c = build_jp(torus(), loop_a, comm);
  check_jp(c, comm);
  CHECK(c.copies[0].factor == 4);
  CHECK(c.copies[0].cylinder.size() == 4);
  CHECK(c.npc);

  const GroupPresentation mixed({"a", "b"}, std::vector<std::string>{"aab", "abAB"});
  check_jp(build_jp(torus(), loop_a, mixed), mixed);

  CHECK_THROWS_AS(build_jp(torus(), {0, {fwd(1)}}, single), std::invalid_argument);
  CHECK_THROWS_AS(build_jp(torus(), {0, {fwd(0), fwd(0)}}, single), std::invalid_argument);
}

TEST_CASE("J_P with a longer loop c") {
  const SquareComplex j = subdivided_torus();
  const EdgePath c{0, {fwd(0), fwd(1)}};
  REQUIRE(is_simple_loop(j, c));
  const GroupPresentation p({"a", "b"}, std::vector<std::string>{"aaa", "ab"});
  const JpBuild b = build_jp(j, c, p);
  check_jp(b, p);
  // lengths 3 and 2 against |c| = 2 need the generators cut in two
  CHECK(b.v_factor == 2);
}

TEST_CASE("attaching a loop") {
  const AttachedLoop a = attach_loop(make_pointed_pair(torus(), 0));
  CHECK(a.alpha == 2);
  CHECK(a.pair.complex.edges[2].label == Label::V);
  CHECK(a.pair.complex.edges[2].tail == 0);
  CHECK(a.pair.complex.edges[2].head == 0);
  CHECK(a.pair.vertical == std::vector<EdgeId>{0, 2});
}

TEST_CASE("doubling along a circle") {
  const DoubledComplex d = build_xn(make_pointed_pair(circle(), 0), loop_a);
  CHECK(d.complex.vertex_count == 2);
  CHECK(d.complex.edges.size() == 6);
  CHECK(d.complex.squares.size() == 2);
  CHECK(d.annulus.size() == 2);
  CHECK(d.rungs.size() == 2);
  CHECK(d.y.dual_edges == d.rungs);
  CHECK(d.npc);
  CHECK(d.basepoint(0) != d.basepoint(1));
}

TEST_CASE("doubling along the constant loop") {
  const DoubledComplex d = build_xn(make_pointed_pair(circle(), 0), {0, {}});
  CHECK(d.gamma_prime.length() == 1);
  CHECK(d.annulus.size() == 1);
  CHECK(validate(d.complex).ok());
  CHECK(is_two_sided(d.complex, d.y).two_sided);
}

TEST_CASE("doubled complexes") {
  for (const SquareComplex& l : {torus(), theta(), subdivided_torus()}) {
    const PointedVhPair pair = make_pointed_pair(l, 0);
    for (const EdgePath& gamma : enumerate_simple_loops(pair.complex, pair.vertical, 0)) {
      const DoubledComplex d = build_xn(pair, gamma);
      const SquareComplex& x = d.complex;
      CHECK(validate(x).ok());
      CHECK(check_vh(x));
      CHECK(d.npc == check_npc(x));
      CHECK(d.gamma_prime.length() == gamma.length() + 1);

      const TwoSidedness ts = is_two_sided(x, d.y);
      CHECK(ts.two_sided);
      CHECK_FALSE(self_crossing(x, d.y));
      CHECK(d.y.midcubes.size() == d.gamma_prime.length());
      CHECK(d.y.dual_edges.size() == d.gamma_prime.length());
      CHECK_FALSE(is_clean(x, d.y).clean);

      CHECK(check_cellular_map(x, l, d.rho).empty());
      for (int k = 0; k < 2; ++k) {
        const CellularMap inc = d.inclusion(k);
        CHECK(check_cellular_map(l, x, inc).empty());
        // rho restricted to either copy of L is the identity
        for (EdgeId e = 0; e < l.edges.size(); ++e) {
          const EdgePath p{l.edges[e].tail, {fwd(e)}};
          CHECK(map_path(d.rho, map_path(inc, p)) == p);
        }
        CHECK(d.rho.vertex_map[d.basepoint(k)] == 0);
      }
    }
  }
  const PointedVhPair t = make_pointed_pair(torus(), 0);
  CHECK_THROWS_AS(build_xn(t, {0, {fwd(0), fwd(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(build_xn(t, {0, {fwd(1)}}), std::invalid_argument);
}

TEST_CASE("pair enumeration order") {
  const std::vector<GroupPresentation> list{
      GroupPresentation({"a"}, std::vector<std::string>{"aa"}),
      GroupPresentation({"a", "b"}, std::vector<std::string>{"ab"}),
      GroupPresentation({"a"}, std::vector<std::string>{"aaa"}),
  };
  PairEnumerator en(PairEnumerator::from_list(list), torus(), loop_a);
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  std::size_t m = 0;
  while (auto item = en.next()) {
    CHECK(item->m == m++);
    seen.emplace_back(item->presentation, item->loop);
    CHECK(item->x->gamma == item->gamma);
    CHECK(validate(item->x->complex).ok());
  }
  REQUIRE(seen.size() >= 6);
  // first diagonals in order, each pair once
  CHECK(seen[0] == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(seen[1] == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(seen[2] == std::pair<std::size_t, std::size_t>{1, 0});
  std::set<std::pair<std::size_t, std::size_t>> unique(seen.begin(), seen.end());
  CHECK(unique.size() == seen.size());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    CHECK(seen[i - 1].first + seen[i - 1].second <= seen[i].first + seen[i].second);
  }

  PairEnumerator empty(PairEnumerator::from_list({}), torus(), loop_a);
  CHECK_FALSE(empty.next());
}
