#include <stdexcept>

#include "doctest.h"
#include "vhc/hom_search.hpp"
#include "vhc/permutation.hpp"
#include "vhc/presentation.hpp"

using namespace vhc;

TEST_CASE("permutations") {
  const Permutation c = Permutation::cycle(3, {0, 1, 2});
  CHECK(c.images() == std::vector<std::uint32_t>{1, 2, 0});
  CHECK(c.inverse().images() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(c.then(c.inverse()).is_identity());
  const Permutation t = Permutation::cycle(3, {0, 1});
  // apply c then t: 0 -> 1 -> 0
  CHECK(c.then(t)(0) == 0);
  CHECK(t.least_moved_point() == 0);
  CHECK(Permutation::identity(3).least_moved_point() == 3);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);

  CHECK(all_permutations(3).size() == 6);
  CHECK(all_permutations(3).front().is_identity());
  const std::vector<Permutation> gens{c, t};
  CHECK(generated_group(gens, 3).size() == 6);
  CHECK(is_transitive(gens, 3));
  const std::vector<Permutation> id{Permutation::identity(2)};
  CHECK_FALSE(is_transitive(id, 2));
  CHECK(orbit(std::vector<Permutation>{t}, 3, 2) == std::vector<std::uint32_t>{2});
  const Permutation s = Permutation::cycle(3, {1, 2});
  CHECK(conjugate(t, s) == Permutation::cycle(3, {0, 2}));
}

TEST_CASE("presentations") {
  const GroupPresentation p({"a", "b"}, std::vector<std::string>{"abAB"});
  CHECK(p.relators().front() == Word{1, 2, -1, -2});
  CHECK(p.format_word({1, -2}) == "aB");
  const GroupPresentation q({"a"}, std::vector<std::string>{"aaaA"});
  CHECK(q.relators().front() == Word{1, 1});
  CHECK_THROWS_AS(GroupPresentation({"a"}, std::vector<std::string>{"aA"}), std::invalid_argument);
  CHECK_THROWS_AS(GroupPresentation({"a"}, std::vector<std::string>{"ab"}), std::invalid_argument);
  CHECK_THROWS_AS(GroupPresentation({"ab"}, std::vector<std::string>{}), std::invalid_argument);
  CHECK(reduce_word({1, 2, -2, -1, 3}) == Word{3});
  CHECK(inverse_word({1, -2}) == Word{2, -1});
}

TEST_CASE("homomorphism counts") {
  // Z^2 -> S_3: commuting pairs number |S_3| * (number of classes) = 18
  const GroupPresentation z2({"a", "b"}, std::vector<std::string>{"abAB"});
  HomStats stats;
  HomEnumerator en(z2.words(), 3);
  CHECK(en.run_all([](auto) { return false; }, stats) == HomEnumerator::Result::Completed);
  CHECK(stats.homs == 18);

  // free group of rank 2 -> S_3: 36
  HomStats free_stats;
  HomEnumerator fr(WordPresentation{2, {}}, 3);
  fr.run_all([](auto) { return false; }, free_stats);
  CHECK(free_stats.homs == 36);

  // partitions add up
  HomStats parts;
  for (std::size_t k = 0; k < en.partitions(); ++k) en.run(k, [](auto) { return false; }, parts);
  CHECK(parts == stats);

  HomStats limited;
  CHECK(en.run_all([](auto) { return false; }, limited, 5) == HomEnumerator::Result::Truncated);
  CHECK(limited.nodes == 5);

  // every hom satisfies the relators
  en.run_all(
      [&](std::span<const std::uint32_t> idx) {
        CHECK(satisfies_relators(z2.words(), en.images(idx), 3));
        return false;
      },
      stats);
}
