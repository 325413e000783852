#include <doctest.h>

#include <random>

#include "qpc/quiver.hpp"

using namespace qpc;

namespace {

Quiver a2() { return Quiver(2, {{1, 2, "a"}}); }
Quiver a3() { return Quiver(3, {{1, 2, "a"}, {2, 3, "b"}}); }
Quiver kronecker() { return Quiver(2, {{1, 2, "a"}, {1, 2, "b"}}); }
Quiver cycle3() { return Quiver(3, {{1, 2, "a"}, {2, 3, "b"}, {3, 1, "c"}}); }

Quiver random_cluster_quiver(std::mt19937& rng) {
  std::uniform_int_distribution<int> nd(2, 6), md(0, 3), coin(0, 1);
  int n = nd(rng);
  std::vector<Arrow> arrows;
  int k = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      int mult = md(rng);
      bool fwd = coin(rng);
      for (int t = 0; t < mult; ++t)
        arrows.push_back(fwd ? Arrow{u, v, "a" + std::to_string(k++)}
                             : Arrow{v, u, "a" + std::to_string(k++)});
    }
  return Quiver(n, arrows);
}

}  // namespace

TEST_CASE("single arrow reverses under mutation at source") {
  Quiver m = mutate_quiver(a2(), 1);
  REQUIRE(m.arrows().size() == 1);
  CHECK(m.arrows()[0] == Arrow{2, 1, "a*"});
}

TEST_CASE("A3 mutation at middle vertex yields oriented 3-cycle") {
  Quiver m = mutate_quiver(a3(), 2);
  REQUIRE(m.arrows().size() == 3);
  CHECK(m.arrow_index("a*") >= 0);
  CHECK(m.arrow_index("b*") >= 0);
  CHECK(m.arrow_index("[ba]") >= 0);
  CHECK(m.arrows()[m.arrow_index("a*")] == Arrow{2, 1, "a*"});
  CHECK(m.arrows()[m.arrow_index("b*")] == Arrow{3, 2, "b*"});
  CHECK(m.arrows()[m.arrow_index("[ba]")] == Arrow{1, 3, "[ba]"});
}

TEST_CASE("Kronecker mutation adds no composites") {
  Quiver m = mutate_quiver(kronecker(), 1);
  REQUIRE(m.arrows().size() == 2);
  CHECK(m.arrows_between(2, 1) == 2);
}

TEST_CASE("b_matrix direct counts") {
  CHECK(b_matrix(a2()) == BMatrix{{0, 1}, {-1, 0}});
  CHECK(b_matrix(Quiver(2, {})) == BMatrix{{0, 0}, {0, 0}});
  CHECK(b_matrix(kronecker()) == BMatrix{{0, 2}, {-2, 0}});
}

TEST_CASE("mutate_b_matrix golden cases") {
  BMatrix b{{0, 1}, {-1, 0}};
  CHECK(mutate_b_matrix(b, 1) == BMatrix{{0, -1}, {1, 0}});
  CHECK(mutate_b_matrix(mutate_b_matrix(b, 1), 1) == b);
  CHECK(mutate_b_matrix(b_matrix(a3()), 2) == b_matrix(mutate_quiver(a3(), 2)));
}

TEST_CASE("mutation errors") {
  Quiver loop(1, {{1, 1, "t"}});
  CHECK_THROWS_AS(mutate_quiver(loop, 1), LoopPresent);
  Quiver twocycle(2, {{1, 2, "a"}, {2, 1, "b"}});
  CHECK_THROWS_AS(mutate_quiver(twocycle, 1), TwoCycleAtVertex);
  CHECK_THROWS_AS(b_matrix(twocycle), TwoCyclePresent);
}

TEST_CASE("quiver/matrix mutation commute on random quivers") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    Quiver q = random_cluster_quiver(rng);
    std::uniform_int_distribution<int> vd(1, q.vertex_count());
    int i = vd(rng);
    Quiver m = mutate_quiver(q, i);
    CHECK(b_matrix(m) == mutate_b_matrix(b_matrix(q), i));
    CHECK(!m.on_two_cycle(i));
    CHECK(b_matrix(mutate_quiver(m, i)) == b_matrix(q));
  }
}

TEST_CASE("quiver JSON round-trips and is canonically ordered") {
  Quiver q = cycle3();
  Quiver back = quiver_from_json(quiver_to_json(q));
  CHECK(back == q);
}
