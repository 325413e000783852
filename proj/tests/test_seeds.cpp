#include <doctest.h>

#include "qpc/seeds.hpp"

using namespace qpc;

namespace {

Quiver a2() { return Quiver(2, {{1, 2, "a"}}); }
Quiver a3() { return Quiver(3, {{1, 2, "a"}, {2, 3, "b"}}); }

RationalFunction parse_simple(int n, const Poly& num, const Poly& den) {
  return RationalFunction(num, den);
}

}  // namespace

TEST_CASE("polynomial gcd and normalization") {
  // (x1^2 - x2^2) / (x1 + x2) reduces to x1 - x2
  Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
  RationalFunction r(x1 * x1 - x2 * x2, x1 + x2);
  CHECK(r == RationalFunction(x1 - x2, Poly::constant(2, 1)));
  // content cancellation: 2x1 / 4 = x1 / 2
  RationalFunction half(Poly::constant(2, 2) * x1, Poly::constant(2, 4));
  CHECK(half == RationalFunction(x1, Poly::constant(2, 2)));
  // sign convention: denominator leading coefficient positive
  RationalFunction neg(x1, -x2);
  CHECK(neg.den() == x2);
  CHECK(neg.num() == -x1);
}

TEST_CASE("laurent_check accepts monomial denominators only") {
  Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1), one = Poly::constant(2, 1);
  LaurentPoly l = laurent_check(RationalFunction(x2 + one, x1));
  CHECK(l.terms.size() == 2);
  CHECK(l.terms.at({-1, 1}) == 1);
  CHECK(l.terms.at({-1, 0}) == 1);

  CHECK_NOTHROW(laurent_check(RationalFunction(x1 + x2 + one, x1 * x2)));
  CHECK_THROWS_AS(laurent_check(RationalFunction(x1 + one, x1 + x2)), NotLaurent);
}

TEST_CASE("A2 exchange relation") {
  Seed s = initial_seed(a2());
  Seed m1 = mutate_seed(s, 1);
  Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1), one = Poly::constant(2, 1);
  CHECK(m1.cluster[0] == RationalFunction(x2 + one, x1));
  CHECK(m1.cluster[1] == s.cluster[1]);
  CHECK(m1.quiver == Quiver(2, {{2, 1, "a*"}}));
  // exchange identity: u'_1 u_1 = u_2 + 1
  CHECK(m1.cluster[0] * s.cluster[0] ==
        s.cluster[1] + RationalFunction::constant(2, 1));
}

TEST_CASE("seed mutation is involutive") {
  Seed s = initial_seed(a3());
  for (int i = 1; i <= 3; ++i) {
    Seed twice = mutate_seed(mutate_seed(s, i), i);
    CHECK(twice.cluster == s.cluster);
    CHECK(b_matrix(twice.quiver) == b_matrix(s.quiver));
  }
}

TEST_CASE("pentagon periodicity swaps the A2 variables") {
  Seed s = initial_seed(a2());
  for (int i : {1, 2, 1, 2, 1}) s = mutate_seed(s, i);
  Seed init = initial_seed(a2());
  CHECK(s.cluster[0] == init.cluster[1]);
  CHECK(s.cluster[1] == init.cluster[0]);
}

TEST_CASE("A2 exchange graph is the pentagon") {
  ExchangeGraph g = exchange_graph(a2(), 6);
  CHECK(g.seed_count == 5);
  CHECK(g.variables.size() == 5);
  CHECK(g.closed);
  CHECK(g.edges.size() == 5);
  Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1), one = Poly::constant(2, 1);
  std::vector<RationalFunction> expect{
      RationalFunction(x1, one), RationalFunction(x2, one),
      RationalFunction(x2 + one, x1), RationalFunction(x1 + one, x2),
      RationalFunction(x1 + x2 + one, x1 * x2)};
  std::sort(expect.begin(), expect.end());
  CHECK(g.variables == expect);
}

TEST_CASE("A3 exchange graph closes with 9 variables and 14 seeds") {
  ExchangeGraph g = exchange_graph(a3(), 10);
  CHECK(g.seed_count == 14);
  CHECK(g.variables.size() == 9);
  CHECK(g.closed);
}

TEST_CASE("depth zero keeps only the initial cluster") {
  ExchangeGraph g = exchange_graph(a3(), 0);
  CHECK(g.seed_count == 1);
  CHECK(g.variables.size() == 3);
  CHECK_FALSE(g.closed);
}

TEST_CASE("every variable is a positive Laurent polynomial") {
  for (const Quiver& q : {a2(), a3(), Quiver(2, {{1, 2, "a"}, {1, 2, "b"}})}) {
    // the Kronecker quiver does not close; cap the depth
    int depth = q.arrows_between(1, 2) == 2 ? 4 : 10;
    for (const auto& v : cluster_variables(q, depth)) {
      LaurentPoly l = laurent_check(v);
      CHECK(l.all_positive_coeffs());
    }
  }
}

TEST_CASE("seed budget") {
  CHECK_THROWS_AS(exchange_graph(a3(), 10, 3), BudgetExceeded);
}

TEST_CASE("canonical form ignores exploration order") {
  // mutate to the same seed along two routes: mu_2 mu_1 vs the same seed
  // reached from a relabeled start is not available; instead check that the
  // canonical form of a seed equals that of its cluster-permuted copy
  Seed s = mutate_seed(initial_seed(a3()), 1);
  Seed t = s;
  std::swap(t.cluster[0], t.cluster[2]);
  // swap vertices 1 and 3 in the quiver accordingly
  std::vector<Arrow> relabeled;
  for (const auto& a : t.quiver.arrows()) {
    auto flip = [](int v) { return v == 1 ? 3 : v == 3 ? 1 : v; };
    relabeled.push_back({flip(a.source), flip(a.target), a.label});
  }
  t.quiver = Quiver(3, relabeled);
  CHECK(seed_canonical_form(s) == seed_canonical_form(t));
}

TEST_CASE("mutation rejects invalid vertices") {
  Quiver two(2, {{1, 2, "a"}, {2, 1, "b"}});
  CHECK_THROWS_AS(initial_seed(two), TwoCyclePresent);
  CHECK_THROWS_AS(mutate_seed(initial_seed(a2()), 5), DimOutOfRange);
}
