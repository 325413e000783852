#include <doctest.h>

#include "qpc/qp_mutation.hpp"
#include "qpc/quiver.hpp"

using namespace qpc;

namespace {

Quiver cycle3() { return Quiver(3, {{1, 2, "a"}, {2, 3, "b"}, {3, 1, "c"}}); }

QP cycle3_qp(int trunc = kDefaultTruncDegree) {
  PathSeries s(cycle3(), trunc);
  s.add_term(Path{1, {"a", "b", "c"}}, Rat(1));
  return QP{cycle3(), Potential(std::move(s))};
}

QP a2_qp() {
  Quiver q(2, {{1, 2, "a"}});
  return QP{q, Potential::zero(q, kDefaultTruncDegree)};
}

}  // namespace

TEST_CASE("premutation of the 3-cycle at vertex 1") {
  QP pre = premutate(cycle3_qp(), 1);
  Quiver expect(3, {{2, 3, "b"}, {3, 2, "[ac]"}, {2, 1, "a*"}, {1, 3, "c*"}});
  CHECK(pre.quiver == expect);
  PathSeries w(expect, kDefaultTruncDegree);
  w.add_term(Path{3, {"[ac]", "b"}}, Rat(1));         // word b[ac], cyclically [ac]b
  w.add_term(Path{3, {"[ac]", "a*", "c*"}}, Rat(1));  // word c*a*[ac]
  CHECK(pre.potential.series() == Potential(w).series());
}

TEST_CASE("premutation of A2 in both directions") {
  QP m1 = premutate(a2_qp(), 1);
  CHECK(m1.quiver == Quiver(2, {{2, 1, "a*"}}));
  CHECK(m1.potential.is_zero());
  QP m2 = premutate(a2_qp(), 2);
  CHECK(m2.quiver == Quiver(2, {{2, 1, "a*"}}));
  CHECK(m2.potential.is_zero());
}

TEST_CASE("reduction splits the premutated 3-cycle") {
  ReduceResult r = reduce(premutate(cycle3_qp(), 1));
  CHECK_FALSE(r.truncation_exhausted);
  CHECK(r.reduced.quiver == Quiver(3, {{2, 1, "a*"}, {1, 3, "c*"}}));
  CHECK(r.reduced.potential.is_zero());
  CHECK(r.trivial.quiver == Quiver(3, {{2, 3, "b"}, {3, 2, "[ac]"}}));
  PathSeries tw(r.trivial.quiver, kDefaultTruncDegree);
  tw.add_term(Path{3, {"[ac]", "b"}}, Rat(1));
  CHECK(r.trivial.potential.series() == Potential(tw).series());
}

TEST_CASE("reduction witness is a right equivalence on the golden case") {
  QP pre = premutate(cycle3_qp(), 1);
  ReduceResult r = reduce(pre);
  // applying the witness to W~ and erasing the trivial arrows yields W_red
  Potential image(substitute(pre.potential.series(), r.witness));
  PathSeries surviving(pre.quiver, kDefaultTruncDegree);
  for (const auto& [p, c] : image.series().terms()) {
    bool trivial = false;
    for (const auto& l : p.labels)
      if (r.trivial.quiver.arrow_index(l) >= 0) trivial = true;
    if (!trivial) surviving.add_term(p, c);
  }
  CHECK(surviving.is_zero());  // reduced potential is 0 here
}

TEST_CASE("already-reduced potential is untouched") {
  ReduceResult r = reduce(cycle3_qp());
  CHECK(r.reduced.quiver == cycle3());
  CHECK(r.reduced.potential.series() == cycle3_qp().potential.series());
  CHECK(r.trivial.quiver.arrows().empty());
  CHECK(r.trivial.potential.is_zero());
}

TEST_CASE("purely quadratic QP is entirely trivial") {
  Quiver q(2, {{1, 2, "a"}, {2, 1, "b"}});
  PathSeries s(q, kDefaultTruncDegree);
  s.add_term(Path{1, {"a", "b"}}, Rat(1));
  QP qp{q, Potential(std::move(s))};
  ReduceResult r = reduce(qp);
  CHECK(r.reduced.quiver.arrows().empty());
  CHECK(r.reduced.potential.is_zero());
  CHECK(r.trivial.quiver == q);
  CHECK(r.trivial.potential.series() == qp.potential.series());
}

TEST_CASE("mutate_qp golden cases") {
  QP m = mutate_qp(cycle3_qp(), 1);
  CHECK(m.quiver == Quiver(3, {{2, 1, "a*"}, {1, 3, "c*"}}));
  CHECK(m.potential.is_zero());

  QP a2m = mutate_qp(a2_qp(), 1);
  CHECK(a2m.quiver == Quiver(2, {{2, 1, "a*"}}));
  CHECK(a2m.potential.is_zero());
}

TEST_CASE("double QP mutation restores the B-matrix") {
  for (int i = 1; i <= 3; ++i) {
    QP twice = mutate_qp(mutate_qp(cycle3_qp(), i), i);
    CHECK(b_matrix(twice.quiver) == b_matrix(cycle3()));
  }
}

TEST_CASE("QP mutation agrees with B-matrix mutation") {
  for (int i = 1; i <= 3; ++i) {
    QP m = mutate_qp(cycle3_qp(), i);
    CHECK(b_matrix(m.quiver) == mutate_b_matrix(b_matrix(cycle3()), i));
    CHECK(!m.quiver.on_two_cycle(i));
  }
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(cycle3_qp(), {1, 2}));
  Quiver two(2, {{1, 2, "a"}, {2, 1, "b"}});
  PathSeries s(two, kDefaultTruncDegree);
  s.add_term(Path{1, {"a", "b"}}, Rat(1));
  QP qp{two, Potential(std::move(s))};
  CHECK_FALSE(is_admissible(qp, {1}));
  CHECK(is_admissible(qp, {}));
}

TEST_CASE("non-degeneracy probe") {
  ProbeReport ok = probe_nondegeneracy(cycle3_qp(), 4);
  CHECK_FALSE(ok.obstructed());

  Quiver two(2, {{1, 2, "a"}, {2, 1, "b"}});
  PathSeries s(two, kDefaultTruncDegree);
  s.add_term(Path{1, {"a", "b"}}, Rat(1));
  ProbeReport bad = probe_nondegeneracy(QP{two, Potential(std::move(s))}, 2);
  REQUIRE(bad.obstructed());
  bool at1 = false, at2 = false;
  for (const auto& o : bad.obstructions) {
    if (o.sequence == std::vector<int>{1}) at1 = true;
    if (o.sequence == std::vector<int>{2}) at2 = true;
  }
  CHECK(at1);
  CHECK(at2);
}

TEST_CASE("acyclic QP with zero potential has no obstruction") {
  Quiver a3(3, {{1, 2, "a"}, {2, 3, "b"}});
  QP qp{a3, Potential::zero(a3, kDefaultTruncDegree)};
  CHECK_FALSE(probe_nondegeneracy(qp, 3).obstructed());
}
