#include <doctest.h>

#include "qpc/jacobian.hpp"

using namespace qpc;

namespace {

QP a2_qp() {
  Quiver q(2, {{1, 2, "a"}});
  return QP{q, Potential::zero(q, kDefaultTruncDegree)};
}

QP cycle3_qp() {
  Quiver q(3, {{1, 2, "a"}, {2, 3, "b"}, {3, 1, "c"}});
  PathSeries s(q, kDefaultTruncDegree);
  s.add_term(Path{1, {"a", "b", "c"}}, Rat(1));
  return QP{q, Potential(std::move(s))};
}

QP loop_qp() {
  Quiver q(1, {{1, 1, "t"}});
  return QP{q, Potential::zero(q, kDefaultTruncDegree)};
}

}  // namespace

TEST_CASE("truncated Jacobian of the arrow quiver") {
  TruncatedJacobian j = truncated_jacobian(a2_qp(), 10);
  REQUIRE(j.dims().size() == 11);
  CHECK(j.dims()[0] == 2);
  CHECK(j.dims()[1] == 1);
  for (int d = 2; d <= 10; ++d) CHECK(j.dims()[d] == 0);
  CHECK(j.total_dim() == 3);
  CHECK(j.stabilized());
}

TEST_CASE("truncated Jacobian of the 3-cycle with its cubic potential") {
  TruncatedJacobian j = truncated_jacobian(cycle3_qp(), 10);
  CHECK(j.dims()[0] == 3);
  CHECK(j.dims()[1] == 3);
  CHECK(j.dims()[2] == 0);
  CHECK(j.total_dim() == 6);
  CHECK(j.stabilized());
  // each degree-2 path is killed by one of the relations cb, ac, ba
  CHECK_FALSE(j.is_basis_path(Path{1, {"a", "b"}}));
  CHECK(j.is_basis_path(Path{1, {"a"}}));
}

TEST_CASE("a free loop never stabilizes") {
  TruncatedJacobian j = truncated_jacobian(loop_qp(), 10);
  for (int d = 0; d <= 10; ++d) CHECK(j.dims()[d] == 1);
  CHECK_FALSE(j.stabilized());
}

TEST_CASE("acyclic zero-potential total dimension counts paths") {
  Quiver q(4, {{1, 2, "a"}, {2, 3, "b"}, {2, 4, "c"}, {1, 3, "d"}});
  QP qp{q, Potential::zero(q, kDefaultTruncDegree)};
  TruncatedJacobian j = truncated_jacobian(qp, 8);
  // paths: 4 idempotents + 4 arrows + ba, ca, db? none; d:1->3 stops.
  // degree 2: b a (1->3), c a (1->4): 2 paths
  CHECK(j.total_dim() == 10);
  CHECK(j.stabilized());
}

TEST_CASE("simple and projective modules over A2") {
  TruncatedJacobian j = truncated_jacobian(a2_qp(), 10);
  Representation s1 = simple_module(j, 1);
  CHECK(s1.dims == std::vector<int>{1, 0});
  CHECK(s1.maps.empty());

  Representation p1 = projective_module(j, 1);
  CHECK(p1.dims == std::vector<int>{1, 1});
  CHECK(p1.matrix("a") == MatZ{{Int(1)}});

  Representation p2 = projective_module(j, 2);
  CHECK(p2.dims == std::vector<int>{0, 1});
}

TEST_CASE("projective module over the 3-cycle Jacobian") {
  TruncatedJacobian j = truncated_jacobian(cycle3_qp(), 10);
  Representation p1 = projective_module(j, 1);
  CHECK(p1.dims == std::vector<int>{1, 1, 0});
  CHECK(p1.matrix("a") == MatZ{{Int(1)}});
}

TEST_CASE("projective module requires stabilization") {
  TruncatedJacobian j = truncated_jacobian(loop_qp(), 10);
  CHECK_THROWS_AS(projective_module(j, 1), NotFiniteDimensional);
}

TEST_CASE("minimal presentations over A2") {
  TruncatedJacobian j = truncated_jacobian(a2_qp(), 10);
  Quiver q = j.qp().quiver;

  Presentation s1 = minimal_presentation(j, simple_module(j, 1));
  CHECK(s1.p0 == std::vector<int>{1, 0});
  CHECK(s1.p1 == std::vector<int>{0, 1});

  Presentation s2 = minimal_presentation(j, simple_module(j, 2));
  CHECK(s2.p0 == std::vector<int>{0, 1});
  CHECK(s2.p1 == std::vector<int>{0, 0});

  Representation m{q, {1, 1}, {{"a", {{Int(1)}}}}};
  Presentation pm = minimal_presentation(j, m);
  CHECK(pm.p0 == std::vector<int>{1, 0});
  CHECK(pm.p1 == std::vector<int>{0, 0});
}

TEST_CASE("g-vectors over A2") {
  TruncatedJacobian j = truncated_jacobian(a2_qp(), 10);
  Quiver q = j.qp().quiver;
  CHECK(g_vector(j, simple_module(j, 1)) == std::vector<int>{-1, 1});
  CHECK(g_vector(j, simple_module(j, 2)) == std::vector<int>{0, -1});
  Representation m{q, {1, 1}, {{"a", {{Int(1)}}}}};
  CHECK(g_vector(j, m) == std::vector<int>{-1, 0});
}

TEST_CASE("g-vectors over the linear A3 quiver") {
  Quiver q(3, {{1, 2, "a"}, {2, 3, "b"}});
  QP qp{q, Potential::zero(q, kDefaultTruncDegree)};
  TruncatedJacobian j = truncated_jacobian(qp, 10);
  CHECK(g_vector(j, simple_module(j, 2)) == std::vector<int>{0, -1, 1});
  Representation m12{q, {1, 1, 0}, {{"a", {{Int(1)}}}}};
  CHECK(g_vector(j, m12) == std::vector<int>{-1, 0, 1});
  Representation m123{q, {1, 1, 1}, {{"a", {{Int(1)}}}, {"b", {{Int(1)}}}}};
  CHECK(g_vector(j, m123) == std::vector<int>{-1, 0, 0});
}

TEST_CASE("relation check rejects a non-module") {
  TruncatedJacobian j = truncated_jacobian(cycle3_qp(), 10);
  Quiver q = j.qp().quiver;
  // all three maps identity violates ba = 0 etc.
  Representation bad{q, {1, 1, 1},
                     {{"a", {{Int(1)}}}, {"b", {{Int(1)}}}, {"c", {{Int(1)}}}}};
  CHECK_THROWS_AS(minimal_presentation(j, bad), RelationViolation);
}

TEST_CASE("presentation difference is independent of the lift") {
  Quiver q(3, {{1, 2, "a"}, {2, 3, "b"}});
  QP qp{q, Potential::zero(q, kDefaultTruncDegree)};
  TruncatedJacobian j = truncated_jacobian(qp, 10);
  std::vector<Representation> mods{
      simple_module(j, 1), simple_module(j, 2), simple_module(j, 3),
      Representation{q, {1, 1, 0}, {{"a", {{Int(1)}}}}},
      Representation{q, {0, 1, 1}, {{"b", {{Int(1)}}}}},
      Representation{q, {1, 1, 1}, {{"a", {{Int(1)}}}, {"b", {{Int(1)}}}}},
      direct_sum(simple_module(j, 1), Representation{q, {0, 1, 1}, {{"b", {{Int(1)}}}}})};
  for (const auto& m : mods) {
    Presentation base = minimal_presentation(j, m);
    for (unsigned seed : {1u, 7u, 99u}) {
      Presentation alt = minimal_presentation_seeded(j, m, seed);
      for (std::size_t v = 0; v < base.p0.size(); ++v)
        CHECK(base.p1[v] - base.p0[v] == alt.p1[v] - alt.p0[v]);
    }
  }
}

TEST_CASE("g-vector of a module whose reflection is projective") {
  TruncatedJacobian j = truncated_jacobian(a2_qp(), 10);
  Quiver q = j.qp().quiver;
  // reflection of (1,1)-identity is the projective at 1
  Representation m{q, {1, 1}, {{"a", {{Int(1)}}}}};
  std::vector<int> g = g_vector(j, m);
  int nonzero = 0;
  for (int x : g)
    if (x != 0) ++nonzero;
  CHECK(nonzero == 1);
  CHECK(*std::min_element(g.begin(), g.end()) == -1);
}

TEST_CASE("dims are stable under repeated construction") {
  TruncatedJacobian a = truncated_jacobian(cycle3_qp(), 9);
  TruncatedJacobian b = truncated_jacobian(cycle3_qp(), 12);
  for (int d = 0; d <= 9; ++d) CHECK(a.dims()[d] == b.dims()[d]);
}
