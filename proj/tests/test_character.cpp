#include <doctest.h>

#include "qpc/character.hpp"

using namespace qpc;

namespace {

Quiver a2() { return Quiver(2, {{1, 2, "a"}}); }
Quiver a3() { return Quiver(3, {{1, 2, "a"}, {2, 3, "b"}}); }

CharInput module_with_g(const Quiver& q, const std::vector<int>& dims,
                        const std::map<std::string, MatZ>& maps) {
  Representation m{q, dims, maps};
  TruncatedJacobian j = truncated_jacobian(QP{q, Potential::zero(q, 6)}, 6);
  return CharInput{m, g_vector(j, m)};
}

}  // namespace

TEST_CASE("iota is -B e") {
  BMatrix b = b_matrix(a2());
  CHECK(iota(b, {1, 0}) == std::vector<int>{0, 1});
  CHECK(iota(b, {0, 1}) == std::vector<int>{-1, 0});
  CHECK(iota(b, {0, 0}) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(iota(b, {1, 0, 0}), LengthMismatch);
}

TEST_CASE("character of the zero module is a single monomial") {
  Representation z = zero_representation(a3());
  LaurentPoly l = character({z, {2, -1, 3}});
  CHECK(l.terms.size() == 1);
  CHECK(l.terms.at({2, -1, 3}) == 1);
}

TEST_CASE("A2 character goldens") {
  CharInput s1 = module_with_g(a2(), {1, 0}, {});
  CHECK(s1.g == std::vector<int>{-1, 1});
  LaurentPoly l = character(s1);
  // (x2 + 1) / x1
  CHECK(l.terms.size() == 2);
  CHECK(l.terms.at({-1, 1}) == 1);
  CHECK(l.terms.at({-1, 0}) == 1);

  CharInput s2 = module_with_g(a2(), {0, 1}, {});
  LaurentPoly l2 = character(s2);
  // (x1 + 1) / x2
  CHECK(l2.terms.at({1, -1}) == 1);
  CHECK(l2.terms.at({0, -1}) == 1);

  CharInput m12 = module_with_g(a2(), {1, 1}, {{"a", MatZ{{Int(1)}}}});
  LaurentPoly l3 = character(m12);
  // (x2 + 1) / (x1 x2) + ... = (x1 + x2 + 1)/(x1 x2)
  CHECK(l3.terms.size() == 3);
  CHECK(l3.terms.at({0, -1}) == 1);
  CHECK(l3.terms.at({-1, 0}) == 1);
  CHECK(l3.terms.at({-1, -1}) == 1);
}

TEST_CASE("A3 character goldens") {
  CharInput s2 = module_with_g(a3(), {0, 1, 0}, {});
  LaurentPoly l = character(s2);
  // (x1 + x3) / x2
  CHECK(l.terms.size() == 2);
  CHECK(l.terms.at({1, -1, 0}) == 1);
  CHECK(l.terms.at({0, -1, 1}) == 1);

  CharInput m12 = module_with_g(a3(), {1, 1, 0}, {{"a", MatZ{{Int(1)}}}});
  LaurentPoly lm = character(m12);
  // (x2 x3 + x3 + x1) / (x1 x2)
  CHECK(lm.terms.size() == 3);
  CHECK(lm.terms.at({-1, 0, 1}) == 1);
  CHECK(lm.terms.at({-1, -1, 1}) == 1);
  CHECK(lm.terms.at({0, -1, 0}) == 1);

  // multiplication identity behind the A2 wall inside A3:
  // char(S_1) char(S_2) = char(M12) + 1
  CharInput s1 = module_with_g(a3(), {1, 0, 0}, {});
  LaurentPoly lhs = character(s1) * character(s2);
  LaurentPoly rhs = lm + LaurentPoly::monomial({0, 0, 0});
  CHECK(lhs == rhs);
}

TEST_CASE("character is multiplicative over direct sums") {
  CharInput s1 = module_with_g(a3(), {1, 0, 0}, {});
  CharInput m23 = module_with_g(a3(), {0, 1, 1}, {{"b", MatZ{{Int(1)}}}});
  Representation sum = direct_sum(s1.module, m23.module);
  std::vector<int> g(3);
  for (int v = 0; v < 3; ++v) g[v] = s1.g[v] + m23.g[v];
  CHECK(character({sum, g}) == character(s1) * character(m23));
}

TEST_CASE("box endpoints contribute x^g and x^{g + B dims}") {
  CharInput m = module_with_g(a3(), {1, 1, 1},
                              {{"a", MatZ{{Int(1)}}}, {"b", MatZ{{Int(1)}}}});
  LaurentPoly l = character(m);
  CHECK(l.terms.count(m.g) == 1);
  BMatrix b = b_matrix(a3());
  std::vector<int> neg = iota(b, m.module.dims);
  std::vector<int> top(3);
  for (int v = 0; v < 3; ++v) top[v] = m.g[v] - neg[v];
  CHECK(l.terms.count(top) == 1);
}

TEST_CASE("multiplication formula on shipped extension pairs") {
  for (const std::string& which : {"a2", "a3"}) {
    for (const auto& ex : shipped_extension_examples(which)) {
      validate_ses(ex.ses);
      CHECK(check_multiplication(ex.x, ex.y, ex.e, ex.ep));
    }
  }
  CHECK_THROWS_AS(shipped_extension_examples("d4"), ParseError);
}

TEST_CASE("multiplication formula rejects zero end terms") {
  auto exs = shipped_extension_examples("a2");
  CharInput zero{zero_representation(a2()), {0, 0}};
  CHECK_THROWS_AS(check_multiplication(zero, exs[0].y, exs[0].e, exs[0].ep),
                  NotRepresentable);
}

TEST_CASE("theorem harness matches mutated clusters") {
  TheoremReport pentagon = verify_theorem_main(a2(), {1, 2, 1, 2, 1});
  CHECK(pentagon.ok);
  CHECK(pentagon.matched.size() == 2);

  CHECK(verify_all_variables(a2(), 6).ok);
  CHECK(verify_all_variables(a3(), 10).ok);

  Quiver cyc(3, {{1, 2, "a"}, {2, 3, "b"}, {3, 1, "c"}});
  CHECK_THROWS_AS(verify_theorem_main(cyc, {1}), UnsupportedQuiver);
}

TEST_CASE("verification suites") {
  for (const std::string& suite : {"a2", "a3", "cycle3"}) {
    auto checks = run_verify_suite(suite);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
      INFO(suite << ": " << c.name);
      CHECK(c.pass);
    }
  }
  CHECK_THROWS_AS(run_verify_suite("nope"), ParseError);
}
