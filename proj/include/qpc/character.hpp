#ifndef QPC_CHARACTER_HPP
#define QPC_CHARACTER_HPP

#include <string>
#include <vector>

#include "qpc/jacobian.hpp"
#include "qpc/laurent.hpp"
#include "qpc/repgrass.hpp"
#include "qpc/seeds.hpp"

namespace qpc {

/// iota(e) = -B e. Calibrated once against the A2 seed oracle and re-checked
/// by the theorem harness on every run.
std::vector<int> iota(const BMatrix& b, const std::vector<int>& e);

struct CharInput {
  Representation module;
  std::vector<int> g;
};

/// x^g * sum over 0 <= e <= dims of chi(Gr_e(module)) x^{-iota(e)}.
LaurentPoly character(const CharInput& c, long long budget = kDefaultCountBudget);

/// Exact Laurent identity char(x) char(y) = char(e) + char(ep). Zero end
/// terms are rejected (the formula needs a one-dimensional extension pair).
bool check_multiplication(const CharInput& x, const CharInput& y,
                          const CharInput& e, const CharInput& ep,
                          long long budget = kDefaultCountBudget);

struct TheoremReport {
  bool ok = true;
  std::vector<std::string> matched;  // one line per verified variable
  std::string mismatch;              // first failure, empty when ok
};

/// Mutates the initial seed along `seq` and matches every cluster variable
/// against the type-A interval-module catalogue (machinery-computed
/// g-vectors) or, for initial variables, the shifted projectives.
/// Throws UnsupportedQuiver outside type A.
TheoremReport verify_theorem_main(const Quiver& q, const std::vector<int>& seq);

/// Same matching over every variable reached by seed BFS to `depth`.
TheoremReport verify_all_variables(const Quiver& q, int depth);

/// Shipped extension data: X, Y, middle term, split-free complement, plus
/// the character inputs of the associated multiplication quadruple.
struct ExtensionExample {
  std::string name;
  SESData ses;
  CharInput x, y, e, ep;
};

std::vector<ExtensionExample> shipped_extension_examples(const std::string& which);  // "a2"|"a3"

struct SuiteCheck {
  std::string name;
  bool pass = false;
};

/// Named verification suites: "a2", "a3", "cycle3".
std::vector<SuiteCheck> run_verify_suite(const std::string& suite);

}  // namespace qpc

#endif
