#ifndef QPC_REPGRASS_HPP
#define QPC_REPGRASS_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpc/representation.hpp"

namespace qpc {

constexpr long long kDefaultCountBudget = 10000000;

/// Number of subrepresentations of dimension vector e over F_q.
/// Enumerates row-echelon subspace tuples with arrow-stability pruning;
/// throws BudgetExceeded when the Gaussian-binomial bound passes `budget`.
long long count_subreps(const Representation& m, const std::vector<int>& e, u64 q,
                        long long budget = kDefaultCountBudget);

/// Euler characteristic of the subrepresentation Grassmannian, certified by
/// counting over two disjoint prime samples and interpolating. Throws
/// NotPolynomialCount if the samples disagree with a single polynomial.
long long euler_char(const Representation& m, const std::vector<int>& e,
                     long long budget = kDefaultCountBudget);

/// Gaussian binomial (d choose k)_q.
Int gauss_binomial(int d, int k, const Int& q);

/// Module shadows of the two triangles X -> E -> Y and Y -> E' -> X.
/// Maps are per-vertex matrices in column convention (i[v]: X_v -> E_v etc).
struct SESData {
  Representation x, y, e, ep;
  std::vector<MatZ> i, p, ip, pp;
};

/// Shape checks, module-map property, p o i = 0 and exactness in the middle,
/// on both triangles. Throws on failure.
void validate_ses(const SESData& s);

/// Per-(U, V) point counts of the strata G_{U,V} (inside Gr(FE)) and
/// G'_{U,V} (inside Gr(FE')), refined by the dimension vector of W.
struct StrataTable {
  struct Cell {
    std::map<std::vector<int>, long long> by_dim_g, by_dim_gp;
    long long total_g = 0, total_gp = 0;
  };
  std::map<std::pair<std::string, std::string>, Cell> cells;  // keyed (U, V)
  std::map<std::string, std::vector<int>> u_dims, v_dims;
};

StrataTable strata_counts(const SESData& s, u64 q,
                          long long budget = kDefaultCountBudget);

/// True iff for every submodule pair (U, V) exactly one of G_{U,V} and
/// G'_{U,V} is non-empty over F_q.
bool dichotomy_check(const SESData& s, u64 q,
                     long long budget = kDefaultCountBudget);

/// True iff dim U + dim V - dim W is the constant Ker-dimension vector on
/// every stratum member, on both sides.
bool dimension_identity_check(const SESData& s, u64 q,
                              long long budget = kDefaultCountBudget);

/// chi(Gr_e(FX)) * chi(Gr_f(FY)) = sum over g of chi of the (e, f) strata on
/// both sides, all computed by certified interpolation.
bool euler_lemma_check(const SESData& s, const std::vector<int>& e,
                       const std::vector<int>& f,
                       long long budget = kDefaultCountBudget);

std::string ses_to_json(const SESData& s);
SESData ses_from_json(const Quiver& q, const std::string& text);

}  // namespace qpc

#endif
