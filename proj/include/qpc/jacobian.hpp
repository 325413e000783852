#ifndef QPC_JACOBIAN_HPP
#define QPC_JACOBIAN_HPP

#include <map>
#include <utility>
#include <vector>

#include "qpc/path_series.hpp"
#include "qpc/representation.hpp"

namespace qpc {

/// kQ^/(closure of the d_a W), computed degree by degree up to max_degree.
/// Basis paths are the standard monomials for the (degree, lex) term order;
/// pivots are the leading terms of the truncated relation span.
class TruncatedJacobian {
 public:
  const QP& qp() const { return qp_; }
  int max_degree() const { return max_degree_; }
  const std::vector<int>& dims() const { return dims_; }            // 0..max_degree
  const std::vector<std::vector<Path>>& basis() const { return basis_; }
  bool stabilized() const { return stabilized_; }
  int total_dim() const;

  /// Reduces every reducible term against the relation rows; the result is
  /// supported on basis paths only.
  PathSeries normal_form(PathSeries s) const;
  bool is_basis_path(const Path& p) const;

 private:
  friend TruncatedJacobian truncated_jacobian(const QP& qp, int N, int window);

  QP qp_;
  int max_degree_ = 0;
  std::vector<std::vector<Path>> basis_;
  std::vector<int> dims_;
  bool stabilized_ = false;
  // pivot (degree, path) -> monic relation whose least term is the pivot
  std::map<std::pair<int, Path>, PathSeries> rows_;
};

TruncatedJacobian truncated_jacobian(const QP& qp, int N, int window = 3);

Representation simple_module(const TruncatedJacobian& j, int vertex);

/// e_i J as a right module, in the standard matrix format. Requires a
/// stabilized truncation; throws NotFiniteDimensional otherwise.
Representation projective_module(const TruncatedJacobian& j, int vertex);

/// Projective multiplicity tuples of a minimal presentation P1 -> P0 -> M.
/// The input matrices are read against the quiver Q itself (the transpose of
/// the stored right-module action), matching the g-vector convention.
struct Presentation {
  std::vector<int> p1, p0;  // multiplicities per vertex
};

Presentation minimal_presentation(const TruncatedJacobian& j, const Representation& m);

/// Same computation with randomized lifts of the top; the multiplicity
/// difference p1 - p0 must not depend on the choice.
Presentation minimal_presentation_seeded(const TruncatedJacobian& j,
                                         const Representation& m, unsigned seed);

std::vector<int> g_vector(const TruncatedJacobian& j, const Representation& m);

}  // namespace qpc

#endif
