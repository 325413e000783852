#ifndef QPC_REPRESENTATION_HPP
#define QPC_REPRESENTATION_HPP

#include <map>
#include <string>
#include <vector>

#include "qpc/linalg.hpp"
#include "qpc/path_series.hpp"
#include "qpc/quiver.hpp"

namespace qpc {

using MatZ = std::vector<std::vector<Int>>;

/// Right-module data: the matrix for arrow a: i->j maps the vertex-j space
/// to the vertex-i space (a representation of Q^op), so it has d_i rows and
/// d_j columns.
struct Representation {
  Quiver quiver;
  std::vector<int> dims;                 // length n
  std::map<std::string, MatZ> maps;      // absent arrow = zero matrix

  int dim_at(int vertex) const { return dims[vertex - 1]; }
  int total_dim() const;

  /// Matrix for an arrow, materializing zeros for absent entries.
  MatZ matrix(const std::string& label) const;

  void validate_shapes() const;  // throws DimOutOfRange on any mismatch
};

Representation zero_representation(const Quiver& q);
Representation direct_sum(const Representation& a, const Representation& b);

/// Same dims, every arrow matrix transposed (swaps the Q/Q^op reading).
Representation reflect(const Representation& m);

/// Evaluates a path on the representation: the composite matrix mapping the
/// path-target space to the path-source space.
MatQ evaluate_path(const Representation& m, const Path& p);

/// Checks the Jacobian relations d_a W = 0 on m for every arrow a.
/// Throws RelationViolation on failure.
void check_relations(const Representation& m, const Potential& w);

std::string representation_to_json(const Representation& m);
Representation representation_from_json(const Quiver& q, const std::string& text);

MatQ to_matq(const MatZ& m);

}  // namespace qpc

#endif
