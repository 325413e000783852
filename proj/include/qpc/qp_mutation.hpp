#ifndef QPC_QP_MUTATION_HPP
#define QPC_QP_MUTATION_HPP

#include <map>
#include <string>
#include <vector>

#include "qpc/path_series.hpp"

namespace qpc {

/// Premutation: composite arrows, arrow reversal at i, and the potential
/// [W] + sum a*b*[ba]. No reduction.
QP premutate(const QP& qp, int i);

struct ReduceResult {
  QP reduced;
  QP trivial;
  /// Right-equivalence witness: images of the input quiver's arrows.
  std::map<std::string, PathSeries> witness;
  /// Set when elimination failed to stabilize below trunc_degree; the
  /// partial result is still returned, with exact=false on its potential.
  bool truncation_exhausted = false;
};

/// Splits (Q,W) into reduced + trivial parts by iterated elimination of
/// degree-2 terms.
ReduceResult reduce(const QP& qp);

struct MutationResult {
  QP qp;
  QP trivial;
  std::map<std::string, PathSeries> witness;
};

/// mu_i = reduced part of the premutation. Throws TruncationExhausted when
/// reduction does not stabilize.
MutationResult mutate_qp_full(const QP& qp, int i);
QP mutate_qp(const QP& qp, int i);

bool is_admissible(const QP& qp, const std::vector<int>& seq);

struct Obstruction {
  std::vector<int> sequence;  // prefix ending at the undefined mutation
  int vertex = 0;
};

struct ProbeReport {
  int depth = 0;
  std::vector<Obstruction> obstructions;  // empty = no obstruction up to depth
  bool obstructed() const { return !obstructions.empty(); }
};

/// Exhaustively replays every mutation sequence up to `depth`.
ProbeReport probe_nondegeneracy(const QP& qp, int depth);

}  // namespace qpc

#endif
