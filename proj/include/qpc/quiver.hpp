#ifndef QPC_QUIVER_HPP
#define QPC_QUIVER_HPP

#include <string>
#include <vector>

#include "qpc/errors.hpp"

namespace qpc {

struct Arrow {
  int source = 0;  // 1-based
  int target = 0;
  std::string label;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite directed multigraph with labeled arrows; vertices are 1..n.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int n, std::vector<Arrow> arrows);

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool has_loop() const;
  bool has_two_cycle() const;
  bool on_two_cycle(int vertex) const;
  /// Throws LoopPresent / TwoCyclePresent when the quiver is not a valid
  /// cluster-algebra carrier.
  void require_cluster_valid() const;

  /// Index of the arrow with the given label, or -1.
  int arrow_index(const std::string& label) const;

  int arrows_between(int from, int to) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;  // kept sorted by label
};

/// Skew-symmetric integer matrix b_ij = #{i->j} - #{j->i}.
using BMatrix = std::vector<std::vector<long long>>;

/// "a" <-> "a*" on labels.
std::string star_label(const std::string& label);

Quiver mutate_quiver(const Quiver& q, int i);
BMatrix b_matrix(const Quiver& q);
BMatrix mutate_b_matrix(BMatrix b, int k);

std::string quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const std::string& text);

}  // namespace qpc

#endif
