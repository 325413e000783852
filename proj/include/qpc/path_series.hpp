#ifndef QPC_PATH_SERIES_HPP
#define QPC_PATH_SERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "qpc/quiver.hpp"
#include "qpc/rational.hpp"

namespace qpc {

/// A composable path, stored in application order: labels[0] is applied
/// first. The paper's word b_r...b_1 corresponds to labels = (b_1,...,b_r).
/// src disambiguates length-0 paths (vertex idempotents).
struct Path {
  int src = 0;
  std::vector<std::string> labels;

  int length() const { return static_cast<int>(labels.size()); }
  auto operator<=>(const Path&) const = default;
};

constexpr int kDefaultTruncDegree = 16;

/// Degree-truncated element of the completed path algebra kQ^.
class PathSeries {
 public:
  PathSeries() = default;
  PathSeries(Quiver quiver, int trunc_degree);

  static PathSeries arrow(const Quiver& q, const std::string& label, int trunc);
  static PathSeries idempotent(const Quiver& q, int vertex, int trunc);

  const Quiver& quiver() const { return quiver_; }
  int trunc_degree() const { return trunc_; }
  bool exact() const { return exact_; }
  const std::map<Path, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int path_target(const Path& p) const;
  bool path_composable(const Path& p) const;

  /// Adds c * p, dropping the term (and clearing `exact`) above trunc.
  void add_term(const Path& p, const Rat& c);
  void clear_exact() { exact_ = false; }

  PathSeries& operator+=(const PathSeries& other);
  PathSeries operator+(const PathSeries& other) const;
  PathSeries operator-() const;
  PathSeries operator-(const PathSeries& other) const;
  PathSeries scaled(const Rat& c) const;
  /// f * g = "f after g" (concatenate g's path, then f's).
  PathSeries operator*(const PathSeries& other) const;

  friend bool operator==(const PathSeries&, const PathSeries&);

  std::string to_string() const;  // words printed right-to-left

 private:
  void check_same_quiver(const PathSeries& other) const;

  Quiver quiver_;
  int trunc_ = kDefaultTruncDegree;
  bool exact_ = true;
  std::map<Path, Rat> terms_;
};

/// Applies an algebra endomorphism given by images of (some) arrows.
/// Arrows absent from `sub` map to themselves. Each image must have the
/// same endpoints as the arrow it replaces.
PathSeries substitute(const PathSeries& f,
                      const std::map<std::string, PathSeries>& sub);

/// A potential: series whose terms are cycles of length >= 2, each cycle
/// word stored in its lexicographically minimal rotation.
class Potential {
 public:
  Potential() = default;
  explicit Potential(PathSeries series);  // canonicalizes rotations

  static Potential zero(const Quiver& q, int trunc);

  const PathSeries& series() const { return series_; }
  bool is_zero() const { return series_.is_zero(); }

  Potential operator+(const Potential& other) const;
  Potential scaled(const Rat& c) const;

  /// Canonical form of one cycle path (minimal rotation of the word).
  static Path canonical_cycle(const Quiver& q, const Path& p);

  std::string to_string() const { return series_.to_string(); }

 private:
  PathSeries series_;
};

struct QP {
  Quiver quiver;
  Potential potential;
};

PathSeries cyclic_derivative(const Potential& w, const std::string& arrow_label);

std::string potential_to_json(const Potential& w);
Potential potential_from_json(const Quiver& q, const std::string& text, int trunc);

}  // namespace qpc

#endif
