#ifndef QPC_LAURENT_HPP
#define QPC_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "qpc/rational.hpp"
#include "qpc/errors.hpp"

namespace qpc {

/// Multivariate polynomial over Z; exponent tuples of fixed length.
class Poly {
 public:
  using Key = std::vector<int>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Int& c);
  static Poly variable(int nvars, int index);  // 0-based

  int nvars() const { return nvars_; }
  const std::map<Key, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  void add_term(const Key& exps, const Int& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  friend bool operator==(const Poly&, const Poly&) = default;

  /// gcd of all coefficients, signed so that the graded-lex leading
  /// coefficient divided by it is positive. Zero polynomial -> 0.
  Int content() const;

  /// Graded-lex leading term.
  std::pair<Key, Int> lead() const;

  /// Exact division; throws NotRepresentable when the division leaves a
  /// remainder.
  Poly divide_exact(const Poly& d) const;

  static Poly gcd(Poly a, Poly b);

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  std::map<Key, Int> terms_;
};

/// num/den over Z, fully reduced: gcd(num, den) = 1, coefficient contents
/// coprime, graded-lex leading coefficient of den positive.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Poly num, Poly den);  // normalizes

  static RationalFunction constant(int nvars, const Int& c);
  static RationalFunction variable(int nvars, int index);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// Deterministic total order for canonical seed forms.
  bool operator<(const RationalFunction& o) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  Poly num_{0}, den_{0};
};

/// Laurent polynomial: exponents may be negative.
struct LaurentPoly {
  int nvars = 0;
  std::map<std::vector<int>, Int> terms;

  static LaurentPoly monomial(const std::vector<int>& exps, const Int& c = 1);

  void add_term(const std::vector<int>& exps, const Int& c);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  bool all_positive_coeffs() const;
  std::string to_string(const std::vector<std::string>& names) const;
};

/// Succeeds iff the normalized denominator is a single monomial; otherwise
/// throws NotLaurent naming a variable occurring in the denominator.
LaurentPoly laurent_check(const RationalFunction& v);

std::vector<std::string> default_var_names(int nvars);

}  // namespace qpc

#endif
