#include "qpc/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qpc {

namespace {

int total_degree(const Poly::Key& k) {
  int t = 0;
  for (int e : k) t += e;
  return t;
}

/// graded-lex: total degree first, then exponent-vector lex.
bool grlex_less(const Poly::Key& a, const Poly::Key& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

Poly Poly::constant(int nvars, const Int& c) {
  Poly p(nvars);
  p.add_term(Key(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Poly p(nvars);
  Key k(nvars, 0);
  k[index] = 1;
  p.add_term(k, 1);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

void Poly::add_term(const Key& exps, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(exps, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      Key k = ka;
      for (int v = 0; v < nvars_; ++v) k[v] += kb[v];
      r.add_term(k, ca * cb);
    }
  return r;
}

std::pair<Poly::Key, Int> Poly::lead() const {
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Int Poly::content() const {
  if (terms_.empty()) return 0;
  Int g = 0;
  for (const auto& [k, c] : terms_) g = qpc::gcd(g, Int(abs(c)));
  if (lead().second < 0) g = -g;
  return g;
}

Poly Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw NotRepresentable("division by the zero polynomial");
  Poly q(nvars_);
  Poly r = *this;
  auto [ed, cd] = d.lead();
  while (!r.is_zero()) {
    auto [er, cr] = r.lead();
    Key k(nvars_);
    for (int v = 0; v < nvars_; ++v) {
      k[v] = er[v] - ed[v];
      if (k[v] < 0) throw NotRepresentable("inexact polynomial division");
    }
    if (cr % cd != 0) throw NotRepresentable("inexact polynomial division");
    Poly t(nvars_);
    t.add_term(k, cr / cd);
    q = q + t;
    r = r - t * d;
  }
  return q;
}

namespace {

int deg_in(const Poly& p, int v) {
  int d = -1;
  for (const auto& [k, c] : p.terms()) d = std::max(d, k[v]);
  return d;
}

/// Coefficients of p as a univariate polynomial in variable v; the v-entry
/// of each exponent tuple is zeroed out.
std::vector<Poly> coeffs_in(const Poly& p, int v) {
  std::vector<Poly> out(std::max(deg_in(p, v) + 1, 1), Poly(p.nvars()));
  for (const auto& [k, c] : p.terms()) {
    Poly::Key nk = k;
    int e = nk[v];
    nk[v] = 0;
    out[e].add_term(nk, c);
  }
  return out;
}

Poly lead_coeff_in(const Poly& p, int v) { return coeffs_in(p, v).back(); }

Poly times_power(const Poly& p, int v, int e) {
  Poly r(p.nvars());
  for (const auto& [k, c] : p.terms()) {
    Poly::Key nk = k;
    nk[v] += e;
    r.add_term(nk, c);
  }
  return r;
}

/// Pseudo-remainder of a by b in variable v.
Poly prem(Poly a, const Poly& b, int v) {
  int db = deg_in(b, v);
  Poly lb = lead_coeff_in(b, v);
  while (!a.is_zero() && deg_in(a, v) >= db) {
    int da = deg_in(a, v);
    Poly la = lead_coeff_in(a, v);
    a = lb * a - times_power(la * b, v, da - db);
  }
  return a;
}

Poly content_in(const Poly& p, int v) {
  Poly g(p.nvars());
  for (const auto& c : coeffs_in(p, v))
    if (!c.is_zero()) g = Poly::gcd(g, c);
  return g;
}

Poly positivized(Poly p) {
  if (!p.is_zero() && p.lead().second < 0) return -p;
  return p;
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
  if (a.is_zero()) return positivized(std::move(b));
  if (b.is_zero()) return positivized(std::move(a));
  if (a.is_constant() && b.is_constant())
    return constant(a.nvars(), qpc::gcd(Int(abs(a.terms().begin()->second)),
                                        Int(abs(b.terms().begin()->second))));
  int v = -1;
  for (int i = a.nvars() - 1; i >= 0 && v < 0; --i)
    if (deg_in(a, i) > 0 || deg_in(b, i) > 0) v = i;

  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly d = gcd(ca, cb);
  Poly pa = a.divide_exact(ca), pb = b.divide_exact(cb);
  if (deg_in(pa, v) < deg_in(pb, v)) std::swap(pa, pb);
  while (deg_in(pb, v) > 0) {
    Poly r = prem(pa, pb, v);
    if (r.is_zero()) {
      pa = pb;
      pb = Poly(a.nvars());
      break;
    }
    r = r.divide_exact(content_in(r, v));
    pa = pb;
    pb = std::move(r);
  }
  if (pb.is_zero()) return positivized(d * pa);
  return positivized(d);  // primitive parts are coprime
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Int coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool printed = false;
    if (coeff != 1 || total_degree(k) == 0) {
      os << coeff.str();
      printed = true;
    }
    for (int v = 0; v < nvars_; ++v) {
      if (k[v] == 0) continue;
      if (printed) os << "*";
      os << names[v];
      if (k[v] != 1) os << "^" << k[v];
      printed = true;
    }
  }
  return os.str();
}

RationalFunction::RationalFunction(Poly num, Poly den) {
  if (den.is_zero()) throw NotRepresentable("zero denominator");
  if (num.is_zero()) {
    num_ = Poly(num.nvars());
    den_ = Poly::constant(num.nvars(), 1);
    return;
  }
  Poly g = Poly::gcd(num, den);
  num_ = num.divide_exact(g);
  den_ = den.divide_exact(g);
  if (den_.lead().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::constant(int nvars, const Int& c) {
  return RationalFunction(Poly::constant(nvars, c), Poly::constant(nvars, 1));
}

RationalFunction RationalFunction::variable(int nvars, int index) {
  return RationalFunction(Poly::variable(nvars, index), Poly::constant(nvars, 1));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw NotRepresentable("division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator<(const RationalFunction& o) const {
  if (num_.terms() != o.num_.terms()) return num_.terms() < o.num_.terms();
  return den_.terms() < o.den_.terms();
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  std::string n = num_.to_string(names);
  if (den_ == Poly::constant(den_.nvars(), 1)) return n;
  std::string d = den_.to_string(names);
  if (num_.terms().size() > 1) n = "(" + n + ")";
  // parenthesize any denominator that is not a single power, e.g. x1*x2
  bool den_atomic = den_.terms().size() == 1 &&
                    std::count_if(den_.terms().begin()->first.begin(),
                                  den_.terms().begin()->first.end(),
                                  [](int e) { return e != 0; }) <= 1 &&
                    den_.terms().begin()->second == 1;
  if (!den_atomic) d = "(" + d + ")";
  return n + "/" + d;
}

LaurentPoly LaurentPoly::monomial(const std::vector<int>& exps, const Int& c) {
  LaurentPoly p;
  p.nvars = static_cast<int>(exps.size());
  p.add_term(exps, c);
  return p;
}

void LaurentPoly::add_term(const std::vector<int>& exps, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(exps, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r.nvars = std::max(nvars, o.nvars);
  for (const auto& [k, c] : o.terms) r.add_term(k, c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  r.nvars = std::max(nvars, o.nvars);
  for (const auto& [ka, ca] : terms)
    for (const auto& [kb, cb] : o.terms) {
      std::vector<int> k = ka;
      for (std::size_t v = 0; v < k.size(); ++v) k[v] += kb[v];
      r.add_term(k, ca * cb);
    }
  return r;
}

bool LaurentPoly::all_positive_coeffs() const {
  for (const auto& [k, c] : terms)
    if (c <= 0) return false;
  return true;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    Int coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool any_var = false;
    for (int e : k) any_var = any_var || e != 0;
    bool printed = false;
    if (coeff != 1 || !any_var) {
      os << coeff.str();
      printed = true;
    }
    for (std::size_t v = 0; v < k.size(); ++v) {
      if (k[v] == 0) continue;
      if (printed) os << "*";
      os << names[v];
      if (k[v] != 1) os << "^" << k[v];
      printed = true;
    }
  }
  return os.str();
}

LaurentPoly laurent_check(const RationalFunction& v) {
  const Poly& den = v.den();
  auto names = default_var_names(v.nvars());
  if (den.terms().size() != 1) {
    for (int var = 0; var < v.nvars(); ++var)
      for (const auto& [k, c] : den.terms())
        if (k[var] != 0)
          throw NotLaurent("denominator is not a monomial: variable " + names[var]);
    throw NotLaurent("denominator is not a monomial");
  }
  const auto& [dexp, dcoeff] = *den.terms().begin();
  if (dcoeff != 1)
    throw NotLaurent("denominator has a non-unit coefficient " + dcoeff.str());
  LaurentPoly out;
  out.nvars = v.nvars();
  for (const auto& [k, c] : v.num().terms()) {
    std::vector<int> e(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) e[i] = k[i] - dexp[i];
    out.add_term(e, c);
  }
  return out;
}

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace qpc
