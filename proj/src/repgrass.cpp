#include "qpc/repgrass.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qpc/linalg.hpp"

namespace qpc {

Int gauss_binomial(int d, int k, const Int& q) {
  if (k < 0 || k > d) return 0;
  Int num = 1, den = 1;
  for (int t = 0; t < k; ++t) {
    num *= pow(q, d - t) - 1;
    den *= pow(q, t + 1) - 1;
  }
  return num / den;
}

namespace {

struct Subspace {
  MatP rows;  // reduced row echelon basis
  std::vector<std::size_t> pivots;
  int ambient = 0;

  int dim() const { return static_cast<int>(rows.size()); }
};

void for_each_subspace(int d, int k, u64 q,
                       const std::function<void(const Subspace&)>& fn) {
  if (k == 0) {
    fn(Subspace{{}, {}, d});
    return;
  }
  std::vector<int> piv(k);
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == k) {
      // free slots: non-pivot columns to the right of each row's pivot
      std::vector<bool> is_piv(d, false);
      for (int c : piv) is_piv[c] = true;
      std::vector<std::pair<int, int>> slots;
      for (int r = 0; r < k; ++r)
        for (int c = piv[r] + 1; c < d; ++c)
          if (!is_piv[c]) slots.emplace_back(r, c);
      Subspace s;
      s.ambient = d;
      s.rows.assign(k, std::vector<u64>(d, 0));
      for (int r = 0; r < k; ++r) {
        s.rows[r][piv[r]] = 1;
        s.pivots.push_back(piv[r]);
      }
      std::vector<u64> vals(slots.size(), 0);
      while (true) {
        for (std::size_t t = 0; t < slots.size(); ++t)
          s.rows[slots[t].first][slots[t].second] = vals[t];
        fn(s);
        std::size_t t = 0;
        while (t < vals.size() && vals[t] + 1 == q) vals[t++] = 0;
        if (t == vals.size()) break;
        ++vals[t];
      }
      return;
    }
    for (int c = start; c <= d - (k - idx); ++c) {
      piv[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
}

MatP mod_mat(const MatZ& m, u64 q) {
  MatP r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (const auto& x : m[i]) {
      Int v = x % Int(q);
      if (v < 0) v += Int(q);
      r[i].push_back(v.convert_to<unsigned long long>());
    }
  }
  return r;
}

std::vector<u64> mat_col_apply(const MatP& a, const std::vector<u64>& x, u64 q) {
  std::vector<u64> y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    unsigned long long acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      acc = (acc + a[i][j] % q * (x[j] % q)) % q;
    y[i] = acc;
  }
  return y;
}

bool maps_into(const MatP& a, const Subspace& from, const Subspace& to, u64 q) {
  for (const auto& u : from.rows)
    if (!in_rowspace_mod(to.rows, to.pivots, mat_col_apply(a, u, q), q))
      return false;
  return true;
}

/// Visits every arrow-stable subspace tuple; `cands` lists the allowed
/// subspaces per vertex.
void for_each_stable_tuple(const Quiver& quiver,
                           const std::map<std::string, MatP>& act, u64 q,
                           const std::vector<std::vector<Subspace>>& cands,
                           const std::function<void(const std::vector<Subspace>&)>& fn) {
  int n = quiver.vertex_count();
  std::vector<const Subspace*> pick(n, nullptr);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      std::vector<Subspace> tuple;
      tuple.reserve(n);
      for (auto* s : pick) tuple.push_back(*s);
      fn(tuple);
      return;
    }
    for (const auto& cand : cands[v]) {
      pick[v] = &cand;
      bool ok = true;
      for (const auto& a : quiver.arrows()) {
        int s = a.source - 1, t = a.target - 1;
        if (std::max(s, t) != v || pick[s] == nullptr || pick[t] == nullptr)
          continue;
        // stability: the action sends the chosen subspace at t into s
        if (!maps_into(act.at(a.label), *pick[t], *pick[s], q)) {
          ok = false;
          break;
        }
      }
      if (ok) rec(v + 1);
    }
    pick[v] = nullptr;
  };
  rec(0);
}

std::map<std::string, MatP> actions_mod(const Representation& m, u64 q) {
  std::map<std::string, MatP> act;
  for (const auto& a : m.quiver.arrows()) act.emplace(a.label, mod_mat(m.matrix(a.label), q));
  return act;
}

void check_budget(const Int& bound, long long budget) {
  if (bound > Int(budget))
    throw BudgetExceeded("enumeration bound " + bound.str() + " exceeds budget " +
                         std::to_string(budget));
}

std::string subspace_key(const Subspace& s) {
  std::ostringstream os;
  os << s.ambient << ':' << s.rows.size() << ':';
  for (const auto& row : s.rows)
    for (u64 x : row) os << x << ',';
  return os.str();
}

std::string tuple_key(const std::vector<Subspace>& t) {
  std::string k;
  for (const auto& s : t) k += subspace_key(s) + "|";
  return k;
}

std::vector<int> tuple_dims(const std::vector<Subspace>& t) {
  std::vector<int> d;
  d.reserve(t.size());
  for (const auto& s : t) d.push_back(s.dim());
  return d;
}

Subspace from_rows(MatP rows, int ambient, u64 q) {
  Subspace s;
  s.ambient = ambient;
  s.pivots = rref_mod(rows, q);
  s.rows = std::move(rows);
  return s;
}

/// {x : A x in W}, as an echelon subspace of F_q^cols.
Subspace preimage(const MatP& a, int cols, const Subspace& w, u64 q) {
  std::vector<bool> is_piv(w.ambient, false);
  for (auto piv : w.pivots) is_piv[piv] = true;
  // quotient coordinates: reduce against W, keep non-pivot entries
  MatP constraints;
  for (int coord = 0; coord < w.ambient; ++coord)
    if (!is_piv[coord]) constraints.emplace_back(cols, 0);
  for (int c = 0; c < cols; ++c) {
    std::vector<u64> v(w.ambient, 0);
    for (std::size_t r = 0; r < a.size(); ++r) v[r] = a[r][c] % q;
    for (std::size_t r = 0; r < w.rows.size(); ++r) {
      u64 f = v[w.pivots[r]] % q;
      if (f == 0) continue;
      for (int j = 0; j < w.ambient; ++j)
        v[j] = (v[j] + (q - f) * w.rows[r][j]) % q;
    }
    int out = 0;
    for (int coord = 0; coord < w.ambient; ++coord)
      if (!is_piv[coord]) constraints[out++][c] = v[coord];
  }
  auto ker = kernel_mod(std::move(constraints), cols, q);
  return from_rows(std::move(ker), cols, q);
}

/// {A w : w in W}, as an echelon subspace of F_q^rows(A).
Subspace image(const MatP& a, int target_dim, const Subspace& w, u64 q) {
  MatP rows;
  for (const auto& u : w.rows) rows.push_back(mat_col_apply(a, u, q));
  return from_rows(std::move(rows), target_dim, q);
}

Int galois_bound(const std::vector<int>& dims, u64 q) {
  Int total = 1;
  for (int d : dims) {
    Int per = 0;
    for (int k = 0; k <= d; ++k) per += gauss_binomial(d, k, Int(q));
    total *= per;
  }
  return total;
}

std::vector<std::vector<Subspace>> all_subspace_lists(const std::vector<int>& dims,
                                                      u64 q) {
  std::vector<std::vector<Subspace>> cands(dims.size());
  for (std::size_t v = 0; v < dims.size(); ++v)
    for (int k = 0; k <= dims[v]; ++k)
      for_each_subspace(dims[v], k, q,
                        [&](const Subspace& s) { cands[v].push_back(s); });
  return cands;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> primes_above(u64 floor, std::size_t count) {
  std::vector<u64> out;
  u64 n = floor + 1;
  while (out.size() < count) {
    if (is_prime(n)) out.push_back(n);
    ++n;
  }
  return out;
}

Int max_abs_entry(const Representation& m) {
  Int best = 1;
  for (const auto& [label, mat] : m.maps)
    for (const auto& row : mat)
      for (const auto& x : row) best = std::max(best, Int(abs(x)));
  return best;
}

/// Lagrange evaluation of the polynomial through (points[i], values[i]).
Rat lagrange_eval(const std::vector<u64>& points, const std::vector<long long>& values,
                  const Rat& x) {
  Rat total = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Rat term = values[i];
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      term *= (x - Rat(points[j])) / (Rat(points[i]) - Rat(points[j]));
    }
    total += term;
  }
  return total;
}

/// Samples `count` at 2(D+1) primes above `floor`, certifies polynomiality
/// on the second half, and returns the value at 1.
long long certified_at_one(int degree_bound, u64 floor,
                           const std::function<long long(u64)>& count) {
  std::size_t k = static_cast<std::size_t>(degree_bound) + 1;
  std::vector<u64> primes = primes_above(floor, 2 * k);
  std::vector<u64> fit(primes.begin(), primes.begin() + k);
  std::vector<long long> fit_vals;
  for (u64 q : fit) fit_vals.push_back(count(q));
  for (std::size_t t = k; t < 2 * k; ++t) {
    Rat predicted = lagrange_eval(fit, fit_vals, Rat(primes[t]));
    if (predicted != Rat(count(primes[t])))
      throw NotPolynomialCount("point counts do not follow one polynomial");
  }
  Rat at_one = lagrange_eval(fit, fit_vals, Rat(1));
  if (denominator(at_one) != 1)
    throw NotPolynomialCount("interpolated value at 1 is not an integer");
  return numerator(at_one).convert_to<long long>();
}

}  // namespace

long long count_subreps(const Representation& m, const std::vector<int>& e, u64 q,
                        long long budget) {
  m.validate_shapes();
  if (e.size() != m.dims.size())
    throw DimOutOfRange("dimension vector length mismatch");
  Int bound = 1;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] < 0 || e[v] > m.dims[v])
      throw DimOutOfRange("subspace dimension out of range at vertex " +
                          std::to_string(v + 1));
    bound *= gauss_binomial(m.dims[v], e[v], Int(q));
  }
  check_budget(bound, budget);

  std::vector<std::vector<Subspace>> cands(m.dims.size());
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    for_each_subspace(m.dims[v], e[v], q,
                      [&](const Subspace& s) { cands[v].push_back(s); });
  long long total = 0;
  for_each_stable_tuple(m.quiver, actions_mod(m, q), q, cands,
                        [&](const std::vector<Subspace>&) { ++total; });
  return total;
}

long long euler_char(const Representation& m, const std::vector<int>& e,
                     long long budget) {
  m.validate_shapes();
  if (e.size() != m.dims.size())
    throw DimOutOfRange("dimension vector length mismatch");
  int degree = 0;
  for (std::size_t v = 0; v < e.size(); ++v) degree += e[v] * (m.dims[v] - e[v]);
  u64 floor = max_abs_entry(m).convert_to<unsigned long long>();
  return certified_at_one(degree, floor,
                          [&](u64 q) { return count_subreps(m, e, q, budget); });
}

void validate_ses(const SESData& s) {
  for (const Representation* r : {&s.x, &s.y, &s.e, &s.ep}) r->validate_shapes();
  const Quiver& q = s.x.quiver;
  if (!(s.y.quiver == q) || !(s.e.quiver == q) || !(s.ep.quiver == q))
    throw QuiverMismatch("sequence data over different quivers");
  int n = q.vertex_count();

  auto check_map = [&](const std::vector<MatZ>& f, const Representation& from,
                       const Representation& to, const char* name) {
    if (static_cast<int>(f.size()) != n)
      throw DimOutOfRange(std::string(name) + ": one matrix per vertex required");
    for (int v = 0; v < n; ++v) {
      if (static_cast<int>(f[v].size()) != to.dims[v])
        throw DimOutOfRange(std::string(name) + ": bad row count at vertex " +
                            std::to_string(v + 1));
      for (const auto& row : f[v])
        if (static_cast<int>(row.size()) != from.dims[v])
          throw DimOutOfRange(std::string(name) + ": bad column count at vertex " +
                              std::to_string(v + 1));
    }
    // commutes with every arrow action: f_s A^from_a = A^to_a f_t.
    // shapes are forced explicitly: mat_mul drops the column count of
    // zero-row factors
    auto shaped_mul = [](const MatQ& a, const MatQ& b, int rows, int cols) {
      MatQ c = mat_zero(rows, cols);
      for (int i2 = 0; i2 < rows; ++i2)
        for (std::size_t k = 0; k < b.size(); ++k)
          for (int j2 = 0; j2 < cols; ++j2) c[i2][j2] += a[i2][k] * b[k][j2];
      return c;
    };
    for (const auto& a : q.arrows()) {
      int sv = a.source - 1, tv = a.target - 1;
      MatQ lhs = shaped_mul(to_matq(f[sv]), to_matq(from.matrix(a.label)),
                            to.dims[sv], from.dims[tv]);
      MatQ rhs = shaped_mul(to_matq(to.matrix(a.label)), to_matq(f[tv]),
                            to.dims[sv], from.dims[tv]);
      if (lhs != rhs)
        throw ExactnessViolation(std::string(name) +
                                 " is not a module map (arrow " + a.label + ")");
    }
  };
  check_map(s.i, s.x, s.e, "i");
  check_map(s.p, s.e, s.y, "p");
  check_map(s.ip, s.y, s.ep, "i'");
  check_map(s.pp, s.ep, s.x, "p'");

  auto check_middle = [&](const std::vector<MatZ>& i, const std::vector<MatZ>& p,
                          const Representation& mid, const char* name) {
    for (int v = 0; v < n; ++v) {
      MatQ comp = mat_mul(to_matq(p[v]), to_matq(i[v]));
      for (const auto& row : comp)
        for (const auto& x : row)
          if (x != 0)
            throw ExactnessViolation(std::string(name) + ": p o i != 0 at vertex " +
                                     std::to_string(v + 1));
      std::size_t ri = rank(to_matq(i[v]));
      std::size_t rp = rank(to_matq(p[v]));
      if (ri + rp != static_cast<std::size_t>(mid.dims[v]))
        throw ExactnessViolation(std::string(name) + ": not exact at vertex " +
                                 std::to_string(v + 1));
    }
  };
  check_middle(s.i, s.p, s.e, "X -> E -> Y");
  check_middle(s.ip, s.pp, s.ep, "Y -> E' -> X");
}

namespace {

std::vector<MatP> maps_mod(const std::vector<MatZ>& f, u64 q) {
  std::vector<MatP> out;
  out.reserve(f.size());
  for (const auto& m : f) out.push_back(mod_mat(m, q));
  return out;
}

}  // namespace

StrataTable strata_counts(const SESData& s, u64 q, long long budget) {
  validate_ses(s);
  const Quiver& quiver = s.x.quiver;
  int n = quiver.vertex_count();
  for (const Representation* r : {&s.x, &s.y, &s.e, &s.ep})
    check_budget(galois_bound(r->dims, q), budget);

  auto im = maps_mod(s.i, q), pm = maps_mod(s.p, q);
  auto ipm = maps_mod(s.ip, q), ppm = maps_mod(s.pp, q);

  StrataTable table;
  std::vector<std::string> u_keys, v_keys;
  for_each_stable_tuple(quiver, actions_mod(s.x, q), q, all_subspace_lists(s.x.dims, q),
                        [&](const std::vector<Subspace>& t) {
                          std::string k = tuple_key(t);
                          table.u_dims[k] = tuple_dims(t);
                          u_keys.push_back(std::move(k));
                        });
  for_each_stable_tuple(quiver, actions_mod(s.y, q), q, all_subspace_lists(s.y.dims, q),
                        [&](const std::vector<Subspace>& t) {
                          std::string k = tuple_key(t);
                          table.v_dims[k] = tuple_dims(t);
                          v_keys.push_back(std::move(k));
                        });
  for (const auto& uk : u_keys)
    for (const auto& vk : v_keys) table.cells[{uk, vk}];

  auto locate = [&](const std::string& uk, const std::string& vk) -> StrataTable::Cell& {
    auto it = table.cells.find({uk, vk});
    if (it == table.cells.end())
      throw NotRepresentable("stratum image/preimage is not a submodule");
    return it->second;
  };

  for_each_stable_tuple(
      quiver, actions_mod(s.e, q), q, all_subspace_lists(s.e.dims, q),
      [&](const std::vector<Subspace>& w) {
        std::vector<Subspace> u, v;
        for (int vtx = 0; vtx < n; ++vtx) {
          u.push_back(preimage(im[vtx], s.x.dims[vtx], w[vtx], q));
          v.push_back(image(pm[vtx], s.y.dims[vtx], w[vtx], q));
        }
        auto& cell = locate(tuple_key(u), tuple_key(v));
        cell.by_dim_g[tuple_dims(w)]++;
        cell.total_g++;
      });
  for_each_stable_tuple(
      quiver, actions_mod(s.ep, q), q, all_subspace_lists(s.ep.dims, q),
      [&](const std::vector<Subspace>& w) {
        std::vector<Subspace> u, v;
        for (int vtx = 0; vtx < n; ++vtx) {
          v.push_back(preimage(ipm[vtx], s.y.dims[vtx], w[vtx], q));
          u.push_back(image(ppm[vtx], s.x.dims[vtx], w[vtx], q));
        }
        auto& cell = locate(tuple_key(u), tuple_key(v));
        cell.by_dim_gp[tuple_dims(w)]++;
        cell.total_gp++;
      });
  return table;
}

bool dichotomy_check(const SESData& s, u64 q, long long budget) {
  StrataTable t = strata_counts(s, q, budget);
  for (const auto& [key, cell] : t.cells) {
    bool g = cell.total_g > 0, gp = cell.total_gp > 0;
    if (g == gp) return false;
  }
  return true;
}

bool dimension_identity_check(const SESData& s, u64 q, long long budget) {
  validate_ses(s);
  const Quiver& quiver = s.x.quiver;
  int n = quiver.vertex_count();
  for (const Representation* r : {&s.e, &s.ep})
    check_budget(galois_bound(r->dims, q), budget);
  auto im = maps_mod(s.i, q), pm = maps_mod(s.p, q);
  auto ipm = maps_mod(s.ip, q), ppm = maps_mod(s.pp, q);

  std::vector<int> ker_i(n), ker_ip(n);
  for (int v = 0; v < n; ++v) {
    ker_i[v] = s.x.dims[v] - static_cast<int>(rank_mod(im[v], q));
    ker_ip[v] = s.y.dims[v] - static_cast<int>(rank_mod(ipm[v], q));
  }

  bool ok = true;
  for_each_stable_tuple(
      quiver, actions_mod(s.e, q), q, all_subspace_lists(s.e.dims, q),
      [&](const std::vector<Subspace>& w) {
        for (int v = 0; v < n; ++v) {
          int e = preimage(im[v], s.x.dims[v], w[v], q).dim();
          int f = image(pm[v], s.y.dims[v], w[v], q).dim();
          if (e + f - w[v].dim() != ker_i[v]) ok = false;
        }
      });
  for_each_stable_tuple(
      quiver, actions_mod(s.ep, q), q, all_subspace_lists(s.ep.dims, q),
      [&](const std::vector<Subspace>& w) {
        for (int v = 0; v < n; ++v) {
          int f = preimage(ipm[v], s.y.dims[v], w[v], q).dim();
          int e = image(ppm[v], s.x.dims[v], w[v], q).dim();
          if (f + e - w[v].dim() != ker_ip[v]) ok = false;
        }
      });
  return ok;
}

bool euler_lemma_check(const SESData& s, const std::vector<int>& e,
                       const std::vector<int>& f, long long budget) {
  validate_ses(s);
  int degree = 0, degree_p = 0;
  for (int d : s.e.dims) degree += (d / 2) * (d - d / 2);
  for (int d : s.ep.dims) degree_p += (d / 2) * (d - d / 2);
  degree = std::max(degree, degree_p);

  Int floor = 1;
  for (const Representation* r : {&s.x, &s.y, &s.e, &s.ep})
    floor = std::max(floor, max_abs_entry(*r));
  for (const auto* maps : {&s.i, &s.p, &s.ip, &s.pp})
    for (const auto& m : *maps)
      for (const auto& row : m)
        for (const auto& x : row) floor = std::max(floor, Int(abs(x)));

  auto stratum_total = [&](u64 q) {
    StrataTable t = strata_counts(s, q, budget);
    long long total = 0;
    for (const auto& [key, cell] : t.cells) {
      if (t.u_dims.at(key.first) != e || t.v_dims.at(key.second) != f) continue;
      total += cell.total_g + cell.total_gp;
    }
    return total;
  };
  long long strata_chi = certified_at_one(
      degree, floor.convert_to<unsigned long long>(), stratum_total);
  return strata_chi == euler_char(s.x, e, budget) * euler_char(s.y, f, budget);
}

namespace {

nlohmann::json mats_to_json(const std::vector<MatZ>& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : f) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& x : row) r.push_back(x.str());
      rows.push_back(r);
    }
    out.push_back(rows);
  }
  return out;
}

std::vector<MatZ> mats_from_json(const nlohmann::json& j) {
  std::vector<MatZ> out;
  for (const auto& m : j) {
    MatZ mat;
    for (const auto& row : m) {
      std::vector<Int> r;
      for (const auto& x : row)
        r.push_back(x.is_string() ? Int(x.get<std::string>())
                                  : Int(x.get<long long>()));
      mat.push_back(std::move(r));
    }
    out.push_back(std::move(mat));
  }
  return out;
}

}  // namespace

std::string ses_to_json(const SESData& s) {
  nlohmann::json j;
  j["X"] = nlohmann::json::parse(representation_to_json(s.x));
  j["Y"] = nlohmann::json::parse(representation_to_json(s.y));
  j["E"] = nlohmann::json::parse(representation_to_json(s.e));
  j["Eprime"] = nlohmann::json::parse(representation_to_json(s.ep));
  j["i"] = mats_to_json(s.i);
  j["p"] = mats_to_json(s.p);
  j["iprime"] = mats_to_json(s.ip);
  j["pprime"] = mats_to_json(s.pp);
  return j.dump();
}

SESData ses_from_json(const Quiver& q, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad sequence JSON: ") + e.what());
  }
  for (const char* k : {"X", "Y", "E", "Eprime", "i", "p", "iprime", "pprime"})
    if (!j.contains(k)) throw ParseError(std::string("sequence JSON needs '") + k + "'");
  SESData s{representation_from_json(q, j["X"].dump()),
            representation_from_json(q, j["Y"].dump()),
            representation_from_json(q, j["E"].dump()),
            representation_from_json(q, j["Eprime"].dump()),
            mats_from_json(j["i"]), mats_from_json(j["p"]),
            mats_from_json(j["iprime"]), mats_from_json(j["pprime"])};
  validate_ses(s);
  return s;
}

}  // namespace qpc
