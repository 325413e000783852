#include "qpc/character.hpp"

#include "qpc/qp_mutation.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qpc {

std::vector<int> iota(const BMatrix& b, const std::vector<int>& e) {
  if (b.size() != e.size())
    throw LengthMismatch("iota: vector length does not match the matrix");
  std::vector<int> out(e.size(), 0);
  for (std::size_t v = 0; v < b.size(); ++v) {
    long long acc = 0;
    for (std::size_t w = 0; w < e.size(); ++w) acc -= b[v][w] * e[w];
    out[v] = static_cast<int>(acc);
  }
  return out;
}

LaurentPoly character(const CharInput& c, long long budget) {
  c.module.validate_shapes();
  int n = c.module.quiver.vertex_count();
  if (static_cast<int>(c.g.size()) != n)
    throw LengthMismatch("character: g-vector length does not match the quiver");
  BMatrix b = b_matrix(c.module.quiver);

  LaurentPoly total;
  total.nvars = n;
  std::vector<int> e(n, 0);
  while (true) {
    long long chi = euler_char(c.module, e, budget);
    if (chi != 0) {
      std::vector<int> neg_iota = iota(b, e);
      std::vector<int> exps(n);
      for (int v = 0; v < n; ++v) exps[v] = c.g[v] - neg_iota[v];
      total.add_term(exps, Int(chi));
    }
    int v = 0;
    while (v < n && e[v] == c.module.dims[v]) e[v++] = 0;
    if (v == n) break;
    ++e[v];
  }
  return total;
}

bool check_multiplication(const CharInput& x, const CharInput& y,
                          const CharInput& e, const CharInput& ep,
                          long long budget) {
  if (x.module.total_dim() == 0 || y.module.total_dim() == 0)
    throw NotRepresentable(
        "multiplication formula needs nonzero end terms (extension pair)");
  LaurentPoly lhs = character(x, budget) * character(y, budget);
  LaurentPoly rhs = character(e, budget) + character(ep, budget);
  return lhs == rhs;
}

namespace {

/// Vertices of a type-A quiver in chain order; throws UnsupportedQuiver.
std::vector<int> type_a_chain(const Quiver& q) {
  int n = q.vertex_count();
  if (q.has_loop()) throw UnsupportedQuiver("loops are outside type A");
  std::map<std::pair<int, int>, int> edges;
  for (const auto& a : q.arrows())
    edges[{std::min(a.source, a.target), std::max(a.source, a.target)}]++;
  if (static_cast<int>(edges.size()) != n - 1)
    throw UnsupportedQuiver("underlying graph is not a path");
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [e, count] : edges) {
    if (count != 1) throw UnsupportedQuiver("parallel arrows or a 2-cycle");
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  if (n == 1) return {1};
  int start = 0;
  for (int v = 1; v <= n; ++v) {
    if (adj[v].size() > 2) throw UnsupportedQuiver("vertex of degree > 2");
    if (adj[v].size() == 1 && start == 0) start = v;
  }
  if (start == 0) throw UnsupportedQuiver("underlying graph is not a path");
  std::vector<int> chain{start};
  int prev = 0;
  while (static_cast<int>(chain.size()) < n) {
    int cur = chain.back(), next = -1;
    for (int w : adj[cur])
      if (w != prev) next = w;
    if (next < 0) throw UnsupportedQuiver("underlying graph is disconnected");
    prev = cur;
    chain.push_back(next);
  }
  return chain;
}

Representation interval_module(const Quiver& q, const std::vector<int>& chain,
                               int lo, int hi) {
  int n = q.vertex_count();
  Representation m{q, std::vector<int>(n, 0), {}};
  for (int k = lo; k <= hi; ++k) m.dims[chain[k] - 1] = 1;
  for (int k = lo; k < hi; ++k) {
    for (const auto& a : q.arrows()) {
      bool joins = (a.source == chain[k] && a.target == chain[k + 1]) ||
                   (a.source == chain[k + 1] && a.target == chain[k]);
      if (joins) m.maps[a.label] = MatZ{{Int(1)}};
    }
  }
  return m;
}

struct CatalogueEntry {
  std::string desc;
  CharInput input;
  LaurentPoly value;
};

std::vector<CatalogueEntry> interval_catalogue(const Quiver& q) {
  auto chain = type_a_chain(q);
  int n = q.vertex_count();
  QP qp{q, Potential::zero(q, n + 3)};
  TruncatedJacobian j = truncated_jacobian(qp, n + 3);
  std::vector<CatalogueEntry> out;
  for (int lo = 0; lo < n; ++lo)
    for (int hi = lo; hi < n; ++hi) {
      Representation m = interval_module(q, chain, lo, hi);
      CharInput input{m, g_vector(j, m)};
      LaurentPoly value = character(input);
      std::string desc = "interval [" + std::to_string(chain[lo]) + ".." +
                         std::to_string(chain[hi]) + "]";
      out.push_back({desc, std::move(input), std::move(value)});
    }
  return out;
}

TheoremReport match_variables(const Quiver& q,
                              const std::vector<RationalFunction>& vars) {
  auto catalogue = interval_catalogue(q);
  int n = q.vertex_count();
  auto names = default_var_names(n);
  TheoremReport report;
  for (const auto& var : vars) {
    LaurentPoly l = laurent_check(var);
    // initial variables are characters of the zero module with g = delta_i
    bool matched = false;
    for (int i = 0; i < n && !matched; ++i) {
      std::vector<int> delta(n, 0);
      delta[i] = 1;
      if (l == LaurentPoly::monomial(delta)) {
        Representation zero = zero_representation(q);
        if (character({zero, delta}) != l) {
          report.ok = false;
          report.mismatch = "character of the zero module is not " + names[i];
          return report;
        }
        report.matched.push_back(names[i] + " = character(0, e_" +
                                 std::to_string(i + 1) + ")");
        matched = true;
      }
    }
    for (const auto& entry : catalogue) {
      if (matched) break;
      if (entry.value == l) {
        report.matched.push_back(var.to_string(names) + " = character(" +
                                 entry.desc + ")");
        matched = true;
      }
    }
    if (!matched) {
      report.ok = false;
      report.mismatch = "no catalogue module matches " + var.to_string(names);
      return report;
    }
  }
  return report;
}

}  // namespace

TheoremReport verify_theorem_main(const Quiver& q, const std::vector<int>& seq) {
  Seed s = initial_seed(q);
  for (int i : seq) s = mutate_seed(s, i);
  return match_variables(q, s.cluster);
}

TheoremReport verify_all_variables(const Quiver& q, int depth) {
  return match_variables(q, cluster_variables(q, depth));
}

namespace {

/// S_lo -> M[lo..lo+1] -> S_{lo+1} on a linearly ordered quiver, with the
/// split-free complement E' = 0.
ExtensionExample chain_extension(const Quiver& q, const std::vector<int>& chain,
                                 const TruncatedJacobian& j, int lo) {
  int n = q.vertex_count();
  ExtensionExample ex;
  ex.name = "S" + std::to_string(chain[lo]) + "-extension";
  Representation sx = interval_module(q, chain, lo, lo);
  Representation sy = interval_module(q, chain, lo + 1, lo + 1);
  Representation mid = interval_module(q, chain, lo, lo + 1);
  Representation zero = zero_representation(q);

  ex.ses.x = sx;
  ex.ses.y = sy;
  ex.ses.e = mid;
  ex.ses.ep = zero;
  for (int v = 1; v <= n; ++v) {
    auto block = [&](const Representation& to, const Representation& from,
                     bool identity) {
      MatZ m(to.dims[v - 1], std::vector<Int>(from.dims[v - 1], Int(0)));
      if (identity && !m.empty() && !m[0].empty()) m[0][0] = 1;
      return m;
    };
    ex.ses.i.push_back(block(mid, sx, v == chain[lo]));
    ex.ses.p.push_back(block(sy, mid, v == chain[lo + 1]));
    ex.ses.ip.push_back(block(zero, sy, false));
    ex.ses.pp.push_back(block(sx, zero, false));
  }
  validate_ses(ex.ses);

  ex.x = CharInput{sx, g_vector(j, sx)};
  ex.y = CharInput{sy, g_vector(j, sy)};
  ex.e = CharInput{mid, g_vector(j, mid)};
  ex.ep = CharInput{zero, std::vector<int>(n, 0)};
  return ex;
}

}  // namespace

std::vector<ExtensionExample> shipped_extension_examples(const std::string& which) {
  if (which == "a2") {
    Quiver q(2, {{1, 2, "a"}});
    TruncatedJacobian j = truncated_jacobian(QP{q, Potential::zero(q, 5)}, 5);
    return {chain_extension(q, type_a_chain(q), j, 0)};
  }
  if (which == "a3") {
    Quiver q(3, {{1, 2, "a"}, {2, 3, "b"}});
    TruncatedJacobian j = truncated_jacobian(QP{q, Potential::zero(q, 6)}, 6);
    auto chain = type_a_chain(q);
    return {chain_extension(q, chain, j, 0), chain_extension(q, chain, j, 1)};
  }
  throw ParseError("unknown example set '" + which + "'");
}

namespace {

void run_check(std::vector<SuiteCheck>& out, const std::string& name,
               const std::function<bool()>& fn) {
  SuiteCheck c{name, false};
  try {
    c.pass = fn();
  } catch (const std::exception&) {
    c.pass = false;
  }
  out.push_back(c);
}

std::vector<SuiteCheck> type_a_suite(const std::string& which, const Quiver& q,
                                     int depth, int seeds, int variables) {
  std::vector<SuiteCheck> out;
  run_check(out, "exchange graph closes with " + std::to_string(seeds) +
                     " seeds / " + std::to_string(variables) + " variables",
            [&] {
              ExchangeGraph g = exchange_graph(q, depth);
              return g.closed && g.seed_count == seeds &&
                     static_cast<int>(g.variables.size()) == variables;
            });
  run_check(out, "every cluster variable is a positive Laurent polynomial", [&] {
    for (const auto& v : cluster_variables(q, depth))
      if (!laurent_check(v).all_positive_coeffs()) return false;
    return true;
  });
  run_check(out, "characters match the mutated clusters",
            [&] { return verify_all_variables(q, depth).ok; });
  run_check(out, "multiplication formula on shipped extension pairs", [&] {
    for (const auto& ex : shipped_extension_examples(which))
      if (!check_multiplication(ex.x, ex.y, ex.e, ex.ep)) return false;
    return true;
  });
  run_check(out, "dichotomy over F_2, F_3, F_5", [&] {
    for (const auto& ex : shipped_extension_examples(which))
      for (u64 p : {2, 3, 5})
        if (!dichotomy_check(ex.ses, p)) return false;
    return true;
  });
  run_check(out, "dimension identity over F_2, F_3, F_5", [&] {
    for (const auto& ex : shipped_extension_examples(which))
      for (u64 p : {2, 3, 5})
        if (!dimension_identity_check(ex.ses, p)) return false;
    return true;
  });
  run_check(out, "Euler lemma at chi level", [&] {
    for (const auto& ex : shipped_extension_examples(which)) {
      if (!euler_lemma_check(ex.ses, ex.ses.x.dims, ex.ses.y.dims)) return false;
      std::vector<int> zero(q.vertex_count(), 0);
      if (!euler_lemma_check(ex.ses, zero, zero)) return false;
    }
    return true;
  });
  return out;
}

std::vector<SuiteCheck> cycle3_suite() {
  std::vector<SuiteCheck> out;
  Quiver cyc(3, {{1, 2, "a"}, {2, 3, "b"}, {3, 1, "c"}});
  auto make_qp = [&] {
    PathSeries s(cyc, kDefaultTruncDegree);
    s.add_term(Path{1, {"a", "b", "c"}}, Rat(1));
    return QP{cyc, Potential(std::move(s))};
  };
  run_check(out, "QP mutation golden case at vertex 1", [&] {
    MutationResult r = mutate_qp_full(make_qp(), 1);
    if (!(r.qp.quiver == Quiver(3, {{2, 1, "a*"}, {1, 3, "c*"}}))) return false;
    if (!r.qp.potential.is_zero()) return false;
    return r.trivial.quiver == Quiver(3, {{2, 3, "b"}, {3, 2, "[ac]"}});
  });
  run_check(out, "double mutation restores B-matrix and Jacobian dims", [&] {
    QP twice = mutate_qp(mutate_qp(make_qp(), 1), 1);
    if (b_matrix(twice.quiver) != b_matrix(cyc)) return false;
    TruncatedJacobian ja = truncated_jacobian(make_qp(), 10);
    TruncatedJacobian jb = truncated_jacobian(twice, 10);
    return ja.dims() == jb.dims() && ja.total_dim() == 6;
  });
  run_check(out, "Jacobian dimension goldens", [&] {
    Quiver arrow(2, {{1, 2, "a"}});
    TruncatedJacobian j1 =
        truncated_jacobian(QP{arrow, Potential::zero(arrow, 16)}, 16);
    if (j1.total_dim() != 3 || !j1.stabilized()) return false;
    TruncatedJacobian j2 = truncated_jacobian(make_qp(), 16);
    if (j2.total_dim() != 6 || !j2.stabilized()) return false;
    Quiver loop(1, {{1, 1, "t"}});
    TruncatedJacobian j3 =
        truncated_jacobian(QP{loop, Potential::zero(loop, 16)}, 16);
    return !j3.stabilized();
  });
  run_check(out, "non-degeneracy probe to depth 4", [&] {
    return !probe_nondegeneracy(make_qp(), 4).obstructed();
  });
  run_check(out, "2-cycle QP obstructed at both vertices", [&] {
    Quiver two(2, {{1, 2, "a"}, {2, 1, "b"}});
    PathSeries s(two, kDefaultTruncDegree);
    s.add_term(Path{1, {"a", "b"}}, Rat(1));
    ProbeReport r = probe_nondegeneracy(QP{two, Potential(std::move(s))}, 1);
    bool at1 = false, at2 = false;
    for (const auto& o : r.obstructions) {
      if (o.sequence == std::vector<int>{1}) at1 = true;
      if (o.sequence == std::vector<int>{2}) at2 = true;
    }
    return at1 && at2;
  });
  return out;
}

}  // namespace

std::vector<SuiteCheck> run_verify_suite(const std::string& suite) {
  if (suite == "a2")
    return type_a_suite("a2", Quiver(2, {{1, 2, "a"}}), 6, 5, 5);
  if (suite == "a3")
    return type_a_suite("a3", Quiver(3, {{1, 2, "a"}, {2, 3, "b"}}), 10, 14, 9);
  if (suite == "cycle3") return cycle3_suite();
  throw ParseError("unknown suite '" + suite + "' (expected a2, a3, cycle3)");
}

}  // namespace qpc
