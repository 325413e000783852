#include "qpc/seeds.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qpc {

Seed initial_seed(const Quiver& q) {
  q.require_cluster_valid();
  Seed s;
  s.quiver = q;
  int n = q.vertex_count();
  for (int i = 0; i < n; ++i)
    s.cluster.push_back(RationalFunction::variable(n, i));
  return s;
}

Seed mutate_seed(const Seed& s, int i) {
  const Quiver& q = s.quiver;
  if (i < 1 || i > q.vertex_count()) throw DimOutOfRange("vertex out of range");
  if (q.has_loop()) throw LoopPresent("seed mutation undefined with loops");
  if (q.on_two_cycle(i))
    throw TwoCycleAtVertex("vertex " + std::to_string(i) + " lies on a 2-cycle");
  int n = q.vertex_count();
  RationalFunction in_prod = RationalFunction::constant(n, 1);
  RationalFunction out_prod = RationalFunction::constant(n, 1);
  for (const auto& a : q.arrows()) {
    if (a.target == i) in_prod = in_prod * s.cluster[a.source - 1];
    if (a.source == i) out_prod = out_prod * s.cluster[a.target - 1];
  }
  Seed next;
  next.quiver = mutate_quiver(q, i);
  next.cluster = s.cluster;
  next.cluster[i - 1] = (in_prod + out_prod) / s.cluster[i - 1];
  return next;
}

std::string seed_canonical_form(const Seed& s) {
  int n = s.quiver.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return s.cluster[a] < s.cluster[b];
  });
  BMatrix b = b_matrix(s.quiver);
  auto names = default_var_names(n);
  std::ostringstream os;
  for (int k = 0; k < n; ++k) os << s.cluster[perm[k]].to_string(names) << ";";
  os << "|";
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) os << b[perm[r]][perm[c]] << ",";
  return os.str();
}

ExchangeGraph exchange_graph(const Quiver& q, int depth, long long seed_budget) {
  Seed start = initial_seed(q);
  ExchangeGraph g;
  std::map<std::string, int> seen;  // canonical form -> BFS depth found
  std::set<std::pair<std::string, std::string>> edge_set;
  std::vector<RationalFunction> vars;

  std::deque<std::pair<Seed, int>> frontier;
  std::string start_key = seed_canonical_form(start);
  seen.emplace(start_key, 0);
  for (const auto& v : start.cluster) vars.push_back(v);
  frontier.emplace_back(std::move(start), 0);
  bool truncated = false;

  while (!frontier.empty()) {
    auto [seed, d] = std::move(frontier.front());
    frontier.pop_front();
    std::string key = seed_canonical_form(seed);
    for (int i = 1; i <= q.vertex_count(); ++i) {
      if (seed.quiver.on_two_cycle(i)) continue;
      Seed next = mutate_seed(seed, i);
      std::string nkey = seed_canonical_form(next);
      if (!seen.count(nkey)) {
        if (d + 1 > depth) {
          truncated = true;  // an unexplored seed beyond the horizon
          continue;
        }
        if (static_cast<long long>(seen.size()) >= seed_budget)
          throw BudgetExceeded("seed count exceeds budget " +
                               std::to_string(seed_budget));
        seen.emplace(nkey, d + 1);
        for (const auto& v : next.cluster) vars.push_back(v);
        frontier.emplace_back(std::move(next), d + 1);
      }
      edge_set.emplace(std::min(key, nkey), std::max(key, nkey));
    }
  }

  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  g.variables = std::move(vars);
  g.seed_count = static_cast<int>(seen.size());
  g.closed = !truncated;
  g.edges.assign(edge_set.begin(), edge_set.end());
  return g;
}

std::vector<RationalFunction> cluster_variables(const Quiver& q, int depth,
                                                long long seed_budget) {
  return exchange_graph(q, depth, seed_budget).variables;
}

}  // namespace qpc
