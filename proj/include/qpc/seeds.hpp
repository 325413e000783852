#ifndef QPC_SEEDS_HPP
#define QPC_SEEDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "qpc/laurent.hpp"
#include "qpc/quiver.hpp"

namespace qpc {

struct Seed {
  Quiver quiver;
  std::vector<RationalFunction> cluster;

  friend bool operator==(const Seed&, const Seed&) = default;
};

Seed initial_seed(const Quiver& q);

/// Exchange relation at vertex i, in the current cluster variables:
/// u'_i u_i = prod over arrows into i of u_source + prod over arrows out of
/// i of u_target (empty products are 1).
Seed mutate_seed(const Seed& s, int i);

/// Deduplication key: cluster sorted under the RationalFunction order, with
/// the B-matrix conjugated by the sorting permutation.
std::string seed_canonical_form(const Seed& s);

constexpr long long kDefaultSeedBudget = 20000;

struct ExchangeGraph {
  std::vector<RationalFunction> variables;  // sorted, duplicates removed
  int seed_count = 0;
  bool closed = false;  // no new seeds found before the depth ran out
  std::vector<std::pair<std::string, std::string>> edges;  // canonical ids
};

/// Breadth-first closure of seed mutation from the initial seed.
/// Throws BudgetExceeded past `seed_budget` distinct seeds.
ExchangeGraph exchange_graph(const Quiver& q, int depth,
                             long long seed_budget = kDefaultSeedBudget);

std::vector<RationalFunction> cluster_variables(const Quiver& q, int depth,
                                                long long seed_budget = kDefaultSeedBudget);

}  // namespace qpc

#endif
