#ifndef MAXEXP_ORACLE_HPP
#define MAXEXP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "maxexp/geometry.hpp"

namespace maxexp {

// Default cap on the number of enumerated subsets. The oracle throws
// BudgetExceededError instead of approximating.
inline constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

struct BipartiteGraph {
    int a_count = 0;
    int b_count = 0;
    std::vector<std::pair<int, int>> edges;  // (a index, b index), no duplicates
};

void validate_bipartite(const BipartiteGraph& g);

// Exact optimum by enumerating every k-subset of ranges in lexicographic
// order; among optima the lexicographically smallest deleted set is kept.
// `budget_override` replaces inst.k when given.
Solution brute_force_opt(const Instance& inst,
                         std::optional<int> budget_override = std::nullopt,
                         std::uint64_t subset_budget = kDefaultSubsetBudget);

// Same optimum computed by a second route: enumerate unions of signature
// groups instead of raw k-subsets. Exists to cross-check brute_force_opt;
// returns only the value.
long brute_force_opt_grouped(const Instance& inst,
                             std::optional<int> budget_override = std::nullopt,
                             std::uint64_t subset_budget = kDefaultSubsetBudget);

// Max number of edges induced by some k-subset of A+B vertices.
long densest_k_subgraph_bipartite(const BipartiteGraph& g, int k,
                                  std::uint64_t subset_budget = kDefaultSubsetBudget);

// Max number of hyperedges fully contained in some k-subset of vertices.
// Hyperedges are vertex index sets over [0, vertex_count).
long densest_k_subhypergraph(int vertex_count,
                             const std::vector<std::vector<int>>& hyperedges, int k,
                             std::uint64_t subset_budget = kDefaultSubsetBudget);

// C(n, k) with saturation at 2^63-1; used for budget checks.
std::uint64_t binomial(int n, int k);

}  // namespace maxexp

#endif
