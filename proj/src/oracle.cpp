#include "maxexp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "maxexp/errors.hpp"

namespace maxexp {

namespace {

// Visits all k-subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        fn(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

void check_budget(int n, int k, std::uint64_t subset_budget, const char* who) {
    std::uint64_t count = binomial(n, k);
    if (count > subset_budget)
        throw BudgetExceededError(std::string(who) + ": subset count exceeds enumeration budget",
                                  count);
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 2;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        if (result > cap / static_cast<std::uint64_t>(n - k + i)) return cap;
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

void validate_bipartite(const BipartiteGraph& g) {
    if (g.a_count <= 0 || g.b_count <= 0)
        throw InputError("bipartite graph sides must be positive");
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : g.edges) {
        if (a < 0 || a >= g.a_count || b < 0 || b >= g.b_count)
            throw InputError("bipartite edge endpoint out of range");
        if (!seen.insert({a, b}).second) throw InputError("duplicate bipartite edge");
    }
}

Solution brute_force_opt(const Instance& inst, std::optional<int> budget_override,
                         std::uint64_t subset_budget) {
    const int n = static_cast<int>(inst.ranges.size());
    const int k = budget_override.value_or(inst.k);
    if (k < 0 || k > n) throw InputError("deletion budget out of range");
    check_budget(n, k, subset_budget, "brute_force_opt");

    const auto sigs = all_signatures(inst);
    long best = -1;
    std::vector<int> best_pick;
    for_each_subset(n, k, [&](const std::vector<int>& pick) {
        // pick is sorted, so std::includes tests signature coverage directly.
        long value = 0;
        for (const auto& sig : sigs)
            if (std::includes(pick.begin(), pick.end(), sig.begin(), sig.end())) ++value;
        if (value > best) {  // lexicographic order => first optimum is lex-min
            best = value;
            best_pick = pick;
        }
    });
    return make_solution(inst, best_pick);
}

long brute_force_opt_grouped(const Instance& inst, std::optional<int> budget_override,
                             std::uint64_t subset_budget) {
    const int n = static_cast<int>(inst.ranges.size());
    const int k = budget_override.value_or(inst.k);
    if (k < 0 || k > n) throw InputError("deletion budget out of range");

    const auto groups = group_by_signature(inst);
    const auto sigs = all_signatures(inst);
    long free_points = 0;
    for (const auto& sig : sigs)
        if (sig.empty()) ++free_points;

    const int g = static_cast<int>(groups.size());
    if (g >= 63 || (std::uint64_t{1} << g) > subset_budget)
        throw BudgetExceededError("brute_force_opt_grouped: too many groups",
                                  g >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                          : (std::uint64_t{1} << g));

    // Any optimal deleted set can be taken as the union of the signatures of
    // the groups it exposes (padding never helps), so scanning group subsets
    // whose signature union fits the budget covers the optimum.
    long best = free_points;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
        std::set<int> del;
        for (int i = 0; i < g; ++i)
            if (mask & (std::uint64_t{1} << i))
                del.insert(groups[i].signature.begin(), groups[i].signature.end());
        if (static_cast<int>(del.size()) > k) continue;
        std::vector<int> del_sorted(del.begin(), del.end());
        long value = 0;
        for (const auto& sig : sigs)
            if (std::includes(del_sorted.begin(), del_sorted.end(), sig.begin(), sig.end()))
                ++value;
        best = std::max(best, value);
    }
    return best;
}

long densest_k_subgraph_bipartite(const BipartiteGraph& g, int k, std::uint64_t subset_budget) {
    validate_bipartite(g);
    const int n = g.a_count + g.b_count;
    if (k < 0 || k > n) throw InputError("k out of range");
    check_budget(n, k, subset_budget, "densest_k_subgraph_bipartite");

    long best = 0;
    for_each_subset(n, k, [&](const std::vector<int>& pick) {
        // Vertices 0..a_count-1 are side A, the rest side B.
        std::vector<char> chosen(n, 0);
        for (int v : pick) chosen[v] = 1;
        long edges = 0;
        for (auto [a, b] : g.edges)
            if (chosen[a] && chosen[g.a_count + b]) ++edges;
        best = std::max(best, edges);
    });
    return best;
}

long densest_k_subhypergraph(int vertex_count, const std::vector<std::vector<int>>& hyperedges,
                             int k, std::uint64_t subset_budget) {
    if (vertex_count <= 0) throw InputError("hypergraph needs vertices");
    if (k < 0 || k > vertex_count) throw InputError("k out of range");
    for (const auto& e : hyperedges) {
        if (e.empty()) throw InputError("empty hyperedge");
        for (int v : e)
            if (v < 0 || v >= vertex_count) throw InputError("hyperedge vertex out of range");
    }
    check_budget(vertex_count, k, subset_budget, "densest_k_subhypergraph");

    long best = 0;
    for_each_subset(vertex_count, k, [&](const std::vector<int>& pick) {
        std::vector<char> chosen(vertex_count, 0);
        for (int v : pick) chosen[v] = 1;
        long induced = 0;
        for (const auto& e : hyperedges) {
            bool inside = true;
            for (int v : e)
                if (!chosen[v]) {
                    inside = false;
                    break;
                }
            if (inside) ++induced;
        }
        best = std::max(best, induced);
    });
    return best;
}

}  // namespace maxexp
