#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "urm/graph.hpp"
#include "urm/matching.hpp"

namespace urm {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SolveResult {
    int value = 0;
    Matching witness;
    /// False when the node budget ran out (value is then a lower bound) or
    /// when the search stopped early at a requested target.
    bool optimal = true;
    std::uint64_t nodes_explored = 0;
    std::chrono::microseconds elapsed{0};
};

struct SolveOptions {
    std::uint64_t budget = kDefaultNodeBudget;
    /// Stop as soon as a witness of this size is found.
    std::optional<int> target;
};

/// nu(G) by Edmonds' blossom algorithm.
SolveResult max_matching(const Graph& g);

/// nu_ur(G) by branch and bound over edges in sorted order (include before
/// exclude). Partial matchings that are not uniquely restricted are pruned,
/// which is sound because the property is inherited by subsets. The
/// witness is re-checked before returning.
SolveResult nu_ur_exact(const Graph& g, const SolveOptions& options = {});

/// nu_ac(G) with the same search and the induced-forest predicate.
SolveResult nu_ac_exact(const Graph& g, const SolveOptions& options = {});

/// Maximal uniquely restricted matching built greedily in edge order.
Matching greedy_uniquely_restricted(const Graph& g);

}  // namespace urm
