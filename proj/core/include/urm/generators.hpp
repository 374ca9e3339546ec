#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "urm/graph.hpp"

namespace urm {

class GenerationError : public GraphError {
public:
    using GraphError::GraphError;
};

/// K_{a,b} with sides {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);

/// The subcubic tightness family: k connector vertices u(1..k) followed by
/// 2k+1 copies of K_{2,3}; u(i) has one edge into each of copies 2i-1, 2i,
/// 2i+1. Connectors are vertices 0..k-1; copy j (0-based) occupies
/// k+5j..k+5j+4 with its degree-3 side first. Attachments land on the
/// lowest unused degree-2 vertex of a copy, so the result stays subcubic.
/// n = 11k+5, m = 15k+6.
Graph gk_gadget(int k);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();
/// The unique (4,5)-cage on 19 vertices.
Graph robertson_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

struct RandomGraphOptions {
    int n = 1;
    int max_degree = 3;
    std::optional<int> min_girth;
    std::uint64_t seed = 0;
    /// Stop adding edges once this many are present.
    std::optional<int> max_edges;
    /// Restart (up to `attempts` times) until at least this many edges fit.
    int min_edges = 0;
    /// Build a random spanning tree first so the result is connected.
    bool connected = false;
    int attempts = 64;
};

/// Random simple graph with maximum degree <= max_degree and girth >=
/// min_girth. Candidate pairs are visited in a seeded random order and each
/// is added when it keeps the degree bound and closes no cycle shorter than
/// min_girth. Without max_edges the result is saturated. Deterministic for a
/// fixed seed. Throws GenerationError when min_edges or connectivity cannot
/// be met within the attempt budget.
Graph random_graph(const RandomGraphOptions& options);

Graph random_graph(int n, int max_degree, std::optional<int> min_girth, std::uint64_t seed);

/// Calls visit(g) for every connected graph on n vertices whose labeling has
/// a non-increasing degree sequence. Every isomorphism class appears at
/// least once. Supports n <= 8.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit);

/// Same enumeration, without the connectivity filter.
void for_each_graph(int n, const std::function<void(const Graph&)>& visit);

}  // namespace urm
