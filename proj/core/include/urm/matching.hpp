#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "urm/graph.hpp"

namespace urm {

class MatchingError : public GraphError {
public:
    using GraphError::GraphError;
};

/// A set of pairwise disjoint edges, kept sorted. Validity against a host
/// graph is checked by validate_matching / Matching::in.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);

    /// Builds and validates against g; throws MatchingError.
    static Matching in(const Graph& g, std::vector<Edge> edges);

    std::span<const Edge> edges() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    bool contains(const Edge& e) const;

    Matching with(const Edge& e) const;
    Matching without(const Edge& e) const;

    /// mate[v] for v in 0..n-1, kNoVertex when v is exposed.
    std::vector<Vertex> mates(int n) const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<Edge> edges_;
};

/// Throws MatchingError unless every edge is in g and no two edges share a vertex.
void validate_matching(const Graph& g, const Matching& m);
bool is_matching(const Graph& g, const Matching& m);

/// Covered vertices, sorted.
std::vector<Vertex> covered_vertices(const Matching& m);

/// Cycle v0 v1 ... v_{2k-1} with v0v1, v2v3, ... in the matching and the
/// closing pairs v1v2, ..., v_{2k-1}v0 outside it.
struct AlternatingCycleWitness {
    std::vector<Vertex> cycle;
};

struct UrCheck {
    bool uniquely_restricted = true;
    std::optional<AlternatingCycleWitness> witness;
};

/// Decides uniquely-restrictedness through alternating cycles.
///
/// First builds the transition digraph on covered vertices (arc v -> mate(w)
/// for every non-matching edge vw): every alternating cycle maps to a
/// directed cycle, so an acyclic digraph settles the answer. Otherwise each
/// matched edge ab is tested exactly by searching G[V(M)] - ab for an
/// M-alternating a-b path with blossom shrinking; a hit closed by ab is the
/// witness. Throws MatchingError for an invalid matching.
UrCheck is_uniquely_restricted_fast(const Graph& g, const Matching& m);

/// Largest covered set the oracle will enumerate.
inline constexpr int kOracleCoveredLimit = 24;

/// Definition-level check: m is the only perfect matching of the subgraph
/// induced by its covered vertices. Throws MatchingError when more than
/// kOracleCoveredLimit vertices are covered.
bool is_uniquely_restricted_oracle(const Graph& g, const Matching& m);

/// True iff the witness is an alternating cycle of g with respect to m:
/// even length >= 4, distinct vertices, every consecutive pair an edge of g,
/// matched and unmatched edges alternating.
bool is_alternating_cycle(const Graph& g, const Matching& m, const AlternatingCycleWitness& w);

/// True iff the subgraph induced by the covered vertices is a forest.
bool is_acyclic_matching(const Graph& g, const Matching& m);

/// True iff m extended by e (with e disjoint from V(m)) has no alternating
/// cycle, assuming m itself has none. Only cycles through e need checking.
bool extends_uniquely_restricted(const Graph& g, std::span<const Vertex> mate, const Edge& e);

struct AcyclicPartition {
    std::vector<Matching> classes;
    bool success = false;
};

/// Greedy split of m into at most `bound` acyclic matchings: edges in sorted
/// order, each into the first class whose covered subgraph stays a forest.
/// Always succeeds when bound >= max degree of g; otherwise failure is
/// reported through `success`.
AcyclicPartition partition_into_acyclic(const Graph& g, const Matching& m, int bound);

enum class SearchStatus { Found, Impossible, Inconclusive };

struct ExhaustivePartition {
    SearchStatus status = SearchStatus::Inconclusive;
    AcyclicPartition partition;
    std::uint64_t nodes = 0;
};

/// Backtracking search for a partition into at most `bound` acyclic
/// matchings, giving up after node_limit assignments.
ExhaustivePartition partition_into_acyclic_exhaustive(const Graph& g, const Matching& m, int bound,
                                                     std::uint64_t node_limit);

/// Visits every matching of g (including the empty one) in a fixed order.
void for_each_matching(const Graph& g, const std::function<void(const Matching&)>& visit);

}  // namespace urm
