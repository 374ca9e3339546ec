#pragma once

#include <optional>
#include <span>
#include <vector>

#include "urm/graph.hpp"

namespace urm::detail {

/// Edmonds' alternating-tree search with blossom shrinking.
///
/// Reusable scratch space for repeated searches on one graph. `mate[v]` is
/// v's partner or kNoVertex. The search can be confined to a vertex subset
/// and told to ignore one edge; both are needed to look for an alternating
/// cycle through a fixed matched edge.
class BlossomSearch {
public:
    explicit BlossomSearch(const Graph& g);

    /// Augmenting path from the exposed vertex `root`, listed from the far
    /// exposed endpoint back to root (edges alternate non-matching,
    /// matching, ..., non-matching). Empty when none exists.
    std::vector<Vertex> augmenting_path(Vertex root, std::span<const Vertex> mate,
                                        const std::vector<char>* allowed = nullptr,
                                        std::optional<Edge> excluded = std::nullopt);

private:
    Vertex find_path(Vertex root);
    Vertex lowest_common_base(Vertex a, Vertex b);
    void mark_path(Vertex v, Vertex b, Vertex child);
    bool usable(Vertex v, Vertex to) const;

    const Graph& g_;
    std::span<const Vertex> mate_;
    const std::vector<char>* allowed_ = nullptr;
    std::optional<Edge> excluded_;
    std::vector<Vertex> parent_, base_, queue_;
    std::vector<char> used_, in_blossom_, lca_mark_;
};

}  // namespace urm::detail
