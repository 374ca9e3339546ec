#include "urm/detail/blossom.hpp"

#include <algorithm>

namespace urm::detail {

BlossomSearch::BlossomSearch(const Graph& g)
    : g_(g),
      parent_(g.order()),
      base_(g.order()),
      used_(g.order()),
      in_blossom_(g.order()),
      lca_mark_(g.order()) {
    queue_.reserve(g.order());
}

bool BlossomSearch::usable(Vertex v, Vertex to) const {
    if (allowed_ && !(*allowed_)[to]) return false;
    if (excluded_ && Edge(v, to) == *excluded_) return false;
    return true;
}

Vertex BlossomSearch::lowest_common_base(Vertex a, Vertex b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    for (;;) {
        a = base_[a];
        lca_mark_[a] = 1;
        if (mate_[a] == kNoVertex) break;
        a = parent_[mate_[a]];
    }
    for (;;) {
        b = base_[b];
        if (lca_mark_[b]) return b;
        b = parent_[mate_[b]];
    }
}

void BlossomSearch::mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
        in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
        parent_[v] = child;
        child = mate_[v];
        v = parent_[mate_[v]];
    }
}

Vertex BlossomSearch::find_path(Vertex root) {
    const int n = g_.order();
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNoVertex);
    for (Vertex i = 0; i < n; ++i) base_[i] = i;
    queue_.clear();
    used_[root] = 1;
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        Vertex v = queue_[head];
        for (Vertex to : g_.neighbors(v)) {
            if (!usable(v, to)) continue;
            if (base_[v] == base_[to] || mate_[v] == to) continue;
            if (to == root || (mate_[to] != kNoVertex && parent_[mate_[to]] != kNoVertex)) {
                Vertex cur = lowest_common_base(v, to);
                std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                mark_path(v, cur, to);
                mark_path(to, cur, v);
                for (Vertex i = 0; i < n; ++i)
                    if (in_blossom_[base_[i]]) {
                        base_[i] = cur;
                        if (!used_[i]) {
                            used_[i] = 1;
                            queue_.push_back(i);
                        }
                    }
            } else if (parent_[to] == kNoVertex) {
                parent_[to] = v;
                if (mate_[to] == kNoVertex) return to;
                Vertex next = mate_[to];
                used_[next] = 1;
                queue_.push_back(next);
            }
        }
    }
    return kNoVertex;
}

std::vector<Vertex> BlossomSearch::augmenting_path(Vertex root, std::span<const Vertex> mate,
                                                   const std::vector<char>* allowed, std::optional<Edge> excluded) {
    mate_ = mate;
    allowed_ = allowed;
    excluded_ = excluded;
    std::vector<Vertex> path;
    Vertex end = find_path(root);
    if (end == kNoVertex) return path;
    // Unwind: end, parent(end), mate(parent(end)), ... root.
    for (Vertex v = end; v != kNoVertex;) {
        Vertex pv = parent_[v];
        path.push_back(v);
        path.push_back(pv);
        v = mate_[pv];
    }
    return path;
}

}  // namespace urm::detail
