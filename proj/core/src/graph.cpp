#include "urm/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace urm {

std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << e.u << '-' << e.v; }

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::ostream& operator<<(std::ostream& os, const Girth& g) {
    if (g.is_infinite()) return os << "inf";
    return os << g.length();
}

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) throw GraphError("negative vertex count");
    adj_.resize(vertex_count);
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
    for (const Edge& e : edges) {
        if (!contains(e.u) || !contains(e.v)) {
            std::ostringstream msg;
            msg << "edge " << e << " out of range for n=" << vertex_count;
            throw GraphError(msg.str());
        }
        if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end()) {
            Vertex self = static_cast<Vertex>(&nb - adj_.data());
            throw GraphError("duplicate edge " + to_string(Edge(self, *dup)));
        }
    }
    edge_count_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    const auto& nb = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    Vertex target = adj_[a].size() <= adj_[b].size() ? b : a;
    return std::binary_search(nb.begin(), nb.end(), target);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    std::vector<std::vector<Vertex>> blocks;
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        auto& block = blocks.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            block.push_back(x);
            for (Vertex y : g.neighbors(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(block.begin(), block.end());
    }
    return blocks;
}

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

Girth girth(const Graph& g) {
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    std::queue<Vertex> q;
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = kNoVertex;
        q.push(root);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            // Cycles found deeper than this cannot beat the incumbent.
            if (2 * dist[x] >= best) break;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        q = {};
    }
    if (best == std::numeric_limits<int>::max()) return Girth::infinite();
    return Girth::of_length(best);
}

DegreeProfile degree_profile(const Graph& g) {
    if (g.order() == 0) throw GraphError("degree profile of the empty graph");
    DegreeProfile p;
    p.min_degree = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        p.max_degree = std::max(p.max_degree, d);
        p.min_degree = std::min(p.min_degree, d);
        if (d <= 1) ++p.count_degree_le1;
        if (d == 0) ++p.isolated_count;
    }
    return p;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

bool is_regular(const Graph& g, int degree) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != degree) return false;
    return true;
}

namespace {

Relabeled restrict_to(const Graph& g, const std::vector<char>& keep) {
    Relabeled r;
    r.old_to_new.assign(g.order(), kNoVertex);
    for (Vertex v = 0; v < g.order(); ++v)
        if (keep[v]) {
            r.old_to_new[v] = static_cast<Vertex>(r.new_to_old.size());
            r.new_to_old.push_back(v);
        }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (keep[e.u] && keep[e.v]) edges.emplace_back(r.old_to_new[e.u], r.old_to_new[e.v]);
    r.graph = Graph(static_cast<int>(r.new_to_old.size()), edges);
    return r;
}

void check_vertices(const Graph& g, std::span<const Vertex> vs) {
    for (Vertex v : vs)
        if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Relabeled delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    check_vertices(g, removed);
    std::vector<char> keep(g.order(), 1);
    for (Vertex v : removed) keep[v] = 0;
    return restrict_to(g, keep);
}

Relabeled induced_subgraph(const Graph& g, std::span<const Vertex> kept) {
    check_vertices(g, kept);
    std::vector<char> keep(g.order(), 0);
    for (Vertex v : kept) keep[v] = 1;
    return restrict_to(g, keep);
}

Contracted contract_set(const Graph& g, std::span<const Vertex> merged) {
    if (merged.empty()) throw GraphError("contract_set: empty vertex set");
    check_vertices(g, merged);
    if (!is_connected(induced_subgraph(g, merged).graph))
        throw GraphError("contract_set: vertex set does not induce a connected subgraph");

    std::vector<char> in_set(g.order(), 0);
    for (Vertex v : merged) in_set[v] = 1;

    Contracted c;
    c.old_to_new.assign(g.order(), kNoVertex);
    Vertex next = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!in_set[v]) c.old_to_new[v] = next++;
    c.super_vertex = next;
    for (Vertex v : merged) c.old_to_new[v] = c.super_vertex;

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Vertex a = c.old_to_new[e.u], b = c.old_to_new[e.v];
        if (a != b) edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    c.graph = Graph(next + 1, edges);
    return c;
}

Vertex spanning_tree_endvertex(const Graph& g) {
    if (g.order() < 2) throw GraphError("spanning_tree_endvertex: need at least two vertices");
    if (!is_connected(g)) throw GraphError("spanning_tree_endvertex: graph is disconnected");
    // The last vertex discovered by BFS has no children in the BFS tree.
    std::vector<char> seen(g.order(), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    Vertex last = 0;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        last = x;
        for (Vertex y : g.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                q.push(y);
            }
    }
    return last;
}

bool edge_on_cycle(const Graph& g, Vertex u, Vertex v) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
            if (x == u && y == v) continue;
            if (y == v) return true;
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return false;
}

}  // namespace urm
