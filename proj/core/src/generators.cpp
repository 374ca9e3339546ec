#include "urm/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <queue>
#include <random>
#include <utility>

namespace urm {

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw GraphError("complete_bipartite: sides must be positive");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

Graph gk_gadget(int k) {
    if (k < 1) throw GraphError("gk_gadget: k must be at least 1");
    const int copies = 2 * k + 1;
    const int n = k + 5 * copies;
    std::vector<Edge> edges;
    for (int j = 0; j < copies; ++j) {
        const int base = k + 5 * j;
        for (int s = 0; s < 2; ++s)
            for (int t = 2; t < 5; ++t) edges.emplace_back(base + s, base + t);
    }
    std::vector<int> used(copies, 0);
    for (int i = 0; i < k; ++i) {
        for (int j : {2 * i, 2 * i + 1, 2 * i + 2}) {
            edges.emplace_back(i, k + 5 * j + 2 + used[j]);
            ++used[j];
        }
    }
    return Graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle_graph: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

Graph robertson_graph() {
    // Hamiltonian cycle plus one chord per vertex, LCF-style.
    constexpr std::array<int, 19> chord{8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4};
    std::vector<Edge> edges;
    for (int i = 0; i < 19; ++i) {
        edges.emplace_back(i, (i + 1) % 19);
        edges.emplace_back(i, (i + chord[i]) % 19);
    }
    return Graph(19, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
    return Graph(a.order() + b.order(), edges);
}

namespace {

class Builder {
public:
    Builder(int n, int max_degree, std::optional<int> min_girth)
        : adj_(n), max_degree_(max_degree), min_girth_(min_girth), dist_(n, -1) {}

    bool can_add(int u, int v) {
        if (static_cast<int>(adj_[u].size()) >= max_degree_ || static_cast<int>(adj_[v].size()) >= max_degree_)
            return false;
        if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end()) return false;
        if (!min_girth_ || *min_girth_ <= 3) return true;
        // The new edge closes a cycle of length dist(u,v)+1.
        return !within(u, v, *min_girth_ - 2);
    }

    void add(int u, int v) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++edges_;
    }

    int edge_count() const { return edges_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    Graph build() const {
        std::vector<Edge> edges;
        for (int u = 0; u < static_cast<int>(adj_.size()); ++u)
            for (int v : adj_[u])
                if (u < v) edges.emplace_back(u, v);
        return Graph(static_cast<int>(adj_.size()), edges);
    }

private:
    bool within(int source, int target, int depth) {
        std::vector<int> touched{source};
        std::queue<int> q;
        dist_[source] = 0;
        q.push(source);
        bool found = false;
        while (!q.empty() && !found) {
            int x = q.front();
            q.pop();
            if (dist_[x] == depth) continue;
            for (int y : adj_[x]) {
                if (dist_[y] >= 0) continue;
                dist_[y] = dist_[x] + 1;
                touched.push_back(y);
                if (y == target) {
                    found = true;
                    break;
                }
                q.push(y);
            }
        }
        for (int t : touched) dist_[t] = -1;
        return found;
    }

    std::vector<std::vector<int>> adj_;
    int max_degree_;
    std::optional<int> min_girth_;
    int edges_ = 0;
    std::vector<int> dist_;
};

}  // namespace

Graph random_graph(const RandomGraphOptions& opt) {
    if (opt.n < 1) throw GraphError("random_graph: n must be at least 1");
    if (opt.max_degree < 0) throw GraphError("random_graph: negative max_degree");
    if (opt.min_girth && *opt.min_girth < 3) throw GraphError("random_graph: min_girth must be at least 3");

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < opt.n; ++u)
        for (int v = u + 1; v < opt.n; ++v) pairs.emplace_back(u, v);
    const int cap = opt.max_edges.value_or(static_cast<int>(pairs.size()));

    for (int attempt = 0; attempt < std::max(1, opt.attempts); ++attempt) {
        std::mt19937_64 rng(opt.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt));
        Builder b(opt.n, opt.max_degree, opt.min_girth);
        bool ok = true;
        if (opt.connected) {
            std::vector<int> order(opt.n);
            for (int i = 0; i < opt.n; ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            for (int i = 1; i < opt.n && ok; ++i) {
                std::vector<int> open;
                for (int j = 0; j < i; ++j)
                    if (b.degree(order[j]) < opt.max_degree) open.push_back(order[j]);
                if (open.empty()) {
                    ok = false;
                    break;
                }
                std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
                b.add(open[pick(rng)], order[i]);
            }
        }
        if (!ok) continue;
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (auto [u, v] : pairs) {
            if (b.edge_count() >= cap) break;
            if (b.can_add(u, v)) b.add(u, v);
        }
        if (b.edge_count() >= opt.min_edges) return b.build();
    }
    throw GenerationError("random_graph: no graph with n=" + std::to_string(opt.n) +
                          ", max_degree=" + std::to_string(opt.max_degree) +
                          (opt.min_girth ? ", girth>=" + std::to_string(*opt.min_girth) : std::string{}) +
                          (opt.connected ? ", connected" : "") + " and at least " + std::to_string(opt.min_edges) +
                          " edges within " + std::to_string(opt.attempts) + " attempts");
}

Graph random_graph(int n, int max_degree, std::optional<int> min_girth, std::uint64_t seed) {
    RandomGraphOptions opt;
    opt.n = n;
    opt.max_degree = max_degree;
    opt.min_girth = min_girth;
    opt.seed = seed;
    return random_graph(opt);
}

namespace {

void enumerate(int n, bool connected_only, const std::function<void(const Graph&)>& visit) {
    if (n < 0 || n > 8) throw GraphError("graph enumeration supports 0 <= n <= 8");
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    const std::uint64_t total = 1ULL << pairs.size();
    std::array<int, 8> deg{};
    std::array<std::uint32_t, 8> nbr{};
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        deg.fill(0);
        nbr.fill(0);
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1) {
                auto [u, v] = pairs[b];
                ++deg[u];
                ++deg[v];
                nbr[u] |= 1u << v;
                nbr[v] |= 1u << u;
            }
        bool ordered = true;
        for (int i = 0; i + 1 < n && ordered; ++i) ordered = deg[i] >= deg[i + 1];
        if (!ordered) continue;
        if (connected_only && n > 0) {
            std::uint32_t reached = 1, frontier = 1;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::uint32_t f = frontier; f; f &= f - 1) next |= nbr[std::countr_zero(f)];
                frontier = next & ~reached;
                reached |= next;
            }
            if (reached != (n == 32 ? ~0u : (1u << n) - 1)) continue;
        }
        edges.clear();
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1) edges.emplace_back(pairs[b].first, pairs[b].second);
        visit(Graph(n, edges));
    }
}

}  // namespace

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) { enumerate(n, true, visit); }

void for_each_graph(int n, const std::function<void(const Graph&)>& visit) { enumerate(n, false, visit); }

}  // namespace urm
