#include "urm/matching.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "urm/detail/blossom.hpp"

namespace urm {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Matching Matching::in(const Graph& g, std::vector<Edge> edges) {
    const std::size_t requested = edges.size();
    Matching m(std::move(edges));
    if (static_cast<std::size_t>(m.size()) != requested) throw MatchingError("matching lists an edge twice");
    validate_matching(g, m);
    return m;
}

bool Matching::contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

Matching Matching::with(const Edge& e) const {
    std::vector<Edge> out = edges_;
    out.push_back(e);
    return Matching(std::move(out));
}

Matching Matching::without(const Edge& e) const {
    std::vector<Edge> out;
    for (const Edge& f : edges_)
        if (f != e) out.push_back(f);
    return Matching(std::move(out));
}

std::vector<Vertex> Matching::mates(int n) const {
    std::vector<Vertex> mate(n, kNoVertex);
    for (const Edge& e : edges_) {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    return mate;
}

void validate_matching(const Graph& g, const Matching& m) {
    std::vector<char> seen(g.order(), 0);
    for (const Edge& e : m.edges()) {
        if (!g.has_edge(e.u, e.v)) throw MatchingError("edge " + to_string(e) + " is not in the graph");
        if (seen[e.u] || seen[e.v]) throw MatchingError("edge " + to_string(e) + " shares a vertex with another edge");
        seen[e.u] = seen[e.v] = 1;
    }
}

bool is_matching(const Graph& g, const Matching& m) {
    try {
        validate_matching(g, m);
        return true;
    } catch (const MatchingError&) {
        return false;
    }
}

std::vector<Vertex> covered_vertices(const Matching& m) {
    std::vector<Vertex> out;
    for (const Edge& e : m.edges()) {
        out.push_back(e.u);
        out.push_back(e.v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Arc v -> mate(w) for each non-matching edge vw inside V(M). Returns true
// when the digraph is acyclic.
bool transition_digraph_acyclic(const Graph& g, std::span<const Vertex> mate, std::span<const Vertex> covered) {
    const int n = g.order();
    std::vector<int> indeg(n, 0);
    for (Vertex v : covered)
        for (Vertex w : g.neighbors(v))
            if (w != mate[v] && mate[w] != kNoVertex) ++indeg[mate[w]];
    std::vector<Vertex> ready;
    for (Vertex v : covered)
        if (indeg[v] == 0) ready.push_back(v);
    std::size_t removed = 0;
    while (!ready.empty()) {
        Vertex v = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex w : g.neighbors(v))
            if (w != mate[v] && mate[w] != kNoVertex && --indeg[mate[w]] == 0) ready.push_back(mate[w]);
    }
    return removed == covered.size();
}

}  // namespace

UrCheck is_uniquely_restricted_fast(const Graph& g, const Matching& m) {
    validate_matching(g, m);
    UrCheck result;
    if (m.size() < 2) return result;

    std::vector<Vertex> mate = m.mates(g.order());
    std::vector<Vertex> covered = covered_vertices(m);
    if (transition_digraph_acyclic(g, mate, covered)) return result;

    std::vector<char> allowed(g.order(), 0);
    for (Vertex v : covered) allowed[v] = 1;
    detail::BlossomSearch search(g);
    for (const Edge& e : m.edges()) {
        mate[e.u] = mate[e.v] = kNoVertex;
        std::vector<Vertex> path = search.augmenting_path(e.u, mate, &allowed, e);
        mate[e.u] = e.v;
        mate[e.v] = e.u;
        if (path.empty()) continue;
        // path runs e.v ... e.u; rotate so the cycle opens with the matched edge.
        AlternatingCycleWitness w;
        w.cycle.push_back(e.u);
        w.cycle.insert(w.cycle.end(), path.begin(), path.end() - 1);
        result.uniquely_restricted = false;
        result.witness = std::move(w);
        return result;
    }
    return result;
}

bool is_uniquely_restricted_oracle(const Graph& g, const Matching& m) {
    validate_matching(g, m);
    const std::vector<Vertex> covered = covered_vertices(m);
    if (static_cast<int>(covered.size()) > kOracleCoveredLimit)
        throw MatchingError("oracle guard: more than " + std::to_string(kOracleCoveredLimit) + " covered vertices");
    const int k = static_cast<int>(covered.size());
    std::vector<std::uint32_t> nbr(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && g.has_edge(covered[i], covered[j])) nbr[i] |= 1u << j;

    // Count perfect matchings of the covered subgraph, stopping at two.
    int found = 0;
    auto count = [&](auto&& self, std::uint32_t free) -> void {
        if (found >= 2) return;
        if (free == 0) {
            ++found;
            return;
        }
        int v = std::countr_zero(free);
        std::uint32_t rest = free & ~(1u << v);
        for (std::uint32_t cand = nbr[v] & rest; cand; cand &= cand - 1) {
            int w = std::countr_zero(cand);
            self(self, rest & ~(1u << w));
        }
    };
    count(count, k == 32 ? ~0u : (1u << k) - 1);
    return found == 1;
}

bool is_alternating_cycle(const Graph& g, const Matching& m, const AlternatingCycleWitness& w) {
    const auto& c = w.cycle;
    const std::size_t len = c.size();
    if (len < 4 || len % 2 != 0) return false;
    std::vector<Vertex> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < len; ++i) {
        Vertex a = c[i], b = c[(i + 1) % len];
        if (!g.contains(a) || !g.contains(b) || !g.has_edge(a, b)) return false;
        if (m.contains(Edge(a, b)) != (i % 2 == 0)) return false;
    }
    return true;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

bool induces_forest(const Graph& g, std::span<const Vertex> vertices, std::vector<char>& member) {
    for (Vertex v : vertices) member[v] = 1;
    DisjointSets sets(g.order());
    bool forest = true;
    for (Vertex v : vertices) {
        for (Vertex w : g.neighbors(v))
            if (v < w && member[w] && !sets.unite(v, w)) {
                forest = false;
                break;
            }
        if (!forest) break;
    }
    for (Vertex v : vertices) member[v] = 0;
    return forest;
}

}  // namespace

bool is_acyclic_matching(const Graph& g, const Matching& m) {
    validate_matching(g, m);
    std::vector<char> member(g.order(), 0);
    std::vector<Vertex> covered = covered_vertices(m);
    return induces_forest(g, covered, member);
}

bool extends_uniquely_restricted(const Graph& g, std::span<const Vertex> mate, const Edge& e) {
    // Any new alternating cycle is e plus an alternating a-b path leaving a
    // and entering b through non-matching edges. Reachability in the
    // transition digraph is necessary for such a path.
    const Vertex a = e.u, b = e.v;
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{a};
    seen[a] = 1;
    bool candidate = false;
    while (!stack.empty() && !candidate) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
            if (y == b || y == mate[x] || mate[y] == kNoVertex) continue;
            Vertex z = mate[y];
            if (seen[z]) continue;
            seen[z] = 1;
            if (g.has_edge(z, b)) {
                candidate = true;
                break;
            }
            stack.push_back(z);
        }
    }
    if (!candidate) return true;

    std::vector<char> allowed(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (mate[v] != kNoVertex) allowed[v] = 1;
    allowed[a] = allowed[b] = 1;
    detail::BlossomSearch search(g);
    return search.augmenting_path(a, mate, &allowed, e).empty();
}

namespace {

class ClassState {
public:
    explicit ClassState(const Graph& g) : g_(g), member_(g.order(), 0) {}

    bool accepts(const Edge& e) {
        vertices_.push_back(e.u);
        vertices_.push_back(e.v);
        bool ok = induces_forest(g_, vertices_, member_);
        vertices_.resize(vertices_.size() - 2);
        return ok;
    }
    void push(const Edge& e) {
        edges_.push_back(e);
        vertices_.push_back(e.u);
        vertices_.push_back(e.v);
    }
    void pop() {
        edges_.pop_back();
        vertices_.resize(vertices_.size() - 2);
    }
    bool empty() const { return edges_.empty(); }
    Matching matching() const { return Matching(edges_); }

private:
    const Graph& g_;
    std::vector<char> member_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

}  // namespace

AcyclicPartition partition_into_acyclic(const Graph& g, const Matching& m, int bound) {
    validate_matching(g, m);
    if (bound < 1) throw MatchingError("partition bound must be at least 1");
    std::vector<ClassState> classes;
    AcyclicPartition out;
    for (const Edge& e : m.edges()) {
        bool placed = false;
        for (auto& c : classes)
            if (c.accepts(e)) {
                c.push(e);
                placed = true;
                break;
            }
        if (!placed) {
            if (static_cast<int>(classes.size()) == bound) return out;
            classes.emplace_back(g).push(e);
        }
    }
    for (const auto& c : classes) out.classes.push_back(c.matching());
    out.success = true;
    return out;
}

ExhaustivePartition partition_into_acyclic_exhaustive(const Graph& g, const Matching& m, int bound,
                                                     std::uint64_t node_limit) {
    validate_matching(g, m);
    if (bound < 1) throw MatchingError("partition bound must be at least 1");
    ExhaustivePartition out;
    std::vector<ClassState> classes(bound, ClassState(g));
    auto edges = m.edges();
    bool aborted = false;

    auto place = [&](auto&& self, std::size_t i) -> bool {
        if (i == edges.size()) return true;
        if (++out.nodes > node_limit) {
            aborted = true;
            return false;
        }
        // Classes are interchangeable, so the first empty class is the only
        // empty one worth trying.
        for (auto& c : classes) {
            bool was_empty = c.empty();
            if (c.accepts(edges[i])) {
                c.push(edges[i]);
                if (self(self, i + 1)) return true;
                c.pop();
                if (aborted) return false;
            }
            if (was_empty) break;
        }
        return false;
    };

    if (place(place, 0)) {
        out.status = SearchStatus::Found;
        out.partition.success = true;
        for (const auto& c : classes)
            if (!c.empty()) out.partition.classes.push_back(c.matching());
    } else {
        out.status = aborted ? SearchStatus::Inconclusive : SearchStatus::Impossible;
    }
    return out;
}

void for_each_matching(const Graph& g, const std::function<void(const Matching&)>& visit) {
    const std::vector<Edge> edges = g.edges();
    std::vector<char> used(g.order(), 0);
    std::vector<Edge> current;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == edges.size()) {
            visit(Matching(current));
            return;
        }
        self(self, i + 1);
        const Edge& e = edges[i];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            current.push_back(e);
            self(self, i + 1);
            current.pop_back();
            used[e.u] = used[e.v] = 0;
        }
    };
    rec(rec, 0);
}

}  // namespace urm
