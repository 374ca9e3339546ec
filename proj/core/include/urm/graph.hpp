#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace urm {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected edge with endpoints stored smaller-first.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool touches(Vertex x) const { return x == u || x == v; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);
/// "u-v", the textual form used in JSON payloads.
std::string to_string(const Edge& e);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted, so has_edge is a binary search and iteration
/// order is canonical. Construction rejects loops, duplicates and
/// out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, std::span<const Edge> edges);
    Graph(int vertex_count, std::initializer_list<Edge> edges)
        : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    bool has_edge(Vertex a, Vertex b) const;
    bool contains(Vertex v) const { return v >= 0 && v < order(); }

    /// All edges, sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
};

/// Shortest cycle length, or infinite for forests.
class Girth {
public:
    static Girth infinite() { return Girth{}; }
    static Girth of_length(int len) { return Girth{len}; }

    bool is_infinite() const { return !length_; }
    int length() const { return length_.value(); }
    bool at_least(int g) const { return !length_ || *length_ >= g; }

    friend bool operator==(const Girth&, const Girth&) = default;

private:
    Girth() = default;
    explicit Girth(int len) : length_(len) {}
    std::optional<int> length_;
};

std::ostream& operator<<(std::ostream& os, const Girth& g);

struct DegreeProfile {
    int max_degree = 0;
    int min_degree = 0;
    int count_degree_le1 = 0;
    int isolated_count = 0;
};

/// Vertex blocks of the connected components, each sorted, blocks ordered
/// by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

Girth girth(const Graph& g);

/// Throws GraphError on the empty graph.
DegreeProfile degree_profile(const Graph& g);

/// max_degree without the empty-graph check (0 for n = 0).
int max_degree(const Graph& g);

bool is_regular(const Graph& g, int degree);

/// Result of a vertex-set transformation. old_to_new[v] is the new label
/// of v, or kNoVertex when v was deleted.
struct Relabeled {
    Graph graph;
    std::vector<Vertex> old_to_new;
    std::vector<Vertex> new_to_old;
};

/// Induced subgraph on V(g) \ removed, densely relabeled in increasing order.
Relabeled delete_vertices(const Graph& g, std::span<const Vertex> removed);

/// Induced subgraph on the given vertices, densely relabeled in increasing order.
Relabeled induced_subgraph(const Graph& g, std::span<const Vertex> kept);

/// Result of contracting a connected vertex set to a single vertex.
struct Contracted {
    Graph graph;
    /// Every member of the contracted set maps to super_vertex.
    std::vector<Vertex> old_to_new;
    Vertex super_vertex = kNoVertex;
};

/// Merges `merged` into one vertex appended after the surviving vertices.
/// Loops vanish and parallel edges collapse, so the result is simple.
/// Throws GraphError when the set is empty or does not induce a connected graph.
Contracted contract_set(const Graph& g, std::span<const Vertex> merged);

/// A vertex whose removal keeps g connected (a leaf of a BFS tree).
/// Throws GraphError when g is disconnected or has fewer than two vertices.
Vertex spanning_tree_endvertex(const Graph& g);

/// True if u and v are joined by a path avoiding edge uv.
bool edge_on_cycle(const Graph& g, Vertex u, Vertex v);

}  // namespace urm
