#pragma once

#include <vector>

#include "urm/generators.hpp"
#include "urm/graph.hpp"

namespace urm::testing {

// Degree-2 vertex 0 with neighbors 1 and 2; each neighbor hangs two copies
// of K4 with one edge subdivided. Removing N[0] leaves four components,
// so the subcubic engine has to splice.
inline Graph splice_graph() {
    std::vector<Edge> e{{0, 1}, {0, 2}};
    for (int i = 0; i < 4; ++i) {
        const int s = 3 + 5 * i, a = s + 1, c = s + 2, d = s + 3, f = s + 4;
        for (Edge x : {Edge(s, a), Edge(s, c), Edge(a, d), Edge(a, f), Edge(c, d), Edge(c, f), Edge(d, f)})
            e.push_back(x);
        e.emplace_back(i < 2 ? 1 : 2, s);
    }
    return Graph(23, e);
}

// Matching {01, 23, 45} with triangles 0-2-3 and 1-4-5 on the matched edge
// 01. Uniquely restricted, yet the naive arc digraph has a cycle.
inline Graph bowtie() { return Graph(6, {{0, 1}, {2, 3}, {4, 5}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

inline Graph random_tree(int n, std::uint64_t seed) {
    RandomGraphOptions o;
    o.n = n;
    o.max_degree = n;
    o.seed = seed;
    o.connected = true;
    o.max_edges = n - 1;
    return random_graph(o);
}

}  // namespace urm::testing
