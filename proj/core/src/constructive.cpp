#include "urm/constructive.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <set>

#include "urm/graph_io.hpp"
#include "urm/solvers.hpp"

namespace urm {

namespace {

constexpr std::array<std::string_view, 12> kRuleNames{
    "MinDegreePeel",     "Deg1",           "Deg2AdjacentBridgeOrTriangle", "Deg2AdjacentCycle",
    "Deg2Triangle",      "Deg2C4Contract", "Deg2FewComponents",            "Deg2EdgeSplice",
    "Deg2PathPeel",      "MinDegPeelGirth5", "RegularVertexDrop",          "CubicBase",
};

}  // namespace

std::string_view to_string(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> rule_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kRuleNames.size(); ++i)
        if (kRuleNames[i] == s) return static_cast<Rule>(i);
    return std::nullopt;
}

Rational theorem1_bound(const Graph& g, int delta) {
    return Rational(g.order(), delta) - Rational(g.size(), std::int64_t{delta} * delta);
}

Rational theorem2_bound(const Graph& g) {
    return Rational(g.order() - component_count(g), 2) - Rational(g.size(), 6);
}

Rational theorem3_bound(const Graph& g, int delta) { return Rational(g.order() - component_count(g), delta); }

Rational girth5_lemma_bound(const Graph& g, int delta) {
    int low = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 1) ++low;
    return Rational(g.order() - low, delta);
}

namespace {

// A working instance: a graph plus the global identifier of each vertex.
struct Level {
    Graph g;
    std::vector<Vertex> ids;
};

Level top_level(const Graph& g) {
    Level l{g, std::vector<Vertex>(g.order())};
    for (Vertex v = 0; v < g.order(); ++v) l.ids[v] = v;
    return l;
}

Level sub_level(const Level& parent, const Relabeled& r) {
    Level l{r.graph, {}};
    l.ids.reserve(r.new_to_old.size());
    for (Vertex old : r.new_to_old) l.ids.push_back(parent.ids[old]);
    return l;
}

std::vector<Vertex> globals(const Level& l, std::span<const Vertex> local) {
    std::vector<Vertex> out;
    for (Vertex v : local) out.push_back(l.ids[v]);
    std::sort(out.begin(), out.end());
    return out;
}

Edge global_edge(const Level& l, const Edge& e) { return Edge(l.ids[e.u], l.ids[e.v]); }

std::vector<Edge> global_edges(const Level& l, std::span<const Edge> local) {
    std::vector<Edge> out;
    for (const Edge& e : local) out.push_back(global_edge(l, e));
    std::sort(out.begin(), out.end());
    return out;
}

void append_lifted(std::vector<Edge>& out, const Matching& m, std::span<const Vertex> new_to_old) {
    for (const Edge& e : m.edges()) out.emplace_back(new_to_old[e.u], new_to_old[e.v]);
}

std::vector<Vertex> other_neighbors(const Graph& g, Vertex x, Vertex excluded) {
    std::vector<Vertex> out;
    for (Vertex y : g.neighbors(x))
        if (y != excluded) out.push_back(y);
    return out;
}

using BoundFn = std::function<Rational(const Graph&)>;

class Engine {
public:
    Engine(const Graph& original, ReductionTrace& trace) : next_id_(original.order()), trace_(trace) {}

protected:
    using Recurse = std::function<Matching(const Level&)>;

    Vertex fresh_id() { return next_id_++; }

    std::size_t open_step(ReductionStep step, int lifted_count) {
        if (step.bound_before > step.bound_after + lifted_count)
            throw CertificationError(std::string("bound accounting fails for rule ") +
                                     std::string(to_string(step.rule)) + ": " + to_string(step.bound_before) + " > " +
                                     to_string(step.bound_after) + " + " + std::to_string(lifted_count));
        trace_.steps.push_back(std::move(step));
        return trace_.steps.size() - 1;
    }

    ReductionStep& step(std::size_t index) { return trace_.steps[index]; }

    static void certify(const Level& l, const Matching& m, Rule rule) {
        if (!is_matching(l.g, m) || !is_uniquely_restricted_fast(l.g, m).uniquely_restricted)
            throw CertificationError(std::string("lift after rule ") + std::string(to_string(rule)) +
                                     " is not a uniquely restricted matching of " + write_graph6(l.g));
    }

    // Delete `removed`, solve the rest, add `lifted`.
    Matching delete_and_lift(const Level& l, std::vector<Vertex> removed, std::vector<Edge> lifted,
                             ReductionStep step_data, const Recurse& recurse, const BoundFn& before,
                             const BoundFn& after) {
        Relabeled r = delete_vertices(l.g, removed);
        step_data.removed = globals(l, removed);
        step_data.lifted_edges = global_edges(l, lifted);
        step_data.bound_before = before(l.g);
        step_data.bound_after = after(r.graph);
        const Rule rule = step_data.rule;
        open_step(std::move(step_data), static_cast<int>(lifted.size()));

        Matching sub = recurse(sub_level(l, r));
        std::vector<Edge> edges = lifted;
        append_lifted(edges, sub, r.new_to_old);
        Matching m(std::move(edges));
        certify(l, m, rule);
        return m;
    }

    // Solve each nontrivial component separately.
    static Matching per_component(const Level& l, const Recurse& connected) {
        auto blocks = components(l.g);
        if (blocks.size() == 1) return connected(l);
        std::vector<Edge> edges;
        for (const auto& block : blocks) {
            if (block.size() < 2) continue;
            Relabeled r = induced_subgraph(l.g, block);
            append_lifted(edges, connected(sub_level(l, r)), r.new_to_old);
        }
        return Matching(std::move(edges));
    }

    int next_id_;
    ReductionTrace& trace_;
};

// ---------------------------------------------------------------------------
// Minimum-degree peeling, bound n/D - m/D^2.

class Theorem1 : public Engine {
public:
    Theorem1(const Graph& g, int delta, ReductionTrace& trace) : Engine(g, trace), delta_(delta) {}

    Matching solve(const Level& l) {
        const Graph& g = l.g;
        if (g.order() == 0) return {};
        Vertex u = 0;
        for (Vertex x = 1; x < g.order(); ++x)
            if (g.degree(x) < g.degree(u)) u = x;
        const int d = g.degree(u);
        if (d == 0) throw CertificationError("minimum-degree peeling reached an isolated vertex");
        const Vertex v = g.neighbors(u)[0];

        std::vector<char> in_closed(g.order(), 0);
        in_closed[u] = 1;
        for (Vertex x : g.neighbors(u)) in_closed[x] = 1;

        // E_u: edges of G - u with an end in N(u).
        int incident = 0;
        for (Vertex x : g.neighbors(u))
            for (Vertex y : g.neighbors(x)) {
                if (y == u) continue;
                bool y_in_nbhd = in_closed[y] && y != u;
                if (!y_in_nbhd || x < y) ++incident;
            }

        std::vector<Vertex> removed;
        for (Vertex x = 0; x < g.order(); ++x)
            if (in_closed[x]) removed.push_back(x);
        int isolated = 0;
        for (Vertex x = 0; x < g.order(); ++x) {
            if (in_closed[x]) continue;
            bool all_in = std::all_of(g.neighbors(x).begin(), g.neighbors(x).end(),
                                      [&](Vertex y) { return in_closed[y] != 0; });
            if (all_in) {
                removed.push_back(x);
                ++isolated;
            }
        }
        if (!(d * isolated <= incident && incident <= d * (delta_ - 1)))
            throw CertificationError("peeling inequality d|I| <= |E_u| <= d(D-1) fails");

        ReductionStep s;
        s.rule = Rule::MinDegreePeel;
        s.min_degree = d;
        s.isolated_count = isolated;
        s.incident_edge_count = incident;
        BoundFn bound = [this](const Graph& h) { return theorem1_bound(h, delta_); };
        return delete_and_lift(l, removed, {Edge(u, v)}, std::move(s),
                               [this](const Level& sub) { return solve(sub); }, bound, bound);
    }

private:
    int delta_;
};

// ---------------------------------------------------------------------------
// Subcubic reductions, bound (n - c)/2 - m/6.

class Theorem2 : public Engine {
public:
    Theorem2(const Graph& g, ReductionTrace& trace) : Engine(g, trace) {}

    Matching solve(const Level& l) {
        if (l.g.order() == 0) return {};
        return per_component(l, [this](const Level& c) { return connected(c); });
    }

private:
    Recurse recurse() {
        return [this](const Level& sub) { return solve(sub); };
    }
    static Rational bound(const Graph& h) { return theorem2_bound(h); }

    Matching remove(const Level& l, std::vector<Vertex> removed, std::vector<Edge> lifted, Rule rule) {
        ReductionStep s;
        s.rule = rule;
        return delete_and_lift(l, std::move(removed), std::move(lifted), std::move(s), recurse(), bound, bound);
    }

    Matching connected(const Level& l) {
        const Graph& g = l.g;
        const int n = g.order();
        if (max_degree(g) > 3) throw CertificationError("subcubic reduction produced a vertex of degree > 3");
        if (n == 1) return {};

        for (Vertex u = 0; u < n; ++u)
            if (g.degree(u) == 1) {
                Vertex v = g.neighbors(u)[0];
                return remove(l, {u, v}, {Edge(u, v)}, Rule::Deg1);
            }
        for (Vertex u = 0; u < n; ++u)
            if (g.degree(u) == 2)
                for (Vertex v : g.neighbors(u))
                    if (g.degree(v) == 2) return adjacent_degree_two(l, u, v);
        for (Vertex u = 0; u < n; ++u)
            if (g.degree(u) == 2 && g.has_edge(g.neighbors(u)[0], g.neighbors(u)[1])) return triangle(l, u);
        for (Vertex u = 0; u < n; ++u) {
            if (g.degree(u) != 2) continue;
            Vertex v = g.neighbors(u)[0], w = g.neighbors(u)[1];
            for (Vertex x : g.neighbors(v))
                if (x != u && g.has_edge(x, w)) return four_cycle(l, u, v, w, x);
        }
        Vertex first_degree_two = kNoVertex;
        for (Vertex u = 0; u < n; ++u) {
            if (g.degree(u) != 2) continue;
            if (first_degree_two == kNoVertex) first_degree_two = u;
            std::vector<Vertex> closed{u, g.neighbors(u)[0], g.neighbors(u)[1]};
            if (component_count(delete_vertices(g, closed).graph) <= 3) return few_components(l, u);
        }
        if (first_degree_two != kNoVertex) return splice(l, first_degree_two);
        return cubic_base(l);
    }

    // Two adjacent vertices of degree 2.
    Matching adjacent_degree_two(const Level& l, Vertex u, Vertex v) {
        const Graph& g = l.g;
        const Vertex w = other_neighbors(g, u, v)[0];
        const Vertex y = other_neighbors(g, v, u)[0];
        if (w == y || !edge_on_cycle(g, u, v)) return remove(l, {u, v}, {Edge(u, v)}, Rule::Deg2AdjacentBridgeOrTriangle);

        Relabeled r = delete_vertices(g, std::vector<Vertex>{u, v, w});
        auto blocks = components(r.graph);
        if (blocks.size() <= 1) return remove(l, {u, v, w}, {Edge(u, v)}, Rule::Deg2AdjacentCycle);

        std::vector<int> label(r.graph.order(), -1);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (Vertex x : blocks[b]) label[x] = static_cast<int>(b);
        const int cycle_side = label[r.old_to_new[y]];
        for (Vertex x : g.neighbors(w)) {
            if (x == u || label[r.old_to_new[x]] == cycle_side) continue;
            return remove(l, {u, v, w, x}, {Edge(u, v), Edge(w, x)}, Rule::Deg2AdjacentCycle);
        }
        throw CertificationError("adjacent degree-2 rule: no neighbor of w off the cycle");
    }

    // Degree-2 vertex u in a triangle uvw.
    Matching triangle(const Level& l, Vertex u) {
        const Graph& g = l.g;
        const Vertex v = g.neighbors(u)[0], w = g.neighbors(u)[1];
        if (component_count(delete_vertices(g, std::vector<Vertex>{u, v}).graph) >= 2)
            return remove(l, {u, v}, {Edge(u, v)}, Rule::Deg2Triangle);
        return remove(l, {u, v, w}, {Edge(u, v)}, Rule::Deg2Triangle);
    }

    // Maps a reduced-instance matching back through a contraction. At most
    // one edge meets the merged vertex; it is re-attached to the lowest
    // member in `ports` adjacent to its far end. Returns the member used.
    Vertex lift_contracted(const Level& l, const Contracted& c, const Level& sub, const Matching& m,
                           std::span<const Vertex> ports, std::vector<Edge>& out, Contraction& record) {
        std::vector<Vertex> new_to_old(c.graph.order(), kNoVertex);
        for (Vertex old = 0; old < l.g.order(); ++old)
            if (c.old_to_new[old] != c.super_vertex) new_to_old[c.old_to_new[old]] = old;
        Vertex used = kNoVertex;
        for (const Edge& e : m.edges()) {
            if (!e.touches(c.super_vertex)) {
                out.emplace_back(new_to_old[e.u], new_to_old[e.v]);
                continue;
            }
            const Vertex z = new_to_old[e.other(c.super_vertex)];
            for (Vertex p : ports)
                if (l.g.has_edge(p, z)) {
                    used = p;
                    break;
                }
            if (used == kNoVertex) throw CertificationError("contracted vertex matched to a non-neighbor");
            out.emplace_back(used, z);
            record.resolved_from = global_edge(sub, e);
            record.resolved_to = global_edge(l, Edge(used, z));
        }
        return used;
    }

    Level contracted_level(const Level& l, const Contracted& c, Vertex super_id) {
        Level sub{c.graph, std::vector<Vertex>(c.graph.order(), kNoVertex)};
        for (Vertex old = 0; old < l.g.order(); ++old)
            if (c.old_to_new[old] != c.super_vertex) sub.ids[c.old_to_new[old]] = l.ids[old];
        sub.ids[c.super_vertex] = super_id;
        return sub;
    }

    // Degree-2 vertex u on an induced 4-cycle u v x w.
    Matching four_cycle(const Level& l, Vertex u, Vertex v, Vertex w, Vertex x) {
        const Graph& g = l.g;
        if (component_count(delete_vertices(g, std::vector<Vertex>{u, v, w}).graph) <= 2)
            return remove(l, {u, v, w}, {Edge(u, v)}, Rule::Deg2C4Contract);

        std::vector<Vertex> members{u, v, w, x};
        std::sort(members.begin(), members.end());
        Contracted c = contract_set(g, members);
        const Vertex super_id = fresh_id();

        ReductionStep s;
        s.rule = Rule::Deg2C4Contract;
        s.removed = globals(l, members);
        s.contraction = Contraction{globals(l, members), super_id, std::nullopt, std::nullopt};
        s.bound_before = bound(g);
        s.bound_after = bound(c.graph);
        const std::size_t index = open_step(std::move(s), 1);

        Level sub = contracted_level(l, c, super_id);
        Matching reduced = solve(sub);
        std::vector<Edge> edges;
        Contraction record = *step(index).contraction;
        const std::array<Vertex, 3> ports{std::min(v, w), std::max(v, w), x};
        const Vertex used = lift_contracted(l, c, sub, reduced, std::span<const Vertex>(ports), edges, record);
        // Pair u with whichever of v, w stayed exposed.
        const Vertex partner = used == v ? w : v;
        edges.emplace_back(u, partner);
        step(index).contraction = record;
        step(index).lifted_edges = {global_edge(l, Edge(u, partner))};
        Matching m(std::move(edges));
        certify(l, m, Rule::Deg2C4Contract);
        return m;
    }

    // Degree-2 vertex u whose second neighborhood splits into at most three
    // components.
    Matching few_components(const Level& l, Vertex u) {
        const Graph& g = l.g;
        const Vertex v = g.neighbors(u)[0], w = g.neighbors(u)[1];
        Relabeled outer = delete_vertices(g, std::vector<Vertex>{u, v, w});
        auto blocks = components(outer.graph);
        std::vector<int> label(outer.graph.order(), -1);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (Vertex x : blocks[b]) label[x] = static_cast<int>(b);
        auto label_of = [&](Vertex x) { return label[outer.old_to_new[x]]; };

        if (!edge_on_cycle(g, u, v)) {
            for (Vertex t : {v, w}) {
                auto rest = other_neighbors(g, t, u);
                if (rest.size() == 2 && label_of(rest[0]) == label_of(rest[1]))
                    return remove(l, {u, t}, {Edge(u, t)}, Rule::Deg2FewComponents);
            }
            throw CertificationError("few-components rule: bridge case without a one-sided neighbor");
        }

        int shared = -1;
        for (std::size_t b = 0; b < blocks.size() && shared < 0; ++b) {
            bool hits_v = false, hits_w = false;
            for (Vertex x : other_neighbors(g, v, u)) hits_v |= label_of(x) == static_cast<int>(b);
            for (Vertex x : other_neighbors(g, w, u)) hits_w |= label_of(x) == static_cast<int>(b);
            if (hits_v && hits_w) shared = static_cast<int>(b);
        }
        if (shared < 0) throw CertificationError("few-components rule: no component joins v and w");

        std::vector<Vertex> h_vertices;
        for (Vertex x : blocks[shared]) h_vertices.push_back(outer.new_to_old[x]);
        std::vector<Vertex> members = h_vertices;
        members.insert(members.end(), {u, v, w});
        std::sort(members.begin(), members.end());

        Contracted c = contract_set(g, members);
        Relabeled h = induced_subgraph(g, h_vertices);
        const Vertex super_id = fresh_id();

        ReductionStep s;
        s.rule = Rule::Deg2FewComponents;
        s.removed = globals(l, members);
        s.contraction = Contraction{globals(l, members), super_id, std::nullopt, std::nullopt};
        s.bound_before = bound(g);
        s.bound_after = bound(c.graph) + bound(h.graph);
        const std::size_t index = open_step(std::move(s), 1);

        Level sub = contracted_level(l, c, super_id);
        Matching reduced = solve(sub);
        Matching inner = solve(sub_level(l, h));

        std::vector<Edge> edges;
        Contraction record = *step(index).contraction;
        const std::array<Vertex, 2> ports{v, w};
        const Vertex used = lift_contracted(l, c, sub, reduced, std::span<const Vertex>(ports), edges, record);
        append_lifted(edges, inner, h.new_to_old);
        const Vertex partner = used == v ? w : v;
        edges.emplace_back(u, partner);
        step(index).contraction = record;
        step(index).lifted_edges = {global_edge(l, Edge(u, partner))};
        Matching m(std::move(edges));
        certify(l, m, Rule::Deg2FewComponents);
        return m;
    }

    // Degree-2 vertex u with four components around it: drop u, v and
    // splice w to a neighbor x of v.
    Matching splice(const Level& l, Vertex u) {
        const Graph& g = l.g;
        const Vertex v = g.neighbors(u)[0], w = g.neighbors(u)[1];
        const Vertex x = other_neighbors(g, v, u)[0];
        if (g.has_edge(w, x)) throw CertificationError("splice rule: w and x already adjacent");

        Relabeled r = delete_vertices(g, std::vector<Vertex>{u, v});
        std::vector<Edge> spliced_edges = r.graph.edges();
        const Edge aux_local(r.old_to_new[w], r.old_to_new[x]);
        spliced_edges.push_back(aux_local);
        Graph spliced(r.graph.order(), spliced_edges);

        ReductionStep s;
        s.rule = Rule::Deg2EdgeSplice;
        s.removed = globals(l, std::vector<Vertex>{u, v});
        s.added_aux_edges = {global_edge(l, Edge(w, x))};
        s.bound_before = bound(g);
        s.bound_after = bound(spliced);
        const std::size_t index = open_step(std::move(s), 1);

        Level sub{spliced, {}};
        for (Vertex old : r.new_to_old) sub.ids.push_back(l.ids[old]);
        Matching reduced = solve(sub);

        std::vector<Edge> edges;
        append_lifted(edges, reduced, r.new_to_old);
        const Edge aux(w, x);
        auto hit = std::find(edges.begin(), edges.end(), aux);
        if (hit != edges.end()) {
            edges.erase(hit);
            edges.emplace_back(u, w);
            edges.emplace_back(v, x);
            step(index).retracted_edges = {global_edge(l, aux)};
            step(index).lifted_edges = global_edges(l, std::vector<Edge>{Edge(u, w), Edge(v, x)});
        } else {
            edges.emplace_back(u, v);
            step(index).lifted_edges = {global_edge(l, Edge(u, v))};
        }
        Matching m(std::move(edges));
        certify(l, m, Rule::Deg2EdgeSplice);
        return m;
    }

    Matching cubic_base(const Level& l) {
        const Graph& g = l.g;
        const Rational target_bound = bound(g);
        const int target = static_cast<int>(std::max<std::int64_t>(0, ceil(target_bound)));
        Matching m = greedy_uniquely_restricted(g);
        bool exact_done = false;
        if (m.size() < target) {
            SolveOptions opt;
            opt.target = target;
            if (g.order() > kCubicExactGuard) opt.budget = 1'000'000;
            SolveResult r = nu_ur_exact(g, opt);
            if (r.value > m.size()) m = r.witness;
            exact_done = r.optimal;
        }
        if (m.size() < target) {
            if (g.order() <= kCubicExactGuard && exact_done)
                throw CertificationError("cubic component below (n-2)/4: " + write_graph6(g));
            trace_.guaranteed = false;
        }
        certify(l, m, Rule::CubicBase);

        ReductionStep s;
        s.rule = Rule::CubicBase;
        std::vector<Vertex> all(g.order());
        for (Vertex x = 0; x < g.order(); ++x) all[x] = x;
        s.removed = globals(l, all);
        s.lifted_edges = global_edges(l, m.edges());
        s.bound_before = m.size() >= target ? target_bound : Rational(m.size());
        s.bound_after = 0;
        open_step(std::move(s), m.size());
        return m;
    }
};

// ---------------------------------------------------------------------------
// Girth at least 5, D >= 4: bound (n - c)/D, via the (n - n_{<=1})/D lemma.

class Theorem3 : public Engine {
public:
    Theorem3(const Graph& g, int delta, ReductionTrace& trace) : Engine(g, trace), delta_(delta) {}

    Matching solve(const Level& l) {
        if (l.g.order() == 0) return {};
        return per_component(l, [this](const Level& c) { return connected(c); });
    }

private:
    Rational theorem_bound(const Graph& h) const { return theorem3_bound(h, delta_); }
    Rational lemma_bound(const Graph& h) const { return girth5_lemma_bound(h, delta_); }

    Matching lemma(const Level& l) {
        if (l.g.order() == 0) return {};
        return per_component(l, [this](const Level& c) { return lemma_connected(c); });
    }

    Matching connected(const Level& l) {
        const Graph& g = l.g;
        if (g.order() == 1) return {};
        BoundFn tb = [this](const Graph& h) { return theorem_bound(h); };
        BoundFn lb = [this](const Graph& h) { return lemma_bound(h); };
        for (Vertex u = 0; u < g.order(); ++u)
            if (g.degree(u) == 1) {
                ReductionStep s;
                s.rule = Rule::Deg1;
                Vertex v = g.neighbors(u)[0];
                return delete_and_lift(l, {u, v}, {Edge(u, v)}, std::move(s),
                                       [this](const Level& sub) { return solve(sub); }, tb, tb);
            }
        if (is_regular(g, delta_)) {
            ReductionStep s;
            s.rule = Rule::RegularVertexDrop;
            Vertex u = spanning_tree_endvertex(g);
            return delete_and_lift(l, {u}, {}, std::move(s), [this](const Level& sub) { return lemma(sub); }, tb, lb);
        }
        return lemma_connected(l);
    }

    Matching lemma_connected(const Level& l) {
        const Graph& g = l.g;
        const int n = g.order();
        if (n == 1) return {};
        if (is_regular(g, delta_)) throw CertificationError("girth-5 lemma reached a regular component");
        BoundFn lb = [this](const Graph& h) { return lemma_bound(h); };
        auto recurse = [this](const Level& sub) { return lemma(sub); };

        for (Vertex u = 0; u < n; ++u)
            if (g.degree(u) == 1) {
                ReductionStep s;
                s.rule = Rule::Deg1;
                Vertex v = g.neighbors(u)[0];
                return delete_and_lift(l, {u, v}, {Edge(u, v)}, std::move(s), recurse, lb, lb);
            }
        for (Vertex t = 0; t < n; ++t)
            if (g.degree(t) == 2) return path_peel(l, t, recurse, lb);

        Vertex u = 0;
        for (Vertex x = 1; x < n; ++x)
            if (g.degree(x) < g.degree(u)) u = x;
        if (g.degree(u) >= delta_) throw CertificationError("girth-5 lemma: minimum degree reached D");
        std::vector<Vertex> closed{u};
        closed.insert(closed.end(), g.neighbors(u).begin(), g.neighbors(u).end());
        ReductionStep s;
        s.rule = Rule::MinDegPeelGirth5;
        s.min_degree = g.degree(u);
        return delete_and_lift(l, closed, {Edge(u, g.neighbors(u)[0])}, std::move(s), recurse, lb, lb);
    }

    // Maximal path u1 v1 u2 ... v_{k-1} u_k with every v_i of degree 2,
    // grown from the degree-2 vertex t; lifts v_i u_{i+1}.
    Matching path_peel(const Level& l, Vertex t, const Recurse& recurse, const BoundFn& lb) {
        const Graph& g = l.g;
        std::deque<Vertex> path{g.neighbors(t)[0], t, g.neighbors(t)[1]};
        std::vector<char> on_path(g.order(), 0);
        for (Vertex x : path) on_path[x] = 1;

        auto extension = [&](Vertex end) -> std::optional<std::pair<Vertex, Vertex>> {
            for (Vertex y : g.neighbors(end)) {
                if (on_path[y] || g.degree(y) != 2) continue;
                Vertex z = other_neighbors(g, y, end)[0];
                if (!on_path[z]) return std::make_pair(y, z);
            }
            return std::nullopt;
        };
        for (bool grown = true; grown;) {
            grown = false;
            if (auto ext = extension(path.back())) {
                path.push_back(ext->first);
                path.push_back(ext->second);
                on_path[ext->first] = on_path[ext->second] = 1;
                grown = true;
            }
            if (auto ext = extension(path.front())) {
                path.push_front(ext->first);
                path.push_front(ext->second);
                on_path[ext->first] = on_path[ext->second] = 1;
                grown = true;
            }
        }
        std::vector<Edge> lifted;
        for (std::size_t i = 1; i + 1 < path.size(); i += 2) lifted.emplace_back(path[i], path[i + 1]);
        ReductionStep s;
        s.rule = Rule::Deg2PathPeel;
        return delete_and_lift(l, std::vector<Vertex>(path.begin(), path.end()), std::move(lifted), std::move(s),
                               recurse, lb, lb);
    }

    int delta_;
};

void finish(ReductionTrace& trace, const Graph& g, Matching m) {
    trace.final_matching = std::move(m);
    if (!is_uniquely_restricted_fast(g, trace.final_matching).uniquely_restricted)
        throw CertificationError("final matching is not uniquely restricted");
    if (trace.guaranteed && trace.final_matching.size() < ceil(trace.guarantee))
        throw CertificationError("final matching misses the guarantee " + to_string(trace.guarantee));
    if (replay(trace) != trace.final_matching) throw CertificationError("trace replay does not reproduce the matching");
}

}  // namespace

ReductionTrace construct_theorem1(const Graph& g, int delta) {
    if (delta < 1) throw ConstructionError("construct_theorem1: delta must be at least 1");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) throw ConstructionError("construct_theorem1: isolated vertex " + std::to_string(v));
        if (g.degree(v) > delta) throw ConstructionError("construct_theorem1: degree of vertex " + std::to_string(v) + " exceeds delta");
    }
    ReductionTrace trace;
    trace.theorem = 1;
    trace.delta = delta;
    trace.guarantee = theorem1_bound(g, delta);
    Theorem1 engine(g, delta, trace);
    finish(trace, g, engine.solve(top_level(g)));
    return trace;
}

ReductionTrace construct_theorem2(const Graph& g) {
    if (max_degree(g) > 3) throw ConstructionError("construct_theorem2: graph is not subcubic");
    ReductionTrace trace;
    trace.theorem = 2;
    trace.delta = 3;
    trace.guarantee = theorem2_bound(g);
    Theorem2 engine(g, trace);
    finish(trace, g, engine.solve(top_level(g)));
    return trace;
}

ReductionTrace construct_theorem3(const Graph& g, int delta) {
    if (delta < 4) throw ConstructionError("construct_theorem3: delta must be at least 4");
    if (max_degree(g) > delta) throw ConstructionError("construct_theorem3: maximum degree exceeds delta");
    if (!girth(g).at_least(5)) throw ConstructionError("construct_theorem3: girth below 5");
    ReductionTrace trace;
    trace.theorem = 3;
    trace.delta = delta;
    trace.guarantee = theorem3_bound(g, delta);
    Theorem3 engine(g, delta, trace);
    finish(trace, g, engine.solve(top_level(g)));
    return trace;
}

Matching replay(const ReductionTrace& trace) {
    std::set<Edge> current;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        const ReductionStep& s = *it;
        if (s.contraction && s.contraction->resolved_from) {
            if (current.erase(*s.contraction->resolved_from) != 1)
                throw CertificationError("replay: contracted edge missing from the reduced matching");
            current.insert(*s.contraction->resolved_to);
        }
        for (const Edge& e : s.retracted_edges)
            if (current.erase(e) != 1) throw CertificationError("replay: splice edge missing from the reduced matching");
        for (const Edge& e : s.lifted_edges)
            if (!current.insert(e).second) throw CertificationError("replay: lifted edge already present");
    }
    return Matching(std::vector<Edge>(current.begin(), current.end()));
}

}  // namespace urm
