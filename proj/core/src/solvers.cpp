#include "urm/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "urm/detail/blossom.hpp"

namespace urm {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

Matching from_mates(std::span<const Vertex> mate) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v)
        if (mate[v] != kNoVertex && v < mate[v]) edges.emplace_back(v, mate[v]);
    return Matching(std::move(edges));
}

bool forest_after_adding(const Graph& g, std::span<const Vertex> mate, const Edge& e, std::vector<int>& dsu) {
    const int n = g.order();
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int x) {
        while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
        return x;
    };
    auto inside = [&](Vertex v) { return mate[v] != kNoVertex || v == e.u || v == e.v; };
    for (Vertex v = 0; v < n; ++v) {
        if (!inside(v)) continue;
        for (Vertex w : g.neighbors(v)) {
            if (w <= v || !inside(w)) continue;
            int a = find(v), b = find(w);
            if (a == b) return false;
            dsu[a] = b;
        }
    }
    return true;
}

enum class Predicate { UniquelyRestricted, Acyclic };

class BranchAndBound {
public:
    BranchAndBound(const Graph& g, Predicate pred, const SolveOptions& opt)
        : g_(g), pred_(pred), opt_(opt), edges_(g.edges()), mate_(g.order(), kNoVertex), dsu_(g.order()),
          mark_(g.order(), 0) {}

    SolveResult run() {
        auto start = Clock::now();
        search(0);
        SolveResult r;
        r.value = static_cast<int>(best_.size());
        r.witness = Matching(best_);
        r.nodes_explored = nodes_;
        r.optimal = !aborted_ && !stopped_at_target_;
        r.elapsed = since(start);
        return r;
    }

private:
    bool done() const { return aborted_ || stopped_at_target_; }

    // Admissible: every further edge needs two currently free vertices that
    // still have an undecided edge between free vertices.
    int optimistic_gain(std::size_t from) {
        int free_touched = 0, available = 0;
        ++stamp_;
        for (std::size_t j = from; j < edges_.size(); ++j) {
            const Edge& e = edges_[j];
            if (mate_[e.u] != kNoVertex || mate_[e.v] != kNoVertex) continue;
            ++available;
            for (Vertex x : {e.u, e.v})
                if (mark_[x] != stamp_) {
                    mark_[x] = stamp_;
                    ++free_touched;
                }
        }
        return std::min(available, free_touched / 2);
    }

    bool admissible(const Edge& e) {
        if (pred_ == Predicate::UniquelyRestricted) return extends_uniquely_restricted(g_, mate_, e);
        return forest_after_adding(g_, mate_, e, dsu_);
    }

    void search(std::size_t i) {
        if (done()) return;
        if (++nodes_ > opt_.budget) {
            aborted_ = true;
            return;
        }
        if (current_.size() > best_.size()) {
            best_ = current_;
            if (opt_.target && static_cast<int>(best_.size()) >= *opt_.target) {
                stopped_at_target_ = true;
                return;
            }
        }
        if (i == edges_.size()) return;
        if (static_cast<int>(current_.size()) + optimistic_gain(i) <= static_cast<int>(best_.size())) return;

        const Edge& e = edges_[i];
        if (mate_[e.u] == kNoVertex && mate_[e.v] == kNoVertex && admissible(e)) {
            mate_[e.u] = e.v;
            mate_[e.v] = e.u;
            current_.push_back(e);
            search(i + 1);
            current_.pop_back();
            mate_[e.u] = mate_[e.v] = kNoVertex;
        }
        search(i + 1);
    }

    const Graph& g_;
    Predicate pred_;
    SolveOptions opt_;
    std::vector<Edge> edges_;
    std::vector<Vertex> mate_;
    std::vector<int> dsu_;
    std::vector<unsigned> mark_;
    unsigned stamp_ = 0;
    std::vector<Edge> current_, best_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool stopped_at_target_ = false;
};

}  // namespace

SolveResult max_matching(const Graph& g) {
    auto start = Clock::now();
    std::vector<Vertex> mate(g.order(), kNoVertex);
    // Greedy start, then one augmenting search per exposed vertex.
    for (const Edge& e : g.edges())
        if (mate[e.u] == kNoVertex && mate[e.v] == kNoVertex) {
            mate[e.u] = e.v;
            mate[e.v] = e.u;
        }
    detail::BlossomSearch search(g);
    std::uint64_t searches = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (mate[v] != kNoVertex) continue;
        ++searches;
        std::vector<Vertex> path = search.augmenting_path(v, mate);
        for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
            mate[path[i]] = path[i + 1];
            mate[path[i + 1]] = path[i];
        }
    }
    SolveResult r;
    r.witness = from_mates(mate);
    r.value = r.witness.size();
    r.nodes_explored = searches;
    validate_matching(g, r.witness);
    r.elapsed = since(start);
    return r;
}

SolveResult nu_ur_exact(const Graph& g, const SolveOptions& options) {
    SolveResult r = BranchAndBound(g, Predicate::UniquelyRestricted, options).run();
    if (!is_uniquely_restricted_fast(g, r.witness).uniquely_restricted)
        throw std::logic_error("nu_ur_exact produced a witness that is not uniquely restricted");
    return r;
}

SolveResult nu_ac_exact(const Graph& g, const SolveOptions& options) {
    SolveResult r = BranchAndBound(g, Predicate::Acyclic, options).run();
    if (!is_acyclic_matching(g, r.witness))
        throw std::logic_error("nu_ac_exact produced a witness that is not acyclic");
    return r;
}

Matching greedy_uniquely_restricted(const Graph& g) {
    std::vector<Vertex> mate(g.order(), kNoVertex);
    for (const Edge& e : g.edges()) {
        if (mate[e.u] != kNoVertex || mate[e.v] != kNoVertex) continue;
        if (!extends_uniquely_restricted(g, mate, e)) continue;
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    return from_mates(mate);
}

}  // namespace urm
