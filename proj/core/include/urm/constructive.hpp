#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "urm/graph.hpp"
#include "urm/matching.hpp"
#include "urm/rational.hpp"

namespace urm {

// Constructive lower bounds for uniquely restricted matchings.
//
// Each constructor is an inductive proof run forwards: find a reducible
// configuration, shrink the graph, solve the smaller instance, then lift
// its matching back with a few extra edges. Every lift is re-checked with
// is_uniquely_restricted_fast, and every step re-checks that the bound of
// the reduced instance plus the lifted edges covers the bound of the
// instance it came from.
//
// Vertices carry global identifiers in traces: original vertices keep
// their labels 0..n-1, and each contraction introduces a fresh identifier
// n, n+1, ... for its merged vertex.

enum class Rule {
    MinDegreePeel,
    Deg1,
    Deg2AdjacentBridgeOrTriangle,
    Deg2AdjacentCycle,
    Deg2Triangle,
    Deg2C4Contract,
    Deg2FewComponents,
    Deg2EdgeSplice,
    Deg2PathPeel,
    MinDegPeelGirth5,
    RegularVertexDrop,
    CubicBase,
};

std::string_view to_string(Rule r);
std::optional<Rule> rule_from_string(std::string_view s);

struct Contraction {
    std::vector<Vertex> members;
    Vertex super_vertex = kNoVertex;
    /// Matched edge at super_vertex in the reduced solution, and the
    /// concrete edge it was resolved to. Absent when the merged vertex
    /// stayed exposed.
    std::optional<Edge> resolved_from;
    std::optional<Edge> resolved_to;
};

struct ReductionStep {
    Rule rule = Rule::Deg1;
    /// Vertices removed from the instance (for contractions: the merged set).
    std::vector<Vertex> removed;
    std::optional<Contraction> contraction;
    /// Splice edges added to the reduced instance.
    std::vector<Edge> added_aux_edges;
    /// Splice edges present in the reduced solution and dropped on lifting.
    std::vector<Edge> retracted_edges;
    std::vector<Edge> lifted_edges;

    /// Minimum-degree peeling bookkeeping: delta(u), |I| and |E_u|.
    std::optional<int> min_degree;
    std::optional<int> isolated_count;
    std::optional<int> incident_edge_count;

    /// Bound of the component this step reduced, and the summed bounds of
    /// the reduced instances it recursed into.
    Rational bound_before{0};
    Rational bound_after{0};
};

struct ReductionTrace {
    int theorem = 0;
    int delta = 0;
    std::vector<ReductionStep> steps;
    Matching final_matching;
    Rational guarantee{0};
    /// False only when a cubic base component larger than the exact-solver
    /// guard could not be brought up to its bound.
    bool guaranteed = true;
};

/// Raised when a lifted matching fails re-verification or a step's bound
/// accounting does not close. Indicates an implementation defect.
class CertificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Precondition violations of the constructors.
class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// n/delta - m/delta^2.
Rational theorem1_bound(const Graph& g, int delta);
/// (n - c)/2 - m/6.
Rational theorem2_bound(const Graph& g);
/// (n - c)/delta.
Rational theorem3_bound(const Graph& g, int delta);
/// (n - n_{<=1})/delta.
Rational girth5_lemma_bound(const Graph& g, int delta);

/// Repeatedly matches a minimum-degree vertex u to its lowest neighbor and
/// deletes N[u] together with the vertices this isolates. Requires no
/// isolated vertices and maximum degree <= delta.
ReductionTrace construct_theorem1(const Graph& g, int delta);

/// Largest cubic component solved exactly in construct_theorem2.
inline constexpr int kCubicExactGuard = 24;

/// Subcubic reduction engine. Per component, applies the first available
/// rule in the order Deg1, Deg2Adjacent*, Deg2Triangle, Deg2C4Contract,
/// Deg2FewComponents, Deg2EdgeSplice; what remains is cubic and goes to the
/// exact solver. Guarantee: (n - c)/2 - m/6.
ReductionTrace construct_theorem2(const Graph& g);

/// Girth-5 constructor for delta >= 4. Guarantee: (n - c)/delta.
ReductionTrace construct_theorem3(const Graph& g, int delta);

/// Rebuilds the final matching by applying the steps bottom-up.
Matching replay(const ReductionTrace& trace);

}  // namespace urm
