#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "urm/graph.hpp"
#include "urm/rational.hpp"
#include "urm/serialize.hpp"
#include "urm/solvers.hpp"

namespace urm {

/// True iff every component of g is K_{delta,r} for some 1 <= r <= delta.
bool is_extremal_family(const Graph& g, int delta);

struct AuditOptions {
    /// ν_ur and ν_ac are computed exactly only for n <= threshold.
    int threshold = 14;
    std::uint64_t budget = kDefaultNodeBudget;
    /// Also run the applicable constructors and check their guarantees.
    bool constructors = true;
};

struct AuditRecord {
    std::string graph_id;
    int n = 0, m = 0, c = 0;
    int max_degree = 0, min_degree = 0;
    Girth girth = Girth::infinite();
    std::optional<int> nu, nu_ur, nu_ac;
    std::optional<Rational> bound_thm1, bound_thm2, bound_thm3, bound_mdelta2, bound_nu_over_delta, bound_ac_upper;
    std::optional<bool> thm1_equality;
    bool is_extremal_family = false;
    std::vector<std::string> violations;
};

AuditRecord audit_graph(const Graph& g, const AuditOptions& options = {});

/// A corpus line: graph6, or a generator spec
///   kdr:A,B  gk:K  path:N  cycle:N  complete:N  petersen  robertson
///   random:N,D,G,SEED   (G <= 3 means no girth constraint)
/// Blank lines and lines starting with '#' are skipped.
Graph parse_corpus_line(const std::string& line);

struct CorpusOptions {
    AuditOptions audit;
    bool strict = false;
    int jobs = 1;
};

struct CorpusError {
    std::size_t line = 0;
    std::string message;
};

struct AuditReport {
    int threshold = 14;
    std::vector<AuditRecord> records;
    std::vector<CorpusError> errors;
    /// graph6 of the first violating graph; the report stops there.
    std::optional<std::string> reproducer;
    /// First parse error under --strict; the report stops there.
    bool strict_failure = false;

    /// 0 clean, 1 violation, 2 input error under --strict.
    int exit_code() const;
};

AuditReport audit_corpus(const std::vector<std::string>& lines, const CorpusOptions& options = {});
AuditReport audit_corpus(std::istream& in, const CorpusOptions& options = {});

Json to_json(const AuditRecord& r);
std::string report_json(const AuditReport& report);
std::string report_csv(const AuditReport& report);

struct ConjectureStats {
    int girth_bucket = 3;
    int delta = 3;
    int samples = 0;
    /// ν_ur/ν over the bucket (a graph with ν = 0 counts as ratio 1).
    std::optional<Rational> min_ratio, mean_ratio;
    std::optional<std::string> counterexample;

    int forest_samples = 0;
    /// Every forest sample had ratio exactly 1.
    bool forest_ratio_one = true;
    /// Samples whose ν_ur came from a budget-limited search (a lower bound).
    int heuristic_samples = 0;
    /// Conjecture 1 bookkeeping.
    int greedy_failures = 0;
    int inconclusive = 0;
    /// Generation infeasibility, if any.
    std::optional<std::string> note;
};

struct ScanOptions {
    AuditOptions audit;
    /// Edges each random sample must reach; -1 means n.
    int min_edges = -1;
    /// Assignment limit for the exhaustive partition search.
    std::uint64_t partition_node_limit = 1'000'000;
};

struct Conjecture2Report {
    std::vector<ConjectureStats> buckets;
    /// Direction of mean_ratio across buckets with data, in girth order:
    /// "nondecreasing", "nonincreasing", "constant", "mixed" or "insufficient".
    std::string trend;
};

Conjecture2Report conjecture2_scan(int delta, const std::vector<int>& girth_values, int samples_per_bucket, int n,
                                   std::uint64_t seed, const ScanOptions& options = {});

/// Random girth >= 7 graphs; a maximum matching of each must split into
/// delta - 1 acyclic matchings.
ConjectureStats conjecture1_scan(int delta, int samples, int n, std::uint64_t seed, const ScanOptions& options = {});

Json to_json(const ConjectureStats& s);
Json to_json(const Conjecture2Report& r);

}  // namespace urm
