#include "urm/audit.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

#include "urm/constructive.hpp"
#include "urm/generators.hpp"
#include "urm/graph_io.hpp"

namespace urm {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t bucket, std::uint64_t index) {
    return splitmix(splitmix(seed ^ splitmix(bucket)) + index);
}

// Sizes of the two color classes, or nullopt when not bipartite.
std::optional<std::pair<int, int>> bipartition_sizes(const Graph& g, std::span<const Vertex> block,
                                                     std::vector<int>& color) {
    int sides[2] = {0, 0};
    std::vector<Vertex> queue{block[0]};
    color[block[0]] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        ++sides[color[x]];
        for (Vertex y : g.neighbors(x)) {
            if (color[y] < 0) {
                color[y] = 1 - color[x];
                queue.push_back(y);
            } else if (color[y] == color[x]) {
                return std::nullopt;
            }
        }
    }
    return std::make_pair(sides[0], sides[1]);
}

std::string str(const Rational& r) { return to_string(r); }

class Checker {
public:
    explicit Checker(AuditRecord& r) : r_(r) {}
    void at_least(const char* what, const std::optional<int>& value, const Rational& bound) {
        if (value && Rational(*value) < bound)
            r_.violations.push_back(std::string(what) + ": " + std::to_string(*value) + " < " + str(bound));
    }
    void at_most(const char* what, const std::optional<int>& value, const Rational& bound) {
        if (value && Rational(*value) > bound)
            r_.violations.push_back(std::string(what) + ": " + std::to_string(*value) + " > " + str(bound));
    }
    void fail(std::string message) { r_.violations.push_back(std::move(message)); }

private:
    AuditRecord& r_;
};

void check_trace(Checker& check, const char* name, const ReductionTrace& t) {
    if (t.guaranteed && t.final_matching.size() < ceil(t.guarantee))
        check.fail(std::string(name) + " construction: size " + std::to_string(t.final_matching.size()) +
                   " below guarantee " + str(t.guarantee));
}

template <class F>
void run_constructor(Checker& check, const char* name, F&& construct) {
    try {
        check_trace(check, name, construct());
    } catch (const CertificationError& e) {
        check.fail(std::string(name) + " construction: " + e.what());
    }
}

}  // namespace

bool is_extremal_family(const Graph& g, int delta) {
    if (g.order() == 0) return false;
    std::vector<int> color(g.order(), -1);
    for (const auto& block : components(g)) {
        auto sides = bipartition_sizes(g, block, color);
        if (!sides) return false;
        auto [a, b] = *sides;
        int edges = 0;
        for (Vertex x : block) edges += g.degree(x);
        edges /= 2;
        if (edges != a * b) return false;
        int other = a == delta ? b : (b == delta ? a : -1);
        if (other < 1 || other > delta) return false;
    }
    return true;
}

AuditRecord audit_graph(const Graph& g, const AuditOptions& options) {
    AuditRecord r;
    r.graph_id = write_graph6(g);
    r.n = g.order();
    r.m = g.size();
    r.c = component_count(g);
    r.girth = girth(g);
    if (r.n > 0) {
        DegreeProfile p = degree_profile(g);
        r.max_degree = p.max_degree;
        r.min_degree = p.min_degree;
    }
    const int delta = r.max_degree;
    r.is_extremal_family = delta >= 1 && is_extremal_family(g, delta);

    r.nu = max_matching(g).value;
    if (r.n <= options.threshold) {
        SolveOptions opt;
        opt.budget = options.budget;
        SolveResult ur = nu_ur_exact(g, opt);
        if (ur.optimal) r.nu_ur = ur.value;
        SolveResult ac = nu_ac_exact(g, opt);
        if (ac.optimal) r.nu_ac = ac.value;
    }
    if (delta == 0) return r;

    Checker check(r);
    r.bound_mdelta2 = Rational(r.m, delta * delta);
    r.bound_nu_over_delta = Rational(*r.nu, delta);

    // nu >= nu_ur >= nu_ac >= max(m/D^2, nu/D)
    check.at_most("nu_ur <= nu", r.nu_ur, Rational(*r.nu));
    if (r.nu_ur) check.at_most("nu_ac <= nu_ur", r.nu_ac, Rational(*r.nu_ur));
    check.at_least("nu_ac >= m/D^2", r.nu_ac, *r.bound_mdelta2);
    check.at_least("nu_ac >= nu/D", r.nu_ac, *r.bound_nu_over_delta);
    check.at_least("nu_ur >= m/D^2", r.nu_ur, *r.bound_mdelta2);

    if (r.min_degree >= 1) {
        r.bound_thm1 = theorem1_bound(g, delta);
        check.at_least("thm1", r.nu_ur, *r.bound_thm1);
        if (r.nu_ur) {
            r.thm1_equality = Rational(*r.nu_ur) == *r.bound_thm1;
            if (*r.thm1_equality != r.is_extremal_family)
                check.fail(std::string("thm1 equality ") + (*r.thm1_equality ? "holds" : "fails") +
                           " but extremal family is " + (r.is_extremal_family ? "true" : "false"));
        }
        if (options.constructors)
            run_constructor(check, "thm1", [&] { return construct_theorem1(g, delta); });
    }
    if (delta <= 3) {
        r.bound_thm2 = theorem2_bound(g);
        check.at_least("thm2", r.nu_ur, *r.bound_thm2);
        if (r.c == 1 && r.n >= 2) check.at_least("subcubic (n-2)/4", r.nu_ur, Rational(r.n - 2, 4));
        if (options.constructors) run_constructor(check, "thm2", [&] { return construct_theorem2(g); });
    }
    if (delta >= 4 && r.girth.at_least(5)) {
        r.bound_thm3 = theorem3_bound(g, delta);
        check.at_least("thm3", r.nu_ur, *r.bound_thm3);
        if (options.constructors) run_constructor(check, "thm3", [&] { return construct_theorem3(g, delta); });
    }
    if (delta >= 2 && is_regular(g, delta)) {
        r.bound_ac_upper = Rational(std::int64_t{delta} * r.n - 2, 4 * delta - 4);
        check.at_most("nu_ac <= (Dn-2)/(4D-4)", r.nu_ac, *r.bound_ac_upper);
    }
    return r;
}

namespace {

std::vector<int> parse_ints(std::string_view body, std::size_t expected, const std::string& line) {
    std::vector<int> out;
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view part = body.substr(0, comma);
        int v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
            throw GraphError("malformed generator spec \"" + line + "\"");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    if (out.size() != expected) throw GraphError("generator spec \"" + line + "\" expects " + std::to_string(expected) + " arguments");
    return out;
}

}  // namespace

Graph parse_corpus_line(const std::string& line) {
    auto colon = line.find(':');
    std::string_view name(line);
    std::string_view body;
    if (colon != std::string::npos) {
        name = std::string_view(line).substr(0, colon);
        body = std::string_view(line).substr(colon + 1);
    }
    if (name == "petersen" && colon == std::string::npos) return petersen_graph();
    if (name == "robertson" && colon == std::string::npos) return robertson_graph();
    if (colon == std::string::npos) return parse_graph6(line);
    if (name == "kdr") {
        auto a = parse_ints(body, 2, line);
        return complete_bipartite(a[0], a[1]);
    }
    if (name == "gk") return gk_gadget(parse_ints(body, 1, line)[0]);
    if (name == "path") return path_graph(parse_ints(body, 1, line)[0]);
    if (name == "cycle") return cycle_graph(parse_ints(body, 1, line)[0]);
    if (name == "complete") return complete_graph(parse_ints(body, 1, line)[0]);
    if (name == "random") {
        auto a = parse_ints(body, 4, line);
        std::optional<int> g;
        if (a[2] > 3) g = a[2];
        return random_graph(a[0], a[1], g, static_cast<std::uint64_t>(a[3]));
    }
    throw GraphError("unknown generator \"" + std::string(name) + "\"");
}

int AuditReport::exit_code() const {
    if (reproducer) return 1;
    if (strict_failure) return 2;
    return 0;
}

AuditReport audit_corpus(const std::vector<std::string>& lines, const CorpusOptions& options) {
    struct Slot {
        bool skip = false;
        std::optional<AuditRecord> record;
        std::optional<std::string> error;
    };
    std::vector<Slot> slots(lines.size());
    auto work = [&](std::size_t i) {
        std::string line = lines[i];
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') {
            slots[i].skip = true;
            return;
        }
        try {
            slots[i].record = audit_graph(parse_corpus_line(line.substr(start)), options.audit);
        } catch (const GraphError& e) {
            slots[i].error = e.what();
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < lines.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> failures(jobs);
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) work(i);
                } catch (...) {
                    failures[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& f : failures)
            if (f) std::rethrow_exception(f);
    }

    AuditReport report;
    report.threshold = options.audit.threshold;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        Slot& s = slots[i];
        if (s.skip) continue;
        if (s.error) {
            report.errors.push_back({i + 1, *s.error});
            if (options.strict) {
                report.strict_failure = true;
                break;
            }
            continue;
        }
        report.records.push_back(std::move(*s.record));
        if (!report.records.back().violations.empty()) {
            report.reproducer = report.records.back().graph_id;
            break;
        }
    }
    return report;
}

AuditReport audit_corpus(std::istream& in, const CorpusOptions& options) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return audit_corpus(lines, options);
}

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json("unknown"); }
Json optional_rational(const std::optional<Rational>& v) { return v ? to_json(*v) : Json(nullptr); }
std::string girth_text(const Girth& g) { return g.is_infinite() ? "inf" : std::to_string(g.length()); }

}  // namespace

Json to_json(const AuditRecord& r) {
    return Json{{"graph_id", r.graph_id},
                {"n", r.n},
                {"m", r.m},
                {"c", r.c},
                {"max_degree", r.max_degree},
                {"min_degree", r.min_degree},
                {"girth", girth_text(r.girth)},
                {"nu", optional_int(r.nu)},
                {"nu_ur", optional_int(r.nu_ur)},
                {"nu_ac", optional_int(r.nu_ac)},
                {"bound_thm1", optional_rational(r.bound_thm1)},
                {"bound_thm2", optional_rational(r.bound_thm2)},
                {"bound_thm3", optional_rational(r.bound_thm3)},
                {"bound_mdelta2", optional_rational(r.bound_mdelta2)},
                {"bound_nu_over_delta", optional_rational(r.bound_nu_over_delta)},
                {"bound_ac_upper", optional_rational(r.bound_ac_upper)},
                {"thm1_equality", r.thm1_equality ? Json(*r.thm1_equality) : Json(nullptr)},
                {"is_extremal_family", r.is_extremal_family},
                {"violations", r.violations}};
}

std::string report_json(const AuditReport& report) {
    Json records = Json::array();
    for (const auto& r : report.records) records.push_back(to_json(r));
    Json errors = Json::array();
    for (const auto& e : report.errors) errors.push_back(Json{{"line", e.line}, {"message", e.message}});
    Json j{{"threshold", report.threshold},
           {"records", std::move(records)},
           {"errors", std::move(errors)},
           {"reproducer", report.reproducer ? Json(*report.reproducer) : Json(nullptr)},
           {"exit_code", report.exit_code()}};
    return j.dump(2) + "\n";
}

std::string report_csv(const AuditReport& report) {
    std::ostringstream out;
    out << "# threshold=" << report.threshold << "\n";
    out << "graph_id,n,m,c,maxdeg,mindeg,girth,nu,nu_ur,nu_ac,bound_thm1,bound_thm2,bound_thm3,bound_mdelta2,"
           "bound_nu_over_delta,bound_ac_upper,thm1_equality,is_extremal_family,violations\n";
    auto num = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("unknown"); };
    auto rat = [](const std::optional<Rational>& v) { return v ? to_string(*v) : std::string(); };
    for (const auto& r : report.records) {
        std::string violations;
        for (const auto& v : r.violations) violations += (violations.empty() ? "" : "; ") + v;
        out << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.c << ',' << r.max_degree << ',' << r.min_degree
            << ',' << girth_text(r.girth) << ',' << num(r.nu) << ',' << num(r.nu_ur) << ',' << num(r.nu_ac) << ','
            << rat(r.bound_thm1) << ',' << rat(r.bound_thm2) << ',' << rat(r.bound_thm3) << ','
            << rat(r.bound_mdelta2) << ',' << rat(r.bound_nu_over_delta) << ',' << rat(r.bound_ac_upper) << ','
            << (r.thm1_equality ? (*r.thm1_equality ? "true" : "false") : "") << ','
            << (r.is_extremal_family ? "true" : "false") << ",\"" << violations << "\"\n";
    }
    for (const auto& e : report.errors) out << "# error line " << e.line << ": " << e.message << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------

namespace {

struct RatioAccumulator {
    ConjectureStats& stats;
    Rational sum{0};
    void add(const Graph& g, int nu, int nu_ur) {
        Rational ratio = nu == 0 ? Rational(1) : Rational(nu_ur, nu);
        if (!stats.min_ratio || ratio < *stats.min_ratio) stats.min_ratio = ratio;
        sum += ratio;
        ++stats.samples;
        stats.mean_ratio = sum / stats.samples;
        if (girth(g).is_infinite()) {
            ++stats.forest_samples;
            if (ratio != Rational(1)) stats.forest_ratio_one = false;
        }
    }
};

RandomGraphOptions scan_graph_options(int n, int delta, int min_girth, std::uint64_t seed, const ScanOptions& opt) {
    RandomGraphOptions r;
    r.n = n;
    r.max_degree = delta;
    if (min_girth > 3) r.min_girth = min_girth;
    r.seed = seed;
    r.min_edges = opt.min_edges < 0 ? n : opt.min_edges;
    return r;
}

}  // namespace

Conjecture2Report conjecture2_scan(int delta, const std::vector<int>& girth_values, int samples_per_bucket, int n,
                                   std::uint64_t seed, const ScanOptions& options) {
    if (delta < 3) throw std::invalid_argument("conjecture2_scan: delta must be at least 3");
    Conjecture2Report report;
    for (int g : girth_values) {
        ConjectureStats stats;
        stats.girth_bucket = g;
        stats.delta = delta;
        RatioAccumulator acc{stats};
        for (int s = 0; s < samples_per_bucket; ++s) {
            Graph graph;
            try {
                graph = random_graph(scan_graph_options(n, delta, g, sample_seed(seed, g, s), options));
            } catch (const GenerationError& e) {
                stats.note = "infeasible: " + std::string(e.what());
                break;
            }
            const int nu = max_matching(graph).value;
            SolveOptions opt;
            opt.budget = options.audit.budget;
            if (n > options.audit.threshold) opt.budget = std::min<std::uint64_t>(opt.budget, 100'000);
            SolveResult ur = nu_ur_exact(graph, opt);
            if (!ur.optimal) ++stats.heuristic_samples;
            acc.add(graph, nu, ur.value);
        }
        report.buckets.push_back(std::move(stats));
    }

    std::vector<Rational> means;
    for (const auto& b : report.buckets)
        if (b.mean_ratio) means.push_back(*b.mean_ratio);
    if (means.size() < 2) {
        report.trend = "insufficient";
    } else {
        bool up = true, down = true;
        for (std::size_t i = 1; i < means.size(); ++i) {
            up &= means[i - 1] <= means[i];
            down &= means[i - 1] >= means[i];
        }
        report.trend = up && down ? "constant" : up ? "nondecreasing" : down ? "nonincreasing" : "mixed";
    }
    return report;
}

ConjectureStats conjecture1_scan(int delta, int samples, int n, std::uint64_t seed, const ScanOptions& options) {
    if (delta < 3) throw std::invalid_argument("conjecture1_scan: delta must be at least 3");
    ConjectureStats stats;
    stats.girth_bucket = 7;
    stats.delta = delta;
    RatioAccumulator acc{stats};
    for (int s = 0; s < samples; ++s) {
        Graph graph;
        try {
            graph = random_graph(scan_graph_options(n, delta, 7, sample_seed(seed, 7, s), options));
        } catch (const GenerationError& e) {
            stats.note = "infeasible: " + std::string(e.what());
            break;
        }
        SolveResult nu = max_matching(graph);
        if (n <= options.audit.threshold) {
            SolveOptions opt;
            opt.budget = options.audit.budget;
            SolveResult ur = nu_ur_exact(graph, opt);
            if (!ur.optimal) ++stats.heuristic_samples;
            acc.add(graph, nu.value, ur.value);
        } else {
            ++stats.samples;
            if (girth(graph).is_infinite()) ++stats.forest_samples;
        }
        if (partition_into_acyclic(graph, nu.witness, delta - 1).success) continue;
        ++stats.greedy_failures;
        ExhaustivePartition ex =
            partition_into_acyclic_exhaustive(graph, nu.witness, delta - 1, options.partition_node_limit);
        if (ex.status == SearchStatus::Inconclusive) ++stats.inconclusive;
        if (ex.status == SearchStatus::Impossible && !stats.counterexample) stats.counterexample = write_graph6(graph);
    }
    return stats;
}

Json to_json(const ConjectureStats& s) {
    Json j{{"girth_bucket", s.girth_bucket},
           {"delta", s.delta},
           {"samples", s.samples},
           {"min_ratio", optional_rational(s.min_ratio)},
           {"mean_ratio", optional_rational(s.mean_ratio)},
           {"counterexample", s.counterexample ? Json(*s.counterexample) : Json(nullptr)},
           {"forest_samples", s.forest_samples},
           {"forest_ratio_one", s.forest_ratio_one},
           {"heuristic_samples", s.heuristic_samples},
           {"greedy_failures", s.greedy_failures},
           {"inconclusive", s.inconclusive}};
    if (s.note) j["note"] = *s.note;
    return j;
}

Json to_json(const Conjecture2Report& r) {
    Json buckets = Json::array();
    for (const auto& b : r.buckets) buckets.push_back(to_json(b));
    return Json{{"buckets", std::move(buckets)}, {"trend", r.trend}};
}

}  // namespace urm
