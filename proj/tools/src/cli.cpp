#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "urm/audit.hpp"
#include "urm/constructive.hpp"
#include "urm/generators.hpp"
#include "urm/graph_io.hpp"
#include "urm/serialize.hpp"
#include "urm/solvers.hpp"

namespace urm::cli {

namespace {

// Bad input files and malformed graphs; reported with exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

Graph read_graph(const std::string& path, std::istream& in) {
    try {
        return parse_graph_auto(slurp(path, in));
    } catch (const GraphError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Matching read_matching(const std::string& path, std::istream& in, const Graph& g) {
    try {
        Matching m = matching_from_json(Json::parse(slurp(path, in)));
        validate_matching(g, m);
        return m;
    } catch (const Json::exception& e) {
        throw InputError(path + ": " + e.what());
    } catch (const GraphError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("URMATCH_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError(std::string("URMATCH_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Uniquely restricted and acyclic matchings", "urmatch"};
    app.require_subcommand(1);

    std::string in_path, matching_path, what, check, family, corpus, format = "json";
    std::uint64_t budget = kDefaultNodeBudget, seed = 0;
    int theorem = 0, delta = 0, a = 0, b = 0, k = 0, n = 0, girth_value = 0, threshold = 14, jobs = 1, which = 0,
        samples = 100;
    bool oracle = false, strict = false;
    std::vector<int> girth_list{3, 4, 5, 6};

    auto* solve = app.add_subcommand("solve", "Exact nu, nu_ur or nu_ac");
    solve->add_option("--what", what)->required()->check(CLI::IsMember({"nu", "nu_ur", "nu_ac"}));
    solve->add_option("--in", in_path, "graph6 or edge-list file, - for stdin")->required();
    solve->add_option("--budget", budget, "branch-and-bound node budget")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Check a matching");
    verify->add_option("--matching", matching_path, "JSON array of \"u-v\"")->required();
    verify->add_option("--in", in_path)->required();
    verify->add_option("--check", check)->required()->check(CLI::IsMember({"ur", "acyclic"}));
    verify->add_flag("--oracle", oracle, "definition-level check (small graphs only)");

    auto* construct = app.add_subcommand("construct", "Constructive lower bound with trace");
    construct->add_option("--theorem", theorem)->required()->check(CLI::IsMember({1, 2, 3}));
    construct->add_option("--in", in_path)->required();
    auto* delta_opt = construct->add_option("--delta", delta, "defaults to the maximum degree")->check(CLI::PositiveNumber);

    auto* generate = app.add_subcommand("generate", "Emit a graph6 line");
    generate->add_option("--family", family)->required()->check(CLI::IsMember({"kdr", "gk", "random"}));
    generate->add_option("--a", a)->check(CLI::NonNegativeNumber);
    generate->add_option("--b", b)->check(CLI::NonNegativeNumber);
    generate->add_option("--k", k)->check(CLI::PositiveNumber);
    generate->add_option("--n", n)->check(CLI::NonNegativeNumber);
    auto* gen_delta = generate->add_option("--delta", delta)->check(CLI::NonNegativeNumber);
    auto* gen_girth = generate->add_option("--girth", girth_value)->check(CLI::NonNegativeNumber);
    auto* gen_seed = generate->add_option("--seed", seed);

    auto* audit = app.add_subcommand("audit", "Audit a corpus of graphs");
    audit->add_option("--corpus", corpus, "one graph6 line or generator spec per line, - for stdin")->required();
    audit->add_option("--threshold", threshold, "largest n solved exactly")->check(CLI::NonNegativeNumber);
    audit->add_flag("--strict", strict, "stop at the first unparsable line");
    audit->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    audit->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* conjecture = app.add_subcommand("conjecture", "Experimental conjecture scans");
    conjecture->add_option("--which", which)->required()->check(CLI::IsMember({1, 2}));
    auto* conj_delta = conjecture->add_option("--delta", delta)->check(CLI::Range(3, 64));
    auto* conj_n = conjecture->add_option("--n", n)->check(CLI::PositiveNumber);
    conjecture->add_option("--samples", samples)->check(CLI::PositiveNumber);
    conjecture->add_option("--girth-list", girth_list)->delimiter(',')->check(CLI::Range(3, 64));
    auto* conj_seed = conjecture->add_option("--seed", seed);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto usage = [&](const std::string& message) {
        err << "urmatch: " << message << "\n";
        return 2;
    };

    try {
        if (*solve) {
            Graph g = read_graph(in_path, in);
            SolveOptions opt;
            opt.budget = budget;
            SolveResult r = what == "nu" ? max_matching(g) : what == "nu_ur" ? nu_ur_exact(g, opt) : nu_ac_exact(g, opt);
            out << to_json(r).dump() << "\n";
            return 0;
        }
        if (*verify) {
            Graph g = read_graph(in_path, in);
            Matching m = read_matching(matching_path, in, g);
            Json j;
            if (check == "acyclic") {
                j = Json{{"result", is_acyclic_matching(g, m)}};
            } else if (oracle) {
                if (static_cast<int>(covered_vertices(m).size()) > kOracleCoveredLimit)
                    return usage("--oracle supports at most " + std::to_string(kOracleCoveredLimit) + " covered vertices");
                j = Json{{"result", is_uniquely_restricted_oracle(g, m)}};
            } else {
                j = to_json(is_uniquely_restricted_fast(g, m));
            }
            out << j.dump() << "\n";
            return 0;
        }
        if (*construct) {
            Graph g = read_graph(in_path, in);
            const int d = delta_opt->count() ? delta : std::max(1, max_degree(g));
            ReductionTrace t = theorem == 1 ? construct_theorem1(g, d)
                             : theorem == 2 ? construct_theorem2(g)
                                            : construct_theorem3(g, d);
            out << to_json(t).dump() << "\n";
            return 0;
        }
        if (*generate) {
            if (!gen_seed->count()) seed = default_seed();
            Graph g;
            if (family == "kdr") {
                if (a < 1 || b < 1) return usage("--family kdr needs --a >= 1 and --b >= 1");
                g = complete_bipartite(a, b);
            } else if (family == "gk") {
                if (k < 1) return usage("--family gk needs --k >= 1");
                g = gk_gadget(k);
            } else {
                if (!gen_delta->count() || n < 1) return usage("--family random needs --n >= 1 and --delta");
                std::optional<int> girth_bound;
                if (gen_girth->count() && girth_value > 3) girth_bound = girth_value;
                g = random_graph(n, delta, girth_bound, seed);
            }
            out << write_graph6(g) << "\n";
            return 0;
        }
        if (*audit) {
            CorpusOptions opt;
            opt.audit.threshold = threshold;
            opt.strict = strict;
            opt.jobs = jobs;
            std::istringstream lines(slurp(corpus, in));
            AuditReport report = audit_corpus(lines, opt);
            out << (format == "csv" ? report_csv(report) : report_json(report));
            for (const auto& e : report.errors) err << "urmatch: line " << e.line << ": " << e.message << "\n";
            if (report.reproducer) err << "urmatch: violation, reproducer " << *report.reproducer << "\n";
            return report.exit_code();
        }
        if (*conjecture) {
            if (!conj_seed->count()) seed = default_seed();
            const int d = conj_delta->count() ? delta : 3;
            ScanOptions opt;
            if (which == 1) {
                const int size = conj_n->count() ? n : 20;
                out << to_json(conjecture1_scan(d, samples, size, seed, opt)).dump(2) << "\n";
            } else {
                const int size = conj_n->count() ? n : 12;
                out << to_json(conjecture2_scan(d, girth_list, samples, size, seed, opt)).dump(2) << "\n";
            }
            return 0;
        }
    } catch (const InputError& e) {
        return usage(e.what());
    } catch (const ConstructionError& e) {
        err << "urmatch: " << e.what() << "\n";
        return 1;
    } catch (const CertificationError& e) {
        err << "urmatch: certification failed: " << e.what() << "\n";
        return 1;
    } catch (const GraphError& e) {
        err << "urmatch: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "urmatch: " << e.what() << "\n";
        return 1;
    }
    return usage("no subcommand");
}

}  // namespace urm::cli
