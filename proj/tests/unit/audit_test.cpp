#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "urm/audit.hpp"
#include "urm/generators.hpp"
#include "urm/graph_io.hpp"

namespace urm {
namespace {

TEST(ExtremalFamily, Examples) {
    EXPECT_TRUE(is_extremal_family(disjoint_union(complete_bipartite(3, 2), complete_bipartite(3, 3)), 3));
    EXPECT_FALSE(is_extremal_family(cycle_graph(4), 3));
    EXPECT_TRUE(is_extremal_family(complete_bipartite(2, 2), 2));
    EXPECT_FALSE(is_extremal_family(disjoint_union(complete_bipartite(3, 2), Graph(1)), 3));
    EXPECT_FALSE(is_extremal_family(cycle_graph(6), 2));
    EXPECT_FALSE(is_extremal_family(complete_graph(3), 2));
}

TEST(AuditGraph, GadgetIsTight) {
    AuditOptions opt;
    opt.threshold = 16;
    AuditRecord r = audit_graph(gk_gadget(1), opt);
    EXPECT_EQ(r.nu_ur, 4);
    ASSERT_TRUE(r.bound_thm2);
    EXPECT_EQ(*r.bound_thm2, Rational(4));
    EXPECT_TRUE(r.violations.empty());
    EXPECT_EQ(r.n, 16);
    EXPECT_EQ(r.m, 21);
}

TEST(AuditGraph, CompleteBipartiteMeetsMOverDeltaSquared) {
    AuditRecord r = audit_graph(complete_bipartite(3, 3));
    EXPECT_EQ(r.nu_ac, 1);
    EXPECT_EQ(*r.bound_mdelta2, Rational(1));
    EXPECT_EQ(r.thm1_equality, true);
    EXPECT_TRUE(r.is_extremal_family);
    EXPECT_TRUE(r.bound_ac_upper);
    EXPECT_TRUE(r.violations.empty());
}

TEST(AuditGraph, Trees) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph t = testing::random_tree(2 + static_cast<int>(seed % 13), seed);
        AuditRecord r = audit_graph(t);
        EXPECT_EQ(r.nu_ur, r.nu);
        EXPECT_TRUE(r.bound_thm1);
        EXPECT_TRUE(r.violations.empty()) << r.graph_id;
    }
}

TEST(AuditGraph, AboveThresholdLeavesValuesUnknown) {
    AuditOptions opt;
    opt.threshold = 5;
    AuditRecord r = audit_graph(petersen_graph(), opt);
    EXPECT_EQ(r.nu, 5);
    EXPECT_FALSE(r.nu_ur);
    EXPECT_FALSE(r.nu_ac);
    EXPECT_FALSE(r.thm1_equality);
    EXPECT_TRUE(r.violations.empty());
}

TEST(AuditGraph, IsolatedVerticesSkipTheoremOne) {
    AuditRecord r = audit_graph(Graph(3, {{0, 1}}));
    EXPECT_FALSE(r.bound_thm1);
    EXPECT_TRUE(r.bound_thm2);
    AuditRecord empty = audit_graph(Graph(2));
    EXPECT_TRUE(empty.violations.empty());
    EXPECT_FALSE(empty.bound_mdelta2);
}

TEST(AuditCorpus, EmptyCorpus) {
    AuditReport r = audit_corpus(std::vector<std::string>{});
    EXPECT_TRUE(r.records.empty());
    EXPECT_EQ(r.exit_code(), 0);
}

TEST(AuditCorpus, AllConnectedGraphsUpToSix) {
    std::vector<std::string> lines;
    std::set<std::string> seen;
    for (int n = 1; n <= 6; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            if (seen.insert(write_graph6(g)).second) lines.push_back(write_graph6(g));
        });
    CorpusOptions opt;
    opt.jobs = 4;
    AuditReport r = audit_corpus(lines, opt);
    EXPECT_EQ(r.records.size(), lines.size());
    EXPECT_FALSE(r.reproducer);
    EXPECT_EQ(r.exit_code(), 0);
    for (const auto& rec : r.records)
        if (rec.thm1_equality) EXPECT_EQ(*rec.thm1_equality, rec.is_extremal_family) << rec.graph_id;
}

TEST(AuditCorpus, ExtremalFamilyHasEquality) {
    std::vector<std::string> lines;
    for (int d = 1; d <= 5; ++d)
        for (int r = 1; r <= d; ++r) lines.push_back("kdr:" + std::to_string(d) + "," + std::to_string(r));
    AuditReport report = audit_corpus(lines);
    ASSERT_EQ(report.records.size(), lines.size());
    for (const auto& rec : report.records) {
        EXPECT_EQ(rec.thm1_equality, true) << rec.graph_id;
        EXPECT_TRUE(rec.is_extremal_family);
    }
}

TEST(AuditCorpus, ParseErrorsPerLine) {
    std::vector<std::string> lines{"# comment", "A_", "not a graph", "", "gk:1", "kdr:1"};
    AuditReport r = audit_corpus(lines);
    EXPECT_EQ(r.records.size(), 2u);
    ASSERT_EQ(r.errors.size(), 2u);
    EXPECT_EQ(r.errors[0].line, 3u);
    EXPECT_EQ(r.errors[1].line, 6u);
    EXPECT_EQ(r.exit_code(), 0);

    CorpusOptions strict;
    strict.strict = true;
    AuditReport s = audit_corpus(lines, strict);
    EXPECT_EQ(s.records.size(), 1u);
    EXPECT_EQ(s.exit_code(), 2);
}

TEST(AuditCorpus, GeneratorSpecs) {
    for (const char* spec : {"petersen", "robertson", "path:5", "cycle:7", "complete:4", "random:12,3,5,9", "gk:2"})
        EXPECT_NO_THROW(parse_corpus_line(spec)) << spec;
    EXPECT_EQ(parse_corpus_line("kdr:2,3"), complete_bipartite(2, 3));
    EXPECT_THROW(parse_corpus_line("kdr:2"), GraphError);
    EXPECT_THROW(parse_corpus_line("wheel:5"), GraphError);
}

TEST(AuditCorpus, DeterministicAcrossJobCounts) {
    std::vector<std::string> lines;
    for (int s = 0; s < 40; ++s) lines.push_back("random:" + std::to_string(4 + s % 9) + ",3,3," + std::to_string(s));
    CorpusOptions one, many;
    many.jobs = 6;
    std::string a = report_json(audit_corpus(lines, one));
    std::string b = report_json(audit_corpus(lines, many));
    EXPECT_EQ(a, b);
    EXPECT_EQ(report_csv(audit_corpus(lines, one)), report_csv(audit_corpus(lines, many)));
}

TEST(AuditCorpus, ReportFormats) {
    AuditReport r = audit_corpus(std::vector<std::string>{"kdr:3,3"});
    Json j = Json::parse(report_json(r));
    EXPECT_EQ(j["threshold"], 14);
    EXPECT_EQ(j["records"][0]["bound_mdelta2"]["num"], 1);
    EXPECT_EQ(j["records"][0]["nu_ac"], 1);
    std::string csv = report_csv(r);
    EXPECT_NE(csv.find("graph_id,n,m,c,maxdeg,mindeg,girth,nu,nu_ur,nu_ac,bound_thm1"), std::string::npos);
    EXPECT_NE(csv.find("EFz_,6,9,1,3,3,4,3,1,1,1,"), std::string::npos) << csv;
}

TEST(AuditCorpus, StreamInput) {
    std::istringstream in("A_\nD]o\n");
    AuditReport r = audit_corpus(in);
    EXPECT_EQ(r.records.size(), 2u);
}

TEST(Conjecture2, RatiosInUnitInterval) {
    Conjecture2Report r = conjecture2_scan(3, {3, 4, 5}, 20, 12, 7);
    ASSERT_EQ(r.buckets.size(), 3u);
    for (const auto& b : r.buckets) {
        EXPECT_EQ(b.samples, 20);
        ASSERT_TRUE(b.min_ratio && b.mean_ratio);
        EXPECT_GT(*b.min_ratio, Rational(0));
        EXPECT_LE(*b.mean_ratio, Rational(1));
        EXPECT_LE(*b.min_ratio, *b.mean_ratio);
        EXPECT_FALSE(b.counterexample);
    }
    EXPECT_NE(r.trend, "insufficient");
    EXPECT_EQ(to_json(r)["buckets"].size(), 3u);
}

TEST(Conjecture2, ForestsHaveRatioOne) {
    ScanOptions opt;
    opt.min_edges = 0;
    // Girth 13 on 12 vertices leaves only forests.
    Conjecture2Report r = conjecture2_scan(3, {13}, 15, 12, 3, opt);
    ASSERT_EQ(r.buckets.size(), 1u);
    EXPECT_EQ(r.buckets[0].forest_samples, 15);
    EXPECT_TRUE(r.buckets[0].forest_ratio_one);
    EXPECT_EQ(*r.buckets[0].min_ratio, Rational(1));
}

TEST(Conjecture2, InfeasibleBucketIsNoted) {
    Conjecture2Report r = conjecture2_scan(3, {3, 13}, 5, 12, 3);
    EXPECT_FALSE(r.buckets[0].note);
    ASSERT_TRUE(r.buckets[1].note);
    EXPECT_EQ(r.buckets[1].samples, 0);
    EXPECT_EQ(r.trend, "insufficient");
}

TEST(Conjecture1, SmallScan) {
    ConjectureStats s = conjecture1_scan(3, 30, 14, 11);
    EXPECT_EQ(s.samples, 30);
    EXPECT_EQ(s.girth_bucket, 7);
    EXPECT_FALSE(s.counterexample);
}

TEST(Conjecture, RejectsSmallDelta) {
    EXPECT_THROW(conjecture1_scan(2, 1, 10, 0), std::invalid_argument);
    EXPECT_THROW(conjecture2_scan(2, {3}, 1, 10, 0), std::invalid_argument);
}

}  // namespace
}  // namespace urm
