#include "urm/serialize.hpp"

#include <charconv>

namespace urm {

namespace {

Json edge_list(std::span<const Edge> edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back(to_string(e));
    return out;
}

int parse_int(std::string_view s, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw MatchingError("malformed edge \"" + std::string(whole) + "\"");
    return value;
}

}  // namespace

Edge parse_edge(std::string_view text) {
    auto dash = text.find('-');
    if (dash == std::string_view::npos) throw MatchingError("malformed edge \"" + std::string(text) + "\"");
    int a = parse_int(text.substr(0, dash), text);
    int b = parse_int(text.substr(dash + 1), text);
    if (a < 0 || b < 0 || a == b) throw MatchingError("malformed edge \"" + std::string(text) + "\"");
    return Edge(a, b);
}

Json to_json(const Matching& m) { return edge_list(m.edges()); }

Matching matching_from_json(const Json& j) {
    if (!j.is_array()) throw MatchingError("matching must be a JSON array");
    std::vector<Edge> edges;
    for (const auto& item : j) {
        if (item.is_string()) {
            edges.push_back(parse_edge(item.get<std::string>()));
        } else if (item.is_array() && item.size() == 2 && item[0].is_number_integer() && item[1].is_number_integer()) {
            int a = item[0].get<int>(), b = item[1].get<int>();
            if (a < 0 || b < 0 || a == b) throw MatchingError("malformed edge " + item.dump());
            edges.emplace_back(a, b);
        } else {
            throw MatchingError("malformed edge " + item.dump());
        }
    }
    return Matching(std::move(edges));
}

Json to_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

Rational rational_from_json(const Json& j) {
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

Json to_json(const SolveResult& r) {
    return Json{{"value", r.value},
                {"optimal", r.optimal},
                {"witness", to_json(r.witness)},
                {"nodes", r.nodes_explored},
                {"millis", std::chrono::duration<double, std::milli>(r.elapsed).count()}};
}

Json to_json(const UrCheck& c) {
    Json j{{"result", c.uniquely_restricted}};
    if (c.witness) j["witness"] = c.witness->cycle;
    return j;
}

Json to_json(const ReductionStep& s) {
    Json j{{"rule", std::string(to_string(s.rule))}, {"removed", s.removed}};
    if (s.contraction) {
        Json c{{"members", s.contraction->members}, {"super_vertex", s.contraction->super_vertex}};
        if (s.contraction->resolved_from) {
            c["resolved_from"] = to_string(*s.contraction->resolved_from);
            c["resolved_to"] = to_string(*s.contraction->resolved_to);
        }
        j["contraction"] = std::move(c);
    }
    if (!s.added_aux_edges.empty()) j["added_aux_edges"] = edge_list(s.added_aux_edges);
    if (!s.retracted_edges.empty()) j["retracted_edges"] = edge_list(s.retracted_edges);
    j["lifted_edges"] = edge_list(s.lifted_edges);
    if (s.min_degree) j["min_degree"] = *s.min_degree;
    if (s.isolated_count) j["isolated_count"] = *s.isolated_count;
    if (s.incident_edge_count) j["incident_edge_count"] = *s.incident_edge_count;
    j["bound_before"] = to_json(s.bound_before);
    j["bound_after"] = to_json(s.bound_after);
    return j;
}

Json to_json(const ReductionTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) steps.push_back(to_json(s));
    return Json{{"theorem", t.theorem},
                {"delta", t.delta},
                {"guarantee", to_json(t.guarantee)},
                {"guaranteed", t.guaranteed},
                {"size", t.final_matching.size()},
                {"matching", to_json(t.final_matching)},
                {"steps", std::move(steps)}};
}

}  // namespace urm
