#include "urm/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <cstdint>
#include <set>
#include <vector>

namespace urm {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr std::uint64_t kMaxOrder = 68719476735ULL;

bool payload_byte(char c) { return c >= 63 && c <= 126; }

std::string_view trim_newline(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

void put_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim_newline(text);
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    const std::size_t base = pos;

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError("graph6: truncated size prefix", i);
        if (!payload_byte(text[i])) throw ParseError("graph6: byte out of range 63..126", i);
        return text[i] - kBias;
    };

    std::uint64_t n = 0;
    int first = byte_at(pos);
    if (first < 63) {
        n = static_cast<std::uint64_t>(first);
        pos += 1;
    } else if (byte_at(pos + 1) < 63) {
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos + i));
        if (n <= 62) throw ParseError("graph6: non-canonical length prefix", base);
        pos += 4;
    } else {
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos + i));
        if (n <= 258047) throw ParseError("graph6: non-canonical length prefix", base);
        pos += 8;
    }
    if (n > kMaxOrder) throw ParseError("graph6: order exceeds format limit", base);
    if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max() / 2))
        throw ParseError("graph6: order too large for this build", base);

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t payload_len = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < pos + payload_len) throw ParseError("graph6: truncated payload", text.size());
    if (text.size() > pos + payload_len) throw ParseError("graph6: trailing garbage", pos + payload_len);

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            std::size_t at = pos + static_cast<std::size_t>(k / 6);
            if (!payload_byte(text[at])) throw ParseError("graph6: byte out of range 63..126", at);
            int chunk = text[at] - kBias;
            if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits must be zero in a canonical encoding; the range check still
    // applies to the last byte when no edge bits are read from it.
    if (payload_len > 0) {
        std::size_t last = pos + payload_len - 1;
        if (!payload_byte(text[last])) throw ParseError("graph6: byte out of range 63..126", last);
        int pad = static_cast<int>(payload_len * 6 - bits);
        if (((text[last] - kBias) & ((1 << pad) - 1)) != 0)
            throw ParseError("graph6: nonzero padding bits", last);
    }
    return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.order());
    std::string out;
    put_size(out, n);
    int acc = 0, filled = 0;
    for (Vertex j = 1; j < g.order(); ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

namespace {

struct LineReader {
    std::string_view text;
    std::size_t line_no = 0;

    // Next non-blank line, or false at end.
    bool next(std::string_view& line) {
        while (!text.empty()) {
            auto nl = text.find('\n');
            line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.find_first_not_of(" \t") != std::string_view::npos) return true;
        }
        return false;
    }
};

bool parse_two_ints(std::string_view line, long long& a, long long& b) {
    const char* p = line.data();
    const char* end = line.data() + line.size();
    auto skip = [&] {
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
    };
    skip();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{} || r1.ptr == p) return false;
    p = r1.ptr;
    if (p == end || (*p != ' ' && *p != '\t')) return false;
    skip();
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{} || r2.ptr == p) return false;
    p = r2.ptr;
    skip();
    return p == end;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line)) throw ParseError("edge list: missing header", 1);
    long long n = 0, m = 0;
    if (!parse_two_ints(line, n, m) || n < 0 || m < 0)
        throw ParseError("edge list: header must be \"n m\"", reader.line_no);
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (reader.next(line)) {
        long long u = 0, v = 0;
        if (!parse_two_ints(line, u, v)) throw ParseError("edge list: expected \"u v\"", reader.line_no);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: vertex out of range", reader.line_no);
        if (u == v) throw ParseError("edge list: loop", reader.line_no);
        Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (!seen.insert(e).second) throw ParseError("edge list: duplicate edge", reader.line_no);
        edges.push_back(e);
    }
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()),
                         reader.line_no);
    return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Graph parse_graph_auto(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line)) throw ParseError("empty graph input", 1);
    long long a = 0, b = 0;
    if (parse_two_ints(line, a, b)) return parse_edge_list(text);
    auto start = line.find_first_not_of(" \t");
    auto stop = line.find_last_not_of(" \t");
    return parse_graph6(line.substr(start, stop - start + 1));
}

}  // namespace urm
