#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domforge/graph.hpp"

namespace domforge {

// Edge-list text format: first data line "n m", then m lines "u v" with
// 0-based endpoints. Blank lines and '#' comments are ignored anywhere.
inline Graph read_edge_list(std::istream& in, const std::string& source = "<stream>") {
    auto fail = [&](int line, const std::string& what) {
        throw std::runtime_error(source + ":" + std::to_string(line) + ": " + what);
    };
    int line_no = 0;
    std::string line;
    auto next_fields = [&]() -> std::vector<long long> {
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream fields(line);
            std::vector<long long> vals;
            long long v;
            bool bad = false;
            while (fields >> v) vals.push_back(v);
            if (!fields.eof()) bad = true;
            if (bad) fail(line_no, "expected whitespace-separated integers");
            if (!vals.empty()) return vals;
        }
        return {};
    };

    std::vector<long long> header = next_fields();
    if (header.empty()) fail(line_no, "missing 'n m' header");
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        fail(line_no, "header must be 'n m' with nonnegative n and m");
    int n = static_cast<int>(header[0]);
    long long m = header[1];

    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        std::vector<long long> fields = next_fields();
        if (fields.empty()) fail(line_no, "expected " + std::to_string(m) +
                                              " edges, got " + std::to_string(i));
        if (fields.size() != 2) fail(line_no, "expected edge 'u v'");
        long long u = fields[0], v = fields[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(n, edges);
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    return read_edge_list(in, path);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    auto edges = g.edge_list();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

// graph6: printable bit-packing of the upper triangle in column order,
// single-byte header, so order <= 62
inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6: order above 62 unsupported");
    std::string s;
    s.push_back(static_cast<char>(n + 63));
    int bit = 5;
    char cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                s.push_back(static_cast<char>(cur + 63));
                bit = 5;
                cur = 0;
            }
        }
    if (bit != 5) s.push_back(static_cast<char>(cur + 63));
    return s;
}

inline Graph from_graph6(std::string_view s) {
    if (s.empty()) throw std::runtime_error("graph6: empty string");
    if (s[0] == '~') throw std::runtime_error("graph6: order above 62 unsupported");
    int n = s[0] - 63;
    if (n < 0 || n > 62) throw std::runtime_error("graph6: bad order byte");
    long long need = (static_cast<long long>(n) * (n - 1) / 2 + 5) / 6;
    if (static_cast<long long>(s.size()) != 1 + need)
        throw std::runtime_error("graph6: wrong length for order " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    std::size_t pos = 1;
    int bit = 5;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            char c = s[pos];
            if (c < 63 || c > 126) throw std::runtime_error("graph6: byte out of range");
            if (((c - 63) >> bit) & 1) edges.emplace_back(i, j);
            if (--bit < 0) {
                bit = 5;
                ++pos;
            }
        }
    return Graph(n, edges);
}

// one graph6 string per line; blank lines and '#' comments ignored,
// optional ">>graph6<<" header tolerated
inline std::vector<Graph> read_graph6_lines(std::istream& in,
                                            const std::string& source = "<stream>") {
    std::vector<Graph> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view sv = line;
        if (sv.rfind(">>graph6<<", 0) == 0) sv.remove_prefix(10);
        if (sv.empty() || sv[0] == '#') continue;
        try {
            out.push_back(from_graph6(sv));
        } catch (const std::exception& e) {
            throw std::runtime_error(source + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace domforge
