#pragma once

// graph6 encode/decode and sparse6 decode, following the nauty format
// definition. Also the plain edge-list text format ("n m" header, one
// "u v" pair per line).

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace hadwiger7 {

namespace detail {

inline void append_n(std::string& out, long n) {
    if (n < 0) throw input_error("graph6: negative order");
    if (n <= 62) {
        out.push_back((char)(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back((char)(((n >> shift) & 63) + 63));
    } else {
        throw input_error("graph6: order above 258047 not supported");
    }
}

inline long parse_n(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw input_error("graph6: empty payload");
    unsigned char c = s[pos];
    if (c < 63 || c > 126) throw input_error("graph6: bad order byte");
    if (c != 126) {
        ++pos;
        return c - 63;
    }
    // '~' prefix: 18-bit order ('~~' 36-bit form is beyond desk scale)
    if (pos + 1 < s.size() && (unsigned char)s[pos + 1] == 126)
        throw input_error("graph6: order above 258047 not supported");
    if (pos + 3 >= s.size()) throw input_error("graph6: truncated order");
    long n = 0;
    for (int i = 1; i <= 3; ++i) {
        unsigned char d = s[pos + i];
        if (d < 63 || d > 126) throw input_error("graph6: bad order byte");
        n = (n << 6) | (d - 63);
    }
    pos += 4;
    return n;
}

} // namespace detail

inline std::string to_graph6(const Graph& g) {
    std::string out;
    detail::append_n(out, g.n());
    int n = g.n();
    int bit = 0;
    int acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back((char)(acc + 63));
                bit = 0;
                acc = 0;
            }
        }
    if (bit > 0) out.push_back((char)((acc << (6 - bit)) + 63));
    return out;
}

inline Graph from_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    size_t pos = 0;
    long n = detail::parse_n(s, pos);
    long bits_needed = n * (n - 1) / 2;
    GraphBuilder b((int)n);
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            size_t byte = pos + bit / 6;
            if (byte >= s.size()) throw input_error("graph6: payload too short");
            unsigned char c = s[byte];
            if (c < 63 || c > 126) throw input_error("graph6: bad payload byte");
            if (((c - 63) >> (5 - bit % 6)) & 1) b.add_edge(i, j);
        }
    size_t expect = pos + (bits_needed + 5) / 6;
    if (s.size() > expect) throw input_error("graph6: trailing bytes");
    return b.build();
}

inline Graph from_sparse6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>sparse6<<", 0) == 0) s = s.substr(11);
    if (s.empty() || s[0] != ':') throw input_error("sparse6: missing ':' prefix");
    size_t pos = 1;
    long n = detail::parse_n(s, pos);
    GraphBuilder g((int)n);
    if (n == 0) return g.build();

    int k = 1;
    while ((1L << k) < n - 1 + 1) ++k; // bits to hold values 0..n-1

    // Bit stream over the remaining bytes.
    long total_bits = (long)(s.size() - pos) * 6;
    auto get_bit = [&](long i) -> int {
        unsigned char c = s[pos + i / 6];
        if (c < 63 || c > 126) throw input_error("sparse6: bad payload byte");
        return ((c - 63) >> (5 - i % 6)) & 1;
    };

    long at = 0;
    long v = 0;
    while (at + 1 + k <= total_bits) {
        int b = get_bit(at++);
        long x = 0;
        for (int i = 0; i < k; ++i) x = (x << 1) | get_bit(at++);
        if (b) ++v;
        if (v >= n || x >= n) break; // padding
        if (x > v) {
            v = x;
        } else if (x == v) {
            // sparse6 allows loops, the simple-graph contract does not
            throw input_error("sparse6: self-loop rejected");
        } else {
            if (!g.has_edge((int)x, (int)v)) g.add_edge((int)x, (int)v);
        }
    }
    return g.build();
}

// One graph per line; dispatches on the sparse6 ':' prefix.
inline Graph from_g6_line(const std::string& line) {
    if (!line.empty() && (line[0] == ':' || line.rfind(">>sparse6<<", 0) == 0))
        return from_sparse6(line);
    return from_graph6(line);
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

inline Graph from_edge_list_text(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw input_error("edge list: bad header, expected 'n m'");
    std::vector<std::pair<int, int>> es;
    es.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw input_error("edge list: truncated");
        es.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, es);
}

inline Graph from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list_text(in);
}

} // namespace hadwiger7
