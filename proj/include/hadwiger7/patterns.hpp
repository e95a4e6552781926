#pragma once

// Catalog of the fixed pattern graphs the search and analyzers work
// against: complete graphs, complete-minus-an-edge, K_{3,3}, the circulant
// C8(1,2) and K_{2,2,2,2}.

#include <string>
#include <vector>

#include "graph.hpp"

namespace hadwiger7 {

enum class PatternKind {
    Custom,
    Complete,          // K_t
    CompleteMinusEdge, // K_t minus one edge
    K33,
    C8_12,
    K2222,
};

inline Graph complete_graph(int t) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) es.emplace_back(u, v);
    return Graph::from_edge_list(t, es);
}

inline Graph cycle_graph(int t) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < t; ++u) es.emplace_back(u, (u + 1) % t);
    return Graph::from_edge_list(t, es);
}

inline Graph path_graph(int t) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u + 1 < t; ++u) es.emplace_back(u, u + 1);
    return Graph::from_edge_list(t, es);
}

inline Graph circulant_graph(int n, const std::vector<int>& jumps) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int j : jumps) {
            if (j <= 0 || 2 * j > n + 1) continue;
            int v = (u + j) % n;
            if (v != u) es.emplace_back(u, v);
        }
    return Graph::from_edge_list(n, es);
}

inline Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    std::vector<int> part_of;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of.push_back((int)i);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) es.emplace_back(u, v);
    return Graph::from_edge_list(n, es);
}

struct PatternGraph {
    Graph graph;
    PatternKind kind = PatternKind::Custom;
    int t = 0; // order parameter for Complete / CompleteMinusEdge

    static PatternGraph complete(int t) {
        return {complete_graph(t), PatternKind::Complete, t};
    }

    // K_t with the edge between the two highest-indexed vertices removed,
    // so vertices 0..t-3 are the full-degree twins.
    static PatternGraph complete_minus_edge(int t) {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < t; ++u)
            for (int v = u + 1; v < t; ++v)
                if (!(u == t - 2 && v == t - 1)) es.emplace_back(u, v);
        return {Graph::from_edge_list(t, es), PatternKind::CompleteMinusEdge, t};
    }

    static PatternGraph k33() {
        return {complete_multipartite({3, 3}), PatternKind::K33, 0};
    }

    static PatternGraph c8_12() {
        return {circulant_graph(8, {1, 2}), PatternKind::C8_12, 0};
    }

    static PatternGraph k2222() {
        return {complete_multipartite({2, 2, 2, 2}), PatternKind::K2222, 0};
    }

    static PatternGraph custom(Graph g) {
        return {std::move(g), PatternKind::Custom, 0};
    }

    std::string name() const {
        switch (kind) {
            case PatternKind::Complete: return "k" + std::to_string(t);
            case PatternKind::CompleteMinusEdge: return "k" + std::to_string(t) + "minus";
            case PatternKind::K33: return "k33";
            case PatternKind::C8_12: return "c8_12";
            case PatternKind::K2222: return "k2222";
            case PatternKind::Custom: return "custom";
        }
        return "custom";
    }
};

} // namespace hadwiger7
