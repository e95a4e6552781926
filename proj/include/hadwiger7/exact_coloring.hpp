#pragma once

// Exact k-colorability by DSATUR-ordered backtracking. Components are
// solved independently; a greedy clique gives a cheap lower-bound cutoff.
// New colors are introduced in first-use order, which kills the color
// permutation symmetry.

#include <algorithm>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace hadwiger7 {

struct Coloring {
    std::vector<int> color;
    int count = 0;

    static Coloring of(std::vector<int> colors) {
        Coloring c;
        c.color = std::move(colors);
        for (int x : c.color) c.count = std::max(c.count, x + 1);
        return c;
    }
};

inline bool coloring_proper(const Graph& g, const Coloring& c) {
    if ((int)c.color.size() != g.n()) return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) return false;
    for (int x : c.color)
        if (x < 0 || x >= c.count) return false;
    return true;
}

// Renumber colors so the used set is exactly 0..count-1, preserving the
// relative order of color indices.
inline Coloring normalize_colors(const Coloring& c) {
    int maxc = -1;
    for (int x : c.color) maxc = std::max(maxc, x);
    std::vector<int> remap(maxc + 1, -1);
    for (int x : c.color) if (x >= 0) remap[x] = 0;
    int next = 0;
    for (int x = 0; x <= maxc; ++x)
        if (remap[x] == 0) remap[x] = next++;
    Coloring out;
    out.color.reserve(c.color.size());
    for (int x : c.color) out.color.push_back(remap[x]);
    out.count = next;
    return out;
}

namespace detail {

// Greedy clique from highest-degree seed; lower bound for pruning only.
inline int greedy_clique_size(const Graph& g) {
    if (g.n() == 0) return 0;
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    int best = 1;
    for (int seed : order) {
        Bitset cand = g.neighbors(seed);
        int size = 1;
        for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
            ++size;
            cand &= g.neighbors(v);
        }
        best = std::max(best, size);
        if (seed != order[0] && g.degree(seed) + 1 <= best) break;
    }
    return best;
}

struct KColorSearch {
    const Graph& g;
    int k;
    std::vector<int> color;
    std::vector<Bitset> banned; // banned[v] = set of colors used by neighbors

    KColorSearch(const Graph& g_, int k_)
        : g(g_), k(k_), color(g_.n(), -1), banned(g_.n(), Bitset(k_)) {}

    int pick_vertex(const Bitset& active) const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = active.next(0); v >= 0; v = active.next(v + 1)) {
            if (color[v] != -1) continue;
            int sat = banned[v].count();
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(const Bitset& active, int uncolored, int used) {
        if (uncolored == 0) return true;
        int v = pick_vertex(active);
        if (banned[v].count() >= k) return false;
        int limit = std::min(k - 1, used); // at most one fresh color
        for (int c = 0; c <= limit; ++c) {
            if (banned[v].test(c)) continue;
            color[v] = c;
            std::vector<int> touched;
            Bitset nb = g.neighbors(v) & active;
            nb.for_each([&](int w) {
                if (color[w] == -1 && !banned[w].test(c)) {
                    banned[w].set(c);
                    touched.push_back(w);
                }
            });
            bool dead = false;
            for (int w : touched)
                if (banned[w].count() >= k) { dead = true; break; }
            if (!dead && solve(active, uncolored - 1, std::max(used, c + 1)))
                return true;
            for (int w : touched) banned[w].reset(c);
            color[v] = -1;
        }
        return false;
    }
};

} // namespace detail

// Proper k-coloring or nullopt after exhaustive search.
inline std::optional<Coloring> exact_k_color(const Graph& g, int k) {
    if (k < 0) throw input_error("exact_k_color: negative k");
    if (g.n() == 0) return Coloring{};
    if (k == 0) return std::nullopt;

    std::vector<int> colors(g.n(), -1);
    for (const Bitset& comp : g.components()) {
        auto [sub, map] = g.induced_subgraph(comp);
        if (detail::greedy_clique_size(sub) > k) return std::nullopt;
        detail::KColorSearch search(sub, k);
        if (!search.solve(Bitset::full(sub.n()), sub.n(), 0)) return std::nullopt;
        comp.for_each([&](int v) { colors[v] = search.color[map[v]]; });
    }
    return normalize_colors(Coloring::of(std::move(colors)));
}

} // namespace hadwiger7
