#pragma once

// Vertex connectivity, separators and Menger-style disjoint path
// extraction via unit-vertex-capacity max-flow on the split digraph
// (v_in -> v_out, capacity 1).
//
// disjoint_paths(g, S, T, k) semantics:
//   - a vertex in S∩T counts as a zero-length path and is removed from
//     further routing;
//   - when the remaining S (resp. T) side is a single vertex, that vertex
//     acts as a shared fan endpoint and is never capacity-limited;
//   - otherwise paths are fully vertex-disjoint, one endpoint per terminal.
// On failure the witness separator is the min-cut vertex set.

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "graph.hpp"

namespace hadwiger7 {

struct Separation {
    Bitset a, b;
    int order() const { return (a & b).count(); }
};

// Build the separation (C ∪ X, V \ C) from a cutset X and one chosen side
// component C of g - X.
inline Separation separation_from_cutset(const Graph& g, const std::vector<int>& cutset) {
    Bitset x = Bitset::of(g.n(), cutset);
    Bitset rest = Bitset::full(g.n()) - x;
    int v0 = rest.next(0);
    if (v0 < 0) throw input_error("separation_from_cutset: cutset covers the graph");
    Bitset seed(g.n());
    seed.set(v0);
    Bitset comp = g.reach(seed, rest);
    Separation s;
    s.a = comp | x;
    s.b = Bitset::full(g.n()) - comp;
    return s;
}

inline bool separation_valid(const Graph& g, const Separation& s) {
    if (!((s.a | s.b) == Bitset::full(g.n()))) return false;
    Bitset only_a = s.a - s.b;
    Bitset only_b = s.b - s.a;
    for (int v = only_a.next(0); v >= 0; v = only_a.next(v + 1))
        if (g.neighbors(v).intersects(only_b)) return false;
    return true;
}

struct PathSystem {
    std::vector<std::vector<int>> paths;
};

inline bool path_system_valid(const Graph& g, const PathSystem& ps) {
    Bitset internal_seen(g.n());
    for (const auto& p : ps.paths) {
        if (p.empty()) return false;
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.has_edge(p[i], p[i + 1])) return false;
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            if (internal_seen.test(p[i])) return false;
            internal_seen.set(p[i]);
        }
    }
    // endpoints may repeat across paths but never hit another path's interior
    for (const auto& p : ps.paths)
        if (internal_seen.test(p.front()) || internal_seen.test(p.back())) return false;
    return true;
}

struct ConnectivityResult {
    int k = 0;
    bool complete = false;   // no nonadjacent pair: witness "complete"
    std::vector<int> cutset; // lexicographically least minimum cutset otherwise
};

struct DisjointPathsResult {
    std::optional<PathSystem> paths;
    std::vector<int> separator; // witness when paths are missing
};

namespace detail {

class MaxFlow {
public:
    explicit MaxFlow(int nodes) : adj_(nodes) {}

    int add_arc(int from, int to, int cap) {
        int id = (int)to_.size();
        to_.push_back(to);
        cap_.push_back(cap);
        adj_[from].push_back(id);
        to_.push_back(from);
        cap_.push_back(0);
        adj_[to].push_back(id + 1);
        return id;
    }

    // Edmonds-Karp, one unit per augmentation; arcs scanned in insertion
    // order so results are deterministic.
    int run(int s, int t, int limit) {
        int total = 0;
        while (total < limit) {
            std::vector<int> pre(adj_.size(), -1);
            std::queue<int> q;
            q.push(s);
            pre[s] = -2;
            while (!q.empty() && pre[t] == -1) {
                int u = q.front();
                q.pop();
                for (int a : adj_[u]) {
                    if (cap_[a] > 0 && pre[to_[a]] == -1) {
                        pre[to_[a]] = a;
                        q.push(to_[a]);
                        if (to_[a] == t) break;
                    }
                }
            }
            if (pre[t] == -1) break;
            for (int v = t; v != s;) {
                int a = pre[v];
                cap_[a] -= 1;
                cap_[a ^ 1] += 1;
                v = to_[a ^ 1];
            }
            ++total;
        }
        return total;
    }

    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : adj_[u])
                if (cap_[a] > 0 && !seen[to_[a]]) {
                    seen[to_[a]] = 1;
                    q.push(to_[a]);
                }
        }
        return seen;
    }

    int flow_on(int a) const { return cap_[a ^ 1]; } // forward arcs only
    void drain_unit(int a) { cap_[a] += 1; cap_[a ^ 1] -= 1; }
    int arc_to(int a) const { return to_[a]; }
    const std::vector<int>& arcs_from(int node) const { return adj_[node]; }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<int> to_;
    std::vector<int> cap_;
};

// Menger network: v_in = 2v, v_out = 2v+1, source = 2n, sink = 2n+1.
struct MengerNetwork {
    MaxFlow flow;
    int n, source, sink;
    int value = 0;

    MengerNetwork(const Graph& g, const Bitset& s_set, const Bitset& t_set,
                  bool s_fan, bool t_fan, const Bitset& allowed, int limit)
        : flow(2 * g.n() + 2), n(g.n()), source(2 * g.n()), sink(2 * g.n() + 1) {
        int inf = g.n() + limit + 1;
        for (int v = 0; v < n; ++v) {
            if (!allowed.test(v)) continue;
            bool uncapped = (s_fan && s_set.test(v)) || (t_fan && t_set.test(v));
            flow.add_arc(2 * v, 2 * v + 1, uncapped ? inf : 1);
        }
        for (int u = 0; u < n; ++u) {
            if (!allowed.test(u)) continue;
            g.neighbors(u).for_each([&](int v) {
                if (allowed.test(v)) flow.add_arc(2 * u + 1, 2 * v, inf);
            });
        }
        s_set.for_each([&](int v) {
            if (allowed.test(v)) flow.add_arc(source, 2 * v, s_fan ? inf : 1);
        });
        t_set.for_each([&](int v) {
            if (allowed.test(v)) flow.add_arc(2 * v + 1, sink, t_fan ? inf : 1);
        });
        value = flow.run(source, sink, limit);
    }

    std::vector<int> min_cut_vertices() const {
        auto seen = flow.residual_reachable(source);
        std::vector<int> cut;
        for (int v = 0; v < n; ++v)
            if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
        return cut;
    }

    // Flow decomposition into vertex paths, shortest path first.
    std::vector<std::vector<int>> extract_paths(int count) {
        std::vector<std::vector<int>> paths;
        for (int i = 0; i < count; ++i) {
            std::vector<int> pre(2 * n + 2, -1);
            std::queue<int> q;
            q.push(source);
            pre[source] = -2;
            while (!q.empty() && pre[sink] == -1) {
                int u = q.front();
                q.pop();
                for (int a : flow.arcs_from(u)) {
                    if (a & 1) continue; // only forward arcs carry flow
                    int v = flow.arc_to(a);
                    if (flow.flow_on(a) > 0 && pre[v] == -1) {
                        pre[v] = a;
                        q.push(v);
                    }
                }
            }
            if (pre[sink] == -1) break; // fewer units than requested
            std::vector<int> nodes;
            for (int v = sink; v != source;) {
                int a = pre[v];
                nodes.push_back(v);
                flow.drain_unit(a);
                v = flow.arc_to(a ^ 1);
            }
            std::reverse(nodes.begin(), nodes.end());
            std::vector<int> path;
            for (int node : nodes)
                if (node < 2 * n && (node & 1) == 0) path.push_back(node / 2);
            paths.push_back(std::move(path));
        }
        return paths;
    }
};

// Max internally disjoint s-t paths for a nonadjacent pair.
inline int pair_connectivity(const Graph& g, int s, int t) {
    Bitset sb(g.n()), tb(g.n());
    sb.set(s);
    tb.set(t);
    MengerNetwork net(g, sb, tb, true, true, Bitset::full(g.n()), g.n());
    return net.value;
}

// Minimum number of vertices whose removal disconnects g, and whether g is
// complete (no such set exists).
inline std::pair<int, bool> disconnecting_number(const Graph& g) {
    int n = g.n();
    if (n <= 1) return {n == 0 ? 0 : 0, true};
    int best = -1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            int k = pair_connectivity(g, s, t);
            if (best < 0 || k < best) best = k;
        }
    if (best < 0) return {n - 1, true}; // complete graph
    return {best, false};
}

} // namespace detail

inline ConnectivityResult vertex_connectivity(const Graph& g) {
    ConnectivityResult r;
    auto [k, complete] = detail::disconnecting_number(g);
    r.k = k;
    r.complete = complete;
    if (complete) return r;

    // Lexicographically least minimum cutset, grown greedily: vertex v may
    // join the prefix X iff some minimum cutset of g contains X ∪ {v}, i.e.
    // iff g - X - v can still be disconnected by k - |X| - 1 vertices.
    Bitset removed(g.n());
    int need = k;
    for (int v = 0; v < g.n() && need > 0; ++v) {
        if (removed.test(v)) continue;
        Bitset keep = Bitset::full(g.n()) - removed;
        keep.reset(v);
        auto [sub, map] = g.induced_subgraph(keep);
        (void)map;
        auto [sk, scomplete] = detail::disconnecting_number(sub);
        if (!scomplete && sk == need - 1) {
            removed.set(v);
            r.cutset.push_back(v);
            --need;
        }
    }
    return r;
}

inline DisjointPathsResult disjoint_paths(const Graph& g, const std::vector<int>& s,
                                          const std::vector<int>& t, int k) {
    for (int v : s)
        if (v < 0 || v >= g.n()) throw input_error("disjoint_paths: S vertex out of range");
    for (int v : t)
        if (v < 0 || v >= g.n()) throw input_error("disjoint_paths: T vertex out of range");
    if (k < 0) throw input_error("disjoint_paths: negative k");

    Bitset sb = Bitset::of(g.n(), s);
    Bitset tb = Bitset::of(g.n(), t);
    Bitset zero = sb & tb;

    DisjointPathsResult out;
    PathSystem ps;
    int remaining = k;
    for (int v = zero.next(0); v >= 0 && remaining > 0; v = zero.next(v + 1)) {
        ps.paths.push_back({v});
        --remaining;
    }
    if (remaining == 0) {
        out.paths = std::move(ps);
        return out;
    }

    Bitset allowed = Bitset::full(g.n()) - zero;
    Bitset s_rest = sb - zero;
    Bitset t_rest = tb - zero;
    bool s_fan = s_rest.count() == 1;
    bool t_fan = t_rest.count() == 1;

    detail::MengerNetwork net(g, s_rest, t_rest, s_fan, t_fan, allowed, remaining);
    if (net.value >= remaining) {
        for (auto& p : net.extract_paths(remaining)) ps.paths.push_back(std::move(p));
        out.paths = std::move(ps);
        return out;
    }
    out.separator = zero.to_vector();
    for (int v : net.min_cut_vertices()) out.separator.push_back(v);
    std::sort(out.separator.begin(), out.separator.end());
    return out;
}

} // namespace hadwiger7
