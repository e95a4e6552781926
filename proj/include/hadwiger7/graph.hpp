#pragma once

// Immutable simple undirected graph. Vertices are dense 0..n-1 indices;
// adjacency is kept as one bitset row per vertex. Every mutating operation
// (deletion, contraction, identification) returns a fresh reindexed graph;
// labels carry the merge history so results can be traced back to the
// original vertex names.

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"

namespace hadwiger7 {

class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw input_error("vertex count must be nonnegative");
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw input_error("edge endpoint out of range: (" + std::to_string(u) +
                                  "," + std::to_string(v) + ") with n=" + std::to_string(n));
            if (u == v)
                throw input_error("self-loop rejected at vertex " + std::to_string(u));
            g.add_edge_internal(u, v); // duplicates and reversed pairs collapse
        }
        return g;
    }

    int n() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return adj_[u].count(); }

    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) { if (u < v) es.emplace_back(u, v); });
        return es;
    }

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool is_complete() const { return 2 * edge_count() == n_ * (n_ - 1); }

    // Vertices reachable from `start` while staying inside `allowed`.
    // `start` itself need not be in `allowed`.
    Bitset reach(const Bitset& start, const Bitset& allowed) const {
        Bitset seen = start;
        Bitset frontier = start;
        while (frontier.any()) {
            Bitset next(n_);
            frontier.for_each([&](int v) { next |= adj_[v]; });
            next &= allowed;
            next -= seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    bool connected_within(const Bitset& s) const {
        int first = s.next(0);
        if (first < 0) return false;
        Bitset start(n_);
        start.set(first);
        return s.subset_of(reach(start, s));
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        return connected_within(Bitset::full(n_));
    }

    std::vector<Bitset> components() const {
        std::vector<Bitset> comps;
        Bitset left = Bitset::full(n_);
        for (int v = left.next(0); v >= 0; v = left.next(0)) {
            Bitset start(n_);
            start.set(v);
            Bitset comp = reach(start, left);
            comps.push_back(comp);
            left -= comp;
        }
        return comps;
    }

    Graph identify_vertices(const std::vector<int>& group) const {
        if (group.size() < 2) throw input_error("identify_vertices needs at least 2 vertices");
        Bitset s(n_);
        for (int v : group) {
            if (v < 0 || v >= n_) throw input_error("identify_vertices: vertex out of range");
            s.set(v);
        }
        if (s.count() != (int)group.size())
            throw input_error("identify_vertices: duplicate vertices in group");

        int keep = s.next(0); // merged vertex inherits the least index
        std::vector<int> old_of;
        std::vector<int> new_of(n_, -1);
        for (int v = 0; v < n_; ++v) {
            if (v != keep && s.test(v)) continue;
            new_of[v] = (int)old_of.size();
            old_of.push_back(v);
        }

        Graph out((int)old_of.size());
        for (int u = 0; u < n_; ++u) {
            int nu = s.test(u) ? new_of[keep] : new_of[u];
            adj_[u].for_each([&](int v) {
                int nv = s.test(v) ? new_of[keep] : new_of[v];
                if (nu != nv) out.add_edge_internal(nu, nv);
            });
        }

        std::string merged;
        s.for_each([&](int v) {
            if (!merged.empty()) merged += "+";
            merged += labels_[v];
        });
        for (int i = 0; i < out.n_; ++i)
            out.labels_[i] = (old_of[i] == keep) ? merged : labels_[old_of[i]];
        return out;
    }

    Graph contract_edge(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || !has_edge(u, v))
            throw input_error("contract_edge: edge not present");
        return identify_vertices({u, v});
    }

    // Subgraph induced by `keep`, plus the map old index -> new index
    // (-1 for dropped vertices).
    std::pair<Graph, std::vector<int>> induced_subgraph(const Bitset& keep) const {
        std::vector<int> new_of(n_, -1);
        std::vector<int> old_of;
        keep.for_each([&](int v) {
            new_of[v] = (int)old_of.size();
            old_of.push_back(v);
        });
        Graph out((int)old_of.size());
        for (int i = 0; i < out.n_; ++i) {
            Bitset row = adj_[old_of[i]] & keep;
            row.for_each([&](int v) {
                if (new_of[v] > i) out.add_edge_internal(i, new_of[v]);
            });
            out.labels_[i] = labels_[old_of[i]];
        }
        return {std::move(out), std::move(new_of)};
    }

    std::pair<Graph, std::vector<int>> induced_subgraph(const std::vector<int>& keep) const {
        return induced_subgraph(Bitset::of(n_, keep));
    }

    Graph delete_vertex(int v) const {
        Bitset keep = Bitset::full(n_);
        keep.reset(v);
        return induced_subgraph(keep).first;
    }

    Graph complement() const {
        Graph out(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) out.add_edge_internal(u, v);
        out.labels_ = labels_;
        return out;
    }

    // Neighborhood graph of u: induced subgraph on N(u), with the index map.
    std::pair<Graph, std::vector<int>> neighborhood_graph(int u) const {
        return induced_subgraph(adj_[u]);
    }

private:
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)), labels_(n) {
        for (int i = 0; i < n; ++i) labels_[i] = std::to_string(i);
    }

    void add_edge_internal(int u, int v) {
        adj_[u].set(v);
        adj_[v].set(u);
    }

    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;

    friend class GraphBuilder;
};

// Mutable construction helper for generators and decoders.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    void add_edge(int u, int v) {
        if (u == v) throw input_error("self-loop rejected at vertex " + std::to_string(u));
        g_.add_edge_internal(u, v);
    }
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    int n() const { return g_.n(); }
    Graph build() { return std::move(g_); }

private:
    Graph g_;
};

// Brute-force isomorphism check; intended for small graphs in tests and
// leaf recognition.
inline bool isomorphic_brute(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    int n = a.n();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) { da[v] = a.degree(v); db[v] = b.degree(v); }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (da[u] != db[perm[u]]) { ok = false; break; }
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace hadwiger7
