#pragma once

// Exact minor and rooted-minor containment with verifiable branch-set
// models. The search places one seed vertex per pattern vertex (twin
// classes in ascending order, candidates filtered by reachability through
// free vertices), then grows branch sets one free vertex at a time until
// every pattern edge is realized. Both phases backtrack exhaustively, so
// "none" means no model exists.
//
// When the host has a clique separator smaller than the pattern's
// connectivity, the search decomposes: any model of a k-connected pattern
// lives entirely on one side of a (< k)-clique separation, because branch
// sets crossing the clique can be restricted to their side-plus-clique
// part without losing connectivity or pattern edges.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "connectivity.hpp"
#include "graph.hpp"
#include "patterns.hpp"

namespace hadwiger7 {

struct MinorModel {
    PatternGraph pattern;
    std::vector<Bitset> branch_sets; // one per pattern vertex, host indices
};

struct RootSpec {
    std::map<int, int> roots;                        // pattern vertex -> host vertex
    std::map<int, std::vector<int>> must_intersect;  // pattern vertex -> host set
};

struct MinorOptions {
    int vertex_budget = 64;
};

inline bool verify_model(const Graph& host, const MinorModel& m) {
    int np = m.pattern.graph.n();
    if ((int)m.branch_sets.size() != np) return false;
    Bitset seen(host.n());
    for (const Bitset& b : m.branch_sets) {
        if (b.capacity() != host.n() || b.none()) return false;
        if (b.intersects(seen)) return false;
        seen |= b;
        if (!host.connected_within(b)) return false;
    }
    for (auto [i, j] : m.pattern.graph.edges()) {
        bool touched = false;
        m.branch_sets[i].for_each([&](int v) {
            if (!touched && host.neighbors(v).intersects(m.branch_sets[j])) touched = true;
        });
        if (!touched) return false;
    }
    return true;
}

namespace detail {

struct MinorSearch {
    const Graph& host;
    const Graph& pat;
    int nh, np;

    std::vector<std::pair<int, int>> pat_edges;
    std::vector<int> order;      // pattern vertices, descending degree
    std::vector<int> twin_prev;  // per order position: earlier position of an
                                 // interchangeable twin, or -1
    std::vector<int> root_of;    // per pattern vertex: forced seed or -1
    std::vector<Bitset> must_hit; // per pattern vertex: capacity 0 if absent

    std::vector<Bitset> branch;
    std::vector<Bitset> nbset; // host neighborhood of each branch set
    std::vector<int> seed;     // seed vertex per order position
    Bitset used;
    bool found = false;

    MinorSearch(const Graph& host_, const Graph& pat_, const RootSpec& spec)
        : host(host_), pat(pat_), nh(host_.n()), np(pat_.n()),
          root_of(pat_.n(), -1), must_hit(pat_.n()),
          branch(pat_.n(), Bitset(host_.n())), nbset(pat_.n(), Bitset(host_.n())),
          seed(pat_.n(), -1), used(host_.n()) {
        pat_edges = pat.edges();
        for (auto [p, v] : spec.roots) root_of[p] = v;
        for (auto& [p, vs] : spec.must_intersect) must_hit[p] = Bitset::of(nh, vs);

        order.resize(np);
        for (int i = 0; i < np; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int da = pat.degree(a), db = pat.degree(b);
            return da != db ? da > db : a < b;
        });

        // interchangeable pattern vertices: equal neighborhoods (ignoring
        // each other) and no root / must-intersect constraints
        twin_prev.assign(np, -1);
        auto constrained = [&](int p) {
            return root_of[p] >= 0 || must_hit[p].capacity() > 0;
        };
        for (int k = 0; k < np; ++k) {
            int p = order[k];
            if (constrained(p)) continue;
            for (int k2 = k - 1; k2 >= 0; --k2) {
                int q = order[k2];
                if (constrained(q)) continue;
                Bitset npv = pat.neighbors(p), nqv = pat.neighbors(q);
                npv.reset(q);
                nqv.reset(p);
                if (npv == nqv) { // interchangeable whether adjacent or not
                    twin_prev[k] = k2;
                    break;
                }
            }
        }
    }

    Bitset free_set() const { return Bitset::full(nh) - used; }

    bool run() {
        if (np > nh || (int)pat_edges.size() > host.edge_count()) return false;
        return place(0);
    }

    bool place(int k) {
        if (k == np) return grow();
        int p = order[k];
        Bitset free = free_set();
        Bitset cand = free;
        if (root_of[p] >= 0) {
            Bitset only(nh);
            if (free.test(root_of[p])) only.set(root_of[p]);
            cand = only;
        }
        // seeds must be connectable through free vertices to every placed
        // pattern neighbor
        for (int k2 = 0; k2 < k; ++k2) {
            int q = order[k2];
            if (!pat.has_edge(p, q)) continue;
            cand &= host.reach(branch[q], free);
            if (cand.none()) return false;
        }
        for (int s = cand.next(0); s >= 0; s = cand.next(s + 1)) {
            if (twin_prev[k] >= 0 && seed[twin_prev[k]] > s) continue;
            branch[p].set(s);
            nbset[p] = host.neighbors(s);
            seed[k] = s;
            used.set(s);
            if (place(k + 1)) return true;
            used.reset(s);
            branch[p].reset(s);
            seed[k] = -1;
        }
        return false;
    }

    bool grow() {
        Bitset free = free_set();

        // collect debts; bail out early if any is unreachable
        int hit_debt = -1;
        for (int p = 0; p < np; ++p) {
            if (must_hit[p].capacity() == 0) continue;
            if (branch[p].intersects(must_hit[p])) continue;
            Bitset r = host.reach(branch[p], free) - branch[p];
            if (!r.intersects(must_hit[p])) return false;
            if (hit_debt < 0) hit_debt = p;
        }
        int edge_debt = -1;
        for (int e = 0; e < (int)pat_edges.size(); ++e) {
            auto [i, j] = pat_edges[e];
            if (nbset[i].intersects(branch[j])) continue;
            Bitset r = host.reach(branch[i], free) - branch[i];
            if (!(r & nbset[j]).any()) return false;
            if (edge_debt < 0) edge_debt = e;
        }
        if (hit_debt < 0 && edge_debt < 0) {
            found = true;
            return true;
        }

        if (hit_debt >= 0) {
            int p = hit_debt;
            Bitset cand = nbset[p] & free;
            for (int w = cand.next(0); w >= 0; w = cand.next(w + 1))
                if (grow_with(p, w)) return true;
            return false;
        }

        auto [i, j] = pat_edges[edge_debt];
        Bitset cand_i = nbset[i] & free;
        for (int w = cand_i.next(0); w >= 0; w = cand_i.next(w + 1))
            if (grow_with(i, w)) return true;
        Bitset cand_j = nbset[j] & free;
        for (int w = cand_j.next(0); w >= 0; w = cand_j.next(w + 1))
            if (grow_with(j, w)) return true;
        return false;
    }

    bool grow_with(int p, int w) {
        Bitset saved_nb = nbset[p];
        branch[p].set(w);
        nbset[p] |= host.neighbors(w);
        used.set(w);
        if (grow()) return true;
        used.reset(w);
        branch[p].reset(w);
        nbset[p] = std::move(saved_nb);
        return false;
    }
};

// Smallest clique (possibly empty) whose removal disconnects the host,
// restricted to sizes < max_size. Returns nullopt if none.
inline std::optional<std::vector<int>> separating_clique(const Graph& g, int max_size) {
    if (g.n() == 0) return std::nullopt;
    if (!g.is_connected()) return std::vector<int>{};
    std::vector<int> clique;
    Bitset full = Bitset::full(g.n());
    // enumerate cliques by size, lexicographically
    std::optional<std::vector<int>> result;
    auto disconnects = [&](const std::vector<int>& s) {
        Bitset rest = full;
        for (int v : s) rest.reset(v);
        int v0 = rest.next(0);
        if (v0 < 0) return false;
        Bitset seedb(g.n());
        seedb.set(v0);
        return !(rest.subset_of(g.reach(seedb, rest)));
    };
    std::vector<int> cur;
    std::function<bool(int, int)> rec = [&](int start, int want) -> bool {
        if ((int)cur.size() == want) {
            if (disconnects(cur)) {
                result = cur;
                return true;
            }
            return false;
        }
        for (int v = start; v < g.n(); ++v) {
            bool ok = true;
            for (int u : cur)
                if (!g.has_edge(u, v)) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            if (rec(v + 1, want)) return true;
            cur.pop_back();
        }
        return false;
    };
    for (int size = 1; size < max_size; ++size) {
        cur.clear();
        if (rec(0, size)) return result;
    }
    return std::nullopt;
}

inline std::optional<MinorModel> find_minor_impl(const PatternGraph& pattern, const Graph& host);

// Decomposition along a clique separator smaller than the pattern's
// connectivity; exact for connected patterns. Outer nullopt: no such
// separator, fall through to the direct search.
inline std::optional<std::optional<MinorModel>> try_clique_split(const PatternGraph& pattern,
                                                                 const Graph& host) {
    const Graph& pg = pattern.graph;
    if (pg.n() < 2 || !pg.is_connected() || host.n() <= pg.n()) return std::nullopt;
    auto [kappa, complete] = detail::disconnecting_number(pg);
    if (complete) kappa = pg.n() - 1;
    if (kappa < 1) return std::nullopt;

    auto sep = separating_clique(host, kappa);
    if (!sep) return std::nullopt;

    Bitset sep_mask = Bitset::of(host.n(), *sep);
    Bitset rest = Bitset::full(host.n()) - sep_mask;
    std::vector<Bitset> comps;
    for (int v = rest.next(0); v >= 0; v = rest.next(0)) {
        Bitset seedb(host.n());
        seedb.set(v);
        Bitset comp = host.reach(seedb, rest);
        comps.push_back(comp);
        rest -= comp;
    }
    for (const Bitset& comp : comps) {
        Bitset side = comp | sep_mask;
        auto [sub, map] = host.induced_subgraph(side);
        std::vector<int> back(sub.n());
        side.for_each([&](int ov) { back[map[ov]] = ov; });
        auto m = find_minor_impl(pattern, sub);
        if (m) {
            MinorModel lifted{pattern, {}};
            for (const Bitset& b : m->branch_sets) {
                Bitset hb(host.n());
                b.for_each([&](int v) { hb.set(back[v]); });
                lifted.branch_sets.push_back(std::move(hb));
            }
            return std::optional<MinorModel>{std::move(lifted)};
        }
    }
    return std::optional<MinorModel>{std::nullopt}; // exhaustive over all sides
}

inline std::optional<MinorModel> find_minor_impl(const PatternGraph& pattern, const Graph& host) {
    if (pattern.graph.n() > host.n()) return std::nullopt;
    if (pattern.graph.edge_count() > host.edge_count()) return std::nullopt;

    if (auto split = try_clique_split(pattern, host)) return *split;

    MinorSearch search(host, pattern.graph, RootSpec{});
    if (search.run()) return MinorModel{pattern, search.branch};
    return std::nullopt;
}

} // namespace detail

inline std::optional<MinorModel> find_minor(const PatternGraph& pattern, const Graph& host,
                                            const MinorOptions& opts = {}) {
    if (host.n() > opts.vertex_budget)
        throw budget_error("find_minor: host exceeds vertex budget of " +
                           std::to_string(opts.vertex_budget));
    auto m = detail::find_minor_impl(pattern, host);
    if (m && !verify_model(host, *m))
        throw theorem_violation("find_minor produced a model that fails verification");
    return m;
}

inline std::optional<MinorModel> find_rooted_minor(const PatternGraph& pattern, const Graph& host,
                                                   const RootSpec& spec,
                                                   const MinorOptions& opts = {}) {
    if (host.n() > opts.vertex_budget)
        throw budget_error("find_rooted_minor: host exceeds vertex budget of " +
                           std::to_string(opts.vertex_budget));
    Bitset seen(host.n());
    for (auto [p, v] : spec.roots) {
        if (p < 0 || p >= pattern.graph.n())
            throw input_error("find_rooted_minor: root pattern vertex out of range");
        if (v < 0 || v >= host.n())
            throw input_error("find_rooted_minor: root host vertex out of range");
        if (seen.test(v)) throw input_error("find_rooted_minor: two roots on one host vertex");
        seen.set(v);
    }
    for (auto& [p, vs] : spec.must_intersect) {
        if (p < 0 || p >= pattern.graph.n())
            throw input_error("find_rooted_minor: must-intersect pattern vertex out of range");
        for (int v : vs)
            if (v < 0 || v >= host.n())
                throw input_error("find_rooted_minor: must-intersect host vertex out of range");
    }
    if (pattern.graph.n() > host.n()) return std::nullopt;

    detail::MinorSearch search(host, pattern.graph, spec);
    if (search.run()) {
        MinorModel m{pattern, search.branch};
        if (!verify_model(host, m))
            throw theorem_violation("find_rooted_minor produced a model that fails verification");
        return m;
    }
    return std::nullopt;
}

} // namespace hadwiger7
