#pragma once

// Brute-force connectivity oracle: try every vertex subset as a cutset,
// in size-then-lexicographic order. Independent of the flow-based
// implementation.

#include <optional>
#include <vector>

#include "hadwiger7/graph.hpp"

namespace h7test {

using hadwiger7::Bitset;
using hadwiger7::Graph;

inline bool is_cutset(const Graph& g, const std::vector<int>& s) {
    Bitset rest = Bitset::full(g.n());
    for (int v : s) rest.reset(v);
    int v0 = rest.next(0);
    if (v0 < 0) return false;
    Bitset seed(g.n());
    seed.set(v0);
    return !rest.subset_of(g.reach(seed, rest));
}

struct BruteConnectivity {
    int k = 0;
    bool complete = false;
    std::vector<int> cutset;
};

inline BruteConnectivity brute_connectivity(const Graph& g) {
    int n = g.n();
    std::vector<int> subset;
    std::optional<std::vector<int>> hit;
    std::function<bool(int, int)> rec = [&](int start, int want) {
        if ((int)subset.size() == want) {
            if (is_cutset(g, subset)) {
                hit = subset;
                return true;
            }
            return false;
        }
        for (int v = start; v < n; ++v) {
            subset.push_back(v);
            if (rec(v + 1, want)) return true;
            subset.pop_back();
        }
        return false;
    };
    for (int size = 0; size <= n - 2; ++size) {
        subset.clear();
        if (rec(0, size)) return {size, false, *hit};
    }
    return {n < 1 ? 0 : n - 1, true, {}};
}

} // namespace h7test
