#pragma once

// Brute-force minor containment by partition enumeration. Verification
// support only: nothing here is used by the search it cross-checks.
// Enumerates every vertex subset of the host, every partition of it into
// exactly |pattern| connected blocks, and every bijection of pattern
// vertices onto the blocks.

#include <vector>

#include "../graph.hpp"
#include "../patterns.hpp"

namespace hadwiger7::testing {

inline bool minor_oracle_contains(const Graph& pattern, const Graph& host) {
    int p = pattern.n();
    int n = host.n();
    if (p == 0) return true;
    if (p > n) return false;

    std::vector<std::pair<int, int>> pat_edges = pattern.edges();

    std::vector<int> block_of(n, -1);
    std::vector<Bitset> blocks;
    std::vector<int> perm(p);

    // adjacency between blocks, recomputed per complete partition
    auto feasible_assignment = [&]() {
        for (const Bitset& b : blocks)
            if (!host.connected_within(b)) return false;
        std::vector<std::vector<char>> touch(p, std::vector<char>(p, 0));
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) {
                bool adj = false;
                blocks[i].for_each([&](int v) {
                    if (!adj && host.neighbors(v).intersects(blocks[j])) adj = true;
                });
                touch[i][j] = touch[j][i] = adj;
            }
        // try every bijection pattern vertex -> block
        for (int i = 0; i < p; ++i) perm[i] = i;
        do {
            bool ok = true;
            for (auto [a, b] : pat_edges)
                if (!touch[perm[a]][perm[b]]) { ok = false; break; }
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };

    // assign support vertices to blocks by restricted growth; -1 = unused
    std::function<bool(int, int)> rec = [&](int v, int used_blocks) -> bool {
        if (n - v < p - used_blocks) return false;
        if (v == n) {
            if (used_blocks != p) return false;
            return feasible_assignment();
        }
        for (int b = -1; b <= std::min(used_blocks, p - 1); ++b) {
            block_of[v] = b;
            if (b >= 0) {
                if (b == used_blocks) blocks.emplace_back(n);
                blocks[b].set(v);
                if (rec(v + 1, std::max(used_blocks, b + 1))) return true;
                blocks[b].reset(v);
                if (b == used_blocks) blocks.pop_back();
            } else {
                if (rec(v + 1, used_blocks)) return true;
            }
            block_of[v] = -1;
        }
        return false;
    };
    return rec(0, 0);
}

} // namespace hadwiger7::testing
