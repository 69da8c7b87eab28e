#pragma once

// Independent brute-force oracles. These deliberately take different
// algorithmic routes than the library so agreement is meaningful.

#include <optional>
#include <vector>

#include "cubic/graph.hpp"
#include "cubic/invariants.hpp"

namespace testsupport {

// Girth by a different route than the library's BFS-from-every-vertex: for
// every edge (u,v), the shortest u-v path in G - uv plus one.
inline std::optional<int> oracle_girth(const cubic::Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    for (auto [u, v] : g.edges()) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<int> queue{u};
        dist[static_cast<std::size_t>(u)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int a = queue[head];
            for (int b : g.neighbors(a)) {
                if (a == u && b == v) continue;
                if (a == v && b == u) continue;
                if (dist[static_cast<std::size_t>(b)] != -1) continue;
                dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
                queue.push_back(b);
            }
        }
        if (dist[static_cast<std::size_t>(v)] != -1) {
            int len = dist[static_cast<std::size_t>(v)] + 1;
            if (best == -1 || len < best) best = len;
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

// Minimum size (<= 5) of an edge subset whose removal leaves at least two
// components each containing a cycle; nullopt if there is none. Plain
// enumeration of all edge subsets by size.
inline std::optional<int> oracle_cyclic_cut(const cubic::Graph& g) {
    const int n = g.vertex_count();
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());

    std::vector<char> removed(static_cast<std::size_t>(m), 0);
    auto cycle_components = [&] {
        std::vector<int> comp(static_cast<std::size_t>(n), -1);
        int comps = 0;
        for (int v = 0; v < n; ++v) {
            if (comp[static_cast<std::size_t>(v)] != -1) continue;
            std::vector<int> stack{v};
            comp[static_cast<std::size_t>(v)] = comps;
            while (!stack.empty()) {
                int a = stack.back();
                stack.pop_back();
                for (int e = 0; e < m; ++e) {
                    if (removed[static_cast<std::size_t>(e)]) continue;
                    auto [p, q] = edges[static_cast<std::size_t>(e)];
                    int b = p == a ? q : q == a ? p : -1;
                    if (b < 0 || comp[static_cast<std::size_t>(b)] != -1) continue;
                    comp[static_cast<std::size_t>(b)] = comps;
                    stack.push_back(b);
                }
            }
            ++comps;
        }
        std::vector<int> vcount(static_cast<std::size_t>(comps), 0), ecount(static_cast<std::size_t>(comps), 0);
        for (int v = 0; v < n; ++v) ++vcount[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
        for (int e = 0; e < m; ++e)
            if (!removed[static_cast<std::size_t>(e)])
                ++ecount[static_cast<std::size_t>(comp[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].first)])];
        int cyclic = 0;
        for (int c = 0; c < comps; ++c)
            if (ecount[static_cast<std::size_t>(c)] >= vcount[static_cast<std::size_t>(c)]) ++cyclic;
        return cyclic;
    };

    std::vector<int> chosen;
    auto rec = [&](auto&& self, int from, int remaining) -> bool {
        if (remaining == 0) return cycle_components() >= 2;
        for (int e = from; e < m; ++e) {
            removed[static_cast<std::size_t>(e)] = 1;
            if (self(self, e + 1, remaining - 1)) {
                removed[static_cast<std::size_t>(e)] = 0;
                return true;
            }
            removed[static_cast<std::size_t>(e)] = 0;
        }
        return false;
    };
    for (int size = 0; size <= 5; ++size)
        if (rec(rec, 0, size)) return size;
    return std::nullopt;
}

// Number of adjacency-preserving vertex bijections, by permutation
// backtracking on the abstract graph (no rotation data involved).
inline long long oracle_automorphism_count(const cubic::Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> map(static_cast<std::size_t>(n), -1), imap(static_cast<std::size_t>(n), -1);
    long long count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int cand = 0; cand < n; ++cand) {
            if (imap[static_cast<std::size_t>(cand)] >= 0) continue;
            if (g.degree(v) != g.degree(cand)) continue;
            bool ok = true;
            for (int w = 0; w < v && ok; ++w)
                if (g.has_edge(v, w) != g.has_edge(cand, map[static_cast<std::size_t>(w)])) ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = cand;
            imap[static_cast<std::size_t>(cand)] = v;
            self(self, v + 1);
            map[static_cast<std::size_t>(v)] = -1;
            imap[static_cast<std::size_t>(cand)] = -1;
        }
    };
    rec(rec, 0);
    return count;
}

// Exponential subset enumeration for the Grinberg feasibility question;
// usable for faces totalling <= ~20.
inline bool oracle_grinberg_feasible(const cubic::FaceVector& fv) {
    std::vector<int> weights;
    for (auto [k, f] : fv.counts)
        for (int i = 0; i < f; ++i) weights.push_back(k - 2);
    const int total = static_cast<int>(weights.size());
    long long t = 0;
    for (int w : weights) t += w;
    if (t % 2 != 0) return false;
    for (long long mask = 1; mask + 1 < (1LL << total); ++mask) {
        long long sum = 0;
        for (int i = 0; i < total; ++i)
            if (mask & (1LL << i)) sum += weights[static_cast<std::size_t>(i)];
        if (sum * 2 == t) return true;
    }
    return false;
}

}  // namespace testsupport
