#pragma once

// Structural invariants: girth, face vectors, cyclic edge connectivity,
// automorphism group order.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubic/codec.hpp"
#include "cubic/graph.hpp"

namespace cubic {

// -------------------------------------------------------------------- girth

// Length of a shortest cycle, or nullopt for forests. BFS from every vertex;
// a non-tree edge closing at depths d1, d2 bounds the girth by d1 + d2 + 1.
inline std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(root);
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            if (best != -1 && 2 * dist[static_cast<std::size_t>(v)] >= best) break;
            for (int w : g.neighbors(v)) {
                if (w == parent[static_cast<std::size_t>(v)]) continue;
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                } else {
                    int len = dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

// -------------------------------------------------------------------- faces

// Multiset of face sizes, written multiplicatively (e.g. 5^12 for the
// dodecahedron). The three identities for a connected plane graph:
//   sum k*f_k = 2m,   sum f_k = m - n + 2,   and for cubic graphs
//   sum (k-2)*f_k = 2(n-2).
struct FaceVector {
    std::map<int, int> counts;  // face size -> multiplicity

    int total_faces() const {
        int t = 0;
        for (auto [k, f] : counts) t += f;
        return t;
    }
    long long size_sum() const {
        long long t = 0;
        for (auto [k, f] : counts) t += static_cast<long long>(k) * f;
        return t;
    }
    bool operator==(const FaceVector&) const = default;

    std::string to_string() const {
        std::string s;
        for (auto [k, f] : counts) {
            if (!s.empty()) s += ' ';
            s += std::to_string(k);
            if (f != 1) s += '^' + std::to_string(f);
        }
        return s.empty() ? "-" : s;
    }
};

// Traces the dart orbits of the embedding: the successor of dart (u,v) is
// (v,w) with w the neighbor immediately following u in the rotation at v.
// The multiset of orbit lengths is invariant under reversing the convention
// (it enumerates the same faces from the other side).
inline FaceVector faces(const PlanarEmbedding& e) {
    const Graph& g = e.graph;
    if (!connected(g)) throw NotSphereEmbedding("faces: graph is disconnected");
    const int n = g.vertex_count();
    if (g.edge_count() == 0) {
        if (n <= 1) return FaceVector{};
        throw NotSphereEmbedding("faces: graph is disconnected");
    }
    std::vector<int> dart_base(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v)
        dart_base[static_cast<std::size_t>(v) + 1] = dart_base[static_cast<std::size_t>(v)] + g.degree(v);
    const int darts = dart_base[static_cast<std::size_t>(n)];
    auto index_of = [&](int v, int u) {
        auto nb = g.neighbors(v);
        for (int i = 0; i < static_cast<int>(nb.size()); ++i)
            if (nb[i] == u) return i;
        return -1;
    };
    std::vector<char> seen(static_cast<std::size_t>(darts), 0);
    FaceVector fv;
    int orbit_count = 0;
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < g.degree(v); ++i) {
            if (seen[static_cast<std::size_t>(dart_base[static_cast<std::size_t>(v)] + i)]) continue;
            ++orbit_count;
            int len = 0;
            int cu = v, ci = i;
            while (!seen[static_cast<std::size_t>(dart_base[static_cast<std::size_t>(cu)] + ci)]) {
                seen[static_cast<std::size_t>(dart_base[static_cast<std::size_t>(cu)] + ci)] = 1;
                ++len;
                int cv = g.neighbors(cu)[static_cast<std::size_t>(ci)];
                int back = index_of(cv, cu);
                cu = cv;
                ci = (back + 1) % g.degree(cv);
            }
            ++fv.counts[len];
        }
    }
    if (orbit_count != g.edge_count() - n + 2)
        throw NotSphereEmbedding("faces: face count violates Euler's formula (not a sphere embedding)");
    return fv;
}

// ------------------------------------------------------------------ min cut

// Minimum number of edges separating A from B (unit capacities), computed by
// BFS augmenting paths, stopping once cap+1 paths exist; cap+1 means "> cap".
// With cap at most 5 there is nothing a smarter flow algorithm would buy.
inline int mincut_between(const Graph& g, std::span<const int> a, std::span<const int> b, int cap) {
    if (a.empty() || b.empty()) throw std::invalid_argument("mincut_between: empty terminal set");
    const int n = g.vertex_count();
    std::vector<char> in_a(static_cast<std::size_t>(n), 0), in_b(static_cast<std::size_t>(n), 0);
    for (int v : a) in_a[static_cast<std::size_t>(v)] = 1;
    for (int v : b) in_b[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v)
        if (in_a[static_cast<std::size_t>(v)] && in_b[static_cast<std::size_t>(v)])
            throw std::invalid_argument("mincut_between: terminal sets overlap at vertex " + std::to_string(v));

    // residual capacity per dart; darts indexed like faces()
    std::vector<int> dart_base(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v)
        dart_base[static_cast<std::size_t>(v) + 1] = dart_base[static_cast<std::size_t>(v)] + g.degree(v);
    auto index_of = [&](int v, int u) {
        auto nb = g.neighbors(v);
        for (int i = 0; i < static_cast<int>(nb.size()); ++i)
            if (nb[i] == u) return i;
        return -1;
    };
    std::vector<signed char> res(static_cast<std::size_t>(dart_base[static_cast<std::size_t>(n)]), 1);
    std::vector<int> prev_dart(static_cast<std::size_t>(n));
    std::vector<char> visited(static_cast<std::size_t>(n));
    std::vector<int> queue;

    int flow = 0;
    while (flow <= cap) {
        std::fill(visited.begin(), visited.end(), 0);
        queue.clear();
        for (int v : a) {
            visited[static_cast<std::size_t>(v)] = 1;
            queue.push_back(v);
        }
        int reached = -1;
        for (std::size_t head = 0; head < queue.size() && reached < 0; ++head) {
            int v = queue[head];
            auto nb = g.neighbors(v);
            for (int i = 0; i < static_cast<int>(nb.size()); ++i) {
                int dart = dart_base[static_cast<std::size_t>(v)] + i;
                if (!res[static_cast<std::size_t>(dart)]) continue;
                int w = nb[static_cast<std::size_t>(i)];
                if (visited[static_cast<std::size_t>(w)]) continue;
                visited[static_cast<std::size_t>(w)] = 1;
                prev_dart[static_cast<std::size_t>(w)] = dart;
                if (in_b[static_cast<std::size_t>(w)]) {
                    reached = w;
                    break;
                }
                queue.push_back(w);
            }
        }
        if (reached < 0) return flow;
        // augment one unit along the path
        int v = reached;
        while (!in_a[static_cast<std::size_t>(v)]) {
            int dart = prev_dart[static_cast<std::size_t>(v)];
            // dart = (u -> v); locate u from dart_base
            int u = static_cast<int>(std::upper_bound(dart_base.begin(), dart_base.end(), dart) -
                                     dart_base.begin()) -
                    1;
            res[static_cast<std::size_t>(dart)] = 0;
            int back = index_of(v, u);
            res[static_cast<std::size_t>(dart_base[static_cast<std::size_t>(v)] + back)] = 1;
            v = u;
        }
        ++flow;
    }
    return cap + 1;
}

// ------------------------------------------------------- cyclic connectivity

// Tagged result: exact cyclic edge connectivity c <= 5, or "no cycle-
// separating cut of size <= 5 exists".
struct CyclicConnectivity {
    std::optional<int> exact;
    bool has_cut() const { return exact.has_value(); }
    int value() const { return *exact; }
    bool operator==(const CyclicConnectivity&) const = default;

    std::string to_string() const {
        return exact ? "Exact(" + std::to_string(*exact) + ")" : "NoCycleSeparatingCut";
    }
};

namespace detail {

// Seeds for the >=5 confirmation pass: every cycle contains a triangle or a
// 4-vertex path, and in a cubic graph a forest side containing a P4 forces a
// cut of size at least 6 (t vertices, k components: cut = t + 2k >= 6), so a
// cut of size <= 5 separating two such seeds is cycle-separating.
inline std::vector<std::vector<int>> cycle_seeds(const Graph& g) {
    std::vector<std::vector<int>> seeds;
    const int n = g.vertex_count();
    // triangles a < b < c
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            for (int c : g.neighbors(b)) {
                if (c <= b) continue;
                if (g.has_edge(c, a)) seeds.push_back({a, b, c});
            }
        }
    // 4-vertex paths a-b-c-d, canonical orientation b < c
    for (int b = 0; b < n; ++b)
        for (int c : g.neighbors(b)) {
            if (c <= b) continue;
            for (int a : g.neighbors(b)) {
                if (a == c) continue;
                for (int d : g.neighbors(c)) {
                    if (d == b || d == a) continue;
                    seeds.push_back({a, b, c, d});
                }
            }
        }
    return seeds;
}

inline bool disjoint(std::span<const int> a, std::span<const int> b) {
    for (int x : a)
        for (int y : b)
            if (x == y) return false;
    return true;
}

}  // namespace detail

// Cyclic edge connectivity via cherry pairs: in a cubic graph a cut of size
// <= 4 separating two vertex-disjoint cherries is automatically
// cycle-separating (a forest side with t vertices and k components has cut
// size 3t - 2(t-k) = t + 2k >= 5 once it contains a cherry, t >= 3), and
// conversely both sides of any cycle-separating cut contain cherries. So the
// minimum over vertex-disjoint cherry pairs of the max-flow between them
// equals the cyclic connectivity whenever that is <= 4. When the minimum is
// 5 a second pass over triangle/P4 seed pairs decides whether a
// cycle-separating 5-cut actually exists (both arguments above shift up by
// one vertex). Exactness of both passes is specific to cubic inputs; for
// graphs with degree-2 vertices the forest bound fails and the result is
// only an upper-bound heuristic.
inline CyclicConnectivity cyclic_connectivity(const Graph& g) {
    if (!connected(g)) throw std::invalid_argument("cyclic_connectivity: graph is disconnected");
    const auto ch = cherries(g);
    int best = 6;  // anything above 5 is "no cut"
    for (std::size_t i = 0; i < ch.size(); ++i) {
        for (std::size_t j = i + 1; j < ch.size(); ++j) {
            if (best == 0) break;
            const std::array<int, 3> s1{ch[i].center, ch[i].arm1, ch[i].arm2};
            const std::array<int, 3> s2{ch[j].center, ch[j].arm1, ch[j].arm2};
            if (!detail::disjoint(s1, s2)) continue;
            int cut = mincut_between(g, s1, s2, std::min(best - 1, 5));
            if (cut < best) best = cut;
        }
    }
    if (best <= 4) return CyclicConnectivity{best};
    if (best == 6) return CyclicConnectivity{std::nullopt};  // includes "no disjoint pair"

    // best == 5: confirm a cycle-separating 5-cut via triangle/P4 seed pairs
    auto seeds = detail::cycle_seeds(g);
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i + 1; j < seeds.size(); ++j) {
            if (!detail::disjoint(seeds[i], seeds[j])) continue;
            if (mincut_between(g, seeds[i], seeds[j], 5) <= 5) return CyclicConnectivity{5};
        }
    return CyclicConnectivity{std::nullopt};
}

// --------------------------------------------------------- 3-connectivity

// Vertex-cut enumeration over singletons and pairs; n <= 255 keeps the
// O(n^2 m) cost irrelevant.
inline bool three_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 4) return false;
    std::vector<char> blocked(static_cast<std::size_t>(n));
    std::vector<int> stack;
    auto connected_without = [&](int skip1, int skip2) {
        std::fill(blocked.begin(), blocked.end(), 0);
        if (skip1 >= 0) blocked[static_cast<std::size_t>(skip1)] = 1;
        if (skip2 >= 0) blocked[static_cast<std::size_t>(skip2)] = 1;
        int start = -1, want = 0;
        for (int v = 0; v < n; ++v)
            if (!blocked[static_cast<std::size_t>(v)]) {
                if (start < 0) start = v;
                ++want;
            }
        if (start < 0) return true;
        stack.clear();
        stack.push_back(start);
        blocked[static_cast<std::size_t>(start)] = 1;
        int seen = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!blocked[static_cast<std::size_t>(w)]) {
                    blocked[static_cast<std::size_t>(w)] = 1;
                    ++seen;
                    stack.push_back(w);
                }
        }
        return seen == want;
    };
    if (!connected_without(-1, -1)) return false;
    for (int v = 0; v < n; ++v)
        if (!connected_without(v, -1)) return false;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (!connected_without(v, w)) return false;
    return true;
}

// -------------------------------------------------------- automorphism order

// Order of the automorphism group of the embedded graph. For each of the
// 2*(2m) choices of image dart and orientation for a fixed seed dart, try to
// extend to a full rotation-system isomorphism by dart propagation and count
// the successes. For 3-connected planar graphs the embedding is unique up to
// reflection (Whitney), so this equals the graph's automorphism group order;
// the 3-connectivity precondition is enforced.
inline int automorphism_order(const PlanarEmbedding& e) {
    const Graph& g = e.graph;
    if (!three_connected(g))
        throw UnsupportedInput("automorphism_order: graph is not 3-connected");
    const int n = g.vertex_count();
    std::vector<int> dart_base(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v)
        dart_base[static_cast<std::size_t>(v) + 1] = dart_base[static_cast<std::size_t>(v)] + g.degree(v);
    const int darts = dart_base[static_cast<std::size_t>(n)];
    std::vector<int> tail(static_cast<std::size_t>(darts)), head(static_cast<std::size_t>(darts));
    std::vector<int> rev(static_cast<std::size_t>(darts));   // alpha: reversed dart
    std::vector<int> next(static_cast<std::size_t>(darts));  // sigma: next dart out of same tail
    std::vector<int> prev(static_cast<std::size_t>(darts));
    auto index_of = [&](int v, int u) {
        auto nb = g.neighbors(v);
        for (int i = 0; i < static_cast<int>(nb.size()); ++i)
            if (nb[i] == u) return i;
        return -1;
    };
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        for (int i = 0; i < d; ++i) {
            int id = dart_base[static_cast<std::size_t>(v)] + i;
            tail[static_cast<std::size_t>(id)] = v;
            head[static_cast<std::size_t>(id)] = g.neighbors(v)[static_cast<std::size_t>(i)];
            next[static_cast<std::size_t>(id)] = dart_base[static_cast<std::size_t>(v)] + (i + 1) % d;
            prev[static_cast<std::size_t>(id)] = dart_base[static_cast<std::size_t>(v)] + (i + d - 1) % d;
        }
    }
    for (int id = 0; id < darts; ++id) {
        int u = tail[static_cast<std::size_t>(id)], v = head[static_cast<std::size_t>(id)];
        rev[static_cast<std::size_t>(id)] =
            dart_base[static_cast<std::size_t>(v)] + index_of(v, u);
    }

    std::vector<int> image(static_cast<std::size_t>(darts));
    std::vector<int> stack;
    int order = 0;
    for (int target = 0; target < darts; ++target) {
        for (int orient = 0; orient < 2; ++orient) {
            std::fill(image.begin(), image.end(), -1);
            stack.clear();
            image[0] = target;
            stack.push_back(0);
            bool ok = true;
            while (ok && !stack.empty()) {
                int d = stack.back();
                stack.pop_back();
                int im = image[static_cast<std::size_t>(d)];
                const int pairs[2][2] = {
                    {rev[static_cast<std::size_t>(d)], rev[static_cast<std::size_t>(im)]},
                    {next[static_cast<std::size_t>(d)],
                     orient == 0 ? next[static_cast<std::size_t>(im)] : prev[static_cast<std::size_t>(im)]}};
                for (auto [src, dst] : pairs) {
                    int& slot = image[static_cast<std::size_t>(src)];
                    if (slot == -1) {
                        slot = dst;
                        stack.push_back(src);
                    } else if (slot != dst) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) ++order;
        }
    }
    return order;
}

}  // namespace cubic
