#pragma once

// Complete hamiltonicity decision for sub-cubic graphs.
//
// Search state is an assignment Unknown/Required/Excluded per edge. Required
// edges always form a disjoint union of simple paths; segments are tracked
// with a disjoint-set forest plus a mate[] array pairing up segment
// endpoints. Propagation rules, run to fixpoint:
//   (a) a vertex with 2 required edges excludes its remaining edge,
//   (b) a vertex with only 2 non-excluded edges requires both,
//   (c) an unknown edge joining the two endpoints of one segment is excluded,
//       unless the segment spans all n vertices, in which case it is required
//       and completes the cycle,
//   (d) a vertex with fewer than 2 non-excluded edges is a contradiction.
// On quiescence the solver branches on an unknown edge at a segment endpoint
// (required first, then excluded) and backtracks through a trail. Results
// carry certificates: hamiltonian cycles are re-verified before returning.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

enum class EdgeState : std::uint8_t { Unknown, Required, Excluded };

struct HamResult {
    bool hamiltonian = false;
    std::vector<int> cycle;            // vertex sequence, when hamiltonian
    std::uint64_t nodes_searched = 0;  // branch decisions explored
};

// True iff `cycle` is a permutation of all vertices of g and every cyclically
// consecutive pair is adjacent.
inline bool verify_cycle(const Graph& g, std::span<const int> cycle) {
    const int n = g.vertex_count();
    if (static_cast<int>(cycle.size()) != n || n < 3) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : cycle) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % n)]))
            return false;
    return true;
}

// Deliberately plain backtracking over vertex sequences, no propagation.
// This is the independent oracle used by tests and verification sampling;
// keep it simple rather than fast. Exponential, n <= 24 advisable.
inline bool reference_is_hamiltonian(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return false;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<int> path{0};
    used[0] = 1;
    auto extend = [&](auto&& self, int v) -> bool {
        if (static_cast<int>(path.size()) == n) return g.has_edge(v, 0);
        for (int w : g.neighbors(v)) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            if (self(self, w)) return true;
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    return extend(extend, 0);
}

struct HamSolverOptions {
    bool reverse_tie_break = false;      // perturbed branching for cross-checks
    int connectivity_prune_interval = 64;  // 0 disables the prune
};

class HamSolver {
public:
    explicit HamSolver(HamSolverOptions opt = {}) : opt_(opt) {}

    HamResult solve(const Graph& g) {
        if (g.vertex_count() < 3)
            throw UnsupportedInput("find_hamiltonian: need at least 3 vertices, got " +
                                   std::to_string(g.vertex_count()));
        HamResult result;
        if (!connected(g)) return result;
        init(g);
        bool found = false;
        if (seed_forced_edges()) found = search();
        result.nodes_searched = nodes_;
        if (found) {
            result.hamiltonian = true;
            result.cycle = extract_cycle();
            if (!verify_cycle(g, result.cycle))
                throw std::logic_error("ham_solver: produced an invalid hamiltonian cycle");
        }
        return result;
    }

    // Hamiltonicity of g - v, certificate re-expressed in g's labels.
    HamResult solve_avoiding(const Graph& g, int v) {
        if (!g.valid_vertex(v))
            throw std::invalid_argument("solve_avoiding: vertex " + std::to_string(v) + " out of range");
        const int n = g.vertex_count();
        HamResult r = solve(delete_vertex(g, v));
        if (r.hamiltonian) {
            for (int& x : r.cycle)
                if (x == v && v != n - 1) x = n - 1;
        }
        return r;
    }

private:
    struct Trail {
        enum Kind : std::uint8_t { kEdge, kReq, kOpen, kMate } kind;
        int a;
        int b;
    };

    const Graph* g_ = nullptr;
    int n_ = 0;
    int m_ = 0;
    HamSolverOptions opt_;

    std::vector<std::pair<int, int>> edge_;           // sorted (min,max)
    std::vector<std::array<int, kMaxDegree>> inc_;    // edge ids per vertex
    std::vector<std::array<int, kMaxDegree>> other_;  // opposite endpoints
    std::vector<EdgeState> state_;
    std::vector<std::int8_t> req_;    // required edges at vertex
    std::vector<std::int8_t> open_;   // non-excluded edges at vertex
    std::vector<int> mate_;           // opposite endpoint of a segment
    DisjointSetForest seg_;
    std::vector<Trail> trail_;
    std::vector<std::pair<int, EdgeState>> pending_;
    std::size_t pending_head_ = 0;
    int req_edges_ = 0;
    bool complete_ = false;
    std::uint64_t nodes_ = 0;

    void init(const Graph& g) {
        g_ = &g;
        n_ = g.vertex_count();
        edge_ = g.edges();
        m_ = static_cast<int>(edge_.size());
        inc_.assign(static_cast<std::size_t>(n_), {});
        other_.assign(static_cast<std::size_t>(n_), {});
        std::vector<int> fill(static_cast<std::size_t>(n_), 0);
        for (int e = 0; e < m_; ++e) {
            auto [u, v] = edge_[static_cast<std::size_t>(e)];
            inc_[static_cast<std::size_t>(u)][static_cast<std::size_t>(fill[static_cast<std::size_t>(u)])] = e;
            other_[static_cast<std::size_t>(u)][static_cast<std::size_t>(fill[static_cast<std::size_t>(u)]++)] = v;
            inc_[static_cast<std::size_t>(v)][static_cast<std::size_t>(fill[static_cast<std::size_t>(v)])] = e;
            other_[static_cast<std::size_t>(v)][static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = u;
        }
        state_.assign(static_cast<std::size_t>(m_), EdgeState::Unknown);
        req_.assign(static_cast<std::size_t>(n_), 0);
        open_.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v) open_[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(g.degree(v));
        mate_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) mate_[static_cast<std::size_t>(v)] = v;
        seg_.reset(n_);
        trail_.clear();
        pending_.clear();
        pending_head_ = 0;
        req_edges_ = 0;
        complete_ = false;
        nodes_ = 0;
    }

    // Degree-2 vertices force both their edges; degree < 2 is an immediate
    // contradiction. Returns false on contradiction.
    bool seed_forced_edges() {
        for (int v = 0; v < n_; ++v) {
            int d = g_->degree(v);
            if (d < 2) return false;
            if (d == 2)
                for (int i = 0; i < d; ++i) push(inc_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)],
                                                 EdgeState::Required);
        }
        return propagate();
    }

    void push(int e, EdgeState s) { pending_.emplace_back(e, s); }

    int edge_between(int u, int v) const {
        const int d = g_->degree(u);
        for (int i = 0; i < d; ++i)
            if (other_[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)] == v)
                return inc_[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
        return -1;
    }

    bool propagate() {
        while (pending_head_ < pending_.size()) {
            auto [e, s] = pending_[pending_head_++];
            if (!assign(e, s)) return false;
            if (complete_) return true;
        }
        return true;
    }

    bool assign(int e, EdgeState s) {
        EdgeState cur = state_[static_cast<std::size_t>(e)];
        if (cur == s) return true;
        if (cur != EdgeState::Unknown) return false;
        state_[static_cast<std::size_t>(e)] = s;
        trail_.push_back({Trail::kEdge, e, 0});
        auto [u, v] = edge_[static_cast<std::size_t>(e)];
        return s == EdgeState::Required ? apply_required(u, v) : apply_excluded(u, v);
    }

    bool apply_required(int u, int v) {
        for (int x : {u, v}) {
            trail_.push_back({Trail::kReq, x, 0});
            if (++req_[static_cast<std::size_t>(x)] > 2) return false;
        }
        if (seg_.find(u) == seg_.find(v)) {
            // closing an existing segment: only legal as the full cycle
            if (mate_[static_cast<std::size_t>(u)] != v) return false;
            if (seg_.size(u) != n_) return false;
            complete_ = true;
            return true;
        }
        const int mu = mate_[static_cast<std::size_t>(u)];
        const int mv = mate_[static_cast<std::size_t>(v)];
        seg_.unite(u, v);
        trail_.push_back({Trail::kMate, mu, mate_[static_cast<std::size_t>(mu)]});
        mate_[static_cast<std::size_t>(mu)] = mv;
        trail_.push_back({Trail::kMate, mv, mate_[static_cast<std::size_t>(mv)]});
        mate_[static_cast<std::size_t>(mv)] = mu;
        ++req_edges_;
        for (int x : {u, v})
            if (req_[static_cast<std::size_t>(x)] == 2) {
                const int d = g_->degree(x);
                for (int i = 0; i < d; ++i) {
                    int f = inc_[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
                    if (state_[static_cast<std::size_t>(f)] == EdgeState::Unknown)
                        push(f, EdgeState::Excluded);
                }
            }
        // rule (c) at the merged segment's endpoints
        const int closer = edge_between(mu, mv);
        if (seg_.size(u) == n_) {
            if (closer < 0 || state_[static_cast<std::size_t>(closer)] == EdgeState::Excluded) return false;
            push(closer, EdgeState::Required);
        } else if (closer >= 0 && state_[static_cast<std::size_t>(closer)] == EdgeState::Unknown) {
            push(closer, EdgeState::Excluded);
        }
        return true;
    }

    bool apply_excluded(int u, int v) {
        for (int x : {u, v}) {
            trail_.push_back({Trail::kOpen, x, 0});
            if (--open_[static_cast<std::size_t>(x)] < 2) return false;
            if (open_[static_cast<std::size_t>(x)] == 2) {
                const int d = g_->degree(x);
                for (int i = 0; i < d; ++i) {
                    int f = inc_[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
                    if (state_[static_cast<std::size_t>(f)] == EdgeState::Unknown)
                        push(f, EdgeState::Required);
                }
            }
        }
        return true;
    }

    struct Mark {
        std::size_t trail, dsf, pending;
        int req_edges;
    };

    Mark save() const { return {trail_.size(), seg_.mark(), pending_.size(), req_edges_}; }

    void rollback(const Mark& m) {
        while (trail_.size() > m.trail) {
            const Trail& t = trail_.back();
            switch (t.kind) {
                case Trail::kEdge: state_[static_cast<std::size_t>(t.a)] = EdgeState::Unknown; break;
                case Trail::kReq: --req_[static_cast<std::size_t>(t.a)]; break;
                case Trail::kOpen: ++open_[static_cast<std::size_t>(t.a)]; break;
                case Trail::kMate: mate_[static_cast<std::size_t>(t.a)] = t.b; break;
            }
            trail_.pop_back();
        }
        seg_.rollback(m.dsf);
        pending_.resize(m.pending);
        pending_head_ = m.pending;
        req_edges_ = m.req_edges;
        complete_ = false;
    }

    // Branch edge: an unknown edge at a segment endpoint with the fewest
    // unknown alternatives; ties by lowest edge index (highest when the
    // perturbed order is on). Falls back to the extreme-index unknown edge.
    int pick_branch_edge() const {
        int best = -1, best_score = 1 << 20;
        for (int v = 0; v < n_; ++v) {
            if (req_[static_cast<std::size_t>(v)] != 1) continue;
            const int unknowns = open_[static_cast<std::size_t>(v)] - req_[static_cast<std::size_t>(v)];
            if (unknowns <= 0) continue;
            const int d = g_->degree(v);
            for (int i = 0; i < d; ++i) {
                int f = inc_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
                if (state_[static_cast<std::size_t>(f)] != EdgeState::Unknown) continue;
                if (unknowns < best_score ||
                    (unknowns == best_score && better_index(f, best))) {
                    best_score = unknowns;
                    best = f;
                }
            }
        }
        if (best >= 0) return best;
        for (int f = 0; f < m_; ++f) {
            int idx = opt_.reverse_tie_break ? m_ - 1 - f : f;
            if (state_[static_cast<std::size_t>(idx)] == EdgeState::Unknown) return idx;
        }
        return -1;
    }

    bool better_index(int f, int best) const {
        if (best < 0) return true;
        return opt_.reverse_tie_break ? f > best : f < best;
    }

    bool nonexcluded_connected() const {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            const int d = g_->degree(v);
            for (int i = 0; i < d; ++i) {
                if (state_[static_cast<std::size_t>(
                        inc_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)])] ==
                    EdgeState::Excluded)
                    continue;
                int w = other_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n_;
    }

    bool search() {
        if (complete_) return true;
        const int f = pick_branch_edge();
        if (f < 0) return false;  // fully assigned yet no cycle closed
        ++nodes_;
        if (opt_.connectivity_prune_interval > 0 &&
            nodes_ % static_cast<std::uint64_t>(opt_.connectivity_prune_interval) == 0 &&
            !nonexcluded_connected())
            return false;
        for (EdgeState s : {EdgeState::Required, EdgeState::Excluded}) {
            const Mark m = save();
            push(f, s);
            if (propagate() && search()) return true;
            rollback(m);
        }
        return false;
    }

    std::vector<int> extract_cycle() const {
        std::vector<int> cycle;
        cycle.reserve(static_cast<std::size_t>(n_));
        int prev = -1, cur = 0;
        do {
            cycle.push_back(cur);
            const int d = g_->degree(cur);
            int next = -1;
            for (int i = 0; i < d; ++i) {
                int f = inc_[static_cast<std::size_t>(cur)][static_cast<std::size_t>(i)];
                int w = other_[static_cast<std::size_t>(cur)][static_cast<std::size_t>(i)];
                if (state_[static_cast<std::size_t>(f)] == EdgeState::Required && w != prev) {
                    next = w;
                    break;
                }
            }
            prev = cur;
            cur = next;
        } while (cur != 0 && cur != -1 && static_cast<int>(cycle.size()) <= n_);
        return cycle;
    }
};

inline HamResult find_hamiltonian(const Graph& g, HamSolverOptions opt = {}) {
    return HamSolver(opt).solve(g);
}

inline HamResult find_hamiltonian_avoiding(const Graph& g, int v, HamSolverOptions opt = {}) {
    return HamSolver(opt).solve_avoiding(g, v);
}

}  // namespace cubic
