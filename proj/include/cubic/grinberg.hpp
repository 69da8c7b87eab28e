#pragma once

// Grinberg feasibility test. A hamiltonian cycle of a plane graph splits the
// faces into interior and exterior parts with sum(k-2) equal on both sides,
// so if no proper nonempty sub-multiset S of the faces reaches
// sum_{F in S}(size(F)-2) = T/2 with T = sum over all faces, the graph is
// certified non-hamiltonian. Decided by bounded-knapsack reachability over
// (sum, subset size); T <= 2(n-2) keeps the table tiny.

#include <vector>

#include "cubic/codec.hpp"
#include "cubic/invariants.hpp"

namespace cubic {

inline bool grinberg_feasible(const FaceVector& fv) {
    long long t = 0;
    int total = 0;
    for (auto [k, f] : fv.counts) {
        t += static_cast<long long>(k - 2) * f;
        total += f;
    }
    if (t < 0 || t % 2 != 0) return false;
    const int half = static_cast<int>(t / 2);
    // reachable[s][c]: some sub-multiset of c faces sums to s
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(half) + 1,
                                         std::vector<char>(static_cast<std::size_t>(total) + 1, 0));
    reach[0][0] = 1;
    int used = 0;
    for (auto [k, f] : fv.counts) {
        const int w = k - 2;
        for (int copy = 0; copy < f; ++copy) {
            ++used;
            for (int s = half; s >= 0; --s)
                for (int c = used; c >= 1; --c) {
                    if (s - w < 0 || s - w > half) continue;
                    if (reach[static_cast<std::size_t>(s - w)][static_cast<std::size_t>(c - 1)])
                        reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] = 1;
                }
        }
    }
    // proper and nonempty: a hamiltonian cycle has at least one face on
    // either side
    for (int c = 1; c <= total - 1; ++c)
        if (reach[static_cast<std::size_t>(half)][static_cast<std::size_t>(c)]) return true;
    return false;
}

// True when Grinberg's identity is infeasible for the embedding's face
// vector, certifying that the embedded graph has no hamiltonian cycle.
inline bool grinberg_certifies_nonhamiltonian(const PlanarEmbedding& e) {
    return !grinberg_feasible(faces(e));
}

}  // namespace cubic
