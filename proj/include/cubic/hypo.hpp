#pragma once

// Hypohamiltonicity classification with certificates: a graph is
// hypohamiltonian when it is not hamiltonian but deleting any single vertex
// leaves a hamiltonian graph.

#include <cstdint>
#include <vector>

#include "cubic/graph.hpp"
#include "cubic/ham_solver.hpp"

namespace cubic {

enum class HypoTag { Hamiltonian, NotHypo, Hypohamiltonian };

struct HypoResult {
    HypoTag tag = HypoTag::NotHypo;
    // Hamiltonian: the cycle.
    std::vector<int> cycle;
    // NotHypo: least vertex whose deletion leaves a non-hamiltonian graph
    // (only meaningful when the graph itself is non-hamiltonian).
    int witness = -1;
    std::uint64_t witness_nodes = 0;
    // Hypohamiltonian: for each vertex v in order, a hamiltonian cycle of
    // g - v expressed in g's labels.
    std::vector<std::vector<int>> certificates;
};

// Decides g's hamiltonicity first (the cheap exit: almost every census graph
// is hamiltonian), then tries the n vertex deletions in ascending order,
// stopping at the first non-hamiltonian remainder. `known_nonham` lets the
// caller pass a non-hamiltonicity result the same solver already produced in
// this run, skipping the duplicate test.
inline HypoResult classify_hypohamiltonian(const Graph& g, HamSolver* solver = nullptr,
                                           const HamResult* known_nonham = nullptr) {
    if (!connected(g))
        throw std::invalid_argument("classify_hypohamiltonian: graph is disconnected");
    HamSolver local;
    HamSolver& s = solver ? *solver : local;
    HypoResult out;
    if (known_nonham == nullptr || known_nonham->hamiltonian) {
        HamResult base = s.solve(g);
        if (base.hamiltonian) {
            out.tag = HypoTag::Hamiltonian;
            out.cycle = std::move(base.cycle);
            return out;
        }
    }
    out.certificates.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        HamResult r = s.solve_avoiding(g, v);
        if (!r.hamiltonian) {
            out.tag = HypoTag::NotHypo;
            out.witness = v;
            out.witness_nodes = r.nodes_searched;
            out.certificates.clear();
            return out;
        }
        out.certificates.push_back(std::move(r.cycle));
    }
    out.tag = HypoTag::Hypohamiltonian;
    return out;
}

}  // namespace cubic
