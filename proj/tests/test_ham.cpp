#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cubic/fixtures.hpp"
#include "cubic/ham_solver.hpp"
#include "support/generators.hpp"

using namespace cubic;

namespace {
Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return build_graph(n, edges);
}
}  // namespace

TEST_CASE("verify_cycle") {
    CHECK(verify_cycle(k4(), std::vector<int>{0, 1, 2, 3}));
    CHECK_FALSE(verify_cycle(k4(), std::vector<int>{0, 1, 2}));
    CHECK_FALSE(verify_cycle(k4(), std::vector<int>{0, 1, 2, 2}));
    Graph c6 = cycle_graph(6);
    CHECK(verify_cycle(c6, std::vector<int>{0, 1, 2, 3, 4, 5}));
    CHECK_FALSE(verify_cycle(c6, std::vector<int>{0, 1, 2, 3, 5, 4}));
}

TEST_CASE("find_hamiltonian on fixtures") {
    HamResult k = find_hamiltonian(k4());
    CHECK(k.hamiltonian);
    CHECK(verify_cycle(k4(), k.cycle));

    HamResult p = find_hamiltonian(petersen());
    CHECK_FALSE(p.hamiltonian);

    HamResult d = find_hamiltonian(dodecahedron());
    CHECK(d.hamiltonian);
    CHECK(verify_cycle(dodecahedron(), d.cycle));
    CHECK(reference_is_hamiltonian(dodecahedron()));

    CHECK_FALSE(find_hamiltonian(bridged_caps()).hamiltonian);
}

TEST_CASE("cycle graphs are forced with zero branching") {
    HamResult r = find_hamiltonian(cycle_graph(6));
    CHECK(r.hamiltonian);
    CHECK(r.nodes_searched == 0);
    CHECK(verify_cycle(cycle_graph(6), r.cycle));
}

TEST_CASE("solver rejects tiny graphs and handles disconnected input") {
    CHECK_THROWS_AS(find_hamiltonian(build_graph(2, {{0, 1}})), UnsupportedInput);
    Graph two_triangles = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    HamResult r = find_hamiltonian(two_triangles);
    CHECK_FALSE(r.hamiltonian);
    CHECK(r.nodes_searched == 0);
}

TEST_CASE("find_hamiltonian_avoiding") {
    for (int v = 0; v < 10; ++v) {
        HamResult r = find_hamiltonian_avoiding(petersen(), v);
        REQUIRE(r.hamiltonian);
        CHECK(r.cycle.size() == 9);
        // certificate is in the original labels and avoids v
        Graph h = delete_vertex(petersen(), v);
        std::vector<int> relabeled;
        for (int x : r.cycle) {
            CHECK(x != v);
            relabeled.push_back(x == 9 ? v : x);
        }
        CHECK(verify_cycle(h, relabeled));
    }
    for (int v = 0; v < 4; ++v) {
        HamResult r = find_hamiltonian_avoiding(k4(), v);
        CHECK(r.hamiltonian);
        CHECK(r.cycle.size() == 3);
    }
    for (int v = 0; v < 6; ++v) CHECK_FALSE(find_hamiltonian_avoiding(cycle_graph(6), v).hamiltonian);
}

TEST_CASE("reference oracle on fixtures") {
    CHECK(reference_is_hamiltonian(k4()));
    CHECK_FALSE(reference_is_hamiltonian(petersen()));
    CHECK(reference_is_hamiltonian(dodecahedron()));
    CHECK_FALSE(reference_is_hamiltonian(bridged_caps()));
}

TEST_CASE("solver agrees with the oracle on all connected sub-cubic graphs up to 8") {
    const auto& levels = testsupport::subcubic_levels(8);
    for (int n = 3; n <= 8; ++n)
        for (const Graph& g : levels[static_cast<std::size_t>(n)]) {
            if (!connected(g)) continue;
            CAPTURE(n);
            CHECK(find_hamiltonian(g).hamiltonian == reference_is_hamiltonian(g));
        }
}

TEST_CASE("solver agrees with the oracle on random sub-cubic graphs up to 16") {
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 2000; ++t) {
        int n = 3 + static_cast<int>(rng() % 14);
        Graph g = testsupport::random_subcubic(rng, n);
        bool a = find_hamiltonian(g).hamiltonian;
        bool b = reference_is_hamiltonian(g);
        CHECK(a == b);
    }
}

TEST_CASE("hamiltonian certificates always verify (fuzz)") {
    std::mt19937_64 rng(515);
    for (int t = 0; t < 1500; ++t) {
        Graph g = testsupport::random_subcubic(rng, 3 + static_cast<int>(rng() % 16));
        HamResult r = find_hamiltonian(g);  // would throw internally on a bad cycle
        if (r.hamiltonian) CHECK(verify_cycle(g, r.cycle));
    }
}

TEST_CASE("determinism: identical input gives identical results and node counts") {
    std::mt19937_64 rng(808);
    for (int t = 0; t < 200; ++t) {
        Graph g = testsupport::random_subcubic(rng, 6 + static_cast<int>(rng() % 11));
        HamResult a = find_hamiltonian(g);
        HamResult b = find_hamiltonian(g);
        HamSolver reused;
        HamResult c = reused.solve(g);
        CHECK(a.hamiltonian == b.hamiltonian);
        CHECK(a.nodes_searched == b.nodes_searched);
        CHECK(a.cycle == b.cycle);
        CHECK(c.nodes_searched == a.nodes_searched);
        CHECK(c.cycle == a.cycle);
    }
}

TEST_CASE("reversed tie-break explores differently but answers identically") {
    std::mt19937_64 rng(909);
    HamSolverOptions rev{.reverse_tie_break = true};
    for (int t = 0; t < 500; ++t) {
        Graph g = testsupport::random_subcubic(rng, 6 + static_cast<int>(rng() % 11));
        CHECK(find_hamiltonian(g).hamiltonian == find_hamiltonian(g, rev).hamiltonian);
    }
    CHECK_FALSE(find_hamiltonian(petersen(), rev).hamiltonian);
}

TEST_CASE("connectivity prune does not change answers") {
    std::mt19937_64 rng(1001);
    HamSolverOptions no_prune{.connectivity_prune_interval = 0};
    HamSolverOptions eager_prune{.connectivity_prune_interval = 1};
    for (int t = 0; t < 300; ++t) {
        Graph g = testsupport::random_subcubic(rng, 6 + static_cast<int>(rng() % 11));
        bool base = find_hamiltonian(g).hamiltonian;
        CHECK(find_hamiltonian(g, no_prune).hamiltonian == base);
        CHECK(find_hamiltonian(g, eager_prune).hamiltonian == base);
    }
}

TEST_CASE("solver handles cubic polyhedra consistently with the oracle") {
    for (int n : {4, 6, 8, 10, 12}) {
        for (const Graph& g : testsupport::polyhedra(n)) {
            CHECK(find_hamiltonian(g).hamiltonian == reference_is_hamiltonian(g));
        }
    }
}
