#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cubic/fixtures.hpp"
#include "cubic/grinberg.hpp"
#include "cubic/ham_solver.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cubic;

namespace {
FaceVector fv(std::initializer_list<std::pair<int, int>> counts) {
    FaceVector v;
    for (auto [k, f] : counts) v.counts[k] = f;
    return v;
}
}  // namespace

TEST_CASE("grinberg feasibility examples") {
    // K4: T = 4, two triangles on one side work
    CHECK(grinberg_feasible(fv({{3, 4}})));
    // odd total is infeasible outright
    CHECK_FALSE(grinberg_feasible(fv({{4, 1}, {5, 1}})));
    // face count of the first 76-vertex graph: T = 148, e.g. 20*3 + 5 + 9 = 74
    CHECK(grinberg_feasible(fv({{5, 30}, {7, 5}, {8, 4}, {11, 1}})));
    // the other two 76-vertex face counts are feasible too
    CHECK(grinberg_feasible(fv({{5, 31}, {7, 4}, {8, 3}, {10, 1}, {11, 1}})));
    CHECK(grinberg_feasible(fv({{5, 31}, {7, 5}, {8, 2}, {11, 2}})));
}

TEST_CASE("grinberg certificate examples") {
    CHECK_FALSE(grinberg_certifies_nonhamiltonian(k4_embedding()));
    // cube: 4^6, T = 12, three quads reach 6
    CHECK_FALSE(grinberg_certifies_nonhamiltonian(cube_embedding()));
    CHECK_FALSE(grinberg_certifies_nonhamiltonian(dodecahedron_embedding()));
}

TEST_CASE("grinberg DP equals naive subset enumeration") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 400; ++t) {
        FaceVector v;
        int total = 0;
        while (total < 3 + static_cast<int>(rng() % 15)) {
            int size = 3 + static_cast<int>(rng() % 9);
            ++v.counts[size];
            ++total;
        }
        CHECK(grinberg_feasible(v) == testsupport::oracle_grinberg_feasible(v));
    }
}

TEST_CASE("grinberg DP equals naive enumeration on polyhedra face vectors") {
    for (int n : {8, 10, 12, 14}) {
        for (const Graph& g : testsupport::polyhedra(n)) {
            FaceVector v = faces(PlanarEmbedding{g});
            CHECK(grinberg_feasible(v) == testsupport::oracle_grinberg_feasible(v));
        }
    }
}

TEST_CASE("grinberg soundness: hamiltonian embeddings are always feasible") {
    for (int n : {4, 6, 8, 10, 12, 14}) {
        for (const Graph& g : testsupport::polyhedra(n)) {
            if (find_hamiltonian(g).hamiltonian) CHECK(grinberg_feasible(faces(PlanarEmbedding{g})));
        }
    }
    std::mt19937_64 rng(77);
    for (int t = 0; t < 200; ++t) {
        Graph g = testsupport::random_cubic_embedding(rng, 16 + 2 * static_cast<int>(rng() % 5));
        if (find_hamiltonian(g).hamiltonian) CHECK(grinberg_feasible(faces(PlanarEmbedding{g})));
    }
}

TEST_CASE("grinberg edge cases") {
    // single face multiset (a tree-ish degenerate input): no proper nonempty
    // subset exists
    CHECK_FALSE(grinberg_feasible(fv({{4, 1}})));
    // empty face vector
    CHECK_FALSE(grinberg_feasible(FaceVector{}));
    // two digons: T = 0, and the proper nonempty subset {one digon} sums to 0
    CHECK(grinberg_feasible(fv({{2, 2}})));
}
