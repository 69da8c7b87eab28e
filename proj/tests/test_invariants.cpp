#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cubic/fixtures.hpp"
#include "cubic/invariants.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cubic;

TEST_CASE("girth on fixtures") {
    CHECK(girth(k4()) == 3);
    CHECK(girth(dodecahedron()) == 5);
    CHECK(girth(petersen()) == 5);
    CHECK(girth(cube()) == 4);
    Graph path = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(girth(path).has_value());
}

TEST_CASE("girth agrees with the edge-removal oracle") {
    const auto& levels = testsupport::subcubic_levels(8);
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : levels[static_cast<std::size_t>(n)])
            CHECK(girth(g) == testsupport::oracle_girth(g));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; ++t) {
        Graph g = testsupport::random_subcubic(rng, 9 + static_cast<int>(rng() % 4));
        CHECK(girth(g) == testsupport::oracle_girth(g));
    }
}

TEST_CASE("face vectors of fixtures") {
    CHECK(faces(k4_embedding()).counts == std::map<int, int>{{3, 4}});
    CHECK(faces(cube_embedding()).counts == std::map<int, int>{{4, 6}});
    CHECK(faces(dodecahedron_embedding()).counts == std::map<int, int>{{5, 12}});
    CHECK(faces(prism_embedding()).counts == std::map<int, int>{{3, 2}, {4, 3}});
    CHECK(faces(bridged_caps_embedding()).counts == std::map<int, int>{{3, 4}, {4, 2}, {10, 1}});
}

TEST_CASE("faces rejects non-sphere rotation systems") {
    CHECK_THROWS_AS(faces(PlanarEmbedding{petersen()}), NotSphereEmbedding);
    CHECK_THROWS_AS(make_embedding(petersen()), NotSphereEmbedding);
}

TEST_CASE("face vector identities hold on generated polyhedra") {
    for (int n : {4, 6, 8, 10, 12}) {
        for (const Graph& g : testsupport::polyhedra(n)) {
            FaceVector fv = faces(PlanarEmbedding{g});
            const int m = g.edge_count();
            CHECK(fv.size_sum() == 2 * m);
            CHECK(fv.total_faces() == m - n + 2);
            long long weighted = 0;
            for (auto [k, f] : fv.counts) weighted += static_cast<long long>(k - 2) * f;
            CHECK(weighted == 2 * (n - 2));
        }
    }
}

TEST_CASE("mincut_between on fixtures") {
    Graph pr = prism();
    std::vector<int> a{0, 1, 2}, b{3, 4, 5};
    CHECK(mincut_between(pr, a, b, 5) == 3);

    Graph caps = bridged_caps();
    std::vector<int> a2{0, 1, 2, 3, 4}, b2{5, 6, 7, 8, 9};
    CHECK(mincut_between(caps, a2, b2, 5) == 1);

    std::vector<int> s{0}, t{2};
    CHECK(mincut_between(k4(), s, t, 5) == 3);

    CHECK(mincut_between(k4(), s, t, 2) == 3);  // cap+1 means "> cap"
    CHECK_THROWS_AS(mincut_between(k4(), std::vector<int>{0, 1}, std::vector<int>{1, 2}, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(mincut_between(k4(), std::vector<int>{}, std::vector<int>{1}, 5),
                    std::invalid_argument);
}

TEST_CASE("cyclic connectivity on fixtures") {
    CHECK_FALSE(cyclic_connectivity(k4()).has_cut());
    CHECK(cyclic_connectivity(prism()) == CyclicConnectivity{3});
    CHECK(cyclic_connectivity(dodecahedron()) == CyclicConnectivity{5});
    CHECK(cyclic_connectivity(petersen()) == CyclicConnectivity{5});
    CHECK(cyclic_connectivity(cube()) == CyclicConnectivity{4});
    CHECK(cyclic_connectivity(bridged_caps()) == CyclicConnectivity{1});
    // K3,3 has no two vertex-disjoint cycles
    Graph k33 = build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK_FALSE(cyclic_connectivity(k33).has_cut());
    CHECK_THROWS_AS(cyclic_connectivity(build_graph(2, {})), std::invalid_argument);
}

TEST_CASE("dodecahedron has no cycle-separating cut below 5 by brute force") {
    CHECK(testsupport::oracle_cyclic_cut(dodecahedron()) == 5);
}

TEST_CASE("cyclic connectivity matches the brute-force oracle on all cubic graphs up to 12") {
    for (int n : {4, 6, 8, 10, 12}) {
        for (const Graph& g : testsupport::cubic_graphs(n)) {
            auto got = cyclic_connectivity(g);
            auto want = testsupport::oracle_cyclic_cut(g);
            CHECK(got.exact == want);
        }
    }
}

TEST_CASE("cyclic connectivity matches the oracle on random cubic graphs up to 20") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 25; ++t) {
        int n = 2 * (7 + static_cast<int>(rng() % 4));  // 14..20
        Graph g = testsupport::random_cubic(rng, n);
        auto got = cyclic_connectivity(g);
        auto want = testsupport::oracle_cyclic_cut(g);
        CHECK(got.exact == want);
    }
}

TEST_CASE("three_connected") {
    CHECK(three_connected(k4()));
    CHECK(three_connected(prism()));
    CHECK(three_connected(petersen()));
    CHECK(three_connected(dodecahedron()));
    CHECK_FALSE(three_connected(bridged_caps()));
    Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(three_connected(c4));
    Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_FALSE(three_connected(tri));
}

TEST_CASE("automorphism order of fixtures") {
    CHECK(automorphism_order(k4_embedding()) == 24);
    CHECK(automorphism_order(cube_embedding()) == 48);
    CHECK(automorphism_order(prism_embedding()) == 12);
    CHECK(automorphism_order(dodecahedron_embedding()) == 120);
    CHECK_THROWS_AS(automorphism_order(bridged_caps_embedding()), UnsupportedInput);
}

TEST_CASE("automorphism order equals the permutation-backtracking count on all polyhedra up to 12") {
    for (int n : {4, 6, 8, 10, 12}) {
        for (const Graph& g : testsupport::polyhedra(n)) {
            PlanarEmbedding e{g};
            CHECK(automorphism_order(e) == testsupport::oracle_automorphism_count(g));
        }
    }
}

TEST_CASE("subcubic exhaustive generator matches labeled counts via orbit counting") {
    // The number of labeled connected graphs with max degree <= 3 equals
    // sum over isomorphism classes of n!/|Aut|; the labeled side is counted
    // by independent brute-force enumeration of all graphs on n vertices.
    const auto& levels = testsupport::subcubic_levels(7);
    for (int n = 1; n <= 7; ++n) {
        long long total_labeled = 0;
        const int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> all_pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
        for (long long mask = 0; mask < (1LL << pairs); ++mask) {
            Graph g(n);
            bool ok = true;
            for (int b = 0; b < pairs && ok; ++b)
                if (mask & (1LL << b)) {
                    auto [u, v] = all_pairs[static_cast<std::size_t>(b)];
                    if (g.degree(u) >= 3 || g.degree(v) >= 3)
                        ok = false;
                    else
                        g.add_edge(u, v);
                }
            if (ok && connected(g)) ++total_labeled;
        }
        long long factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        long long via_classes = 0;
        for (const Graph& g : levels[static_cast<std::size_t>(n)])
            via_classes += factorial / testsupport::oracle_automorphism_count(g);
        CHECK(via_classes == total_labeled);
    }
}

TEST_CASE("cubic generator counts are asserted internally") {
    CHECK(testsupport::cubic_graphs(4).size() == 1);
    CHECK(testsupport::cubic_graphs(10).size() == 19);
    CHECK(testsupport::cubic_graphs(12).size() == 85);
}

TEST_CASE("subcubic levels contain the published cubic counts") {
    const auto& levels = testsupport::subcubic_levels(10);
    auto cubic_count = [&](int n) {
        std::size_t c = 0;
        for (const Graph& g : levels[static_cast<std::size_t>(n)])
            if (g.is_cubic()) ++c;
        return c;
    };
    CHECK(cubic_count(4) == 1);
    CHECK(cubic_count(6) == 2);
    CHECK(cubic_count(8) == 5);
    CHECK(cubic_count(10) == 19);
}
