#pragma once

// Built-in graphs used by tests, demos and the `fixtures` CLI subcommand.
// Embeddings are specified as oriented face lists (every dart used exactly
// once across all faces) and converted to rotation systems; construction
// goes through make_embedding, so a bad face list fails loudly.

#include <map>
#include <stdexcept>
#include <vector>

#include "cubic/codec.hpp"
#include "cubic/graph.hpp"

namespace cubic {

namespace detail {

// Faces are oriented dart cycles; corner (a, v, b) inside a face fixes b as
// the rotation successor of a at v. Chasing the successor map yields the
// rotation. Repeated vertices within one face are fine (an outer face can
// walk a bridge twice).
inline PlanarEmbedding embedding_from_faces(int n, const std::vector<std::vector<int>>& face_cycles) {
    std::vector<std::map<int, int>> succ(static_cast<std::size_t>(n));
    for (const auto& face : face_cycles) {
        const std::size_t k = face.size();
        for (std::size_t i = 0; i < k; ++i) {
            int a = face[(i + k - 1) % k];
            int v = face[i];
            int b = face[(i + 1) % k];
            auto [it, inserted] = succ[static_cast<std::size_t>(v)].emplace(a, b);
            if (!inserted) throw std::logic_error("embedding_from_faces: dart used twice");
        }
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto& m = succ[static_cast<std::size_t>(v)];
        if (m.empty()) throw std::logic_error("embedding_from_faces: isolated vertex");
        int start = m.begin()->first;
        int cur = start;
        do {
            rows[static_cast<std::size_t>(v)].push_back(cur);
            auto it = m.find(cur);
            if (it == m.end()) throw std::logic_error("embedding_from_faces: open rotation");
            cur = it->second;
        } while (cur != start);
        if (rows[static_cast<std::size_t>(v)].size() != m.size())
            throw std::logic_error("embedding_from_faces: rotation does not close over all corners");
    }
    return make_embedding(Graph::from_rotations(rows));
}

}  // namespace detail

// K4 with the rotation system [2,3,4],[1,4,3],[1,2,4],[1,3,2] (1-based).
inline PlanarEmbedding k4_embedding() {
    return make_embedding(Graph::from_rotations({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}));
}
inline Graph k4() { return k4_embedding().graph; }

// Petersen graph: outer 5-cycle 0..4, spokes i-(5+i), inner pentagram.
// Not planar, so there is no embedding fixture for it.
inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5 + i);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

// Triangular prism: triangles 0-1-2 and 3-4-5, spokes i-(i+3).
inline PlanarEmbedding prism_embedding() {
    return detail::embedding_from_faces(
        6, {{0, 1, 2}, {1, 0, 3, 4}, {2, 1, 4, 5}, {0, 2, 5, 3}, {3, 5, 4}});
}
inline Graph prism() { return prism_embedding().graph; }

// Cube: bottom 4-cycle 0..3, top 4..7, spokes i-(i+4).
inline PlanarEmbedding cube_embedding() {
    return detail::embedding_from_faces(8, {{0, 1, 2, 3},
                                            {1, 0, 4, 5},
                                            {2, 1, 5, 6},
                                            {3, 2, 6, 7},
                                            {0, 3, 7, 4},
                                            {4, 7, 6, 5}});
}
inline Graph cube() { return cube_embedding().graph; }

// Dodecahedron in four rings of five: outer pentagon 0..4, then 5..9, 10..14
// and the inner pentagon 15..19.
inline PlanarEmbedding dodecahedron_embedding() {
    std::vector<std::vector<int>> faces;
    auto A = [](int i) { return i % 5; };
    auto B = [](int i) { return 5 + i % 5; };
    auto C = [](int i) { return 10 + i % 5; };
    auto D = [](int i) { return 15 + i % 5; };
    faces.push_back({A(0), A(1), A(2), A(3), A(4)});
    for (int i = 0; i < 5; ++i) faces.push_back({A(i + 1), A(i), B(i), C(i), B(i + 1)});
    for (int i = 0; i < 5; ++i) faces.push_back({B(i + 1), C(i), D(i), D(i + 1), C(i + 1)});
    faces.push_back({D(4), D(3), D(2), D(1), D(0)});
    return detail::embedding_from_faces(20, faces);
}
inline Graph dodecahedron() { return dodecahedron_embedding().graph; }

// Two "caps" (K4 with one edge subdivided) joined by a bridge: the smallest
// handy planar cubic non-hamiltonian fixture. Cap 1 is 0=u, 1=v, 2=w1, 3=w2,
// 4=x; cap 2 mirrors it on 5..9; bridge 4-9.
inline PlanarEmbedding bridged_caps_embedding() {
    return detail::embedding_from_faces(10, {
                                                {0, 3, 1, 4, 9, 5, 8, 6, 9, 4},  // outer, bridge walked twice
                                                {4, 1, 2, 0},
                                                {0, 2, 3},
                                                {1, 3, 2},
                                                {9, 6, 7, 5},
                                                {5, 7, 8},
                                                {6, 8, 7},
                                            });
}
inline Graph bridged_caps() { return bridged_caps_embedding().graph; }

}  // namespace cubic
