#pragma once

// Simple undirected graphs with maximum degree 3.
//
// The degree cap is a hard invariant of the whole toolkit: the hamiltonicity
// solver's propagation rules and the cyclic-connectivity bounds are specific
// to (sub-)cubic graphs, so general graphs are rejected at construction.
// Vertex indices are 0-based everywhere; the planar_code codec converts from
// the 1-based labels on the wire.

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubic {

inline constexpr int kMaxDegree = 3;

// Thrown for inputs the toolkit does not handle (degree > 3, n outside the
// supported range, ...). The CLI maps this to exit code 3.
struct UnsupportedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count)
        : adj_(static_cast<std::size_t>(vertex_count)),
          deg_(static_cast<std::size_t>(vertex_count), 0) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    int degree(int v) const { return deg_[static_cast<std::size_t>(v)]; }

    std::span<const int> neighbors(int v) const {
        const auto& row = adj_[static_cast<std::size_t>(v)];
        return {row.data(), static_cast<std::size_t>(deg_[static_cast<std::size_t>(v)])};
    }

    bool valid_vertex(int v) const { return v >= 0 && v < vertex_count(); }

    bool has_edge(int u, int v) const {
        for (int w : neighbors(u))
            if (w == v) return true;
        return false;
    }

    // Appends v to u's adjacency and u to v's; adjacency order is insertion
    // order, which doubles as the rotation when the graph carries an embedding.
    void add_edge(int u, int v) {
        if (!valid_vertex(u) || !valid_vertex(v))
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint out of range");
        if (u == v)
            throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (has_edge(u, v))
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (degree(u) >= kMaxDegree || degree(v) >= kMaxDegree)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") raises a vertex degree above 3");
        push_neighbor(u, v);
        push_neighbor(v, u);
        ++edge_count_;
    }

    // Builds a graph with the given per-vertex neighbor rows verbatim, so the
    // rows can carry a rotation system. Validates the full set of invariants.
    static Graph from_rotations(const std::vector<std::vector<int>>& rows) {
        const int n = static_cast<int>(rows.size());
        Graph g(n);
        int darts = 0;
        for (int v = 0; v < n; ++v) {
            const auto& row = rows[static_cast<std::size_t>(v)];
            if (static_cast<int>(row.size()) > kMaxDegree)
                throw std::invalid_argument("vertex " + std::to_string(v) + " has degree above 3");
            for (std::size_t i = 0; i < row.size(); ++i) {
                int w = row[i];
                if (w < 0 || w >= n)
                    throw std::invalid_argument("neighbor " + std::to_string(w) + " out of range at vertex " +
                                                std::to_string(v));
                if (w == v) throw std::invalid_argument("loop at vertex " + std::to_string(v));
                for (std::size_t j = 0; j < i; ++j)
                    if (row[j] == w)
                        throw std::invalid_argument("repeated neighbor at vertex " + std::to_string(v));
                g.push_neighbor(v, w);
                ++darts;
            }
        }
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v))
                if (!g.has_edge(w, v))
                    throw std::invalid_argument("asymmetric adjacency between " + std::to_string(v) +
                                                " and " + std::to_string(w));
        g.edge_count_ = darts / 2;
        return g;
    }

    // Edge list in (min,max) order, sorted; the solver uses this as its
    // reproducible edge indexing.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_cubic() const {
        for (int v = 0; v < vertex_count(); ++v)
            if (degree(v) != 3) return false;
        return true;
    }

    bool operator==(const Graph& o) const {
        if (vertex_count() != o.vertex_count() || edge_count_ != o.edge_count_) return false;
        for (int v = 0; v < vertex_count(); ++v) {
            auto a = neighbors(v), b = o.neighbors(v);
            if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) return false;
        }
        return true;
    }

private:
    void push_neighbor(int u, int v) {
        auto& row = adj_[static_cast<std::size_t>(u)];
        row[static_cast<std::size_t>(deg_[static_cast<std::size_t>(u)]++)] = v;
    }

    std::vector<std::array<int, kMaxDegree>> adj_;
    std::vector<std::int8_t> deg_;
    int edge_count_ = 0;
};

inline Graph build_graph(int vertex_count, std::span<const std::pair<int, int>> edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph build_graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges) {
    return build_graph(vertex_count, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

// Removes v and its incident edges. The hole is filled by swap-remove: the
// old last vertex (n-1) takes index v, every other vertex keeps its index,
// so the remap back to the original labels is
//   original(i) = (i == v && v != n-1) ? n-1 : i.
// The result's adjacency is rebuilt in sorted edge order (deterministic);
// rotation order does not survive vertex deletion.
inline Graph delete_vertex(const Graph& g, int v) {
    if (!g.valid_vertex(v))
        throw std::invalid_argument("delete_vertex: vertex " + std::to_string(v) + " out of range");
    const int n = g.vertex_count();
    const int last = n - 1;
    auto remap = [&](int w) { return w == last ? v : w; };
    std::vector<std::pair<int, int>> kept;
    kept.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        for (int w : g.neighbors(u)) {
            if (w == v || w < u) continue;
            int a = remap(u), b = remap(w);
            kept.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(kept.begin(), kept.end());
    return build_graph(n - 1, kept);
}

struct Cherry {
    int center;
    int arm1, arm2;  // arm1 < arm2
    bool operator==(const Cherry&) const = default;
};

// One cherry per vertex per unordered pair of its neighbors, in
// lexicographic (center, arm1, arm2) order.
inline std::vector<Cherry> cherries(const Graph& g) {
    std::vector<Cherry> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        std::array<int, kMaxDegree> sorted{};
        std::copy(nb.begin(), nb.end(), sorted.begin());
        std::sort(sorted.begin(), sorted.begin() + nb.size());
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                out.push_back({v, sorted[i], sorted[j]});
    }
    return out;
}

inline bool connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

// Union-find over a fixed index universe, union by size, no path compression
// so that unions can be rolled back (the solver backtracks through them).
class DisjointSetForest {
public:
    DisjointSetForest() = default;
    explicit DisjointSetForest(int n) { reset(n); }

    void reset(int n) {
        parent_.resize(static_cast<std::size_t>(n));
        size_.assign(static_cast<std::size_t>(n), 1);
        for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
        undo_.clear();
    }

    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }

    // Returns false if already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        undo_.push_back(b);
        return true;
    }

    int size(int x) const { return size_[static_cast<std::size_t>(find(x))]; }

    std::size_t mark() const { return undo_.size(); }

    void rollback(std::size_t mark) {
        while (undo_.size() > mark) {
            int b = undo_.back();
            undo_.pop_back();
            int a = parent_[static_cast<std::size_t>(b)];
            parent_[static_cast<std::size_t>(b)] = b;
            size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> undo_;
};

}  // namespace cubic
