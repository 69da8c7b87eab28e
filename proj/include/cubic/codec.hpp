#pragma once

// planar_code I/O (the binary stream format emitted by the plantri generator)
// and a line-oriented text adjacency format. Both codecs preserve the
// per-vertex neighbor order, which is the rotation system of the embedding.
//
// planar_code layout: optional 15-byte ASCII header ">>planar_code<<" (no
// terminator), then per graph one byte n (1..255) followed by, for each
// vertex in order, its clockwise neighbor list as 1-based bytes ending with
// a 0 byte. Only the 1-byte variant is supported; anything needing n > 255
// is rejected loudly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

inline constexpr char kPlanarCodeHeader[] = ">>planar_code<<";
inline constexpr std::size_t kPlanarCodeHeaderLen = 15;

struct CodecError : std::runtime_error {
    CodecError(const std::string& msg, std::uint64_t ordinal_, std::uint64_t offset_)
        : std::runtime_error(msg), ordinal(ordinal_), offset(offset_) {}
    std::uint64_t ordinal;  // 0-based record index
    std::uint64_t offset;   // byte offset (planar_code) or line number (text)
};

struct NotSphereEmbedding : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A graph whose adjacency order is a rotation system describing an embedding
// in the sphere: face tracing closes into m - n + 2 orbits (Euler). Use
// make_embedding to establish the invariant.
struct PlanarEmbedding {
    Graph graph;
    bool operator==(const PlanarEmbedding&) const = default;
};

namespace detail {

// Counts the orbits of the face-successor permutation. The successor of dart
// (u,v) is (v,w) with w the neighbor immediately following u in the rotation
// at v. Returns -1 if the graph is empty of edges.
inline int count_face_orbits(const Graph& g) {
    const int n = g.vertex_count();
    // dart id: index pairs (v, i) with i < deg(v)
    std::vector<int> dart_base(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v)
        dart_base[static_cast<std::size_t>(v) + 1] = dart_base[static_cast<std::size_t>(v)] + g.degree(v);
    const int darts = dart_base[static_cast<std::size_t>(n)];
    auto dart_id = [&](int v, int i) { return dart_base[static_cast<std::size_t>(v)] + i; };
    auto index_of = [&](int v, int u) {
        auto nb = g.neighbors(v);
        for (int i = 0; i < static_cast<int>(nb.size()); ++i)
            if (nb[i] == u) return i;
        return -1;
    };
    std::vector<char> seen(static_cast<std::size_t>(darts), 0);
    int orbits = 0;
    for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        for (int i = 0; i < static_cast<int>(nb.size()); ++i) {
            if (seen[static_cast<std::size_t>(dart_id(v, i))]) continue;
            ++orbits;
            int cu = v, ci = i;
            while (!seen[static_cast<std::size_t>(dart_id(cu, ci))]) {
                seen[static_cast<std::size_t>(dart_id(cu, ci))] = 1;
                int cv = g.neighbors(cu)[static_cast<std::size_t>(ci)];
                int back = index_of(cv, cu);
                int ni = (back + 1) % g.degree(cv);
                cu = cv;
                ci = ni;
            }
        }
    }
    return orbits;
}

inline bool passes_genus_check(const Graph& g) {
    if (!connected(g)) return false;
    if (g.edge_count() == 0) return g.vertex_count() <= 1;
    return count_face_orbits(g) == g.edge_count() - g.vertex_count() + 2;
}

}  // namespace detail

inline PlanarEmbedding make_embedding(Graph g) {
    if (!connected(g)) throw NotSphereEmbedding("embedding rejected: graph is disconnected");
    if (!detail::passes_genus_check(g))
        throw NotSphereEmbedding("embedding rejected: face count violates Euler's formula (not a sphere embedding)");
    return PlanarEmbedding{std::move(g)};
}

struct PlanarCodeOptions {
    bool expect_header = true;   // plantri emits the header by default; a flag, not a guess
    bool require_cubic = false;  // insist on degree exactly 3 everywhere
    bool skip_bad = false;       // downgrade per-record validation errors to warnings
    std::function<void(const CodecError&)> on_skip;  // called for each skipped record
};

// Streaming reader: yields one embedding at a time, memory O(max n).
class PlanarCodeReader {
public:
    PlanarCodeReader(std::istream& in, PlanarCodeOptions opt = {})
        : in_(in), opt_(std::move(opt)) {}

    // Throws CodecError on malformed input; with skip_bad, per-record
    // validation failures are counted and skipped instead (framing errors
    // still abort, there is nothing to resync on).
    std::optional<PlanarEmbedding> next() {
        if (!header_done_) read_header();
        for (;;) {
            int first = in_.get();
            if (first == std::char_traits<char>::eof()) return std::nullopt;
            ++offset_;
            const std::uint64_t record_ordinal = ordinal_++;
            auto embedding = read_record(static_cast<unsigned>(first), record_ordinal);
            if (embedding) return embedding;
            // validation failed and skip_bad is on: try the next record
        }
    }

    std::uint64_t records_read() const { return ordinal_; }
    std::uint64_t records_skipped() const { return skipped_; }
    std::uint64_t byte_offset() const { return offset_; }

private:
    void read_header() {
        header_done_ = true;
        if (!opt_.expect_header) return;
        char buf[kPlanarCodeHeaderLen];
        in_.read(buf, kPlanarCodeHeaderLen);
        if (in_.gcount() != static_cast<std::streamsize>(kPlanarCodeHeaderLen) ||
            std::string(buf, kPlanarCodeHeaderLen) != kPlanarCodeHeader)
            throw CodecError("planar_code: bad or missing header (expected \">>planar_code<<\")", 0, 0);
        offset_ += kPlanarCodeHeaderLen;
    }

    [[noreturn]] void fail(const std::string& msg, std::uint64_t ordinal) {
        throw CodecError("planar_code: " + msg + " (graph " + std::to_string(ordinal) +
                             ", byte offset " + std::to_string(offset_) + ")",
                         ordinal, offset_);
    }

    std::optional<PlanarEmbedding> read_record(unsigned n_byte, std::uint64_t ordinal) {
        if (n_byte == 0) fail("vertex count byte is 0", ordinal);
        const int n = static_cast<int>(n_byte);
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            for (;;) {
                int b = in_.get();
                if (b == std::char_traits<char>::eof())
                    fail("stream ends mid-record (vertex " + std::to_string(v + 1) + ")", ordinal);
                ++offset_;
                if (b == 0) break;
                rows[static_cast<std::size_t>(v)].push_back(b - 1);  // wire labels are 1-based
            }
        }
        // Framing is complete; everything below is validation.
        try {
            validate(rows, n, ordinal);
        } catch (const CodecError& e) {
            if (!opt_.skip_bad) throw;
            ++skipped_;
            if (opt_.on_skip) opt_.on_skip(e);
            return std::nullopt;
        }
        return PlanarEmbedding{Graph::from_rotations(rows)};
    }

    void validate(const std::vector<std::vector<int>>& rows, int n, std::uint64_t ordinal) {
        for (int v = 0; v < n; ++v) {
            const auto& row = rows[static_cast<std::size_t>(v)];
            if (static_cast<int>(row.size()) > kMaxDegree)
                fail("vertex " + std::to_string(v + 1) + " has degree " + std::to_string(row.size()) +
                         " > 3 (unsupported)",
                     ordinal);
            if (opt_.require_cubic && static_cast<int>(row.size()) != 3)
                fail("vertex " + std::to_string(v + 1) + " is not cubic", ordinal);
            for (int w : row) {
                if (w < 0 || w >= n)
                    fail("neighbor byte " + std::to_string(w + 1) + " out of range at vertex " +
                             std::to_string(v + 1),
                         ordinal);
                if (w == v) fail("loop at vertex " + std::to_string(v + 1), ordinal);
            }
            for (std::size_t i = 0; i < row.size(); ++i)
                for (std::size_t j = i + 1; j < row.size(); ++j)
                    if (row[i] == row[j])
                        fail("repeated neighbor at vertex " + std::to_string(v + 1), ordinal);
        }
        for (int v = 0; v < n; ++v)
            for (int w : rows[static_cast<std::size_t>(v)]) {
                const auto& back = rows[static_cast<std::size_t>(w)];
                if (std::find(back.begin(), back.end(), v) == back.end())
                    fail("asymmetric adjacency between vertices " + std::to_string(v + 1) + " and " +
                             std::to_string(w + 1),
                         ordinal);
            }
        Graph g = Graph::from_rotations(rows);
        if (!connected(g)) fail("graph is disconnected", ordinal);
        if (!detail::passes_genus_check(g))
            fail("face count violates Euler's formula (not a sphere embedding)", ordinal);
    }

    std::istream& in_;
    PlanarCodeOptions opt_;
    bool header_done_ = false;
    std::uint64_t ordinal_ = 0;
    std::uint64_t skipped_ = 0;
    std::uint64_t offset_ = 0;
};

// Incremental writer; emits the header once (unless disabled) and returns
// bytes written per record. Re-encoding a decoded stream is byte-identical.
class PlanarCodeWriter {
public:
    explicit PlanarCodeWriter(std::ostream& out, bool with_header = true)
        : out_(out), with_header_(with_header) {}

    std::size_t write(const PlanarEmbedding& e) {
        std::size_t bytes = 0;
        if (!header_written_) {
            header_written_ = true;
            if (with_header_) {
                out_.write(kPlanarCodeHeader, kPlanarCodeHeaderLen);
                bytes += kPlanarCodeHeaderLen;
            }
        }
        const Graph& g = e.graph;
        const int n = g.vertex_count();
        if (n < 1 || n > 255)
            throw UnsupportedInput("planar_code supports 1 <= n <= 255, got n = " + std::to_string(n));
        out_.put(static_cast<char>(static_cast<unsigned char>(n)));
        ++bytes;
        for (int v = 0; v < n; ++v) {
            for (int w : g.neighbors(v)) {
                out_.put(static_cast<char>(static_cast<unsigned char>(w + 1)));
                ++bytes;
            }
            out_.put('\0');
            ++bytes;
        }
        total_ += bytes;
        return bytes;
    }

    // Forces the header out even for an empty sequence.
    std::size_t finish() {
        if (!header_written_) {
            header_written_ = true;
            if (with_header_) {
                out_.write(kPlanarCodeHeader, kPlanarCodeHeaderLen);
                total_ += kPlanarCodeHeaderLen;
                return kPlanarCodeHeaderLen;
            }
        }
        return 0;
    }

    std::size_t bytes_written() const { return total_; }

private:
    std::ostream& out_;
    bool with_header_;
    bool header_written_ = false;
    std::size_t total_ = 0;
};

inline std::size_t write_planar_code(std::ostream& out, std::span<const PlanarEmbedding> seq,
                                     bool with_header = true) {
    PlanarCodeWriter w(out, with_header);
    for (const auto& e : seq) w.write(e);
    w.finish();
    return w.bytes_written();
}

// ---------------------------------------------------------------------------
// Text adjacency format: per graph, a line with n followed by n lines
//   v: a b c
// with 0-based labels in rotation order. Blank lines between records are
// tolerated on input; the writer emits the canonical form.

class TextAdjacencyReader {
public:
    explicit TextAdjacencyReader(std::istream& in) : in_(in) {}

    std::optional<Graph> next() {
        std::string line;
        // skip blank lines
        for (;;) {
            if (!std::getline(in_, line)) return std::nullopt;
            ++lineno_;
            if (!is_blank(line)) break;
        }
        int n = 0;
        {
            std::istringstream ss(line);
            if (!(ss >> n) || n < 0 || !trailing_blank(ss))
                fail("expected a vertex count");
        }
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            if (!std::getline(in_, line)) fail("record ends before vertex " + std::to_string(v));
            ++lineno_;
            parse_row(line, v, n, rows[static_cast<std::size_t>(v)]);
        }
        Graph g;
        try {
            g = Graph::from_rotations(rows);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        ++ordinal_;
        return g;
    }

    std::uint64_t line_number() const { return lineno_; }

private:
    static bool is_blank(const std::string& s) {
        return s.find_first_not_of(" \t\r") == std::string::npos;
    }
    static bool trailing_blank(std::istringstream& ss) {
        std::string rest;
        ss >> rest;
        return rest.empty();
    }

    void parse_row(const std::string& line, int v, int n, std::vector<int>& out) {
        std::string s = line;
        auto colon = s.find(':');
        if (colon == std::string::npos) fail("missing ':' in adjacency line");
        int label = -1;
        {
            std::istringstream ss(s.substr(0, colon));
            if (!(ss >> label) || !trailing_blank(ss)) fail("bad vertex label");
        }
        if (label != v)
            fail("expected adjacency of vertex " + std::to_string(v) + ", got " + std::to_string(label));
        std::istringstream ss(s.substr(colon + 1));
        int w;
        while (ss >> w) {
            if (w < 0 || w >= n) fail("neighbor " + std::to_string(w) + " out of range");
            out.push_back(w);
        }
        if (!ss.eof()) fail("trailing garbage in adjacency line");
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw CodecError("text adjacency: " + msg + " (line " + std::to_string(lineno_) + ")", ordinal_,
                         lineno_);
    }

    std::istream& in_;
    std::uint64_t lineno_ = 0;
    std::uint64_t ordinal_ = 0;
};

inline void write_text_adjacency(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << v << ':';
        for (int w : g.neighbors(v)) out << ' ' << w;
        out << '\n';
    }
}

inline Graph read_text_adjacency(std::istream& in) {
    TextAdjacencyReader r(in);
    auto g = r.next();
    if (!g) throw CodecError("text adjacency: empty input", 0, 0);
    return *g;
}

}  // namespace cubic
