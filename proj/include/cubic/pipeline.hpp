#pragma once

// Streaming census pipeline: decode, filter, classify, count, emit
// survivors. One decoder, N workers, one writer; counters are per-worker and
// merged at the end; survivors are re-serialized in input order through a
// bounded reorder buffer, so any interleaving yields identical counters and
// identical survivor bytes.

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cubic/codec.hpp"
#include "cubic/graph.hpp"
#include "cubic/grinberg.hpp"
#include "cubic/ham_solver.hpp"
#include "cubic/hypo.hpp"
#include "cubic/invariants.hpp"

namespace cubic {

// Raised when a cross-check disagrees with the primary classification; the
// CLI maps it to exit code 2 and dumps the reproducer bytes.
struct DisagreementError : std::runtime_error {
    DisagreementError(const std::string& msg, std::uint64_t ordinal_, std::vector<unsigned char> bytes)
        : std::runtime_error(msg), ordinal(ordinal_), planar_code_bytes(std::move(bytes)) {}
    std::uint64_t ordinal;
    std::vector<unsigned char> planar_code_bytes;
};

struct PipelineRow {
    std::uint64_t c4 = 0, n4 = 0, c5 = 0, n5 = 0, h = 0;
    std::uint64_t seen = 0;                  // decoded graphs of this order
    std::uint64_t nonham_unclassified = 0;   // non-hamiltonian, cyclic class off
    void merge(const PipelineRow& o) {
        c4 += o.c4;
        n4 += o.n4;
        c5 += o.c5;
        n5 += o.n5;
        h += o.h;
        seen += o.seen;
        nonham_unclassified += o.nonham_unclassified;
    }
    bool operator==(const PipelineRow&) const = default;
};

struct PipelineCounters {
    std::map<int, PipelineRow> rows;  // by vertex count
    std::uint64_t total_decoded = 0;
    std::uint64_t decode_skipped = 0;
    std::uint64_t rejected_degree = 0;
    std::uint64_t rejected_disconnected = 0;
    std::uint64_t rejected_girth = 0;
    std::uint64_t rejected_cyclic = 0;
    std::uint64_t grinberg_certified = 0;
    std::uint64_t cross_verified = 0;
    std::uint64_t survivors = 0;

    std::uint64_t rejected() const {
        return rejected_degree + rejected_disconnected + rejected_girth + rejected_cyclic;
    }
    std::uint64_t classified() const {
        std::uint64_t t = 0;
        for (auto& [n, r] : rows) t += r.c4 + r.c5;
        return t;
    }

    PipelineRow& ensure_row(int n) { return rows[n]; }

    // Merge is associative and commutative with identity zero.
    void merge(const PipelineCounters& o) {
        for (auto& [n, r] : o.rows) rows[n].merge(r);
        total_decoded += o.total_decoded;
        decode_skipped += o.decode_skipped;
        rejected_degree += o.rejected_degree;
        rejected_disconnected += o.rejected_disconnected;
        rejected_girth += o.rejected_girth;
        rejected_cyclic += o.rejected_cyclic;
        grinberg_certified += o.grinberg_certified;
        cross_verified += o.cross_verified;
        survivors += o.survivors;
    }
    bool operator==(const PipelineCounters&) const = default;
};

// One table row, matching the census table column order; H is 0 when no
// hypohamiltonian graph was counted.
inline std::string emit_table_row(const PipelineCounters& c, int n) {
    auto it = c.rows.find(n);
    if (it == c.rows.end())
        throw std::out_of_range("emit_table_row: no counters for n = " + std::to_string(n));
    const PipelineRow& r = it->second;
    std::ostringstream ss;
    ss << n << ' ' << r.c4 << ' ' << r.n4 << ' ' << r.c5 << ' ' << r.n5 << ' ' << r.h;
    return ss.str();
}

enum class StreamFormat { PlanarCode, Text };

struct PipelineConfig {
    std::vector<std::string> inputs;  // file paths
    StreamFormat format = StreamFormat::PlanarCode;
    bool expect_header = true;
    bool skip_bad = false;

    int min_girth = 5;           // re-verified; 0 disables the filter
    bool require_cubic = true;   // re-verified
    bool classify_cyclic = true;
    bool grinberg = false;       // use Grinberg infeasibility as a non-ham shortcut

    int jobs = 1;
    double verify_rate = 0.0;  // in [0,1]

    std::string survivors_path;  // empty: do not write survivors
    bool emit_nonham = true;
    bool emit_hypo = false;

    std::function<void(const std::string&)> warn;  // skip-bad notices

    // Test instrumentation: flips the outcome of the cross-check for chosen
    // ordinals so the fatal diagnostic path can be exercised.
    std::function<bool(std::uint64_t)> test_flip_verify;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic, thread-independent sampling decision.
inline bool sampled(double rate, std::uint64_t ordinal) {
    if (rate <= 0.0) return false;
    if (rate >= 1.0) return true;
    const double u = static_cast<double>(splitmix64(ordinal)) / 18446744073709551616.0;
    return u < rate;
}

inline std::vector<unsigned char> planar_record_bytes(const Graph& g) {
    std::ostringstream ss;
    PlanarCodeWriter w(ss, /*with_header=*/false);
    w.write(PlanarEmbedding{g});
    std::string s = ss.str();
    return {s.begin(), s.end()};
}

}  // namespace detail

// Re-decides hamiltonicity of g (and of each vertex-deleted graph for
// hypohamiltonian positives) along an independent route: the plain
// backtracking oracle when n <= 24, otherwise the main solver re-run with
// the reversed tie-break branching order. Returns agreement.
inline bool cross_verify(const PipelineConfig& cfg, const Graph& g, bool primary_hamiltonian,
                         const HypoResult* hypo = nullptr) {
    (void)cfg;
    const int n = g.vertex_count();
    HamSolverOptions perturbed{.reverse_tie_break = true};
    const bool again =
        n <= 24 ? reference_is_hamiltonian(g) : find_hamiltonian(g, perturbed).hamiltonian;
    if (again != primary_hamiltonian) return false;
    if (hypo && hypo->tag == HypoTag::Hypohamiltonian) {
        for (int v = 0; v < n; ++v) {
            const Graph h = delete_vertex(g, v);
            const bool ham_v = h.vertex_count() <= 24 ? reference_is_hamiltonian(h)
                                                      : HamSolver(perturbed).solve(h).hamiltonian;
            if (!ham_v) return false;
        }
    }
    return true;
}

namespace detail {

template <class T>
class BoundedQueue {
public:
    explicit BoundedQueue(std::size_t cap) : cap_(cap) {}

    void push(T item) {
        std::unique_lock lk(mu_);
        cv_space_.wait(lk, [&] { return q_.size() < cap_ || closed_; });
        if (closed_) return;
        q_.push_back(std::move(item));
        cv_data_.notify_one();
    }

    std::optional<T> pop() {
        std::unique_lock lk(mu_);
        cv_data_.wait(lk, [&] { return !q_.empty() || closed_; });
        if (q_.empty()) return std::nullopt;
        T item = std::move(q_.front());
        q_.pop_front();
        cv_space_.notify_one();
        return item;
    }

    void close() {
        std::lock_guard lk(mu_);
        closed_ = true;
        cv_data_.notify_all();
        cv_space_.notify_all();
    }

private:
    std::mutex mu_;
    std::condition_variable cv_data_, cv_space_;
    std::deque<T> q_;
    std::size_t cap_;
    bool closed_ = false;
};

struct Outcome {
    std::uint64_t ordinal = 0;
    bool survivor = false;
    Graph graph;
};

// Ordinal-ordered hand-off to the single writer. Bounded: a producer that
// gets too far ahead waits; the FIFO work queue guarantees the next-needed
// ordinal is never stuck behind a waiting producer.
class ReorderBuffer {
public:
    explicit ReorderBuffer(std::size_t cap) : cap_(cap) {}

    void push(Outcome o) {
        std::unique_lock lk(mu_);
        buf_.emplace(o.ordinal, std::move(o));
        cv_data_.notify_one();
        cv_space_.wait(lk, [&] { return buf_.size() <= cap_ || buf_.count(next_) || done_; });
    }

    std::optional<Outcome> pop_next() {
        std::unique_lock lk(mu_);
        cv_data_.wait(lk, [&] { return buf_.count(next_) || done_; });
        auto it = buf_.find(next_);
        if (it == buf_.end()) return std::nullopt;  // done and drained
        Outcome o = std::move(it->second);
        buf_.erase(it);
        ++next_;
        cv_space_.notify_all();
        cv_data_.notify_one();
        return o;
    }

    void finish() {
        std::lock_guard lk(mu_);
        done_ = true;
        cv_data_.notify_all();
        cv_space_.notify_all();
    }

private:
    std::mutex mu_;
    std::condition_variable cv_data_, cv_space_;
    std::map<std::uint64_t, Outcome> buf_;
    std::size_t cap_;
    std::uint64_t next_ = 0;
    bool done_ = false;
};

struct Unit {
    std::uint64_t ordinal;
    Graph graph;
};

class PipelineRun {
public:
    explicit PipelineRun(const PipelineConfig& cfg)
        : cfg_(cfg),
          queue_(static_cast<std::size_t>(4 * std::max(1, cfg.jobs))),
          reorder_(static_cast<std::size_t>(5 * std::max(1, cfg.jobs))) {}

    PipelineCounters run() {
        if (cfg_.jobs < 1) throw std::invalid_argument("pipeline: jobs must be >= 1");
        if (cfg_.verify_rate < 0.0 || cfg_.verify_rate > 1.0)
            throw std::invalid_argument("pipeline: verify rate must be in [0,1]");
        const bool writing = !cfg_.survivors_path.empty();
        std::ofstream survivors_out;
        if (writing) {
            survivors_out.open(cfg_.survivors_path, std::ios::binary | std::ios::trunc);
            if (!survivors_out)
                throw CodecError("pipeline: cannot open survivor output " + cfg_.survivors_path, 0, 0);
        }

        std::vector<PipelineCounters> local(static_cast<std::size_t>(cfg_.jobs));
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(cfg_.jobs));
        for (int w = 0; w < cfg_.jobs; ++w)
            workers.emplace_back([this, w, &local, writing] { worker_loop(local[static_cast<std::size_t>(w)], writing); });

        std::thread writer;
        std::uint64_t written_survivors = 0;
        if (writing)
            writer = std::thread([this, &survivors_out, &written_survivors] {
                try {
                    PlanarCodeWriter pw(survivors_out, /*with_header=*/true);
                    while (auto o = reorder_.pop_next())
                        if (o->survivor) {
                            pw.write(PlanarEmbedding{std::move(o->graph)});
                            ++written_survivors;
                        }
                    pw.finish();
                } catch (...) {
                    record_error(UINT64_MAX, std::current_exception(), false);
                    while (reorder_.pop_next()) {
                    }
                }
            });

        PipelineCounters totals;
        try {
            decode_all(totals);
        } catch (...) {
            record_error(0, std::current_exception(), /*decoder=*/true);
        }
        queue_.close();
        for (auto& t : workers) t.join();
        reorder_.finish();
        if (writer.joinable()) writer.join();

        rethrow_if_error();
        for (auto& c : local) totals.merge(c);
        totals.survivors = written_survivors;
        return totals;
    }

private:
    void decode_all(PipelineCounters& totals) {
        for (const auto& path : cfg_.inputs) {
            std::ifstream in(path, std::ios::binary);
            if (!in) throw CodecError("pipeline: cannot open input " + path, 0, 0);
            if (cfg_.format == StreamFormat::PlanarCode) {
                PlanarCodeOptions opt;
                opt.expect_header = cfg_.expect_header;
                opt.require_cubic = false;  // degree filter is a counted rejection, not an abort
                opt.skip_bad = cfg_.skip_bad;
                opt.on_skip = [&](const CodecError& e) {
                    ++totals.decode_skipped;
                    if (cfg_.warn) cfg_.warn(std::string("skipped record: ") + e.what());
                };
                PlanarCodeReader reader(in, opt);
                while (auto emb = reader.next()) {
                    if (aborted()) return;
                    push_unit(std::move(emb->graph), totals);
                }
            } else {
                TextAdjacencyReader reader(in);
                while (auto g = reader.next()) {
                    if (aborted()) return;
                    push_unit(std::move(*g), totals);
                }
            }
        }
    }

    void push_unit(Graph g, PipelineCounters& totals) {
        queue_.push(Unit{next_ordinal_++, std::move(g)});
        ++totals.total_decoded;
    }

    void worker_loop(PipelineCounters& counters, bool writing) {
        HamSolver solver;
        while (auto unit = queue_.pop()) {
            if (aborted()) {
                if (writing) reorder_.push(Outcome{unit->ordinal, false, Graph()});
                continue;
            }
            bool survivor = false;
            try {
                survivor = process(*unit, counters, solver);
            } catch (...) {
                record_error(unit->ordinal, std::current_exception(), false);
            }
            if (writing) reorder_.push(Outcome{unit->ordinal, survivor, std::move(unit->graph)});
        }
    }

    // Full classification of one graph. Returns the survivor flag.
    bool process(const Unit& unit, PipelineCounters& c, HamSolver& solver) {
        const Graph& g = unit.graph;
        const int n = g.vertex_count();
        PipelineRow& row = c.ensure_row(n);
        ++row.seen;

        if (cfg_.require_cubic && !g.is_cubic()) {
            ++c.rejected_degree;
            return false;
        }
        if (!connected(g)) {
            ++c.rejected_disconnected;
            return false;
        }
        if (cfg_.min_girth > 0) {
            auto gi = girth(g);
            if (!gi || *gi < cfg_.min_girth) {
                ++c.rejected_girth;
                return false;
            }
        }
        int bucket = 0;
        if (cfg_.classify_cyclic) {
            auto cc = cyclic_connectivity(g);
            if (cc.has_cut() && cc.value() == 4) {
                bucket = 4;
                ++row.c4;
            } else if (cc.has_cut() && cc.value() == 5) {
                bucket = 5;
                ++row.c5;
            } else {
                ++c.rejected_cyclic;
                return false;
            }
        }

        // Grinberg shortcut: an infeasible face vector certifies
        // non-hamiltonicity without running the solver.
        bool grinberg_certified = false;
        if (cfg_.grinberg) {
            try {
                grinberg_certified = grinberg_certifies_nonhamiltonian(PlanarEmbedding{g});
            } catch (const NotSphereEmbedding&) {
            }
            if (grinberg_certified) ++c.grinberg_certified;
        }

        HamResult ham;
        if (!grinberg_certified) ham = solver.solve(g);
        const bool is_ham = !grinberg_certified && ham.hamiltonian;

        HypoResult hypo;
        bool hypo_positive = false;
        if (!is_ham) {
            if (bucket == 4)
                ++row.n4;
            else if (bucket == 5)
                ++row.n5;
            else
                ++row.nonham_unclassified;
            hypo = classify_hypohamiltonian(g, &solver, grinberg_certified ? nullptr : &ham);
            if (hypo.tag == HypoTag::Hamiltonian)
                throw DisagreementError(
                    "graph " + std::to_string(unit.ordinal) +
                        ": Grinberg certificate claims non-hamiltonian but the solver found a cycle",
                    unit.ordinal, detail::planar_record_bytes(g));
            if (hypo.tag == HypoTag::Hypohamiltonian) {
                hypo_positive = true;
                ++row.h;
                // necessity check: hypohamiltonian graphs have cyclic
                // connectivity at least 4
                if (bucket == 0) {
                    auto cc = cyclic_connectivity(g);
                    if (!cc.has_cut() || cc.value() < 4) {
                        if (cc.has_cut())
                            throw DisagreementError(
                                "graph " + std::to_string(unit.ordinal) +
                                    ": classified hypohamiltonian but cyclic connectivity is " +
                                    std::to_string(cc.value()),
                                unit.ordinal, detail::planar_record_bytes(g));
                    }
                }
            }
        }

        if (hypo_positive || detail::sampled(cfg_.verify_rate, unit.ordinal)) {
            ++c.cross_verified;
            bool ok = cross_verify(cfg_, g, is_ham, hypo_positive ? &hypo : nullptr);
            if (cfg_.test_flip_verify && cfg_.test_flip_verify(unit.ordinal)) ok = !ok;
            if (!ok)
                throw DisagreementError("graph " + std::to_string(unit.ordinal) +
                                            ": cross-verification disagrees with the primary result",
                                        unit.ordinal, detail::planar_record_bytes(g));
        }

        return (!is_ham && cfg_.emit_nonham) || (hypo_positive && cfg_.emit_hypo);
    }

    bool aborted() const {
        std::lock_guard lk(err_mu_);
        return error_ != nullptr;
    }

    void record_error(std::uint64_t ordinal, std::exception_ptr e, bool decoder) {
        std::lock_guard lk(err_mu_);
        if (!error_ || (!decoder && ordinal < error_ordinal_)) {
            error_ = e;
            error_ordinal_ = decoder ? UINT64_MAX : ordinal;
        }
    }

    void rethrow_if_error() {
        std::lock_guard lk(err_mu_);
        if (error_) std::rethrow_exception(error_);
    }

    const PipelineConfig& cfg_;
    BoundedQueue<Unit> queue_;
    ReorderBuffer reorder_;
    std::uint64_t next_ordinal_ = 0;
    mutable std::mutex err_mu_;
    std::exception_ptr error_;
    std::uint64_t error_ordinal_ = UINT64_MAX;
};

}  // namespace detail

inline PipelineCounters process_stream(const PipelineConfig& cfg) {
    detail::PipelineRun run(cfg);
    return run.run();
}

}  // namespace cubic
