// cubic-census: classify planar cubic graphs by girth, cyclic connectivity,
// hamiltonicity and hypohamiltonicity, and reproduce census counts.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cubic/codec.hpp"
#include "cubic/fixtures.hpp"
#include "cubic/graph.hpp"
#include "cubic/grinberg.hpp"
#include "cubic/ham_solver.hpp"
#include "cubic/hypo.hpp"
#include "cubic/invariants.hpp"
#include "cubic/pipeline.hpp"

namespace {

struct InputOptions {
    std::vector<std::string> inputs;
    std::string format = "planar_code";
    bool no_header = false;
    bool skip_bad = false;
};

void add_input_options(CLI::App* cmd, InputOptions& io) {
    cmd->add_option("--input,-i", io.inputs, "input file(s)")->required()->expected(-1);
    cmd->add_option("--format", io.format, "input format")
        ->check(CLI::IsMember({"planar_code", "text"}))
        ->capture_default_str();
    cmd->add_flag("--no-header", io.no_header, "planar_code stream carries no header");
    cmd->add_flag("--skip-bad", io.skip_bad, "skip invalid planar_code records with a warning");
}

// Streams graphs from the configured inputs; callback(ordinal, graph,
// from_planar_code).
template <class F>
void for_each_graph(const InputOptions& io, F&& f) {
    std::uint64_t ordinal = 0;
    for (const auto& path : io.inputs) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw cubic::CodecError("cannot open input " + path, 0, 0);
        if (io.format == "planar_code") {
            cubic::PlanarCodeOptions opt;
            opt.expect_header = !io.no_header;
            opt.skip_bad = io.skip_bad;
            opt.on_skip = [](const cubic::CodecError& e) {
                std::cerr << "warning: skipped record: " << e.what() << "\n";
            };
            cubic::PlanarCodeReader reader(in, opt);
            while (auto e = reader.next()) f(ordinal++, e->graph, true);
        } else {
            cubic::TextAdjacencyReader reader(in);
            while (auto g = reader.next()) f(ordinal++, *g, false);
        }
    }
}

std::string cycle_to_string(const std::vector<int>& cycle) {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(cycle[i]);
    }
    return s;
}

int run_filter(const InputOptions& io, cubic::PipelineConfig cfg, bool show_table,
               const std::string& json_path) {
    cfg.inputs = io.inputs;
    cfg.format = io.format == "planar_code" ? cubic::StreamFormat::PlanarCode : cubic::StreamFormat::Text;
    cfg.expect_header = !io.no_header;
    cfg.skip_bad = io.skip_bad;
    cfg.warn = [](const std::string& msg) { std::cerr << "warning: " << msg << "\n"; };
    cubic::PipelineCounters c = cubic::process_stream(cfg);

    std::cout << "decoded " << c.total_decoded << " graphs";
    if (c.decode_skipped) std::cout << " (skipped " << c.decode_skipped << " bad records)";
    std::cout << "\nrejected: degree=" << c.rejected_degree << " disconnected=" << c.rejected_disconnected
              << " girth=" << c.rejected_girth << " cyclic=" << c.rejected_cyclic << "\n";
    if (cfg.grinberg) std::cout << "grinberg-certified non-hamiltonian: " << c.grinberg_certified << "\n";
    if (cfg.verify_rate > 0) std::cout << "cross-verified: " << c.cross_verified << "\n";
    if (!cfg.survivors_path.empty())
        std::cout << "survivors written: " << c.survivors << " -> " << cfg.survivors_path << "\n";
    if (show_table) {
        std::cout << "n C4 N4 C5 N5 H\n";
        for (const auto& [n, row] : c.rows) std::cout << cubic::emit_table_row(c, n) << "\n";
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << "{\n  \"total_decoded\": " << c.total_decoded << ",\n  \"decode_skipped\": "
            << c.decode_skipped << ",\n  \"rejected_degree\": " << c.rejected_degree
            << ",\n  \"rejected_disconnected\": " << c.rejected_disconnected
            << ",\n  \"rejected_girth\": " << c.rejected_girth << ",\n  \"rejected_cyclic\": "
            << c.rejected_cyclic << ",\n  \"survivors\": " << c.survivors << ",\n  \"rows\": {";
        bool first = true;
        for (const auto& [n, row] : c.rows) {
            if (!first) out << ",";
            first = false;
            out << "\n    \"" << n << "\": {\"seen\": " << row.seen << ", \"c4\": " << row.c4
                << ", \"n4\": " << row.n4 << ", \"c5\": " << row.c5 << ", \"n5\": " << row.n5
                << ", \"h\": " << row.h << "}";
        }
        out << "\n  }\n}\n";
    }
    return 0;
}

int run_ham(const InputOptions& io, bool show_nodes, bool show_cert, bool grinberg) {
    cubic::HamSolver solver;
    for_each_graph(io, [&](std::uint64_t ordinal, const cubic::Graph& g, bool) {
        cubic::HamResult r = solver.solve(g);
        std::cout << ordinal << ' ' << (r.hamiltonian ? 'H' : 'N');
        if (show_nodes) std::cout << " nodes=" << r.nodes_searched;
        if (grinberg) {
            std::string col = "-";
            try {
                col = cubic::grinberg_certifies_nonhamiltonian(cubic::PlanarEmbedding{g}) ? "certified-nonham"
                                                                                          : "feasible";
            } catch (const cubic::NotSphereEmbedding&) {
            }
            std::cout << " grinberg=" << col;
        }
        if (show_cert && r.hamiltonian) std::cout << " cycle=" << cycle_to_string(r.cycle);
        std::cout << "\n";
    });
    return 0;
}

int run_hypo(const InputOptions& io, const std::string& cert_path) {
    std::ofstream certs;
    if (!cert_path.empty()) {
        certs.open(cert_path);
        if (!certs) throw cubic::CodecError("cannot open certificate output " + cert_path, 0, 0);
    }
    for_each_graph(io, [&](std::uint64_t ordinal, const cubic::Graph& g, bool) {
        cubic::HypoResult r = cubic::classify_hypohamiltonian(g);
        std::cout << ordinal << ' ';
        switch (r.tag) {
            case cubic::HypoTag::Hamiltonian:
                std::cout << "hamiltonian\n";
                break;
            case cubic::HypoTag::NotHypo:
                std::cout << "not-hypohamiltonian witness=" << r.witness << "\n";
                break;
            case cubic::HypoTag::Hypohamiltonian:
                std::cout << "hypohamiltonian\n";
                if (certs.is_open()) {
                    certs << "graph " << ordinal << "\n";
                    for (int v = 0; v < g.vertex_count(); ++v)
                        certs << "minus " << v << ": "
                              << cycle_to_string(r.certificates[static_cast<std::size_t>(v)]) << "\n";
                }
                break;
        }
    });
    return 0;
}

int run_invariants(const InputOptions& io, bool grinberg) {
    for_each_graph(io, [&](std::uint64_t ordinal, const cubic::Graph& g, bool) {
        std::cout << ordinal << " n=" << g.vertex_count() << " m=" << g.edge_count();
        auto gi = cubic::girth(g);
        std::cout << " girth=" << (gi ? std::to_string(*gi) : "acyclic");
        if (cubic::connected(g))
            std::cout << " cyclic=" << cubic::cyclic_connectivity(g).to_string();
        else
            std::cout << " cyclic=-";
        bool sphere = false;
        cubic::FaceVector fv;
        try {
            fv = cubic::faces(cubic::PlanarEmbedding{g});
            sphere = true;
        } catch (const cubic::NotSphereEmbedding&) {
        }
        std::cout << " faces=" << (sphere ? fv.to_string() : "-");
        std::string aut = "-";
        if (sphere && cubic::three_connected(g))
            aut = std::to_string(cubic::automorphism_order(cubic::PlanarEmbedding{g}));
        std::cout << " aut=" << aut;
        if (grinberg)
            std::cout << " grinberg="
                      << (sphere ? (cubic::grinberg_feasible(fv) ? "feasible" : "certified-nonham") : "-");
        std::cout << "\n";
    });
    return 0;
}

int run_table(const InputOptions& io, cubic::PipelineConfig cfg) {
    cfg.inputs = io.inputs;
    cfg.format = io.format == "planar_code" ? cubic::StreamFormat::PlanarCode : cubic::StreamFormat::Text;
    cfg.expect_header = !io.no_header;
    cfg.skip_bad = io.skip_bad;
    cubic::PipelineCounters c = cubic::process_stream(cfg);
    for (const auto& [n, row] : c.rows) std::cout << cubic::emit_table_row(c, n) << "\n";
    return 0;
}

int run_fixtures(const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto write_text = [&](const std::string& name, const cubic::Graph& g) {
        std::ofstream out(fs::path(out_dir) / (name + ".txt"));
        cubic::write_text_adjacency(out, g);
        std::cout << "wrote " << (fs::path(out_dir) / (name + ".txt")).string() << "\n";
    };
    auto write_pc = [&](const std::string& name, const cubic::PlanarEmbedding& e) {
        std::ofstream out(fs::path(out_dir) / (name + ".pc"), std::ios::binary);
        cubic::write_planar_code(out, std::span(&e, 1));
        std::cout << "wrote " << (fs::path(out_dir) / (name + ".pc")).string() << "\n";
    };
    write_text("k4", cubic::k4());
    write_pc("k4", cubic::k4_embedding());
    write_text("prism", cubic::prism());
    write_pc("prism", cubic::prism_embedding());
    write_text("dodecahedron", cubic::dodecahedron());
    write_pc("dodecahedron", cubic::dodecahedron_embedding());
    // The Petersen graph has no sphere embedding, so there is no planar_code
    // companion for it.
    write_text("petersen", cubic::petersen());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"census toolkit for planar cubic graphs"};
    app.require_subcommand(1);

    InputOptions io_filter, io_ham, io_hypo, io_inv, io_table;
    cubic::PipelineConfig cfg_filter, cfg_table;
    bool show_table = false;
    std::string json_path, survivors, cert_path, fixtures_dir = "fixtures";
    std::vector<std::string> emit_classes;
    bool ham_nodes = false, ham_cert = false, ham_grinberg = false, inv_grinberg = false;

    auto* filter = app.add_subcommand("filter", "full pipeline: filter, classify, count, emit survivors");
    add_input_options(filter, io_filter);
    filter->add_option("--jobs,-j", cfg_filter.jobs, "worker threads")->capture_default_str();
    filter->add_option("--girth", cfg_filter.min_girth, "minimum girth filter, 0 disables")
        ->capture_default_str();
    filter->add_flag("!--no-cubic-check", cfg_filter.require_cubic, "do not re-verify cubicity");
    filter->add_flag("!--no-cyclic-classify", cfg_filter.classify_cyclic,
                     "skip cyclic connectivity classification");
    filter->add_option("--survivors", survivors, "write surviving graphs (planar_code)");
    filter->add_option("--emit-class", emit_classes, "survivor classes: nonham, hypo")
        ->check(CLI::IsMember({"nonham", "hypo"}));
    filter->add_flag("--grinberg", cfg_filter.grinberg, "use Grinberg infeasibility as a non-ham shortcut");
    filter->add_option("--verify-rate", cfg_filter.verify_rate, "cross-check sample rate in [0,1]")
        ->capture_default_str();
    filter->add_flag("--table", show_table, "print census table rows");
    filter->add_option("--json", json_path, "write counters as JSON");

    auto* ham = app.add_subcommand("ham", "decide hamiltonicity per graph");
    add_input_options(ham, io_ham);
    ham->add_flag("--nodes", ham_nodes, "print search node counts");
    ham->add_flag("--certificate", ham_cert, "print hamiltonian cycles");
    ham->add_flag("--grinberg", ham_grinberg, "add the Grinberg diagnostic column");

    auto* hypo = app.add_subcommand("hypo", "classify hypohamiltonicity per graph");
    add_input_options(hypo, io_hypo);
    hypo->add_option("--certificates", cert_path, "dump per-vertex cycle certificates");

    auto* inv = app.add_subcommand("invariants", "print structural invariants per graph");
    add_input_options(inv, io_inv);
    inv->add_flag("--grinberg", inv_grinberg, "add the Grinberg diagnostic column");

    auto* table = app.add_subcommand("table", "run the pipeline and print census table rows");
    add_input_options(table, io_table);
    table->add_option("--jobs,-j", cfg_table.jobs, "worker threads")->capture_default_str();
    table->add_option("--girth", cfg_table.min_girth, "minimum girth filter, 0 disables")
        ->capture_default_str();

    auto* fixtures = app.add_subcommand("fixtures", "emit built-in example graphs");
    fixtures->add_option("--out", fixtures_dir, "output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (filter->parsed()) {
            cfg_filter.survivors_path = survivors;
            if (!emit_classes.empty()) {
                cfg_filter.emit_nonham = false;
                cfg_filter.emit_hypo = false;
                for (const auto& c : emit_classes) {
                    if (c == "nonham") cfg_filter.emit_nonham = true;
                    if (c == "hypo") cfg_filter.emit_hypo = true;
                }
            }
            return run_filter(io_filter, cfg_filter, show_table, json_path);
        }
        if (ham->parsed()) return run_ham(io_ham, ham_nodes, ham_cert, ham_grinberg);
        if (hypo->parsed()) return run_hypo(io_hypo, cert_path);
        if (inv->parsed()) return run_invariants(io_inv, inv_grinberg);
        if (table->parsed()) return run_table(io_table, cfg_table);
        if (fixtures->parsed()) return run_fixtures(fixtures_dir);
    } catch (const cubic::DisagreementError& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        const std::string path = "disagreement-" + std::to_string(e.ordinal) + ".pc";
        std::ofstream out(path, std::ios::binary);
        out.write(cubic::kPlanarCodeHeader, cubic::kPlanarCodeHeaderLen);
        out.write(reinterpret_cast<const char*>(e.planar_code_bytes.data()),
                  static_cast<std::streamsize>(e.planar_code_bytes.size()));
        std::cerr << "reproducer written to " << path << " (";
        for (unsigned char b : e.planar_code_bytes)
            std::cerr << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(b);
        std::cerr << std::dec << ")\n";
        return 2;
    } catch (const cubic::UnsupportedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cubic::CodecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
