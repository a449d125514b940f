#include "lhnet/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lhnet/errors.hpp"
#include "lhnet/io.hpp"

namespace lhnet {
namespace {

constexpr const char* kVersion = "0.1.0";

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write " + path);
    out << content;
}

NetworkModel load_nodes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    return nodes_from_csv(in);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wireless network vulnerability analysis via activation sheaves"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string nodes_path, complex_path, lh_path, trace_path, out_path = "-";
    std::string kind = "link";
    int max_k = 2, bins = 10, cap = 20, count = 0;
    double top_percent = 5.0, area = 0.0, radius = 0.0;
    long packets = 0;
    uint64_t seed = 0;
    bool assert_flag = false;

    auto* gen = app.add_subcommand("gen", "Generate a random geometric node CSV");
    gen->add_option("--count", count, "Node count")->required();
    gen->add_option("--area", area, "Square area side length, meters")->required();
    gen->add_option("--radius", radius, "Coverage radius, meters")->required();
    gen->add_option("--seed", seed, "RNG seed")->required();
    gen->add_option("--out", out_path, "Output path (default stdout)");

    auto* cplx = app.add_subcommand("complex", "Build a link or interference complex");
    cplx->add_option("--nodes", nodes_path, "Node CSV")->required();
    cplx->add_option("--kind", kind, "link or interference")
        ->check(CLI::IsMember({"link", "interference"}));
    cplx->add_option("--out", out_path, "Output path");

    auto* lh = app.add_subcommand("lh", "Local homology scores for every cell");
    lh->add_option("--complex", complex_path, "Complex JSON")->required();
    lh->add_option("--max-k", max_k, "Highest homology degree");
    lh->add_option("--out", out_path, "Output path");

    auto* sections = app.add_subcommand("sections", "Enumerate global sections");
    sections->add_option("--complex", complex_path, "Complex JSON")->required();
    sections->add_option("--cap", cap, "Vertex-count enumeration cap");
    sections->add_option("--out", out_path, "Output path");

    auto* sim = app.add_subcommand("sim", "Simulate shortest-path traffic");
    sim->add_option("--nodes", nodes_path, "Node CSV")->required();
    sim->add_option("--packets", packets, "Packet count")->required();
    sim->add_option("--seed", seed, "RNG seed")->required();
    sim->add_option("--out", out_path, "Output path");

    auto* correlate_cmd = app.add_subcommand("correlate", "Join LH scores with a trace");
    correlate_cmd->add_option("--lh", lh_path, "LH CSV")->required();
    correlate_cmd->add_option("--trace", trace_path, "Trace CSV")->required();
    correlate_cmd->add_option("--bins", bins, "Forward-count bin count");
    correlate_cmd->add_option("--top-percent", top_percent, "Top forwarding population, percent");
    correlate_cmd->add_flag("--assert", assert_flag,
                            "Exit 4 unless every top forwarder has LH_1 >= 1");
    correlate_cmd->add_option("--out", out_path, "Output path");

    auto* coh = app.add_subcommand("cohomology", "Vector activation sheaf cohomology");
    coh->add_option("--complex", complex_path, "Complex JSON")->required();
    coh->add_option("--out", out_path, "Output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto emit = [&](const std::string& content) {
        if (out_path == "-")
            out << content;
        else
            write_file(out_path, content);
    };

    try {
        if (gen->parsed()) {
            emit(nodes_to_csv(random_network(count, area, radius, seed)));
        } else if (cplx->parsed()) {
            const auto net = load_nodes(nodes_path);
            const Complex x =
                kind == "link" ? link_complex(net) : interference_complex(net);
            emit(complex_to_json(x));
            err << "cells per dimension:";
            for (int k = 0; k <= x.dim(); ++k) err << ' ' << x.cells(k).size();
            err << "\n";
        } else if (lh->parsed()) {
            const Complex x = complex_from_json(slurp(complex_path));
            const auto scores = lh_field(x, max_k);
            emit(lh_to_csv(scores, max_k));
            // Both averaging populations are of interest; report both.
            double node_sum = 0, cell_sum = 0;
            long node_n = 0;
            for (const auto& s : scores) {
                const int v = s.lh.size() > 1 ? s.lh[1] : 0;
                cell_sum += v;
                if (s.cell.size() == 1) { node_sum += v; ++node_n; }
            }
            err << "mean lh1 over nodes: " << (node_n ? node_sum / node_n : 0.0)
                << ", over all cells: " << (scores.empty() ? 0.0 : cell_sum / scores.size())
                << "\n";
        } else if (sections->parsed()) {
            const Complex x = complex_from_json(slurp(complex_path));
            emit(sections_to_json(enumerate_global_sections(x, cap)));
        } else if (sim->parsed()) {
            emit(trace_to_csv(simulate(load_nodes(nodes_path), packets, seed)));
        } else if (correlate_cmd->parsed()) {
            std::istringstream lh_in(slurp(lh_path));
            const auto scores = lh_from_csv(lh_in);
            std::istringstream trace_in(slurp(trace_path));
            const auto trace = ingest_trace(trace_in);
            const auto report =
                correlate(forwarding_stats(trace), scores, {bins, top_percent});
            emit(correlation_report_json(report));
            if (assert_flag && !report.top_bin_all_high_lh) {
                err << "error: a top-bin forwarder has LH_1 = 0\n";
                return 4;
            }
        } else if (coh->parsed()) {
            const Complex x = complex_from_json(slurp(complex_path));
            const auto dims = sheaf_cohomology_dims(vector_sheaf_cochain(x));
            emit(cohomology_report_json(dims, static_cast<int>(x.vertex_count())));
        }
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << " (raise with --cap)\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace lhnet
