#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trustres/bench.hpp"
#include "trustres/bulk.hpp"
#include "trustres/generators.hpp"
#include "trustres/network_json.hpp"
#include "trustres/oracle.hpp"
#include "trustres/poss.hpp"
#include "trustres/resolution.hpp"
#include "trustres/verify.hpp"

namespace {

using namespace trustres;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<BenchSpec> make_specs(const std::string& family,
                                  const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                  double conflict_fraction, std::size_t value_pool) {
    std::vector<BenchSpec> specs;
    for (std::size_t s : sizes) {
        BenchSpec spec;
        spec.family = family;
        spec.size_param = s;
        spec.seed = seed;
        spec.conflict_fraction = conflict_fraction;
        spec.value_pool = value_pool;
        specs.push_back(spec);
    }
    return specs;
}

int run(int argc, char** argv) {
    CLI::App app{
        "Trust-network conflict resolution: generators, the polynomial resolution\n"
        "algorithm, a brute-force stable-model oracle, bulk multi-object\n"
        "resolution and a benchmark harness.\n\n"
        "File formats: networks are JSON objects with \"users\", \"mappings\"\n"
        "(target/source/priority, higher priority = more trusted) and \"beliefs\"\n"
        "(user/key/value). Belief tables are CSV with header X,K,V (X=user,\n"
        "K=key, V=value). Results are CSV with header user,key,value,certain."};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "Generate workloads (networks and belief tables)");
    gen->require_subcommand(1);

    std::size_t clusters = 1;
    std::uint64_t seed = 1;
    std::size_t value_pool = 10;
    std::string out_path;
    auto* gen_cycles = gen->add_subcommand("cycles", "Disconnected 4-user cycle clusters");
    gen_cycles->add_option("--clusters", clusters, "Number of clusters")->required();
    gen_cycles->add_option("--seed", seed, "Random seed");
    gen_cycles->add_option("--values", value_pool, "Size of the value pool");
    gen_cycles->add_option("-o,--output", out_path, "Network JSON output path")->required();
    gen_cycles->callback([&]() {
        save_network(gen_cycle_clusters(clusters, seed, value_pool), out_path);
    });

    std::size_t nodes = 1000, edges_per_node = 2;
    double belief_fraction = 0.5, sample_fraction = 1.0;
    auto* gen_sf = gen->add_subcommand("scalefree", "Preferential-attachment trust network");
    gen_sf->add_option("--nodes", nodes, "Number of users")->required();
    gen_sf->add_option("--edges-per-node", edges_per_node, "Mappings added per user");
    gen_sf->add_option("--belief-fraction", belief_fraction, "Share of users with a belief");
    gen_sf->add_option("--sample-fraction", sample_fraction,
                       "Keep this fraction of mappings plus their endpoints");
    gen_sf->add_option("--seed", seed, "Random seed");
    gen_sf->add_option("-o,--output", out_path, "Network JSON output path")->required();
    gen_sf->callback([&]() {
        TrustNetwork net = gen_scale_free(nodes, edges_per_node, seed, belief_fraction);
        if (sample_fraction < 1.0) net = sample_edges(net, sample_fraction, seed + 1);
        save_network(net, out_path);
    });

    std::size_t n_users = 100;
    auto* gen_nested = gen->add_subcommand("nested", "Worst-case nested-cycle network");
    gen_nested->add_option("--users", n_users, "Total number of users (>= 8)")->required();
    gen_nested->add_option("--seed", seed, "Random seed");
    gen_nested->add_option("-o,--output", out_path, "Network JSON output path")->required();
    gen_nested->callback([&]() { save_network(gen_nested_cycles(n_users, seed), out_path); });

    std::size_t objects = 1000;
    double conflict_fraction = 0.5;
    std::string topology_out;
    auto* gen_bulk = gen->add_subcommand("bulkload", "Bulk belief table for the 7-user topology");
    gen_bulk->add_option("--objects", objects, "Number of keyed objects")->required();
    gen_bulk->add_option("--conflict-fraction", conflict_fraction,
                         "Share of objects whose two beliefs conflict");
    gen_bulk->add_option("--seed", seed, "Random seed");
    gen_bulk->add_option("-o,--output", out_path, "POSS CSV output path")->required();
    gen_bulk->add_option("--topology-out", topology_out,
                         "Also write the 7-user topology network JSON here");
    gen_bulk->callback([&]() {
        write_poss(gen_bulk_workload(objects, conflict_fraction, seed), out_path);
        if (!topology_out.empty()) save_network(bulk_topology(), topology_out);
    });

    // ---- resolve ----
    std::string network_path, key;
    auto* cmd_resolve = app.add_subcommand("resolve", "Resolution algorithm on one key");
    cmd_resolve->add_option("--network", network_path, "Network JSON path")->required();
    cmd_resolve->add_option("--key", key, "Object key")->required();
    cmd_resolve->add_option("-o,--output", out_path, "Result CSV output path")->required();
    cmd_resolve->callback([&]() {
        write_text(out_path, result_to_csv(resolve(load_network(network_path), key)));
    });

    // ---- oracle ----
    unsigned max_atoms = 24;
    auto* cmd_oracle = app.add_subcommand(
        "oracle", "Brute-force stable-model semantics on one key (exponential)");
    cmd_oracle->add_option("--network", network_path, "Network JSON path")->required();
    cmd_oracle->add_option("--key", key, "Object key")->required();
    cmd_oracle->add_option("--max-atoms", max_atoms, "Choice-atom limit (default 24)");
    cmd_oracle->add_option("-o,--output", out_path, "Result CSV output path")->required();
    cmd_oracle->callback([&]() {
        OracleOptions opts;
        opts.max_choice_atoms = max_atoms;
        write_text(out_path,
                   result_to_csv(oracle_resolve(load_network(network_path), key, opts).result));
    });

    // ---- bulk ----
    std::string topology_path, beliefs_path;
    auto* cmd_bulk = app.add_subcommand("bulk", "Bulk multi-object resolution");
    cmd_bulk->add_option("--topology", topology_path, "Topology network JSON (no beliefs)")
        ->required();
    cmd_bulk->add_option("--beliefs", beliefs_path, "Input POSS CSV of beliefs")->required();
    cmd_bulk->add_option("-o,--output", out_path, "Output POSS CSV of possible values")
        ->required();
    cmd_bulk->callback([&]() {
        write_poss(bulk_resolve(load_network(topology_path), load_poss(beliefs_path)), out_path);
    });

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "Timing sweeps with CSV/SVG output");
    bench->require_subcommand(1);
    std::vector<std::size_t> sizes;
    unsigned trials = 20;
    std::string csv_path, svg_path, family = "cycles";

    auto add_bench_common = [&](CLI::App* c) {
        c->add_option("--sizes", sizes, "Sweep sizes (clusters/users/objects)")->required();
        c->add_option("--trials", trials, "Timed trials per point (default 20)");
        c->add_option("--seed", seed, "Random seed");
        c->add_option("--csv", csv_path, "Bench CSV output path")->required();
        c->add_option("--svg", svg_path, "SVG chart output path");
    };

    auto* bench_ra = bench->add_subcommand("ra", "Resolution algorithm suite");
    bench_ra->add_option("--family", family, "cycles | scalefree | nested");
    add_bench_common(bench_ra);
    bench_ra->callback([&]() {
        auto records = run_benchmark(BenchSuite::Ra, make_specs(family, sizes, seed, 0.0, 10),
                                     trials);
        emit_csv(records, csv_path);
        if (!svg_path.empty()) emit_svg(records, svg_path);
        ScalingFit fit = fit_scaling_exponent(records);
        std::cerr << "ra fit: exponent " << fit.exponent << ", R^2 " << fit.r_squared << "\n";
    });

    std::size_t oracle_pool = 2;
    auto* bench_oracle = bench->add_subcommand("oracle", "Stable-model oracle suite (cycles)");
    add_bench_common(bench_oracle);
    bench_oracle->add_option("--values", oracle_pool, "Value pool for the cluster family");
    bench_oracle->add_option("--max-atoms", max_atoms, "Choice-atom limit override");
    bench_oracle->callback([&]() {
        auto specs = make_specs("cycles", sizes, seed, 0.0, oracle_pool);
        for (auto& s : specs) s.max_choice_atoms = std::max(max_atoms, 24u);
        auto records = run_benchmark(BenchSuite::Oracle, specs, trials);
        emit_csv(records, csv_path);
        if (!svg_path.empty()) emit_svg(records, svg_path);
    });

    auto* bench_bulk = bench->add_subcommand("bulk", "Bulk resolution suite");
    bench_bulk->add_option("--conflict-fraction", conflict_fraction, "Conflicting share of keys");
    add_bench_common(bench_bulk);
    bench_bulk->callback([&]() {
        auto records = run_benchmark(
            BenchSuite::Bulk, make_specs("bulk", sizes, seed, conflict_fraction, 10), trials);
        emit_csv(records, csv_path);
        if (!svg_path.empty()) emit_svg(records, svg_path);
    });

    // ---- verify ----
    std::size_t random_instances = 1000;
    bool skip_grid = false;
    int verify_exit = 0;
    auto* cmd_verify = app.add_subcommand(
        "verify", "Resolution-vs-oracle equivalence sweep; nonzero exit on any mismatch");
    cmd_verify->add_option("--random", random_instances, "Number of random instances");
    cmd_verify->add_option("--seed", seed, "Random seed");
    cmd_verify->add_flag("--skip-grid", skip_grid, "Skip the systematic grid");
    cmd_verify->callback([&]() {
        VerifyReport report = verify_equivalence(random_instances, seed, !skip_grid);
        std::cerr << "verify: " << report.instances << " instances, " << report.mismatches
                  << " mismatches\n";
        for (const auto& s : report.samples) std::cerr << "mismatch on:\n" << s;
        if (report.mismatches > 0) verify_exit = 5;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 1;
    }
    return verify_exit;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const trustres::DomainTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const trustres::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const trustres::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const trustres::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const trustres::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
