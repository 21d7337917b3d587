#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arbornet/encoding.hpp"
#include "arbornet/generate.hpp"
#include "arbornet/io.hpp"
#include "arbornet/metric.hpp"
#include "arbornet/network.hpp"
#include "arbornet/reconstruct.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;   // false / NONE
constexpr int kExitError = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

arbornet::Network load_net(const std::string& path) {
    return arbornet::parse_net(slurp(path));
}

int cmd_check(const std::string& path) {
    using namespace arbornet;
    Network net = load_net(path);
    ValidityReport report = validate_m_network(net);
    if (report.ok()) {
        std::cout << "m-network: ok\n";
    } else {
        std::cout << "m-network: " << report.violations.size() << " violation(s)\n";
        for (const Violation& v : report.violations) {
            std::cout << "  - ";
            if (!v.vertex.empty()) std::cout << v.vertex << ": ";
            std::cout << v.rule << "\n";
        }
    }
    std::cout << "arboreal: " << (is_arboreal(net) ? "true" : "false") << "\n";
    std::cout << "stack-free: " << (is_stack_free(net) ? "true" : "false") << "\n";
    std::cout << "banyan: " << (is_banyan(net) ? "true" : "false") << "\n";
    return report.ok() ? kExitOk : kExitNegative;
}

int cmd_extract(const std::string& path, const std::string& mode) {
    using namespace arbornet;
    Network net = load_net(path);
    TripletSystem r = induced_triplets(net);
    DuetMode m = mode == "literal" ? DuetMode::literal_path : DuetMode::chain;
    DuetSystem d = induced_duets(net, m, r);
    std::cout << serialize_constraints(r, d);
    return kExitOk;
}

int cmd_reconstruct(const std::string& path) {
    using namespace arbornet;
    auto [r, d] = parse_constraints(slurp(path));
    std::optional<Network> net = ara(r, d);
    if (!net) {
        std::cout << "NONE\n";
        return kExitNegative;
    }
    std::cout << serialize_net(*net);
    return kExitOk;
}

int cmd_distance(const std::string& path1, const std::string& path2) {
    std::cout << arbornet::duet_triplet_distance(load_net(path1), load_net(path2))
              << "\n";
    return kExitOk;
}

int cmd_iso(const std::string& path1, const std::string& path2) {
    bool same = arbornet::is_isomorphic(load_net(path1), load_net(path2));
    std::cout << (same ? "true" : "false") << "\n";
    return same ? kExitOk : kExitNegative;
}

int cmd_gen(int n, std::uint64_t seed, int roots) {
    arbornet::GenConfig cfg;
    cfg.n_leaves = n;
    cfg.seed = seed;
    if (roots > 0) cfg.target_roots = roots;
    std::cout << arbornet::serialize_net(arbornet::random_network(cfg));
    return kExitOk;
}

int cmd_dot(const std::string& path) {
    std::cout << arbornet::emit_dot(load_net(path));
    return kExitOk;
}

int cmd_roundtrip(int n, int seeds) {
    using namespace arbornet;
    int pass = 0, fail = 0;
    for (int seed = 1; seed <= seeds; ++seed) {
        GenConfig cfg;
        cfg.n_leaves = n;
        cfg.seed = static_cast<std::uint64_t>(seed);
        Network net = random_network(cfg);
        TripletSystem r = induced_triplets(net);
        DuetSystem d = induced_duets(net, DuetMode::chain, r);
        std::optional<Network> rebuilt = ara(r, d);
        bool ok = rebuilt && is_isomorphic(*rebuilt, net);
        ok ? ++pass : ++fail;
        if (!ok) std::cerr << "roundtrip failed at seed " << seed << "\n";
    }
    std::cout << "pass: " << pass << " fail: " << fail << "\n";
    return fail == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-rooted arboreal network toolkit"};
    app.require_subcommand(1);

    std::string net_path, net_path2, constraints_path, duet_mode = "chain";
    int gen_n = 0, gen_roots = 0, rt_n = 8, rt_seeds = 100;
    std::uint64_t gen_seed = 1;

    CLI::App* check = app.add_subcommand("check", "classify a network file");
    check->add_option("net", net_path, "NET document")->required();

    CLI::App* extract = app.add_subcommand("extract", "write induced triplets and duets");
    extract->add_option("net", net_path, "NET document")->required();
    extract->add_option("--duet-mode", duet_mode, "chain|literal")
        ->check(CLI::IsMember({"chain", "literal"}));

    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "rebuild a network from constraints");
    reconstruct->add_option("constraints", constraints_path, "constraint document")
        ->required();

    CLI::App* distance = app.add_subcommand("distance", "duet-triplet distance");
    distance->add_option("net1", net_path, "NET document")->required();
    distance->add_option("net2", net_path2, "NET document")->required();

    CLI::App* iso = app.add_subcommand("iso", "label-respecting isomorphism");
    iso->add_option("net1", net_path, "NET document")->required();
    iso->add_option("net2", net_path2, "NET document")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate a random network");
    gen->add_option("--n", gen_n, "leaf count")->required();
    gen->add_option("--seed", gen_seed, "PRNG seed")->required();
    gen->add_option("--roots", gen_roots, "exact root count");

    CLI::App* dot = app.add_subcommand("dot", "write Graphviz DOT");
    dot->add_option("net", net_path, "NET document")->required();

    CLI::App* roundtrip =
        app.add_subcommand("roundtrip", "generator extract/reconstruct suite");
    roundtrip->add_option("--n", rt_n, "leaf count");
    roundtrip->add_option("--seeds", rt_seeds, "number of seeds (1..K)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return kExitError;
    }

    try {
        if (check->parsed()) return cmd_check(net_path);
        if (extract->parsed()) return cmd_extract(net_path, duet_mode);
        if (reconstruct->parsed()) return cmd_reconstruct(constraints_path);
        if (distance->parsed()) return cmd_distance(net_path, net_path2);
        if (iso->parsed()) return cmd_iso(net_path, net_path2);
        if (gen->parsed()) return cmd_gen(gen_n, gen_seed, gen_roots);
        if (dot->parsed()) return cmd_dot(net_path);
        if (roundtrip->parsed()) return cmd_roundtrip(rt_n, rt_seeds);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
