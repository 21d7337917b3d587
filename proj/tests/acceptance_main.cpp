// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "arbornet/build.hpp"
#include "arbornet/encoding.hpp"
#include "arbornet/generate.hpp"
#include "arbornet/metric.hpp"
#include "arbornet/reconstruct.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace arbornet;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, std::function<bool()> body) {
    auto start = Clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    std::printf("%s: criterion %d — %s [%.0f ms]%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), ms, note.c_str());
    if (!ok) ++failures;
}

TripletSystem triplets(std::initializer_list<std::array<const char*, 3>> ts) {
    std::vector<Triplet> out;
    for (const auto& t : ts) out.push_back(Triplet::make(t[0], t[1], t[2]));
    return TripletSystem(std::move(out));
}

DuetSystem duets(std::initializer_list<std::array<const char*, 2>> ds) {
    std::vector<Duet> out;
    for (const auto& d : ds) out.push_back(Duet::make(d[0], d[1]));
    return DuetSystem(std::move(out));
}

Network generated(int n, std::uint64_t seed) {
    GenConfig cfg;
    cfg.n_leaves = n;
    cfg.seed = seed;
    return random_network(cfg);
}

// seeds 1..1000 spread over 3 <= |X| <= 15
int size_for_seed(int seed) { return 3 + (seed - 1) % 13; }

bool fixture_extraction() {
    bool ok = true;
    ok &= induced_triplets(fixtures::nb1()) == triplets({{"1", "2", "5"},
                                                         {"1", "3", "5"},
                                                         {"2", "3", "5"},
                                                         {"2", "3", "1"},
                                                         {"2", "3", "4"}});
    ok &= induced_triplets(fixtures::nf()).empty();
    ok &= induced_duets(fixtures::nf()) ==
          duets({{"1", "2"}, {"1", "3"}, {"1", "4"}});
    ok &= induced_duets(fixtures::nc()) == duets({{"2", "4"}});
    ok &= induced_duets(fixtures::nd()) == duets({{"1", "4"}});
    return ok;
}

bool metric_values() {
    bool ok = true;
    ok &= duet_triplet_distance(fixtures::nb2(), fixtures::nc()) == 2;
    ok &= duet_triplet_distance(fixtures::ne(), fixtures::nf()) == 0;
    ok &= !is_isomorphic(fixtures::ne(), fixtures::nf());
    return ok;
}

bool uniqueness_example() {
    auto net = ara(triplets({{"1", "2", "3"}, {"1", "2", "4"}}), DuetSystem());
    return net && is_isomorphic(*net, fixtures::nb2());
}

bool round_trip_1000() {
    for (int seed = 1; seed <= 1000; ++seed) {
        Network net = generated(size_for_seed(seed), static_cast<std::uint64_t>(seed));
        TripletSystem r = induced_triplets(net);
        DuetSystem d = induced_duets(net, DuetMode::chain, r);
        auto rebuilt = ara(r, d);
        if (!rebuilt || !is_isomorphic(*rebuilt, net)) {
            std::fprintf(stderr, "  round trip failed at seed %d\n", seed);
            return false;
        }
    }
    return true;
}

bool banyan_equivalence_1000() {
    for (int seed = 1; seed <= 1000; ++seed) {
        Network net = generated(size_for_seed(seed), static_cast<std::uint64_t>(seed));
        if (!is_stack_free(net) || !is_arboreal(net)) return false;
        if (is_banyan(net) != induced_triplets(net).empty()) return false;
    }
    // nf satisfies the equivalence; ne is outside the stack-free class and
    // pins the negative direction
    if (is_banyan(fixtures::nf()) != induced_triplets(fixtures::nf()).empty())
        return false;
    if (is_stack_free(fixtures::ne())) return false;
    if (!induced_triplets(fixtures::ne()).empty()) return false;
    if (is_banyan(fixtures::ne())) return false;
    return true;
}

bool component_graph_fidelity_200() {
    for (int seed = 1; seed <= 200; ++seed) {
        Network net = generated(4 + (seed % 9), static_cast<std::uint64_t>(seed + 10000));
        TripletSystem r = induced_triplets(net);
        DuetSystem d = induced_duets(net, DuetMode::chain, r);
        auto p = dr_partition(r, d);
        if (!p) return false;
        auto cg = scaffold(r, d, *p);
        if (!cg) return false;
        if (!(as_leaf_set_graph(*cg) == component_graph_of(net))) return false;
    }
    return true;
}

bool fx4_integration() {
    Network fx4 = fixtures::fx4();
    TripletSystem r(oracles::oracle_triplets(fx4));
    DuetSystem d = induced_duets(fx4, DuetMode::chain, induced_triplets(fx4));

    if (!(d == duets({{"9", "10"}}))) return false;
    if (!(induced_triplets(fx4) == r)) return false;

    auto p = dr_partition(r, d);
    if (!p || p->blocks.size() != 2) return false;
    if (p->blocks[0] != std::vector<LeafLabel>{"1", "2", "3", "4", "5", "6", "7",
                                               "8", "9"})
        return false;
    if (p->blocks[1] != std::vector<LeafLabel>{"10"}) return false;

    auto cg = scaffold(r, d, *p);
    if (!cg) return false;
    std::vector<std::vector<LeafLabel>> block_p_comps;
    for (int cid : cg->block_comps[0]) block_p_comps.push_back(cg->comps[cid]);
    if (block_p_comps != std::vector<std::vector<LeafLabel>>{
                             {"1", "2"}, {"3", "4", "5", "6", "7"}, {"8"}, {"9"}})
        return false;
    if (cg->edges.size() != 4) return false;

    auto rebuilt = ara(r, d);
    return rebuilt && is_isomorphic(*rebuilt, fx4);
}

bool metric_axioms_100() {
    for (int trial = 0; trial < 100; ++trial) {
        Network a = generated(7, static_cast<std::uint64_t>(3 * trial + 20001));
        Network b = generated(7, static_cast<std::uint64_t>(3 * trial + 20002));
        Network c = generated(7, static_cast<std::uint64_t>(3 * trial + 20003));
        std::uint64_t ab = duet_triplet_distance(a, b);
        if (duet_triplet_distance(a, a) != 0) return false;
        if (ab != duet_triplet_distance(b, a)) return false;
        if (ab > duet_triplet_distance(a, c) + duet_triplet_distance(c, b))
            return false;
        if ((ab == 0) != is_isomorphic(a, b)) return false;
    }
    return true;
}

bool complexity_smoke() {
    std::vector<int> sizes{50, 100, 200};
    std::vector<double> seconds;
    for (int n : sizes) {
        double total = 0;
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            Network net = generated(n, 30000 + seed);
            TripletSystem r = induced_triplets(net);
            DuetSystem d = induced_duets(net, DuetMode::chain, r);
            auto start = Clock::now();
            auto rebuilt = ara(r, d);
            double s = std::chrono::duration<double>(Clock::now() - start).count();
            if (!rebuilt || !is_isomorphic(*rebuilt, net)) return false;
            if (s >= 10.0) return false;
            total += s;
        }
        seconds.push_back(total);
    }
    double slope = std::log(seconds[2] / seconds[0]) / std::log(200.0 / 50.0);
    std::printf("  ara seconds at n=50/100/200: %.4f %.4f %.4f, log-log slope %.2f\n",
                seconds[0], seconds[1], seconds[2], slope);
    return slope <= 3.3;
}

}  // namespace

int main() {
    criterion(1, "reference fixtures: induced triplet and duet systems",
              fixture_extraction);
    criterion(2, "metric values d(NB2,NC)=2, d(NE,NF)=0, NE !~ NF", metric_values);
    criterion(3, "ara({12|3,12|4}, {}) is isomorphic to NB2", uniqueness_example);
    criterion(4, "round trip over 1000 generated networks (3<=|X|<=15)",
              round_trip_1000);
    criterion(5, "banyan iff empty triplet system, 1000 networks + NE/NF",
              banyan_equivalence_1000);
    criterion(6, "scaffold matches the component graph on 200 networks",
              component_graph_fidelity_200);
    criterion(7, "fx4 integration: oracle systems, partition, scaffold, ara",
              fx4_integration);
    criterion(8, "metric axioms and identity on 100 sampled triples",
              metric_axioms_100);
    criterion(9, "ara wall time fits a cubic growth curve", complexity_smoke);
    return failures == 0 ? 0 : 1;
}
