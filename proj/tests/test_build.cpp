#include <doctest.h>

#include <algorithm>
#include <array>

#include "arbornet/build.hpp"
#include "arbornet/encoding.hpp"
#include "arbornet/generate.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace arbornet;

namespace {

TripletSystem triplets(std::initializer_list<std::array<const char*, 3>> ts) {
    std::vector<Triplet> out;
    for (const auto& t : ts) out.push_back(Triplet::make(t[0], t[1], t[2]));
    return TripletSystem(std::move(out));
}

}  // namespace

TEST_SUITE_BEGIN("buildtree");

TEST_CASE("cluster_graph") {
    LeafGraph one = cluster_graph(triplets({{"1", "2", "3"}}), {"1", "2", "3"});
    CHECK(one.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(one.components() ==
          std::vector<std::vector<LeafLabel>>{{"1", "2"}, {"3"}});

    TripletSystem fx4 = induced_triplets(fixtures::fx4());
    LeafGraph restricted = cluster_graph(fx4, {"3", "4", "5", "6", "7", "8"});
    CHECK(restricted.components() ==
          std::vector<std::vector<LeafLabel>>{{"3", "4", "5", "6", "7"}, {"8"}});

    LeafGraph empty = cluster_graph(TripletSystem(), {"a", "b", "c"});
    CHECK(empty.edges.empty());
    CHECK(empty.components().size() == 3);
}

TEST_CASE("build resolves single triplets and polytomies") {
    BuildOutcome simple = build(triplets({{"1", "2", "3"}}), {"1", "2", "3"});
    REQUIRE(simple.ok());
    CHECK(simple.tree->to_string() == "((1,2),3)");

    BuildOutcome fx4 = build(induced_triplets(fixtures::fx4()),
                             {"3", "4", "5", "6", "7", "8"});
    REQUIRE(fx4.ok());
    CHECK(fx4.tree->to_string() == "(((3,4,5),(6,7)),8)");
}

TEST_CASE("build reports incompatibility with the connected leaf set") {
    BuildOutcome bad = build(triplets({{"1", "2", "3"}, {"2", "3", "1"}}),
                             {"1", "2", "3"});
    CHECK_FALSE(bad.ok());
    CHECK(bad.connected_at == std::vector<LeafLabel>{"1", "2", "3"});
}

TEST_CASE("single leaf and edge cases") {
    BuildOutcome leaf = build(TripletSystem(), {"x"});
    REQUIRE(leaf.ok());
    CHECK(leaf.tree->to_string() == "x");

    BuildOutcome pair = build(TripletSystem(), {"a", "b"});
    REQUIRE(pair.ok());
    CHECK(pair.tree->to_string() == "(a,b)");

    CHECK_THROWS_AS(build(TripletSystem(), {}), std::invalid_argument);

    // triplets mentioning outside labels are ignored
    BuildOutcome outside = build(triplets({{"1", "2", "3"}, {"1", "9", "2"}}),
                                 {"1", "2", "3"});
    REQUIRE(outside.ok());
    CHECK(outside.tree->to_string() == "((1,2),3)");
}

TEST_CASE("soundness: a successful build displays every fitting triplet") {
    TripletSystem fx4 = induced_triplets(fixtures::fx4());
    std::vector<LeafLabel> leaves{"3", "4", "5", "6", "7", "8"};
    BuildOutcome outcome = build(fx4, leaves);
    REQUIRE(outcome.ok());
    TripletSystem inside = restrict_triplets(fx4, leaves);
    for (const Triplet& t : inside.members())
        CHECK(oracles::oracle_displays(*outcome.tree, t));

    for (int seed = 1; seed <= 25; ++seed) {
        GenConfig cfg;
        cfg.n_leaves = 8;
        cfg.seed = static_cast<std::uint64_t>(seed + 100);
        cfg.target_roots = 1;
        Network net = random_network(cfg);
        TripletSystem r = induced_triplets(net);
        BuildOutcome rebuilt = build(r, net.leaf_labels());
        REQUIRE(rebuilt.ok());
        for (const Triplet& t : r.members())
            CHECK(oracles::oracle_displays(*rebuilt.tree, t));
    }
}

TEST_CASE("consistency: extraction of the built tree covers the input") {
    TripletSystem input = triplets({{"1", "2", "5"}, {"3", "4", "5"}});
    BuildOutcome outcome = build(input, {"1", "2", "3", "4", "5"});
    REQUIRE(outcome.ok());
    Network as_net = tree_as_network(*outcome.tree);
    TripletSystem induced = induced_triplets(as_net);
    for (const Triplet& t : input.members()) CHECK(induced.contains(t));
}

TEST_CASE("determinism") {
    TripletSystem sys = induced_triplets(fixtures::fx4());
    std::vector<LeafLabel> leaves{"3", "4", "5", "6", "7", "8"};
    BuildOutcome a = build(sys, leaves);
    BuildOutcome b = build(sys, leaves);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(*a.tree == *b.tree);
}

TEST_CASE("failure is monotone under adding triplets") {
    TripletSystem base = triplets({{"1", "2", "3"}, {"2", "3", "1"}});
    CHECK_FALSE(build(base, {"1", "2", "3", "4"}).ok());

    const char* labels[] = {"1", "2", "3", "4"};
    std::vector<Triplet> extended = base.members();
    for (const char* a : labels)
        for (const char* b : labels)
            for (const char* c : labels) {
                if (std::string(a) >= b || a == c || std::string(b) == c) continue;
                std::vector<Triplet> more = extended;
                more.push_back(Triplet::make(a, b, c));
                CHECK_FALSE(build(TripletSystem(more), {"1", "2", "3", "4"}).ok());
            }
}

TEST_SUITE_END();
