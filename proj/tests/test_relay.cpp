#include "sepchain/oracle.hpp"
#include "sepchain/random_graphs.hpp"
#include "sepchain/relay.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace sepchain;
using namespace sepchain::testing;

namespace {

void check_is_simple_path(const Graph& g, const RelayPath& path) {
    REQUIRE(!path.nodes.empty());
    std::set<int> seen(path.nodes.begin(), path.nodes.end());
    CHECK(seen.size() == path.nodes.size());
    CHECK(path.nodes.size() <= static_cast<std::size_t>(g.node_count()));
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i)
        CHECK(g.has_edge(path.nodes[i], path.nodes[i + 1]));
}

} // namespace

TEST_SUITE_BEGIN("relay");

TEST_CASE("relay from a P3 endpoint walks the whole path") {
    Graph g = path(3);
    CoreSpectrum spec = spectrum(g);
    for (auto choice : {TiePolicy::TChoice::LargestT, TiePolicy::TChoice::SmallestT,
                        TiePolicy::TChoice::Random}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            RelayPath p = relay_start(g, spec, 0, 3, TiePolicy{choice, seed});
            CHECK(p.nodes == std::vector<int>{0, 1, 2});
        }
    }
}

TEST_CASE("relay on K2 stops after one hop") {
    Graph g = complete(2);
    CoreSpectrum spec = spectrum(g);
    CHECK(relay_start(g, spec, 0, 3, TiePolicy{}).length() == 1);
    CHECK(relay_start(g, spec, 1, 3, TiePolicy{}).length() == 1);
}

TEST_CASE("relay on K4 always finds a full traversal") {
    Graph g = complete(4);
    CoreSpectrum spec = spectrum(g);
    for (std::uint64_t seed = 0; seed < 21; ++seed) {
        for (TMode mode : {TMode::Full, TMode::ZeroOnly}) {
            RelayPath p = relay_start(g, spec, 0, 3, TiePolicy{TiePolicy::TChoice::LargestT, seed},
                                      mode);
            CHECK(p.length() == 3);
            check_is_simple_path(g, p);
        }
    }
}

TEST_CASE("two-arm relay from the middle of P3 reaches both leaves") {
    Graph g = path(3);
    CoreSpectrum spec = spectrum(g);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        RelayPath p = relay_containing(g, spec, 1, 3, TiePolicy{TiePolicy::TChoice::LargestT, seed});
        CHECK(p.length() == 2);
        CHECK(p.nodes[1] == 1); // source sits between the arms
        check_is_simple_path(g, p);
    }
}

TEST_CASE("two-arm relay on K2 has an empty second arm") {
    Graph g = complete(2);
    CoreSpectrum spec = spectrum(g);
    RelayPath p = relay_containing(g, spec, 0, 3, TiePolicy{});
    CHECK(p.length() == 1);
    CHECK(p.nodes.front() == 0);
}

TEST_CASE("two-arm relay on C5 covers the cycle minus one edge") {
    Graph g = cycle(5);
    CoreSpectrum spec = spectrum(g);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RelayPath p = relay_containing(g, spec, 2, 3, TiePolicy{TiePolicy::TChoice::LargestT, seed});
        CHECK(p.length() == 4);
        check_is_simple_path(g, p);
    }
}

TEST_CASE("random baseline walks forced paths to the end") {
    Graph g = path(3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SplitMix64 rng(seed);
        CHECK(baseline_random(g, 0, rng).length() == 2);
    }
    Graph s = star(5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SplitMix64 rng(seed);
        CHECK(baseline_random(s, 0, rng).length() == 1);
    }
    Graph k2 = complete(2);
    SplitMix64 rng(0);
    CHECK(baseline_random(k2, 0, rng).length() == 1);
}

TEST_CASE("max-degree baseline prefers interior nodes of P4") {
    Graph g = path(4);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SplitMix64 rng(seed);
        RelayPath p = baseline_maxdeg(g, 0, rng);
        CHECK(p.length() == 3);
    }
    Graph s = star(4);
    SplitMix64 rng(1);
    CHECK(baseline_maxdeg(s, 0, rng).length() == 1);
    Graph k4 = complete(4);
    SplitMix64 rng2(2);
    CHECK(baseline_maxdeg(k4, 0, rng2).length() == 3);
}

TEST_CASE("all searches return simple adjacent paths of length at least one") {
    SplitMix64 seeds(801);
    for (int rep = 0; rep < 15; ++rep) {
        Graph g = random_connected(4 + seeds.below_int(8), 0.3, seeds.next());
        CoreSpectrum spec = spectrum(g);
        for (int v = 0; v < g.node_count(); ++v) {
            std::uint64_t seed = seeds.next();
            RelayPath paths[] = {
                relay_start(g, spec, v, 3, TiePolicy{TiePolicy::TChoice::LargestT, seed}),
                relay_start(g, spec, v, 3, TiePolicy{TiePolicy::TChoice::Random, seed},
                            TMode::ZeroOnly),
                relay_containing(g, spec, v, 3, TiePolicy{TiePolicy::TChoice::LargestT, seed}),
            };
            SplitMix64 rng_a(seed), rng_b(seed);
            RelayPath base_a = baseline_random(g, v, rng_a);
            RelayPath base_b = baseline_maxdeg(g, v, rng_b);
            for (const RelayPath& p : {paths[0], paths[1], paths[2], base_a, base_b}) {
                check_is_simple_path(g, p);
                CHECK(p.length() >= 1);
            }
        }
    }
}

TEST_CASE("identical seeds give identical paths") {
    Graph g = random_connected(20, 0.2, 99);
    CoreSpectrum spec = spectrum(g);
    for (std::uint64_t seed : {1ULL, 42ULL, 1234567ULL}) {
        TiePolicy policy{TiePolicy::TChoice::Random, seed};
        CHECK(relay_start(g, spec, 0, 3, policy).nodes == relay_start(g, spec, 0, 3, policy).nodes);
        SplitMix64 r1(seed), r2(seed);
        CHECK(baseline_random(g, 0, r1).nodes == baseline_random(g, 0, r2).nodes);
    }
}

TEST_CASE("relay never beats the exact longest path") {
    SplitMix64 seeds(802);
    for (int rep = 0; rep < 3; ++rep) {
        Graph g = random_connected(8, 0.25, seeds.next());
        CoreSpectrum spec = spectrum(g);
        for (int v = 0; v < g.node_count(); ++v) {
            int exact = brute_longest_from(g, v);
            int best = 0;
            for (int s = 0; s < 100; ++s) {
                TiePolicy policy{TiePolicy::TChoice::Random, seeds.next()};
                best = std::max(best, relay_start(g, spec, v, 3, policy).length());
            }
            CHECK(best <= exact);
        }
    }
}

TEST_CASE("the local view rejects non-neighbor queries") {
    Graph g = path(3); // 0 - 1 - 2
    CoreSpectrum spec = spectrum(g);
    std::vector<char> visited(3, 0);
    LocalView view(g, spec, visited, 0);
    CHECK(view.rank(0, 0) == spec.rank(0, 0)); // own column is visible
    CHECK(view.rank(1, 0) == spec.rank(1, 0)); // neighbor visible
    CHECK_THROWS_AS(view.rank(2, 0), std::logic_error);
    CHECK_THROWS_AS(view.visited(2), std::logic_error);
    CHECK_THROWS_AS(view.visited(0), std::logic_error); // self is not a neighbor
    CHECK_FALSE(view.visited(1));
}

TEST_SUITE_END();
