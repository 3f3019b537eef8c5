#include "sepchain/chain.hpp"
#include "sepchain/errors.hpp"
#include "sepchain/oracle.hpp"
#include "sepchain/random_graphs.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <numeric>

using namespace sepchain;
using namespace sepchain::testing;

namespace {

// Literal transcription of the local rule, used as the reference for
// local_update: largest k with >= k neighbor values >= k + t and
// >= max{0, k + p} neighbor values >= k.
int naive_local_rule(const std::vector<int>& neighbor_values, int t, int p) {
    const int deg = static_cast<int>(neighbor_values.size());
    for (int k = deg; k >= 1; --k) {
        int reach = 0, same = 0;
        for (int value : neighbor_values) {
            if (value >= k + t) reach++;
            if (value >= k) same++;
        }
        if (reach >= k && same >= std::max(0, k + p)) return k;
    }
    return 0;
}

// Star whose leaf states carry the wanted neighbor values of the center.
struct CenterFixture {
    Graph g;
    RankVector state;

    explicit CenterFixture(const std::vector<int>& neighbor_values)
        : g(star(static_cast<int>(neighbor_values.size()))) {
        state.assign(static_cast<std::size_t>(g.node_count()), 0);
        for (std::size_t i = 0; i < neighbor_values.size(); ++i)
            state[i + 1] = neighbor_values[i];
    }
};

std::uint64_t degree_sum(const Graph& g) {
    return std::accumulate(g.degrees().begin(), g.degrees().end(), std::uint64_t{0});
}

} // namespace

TEST_SUITE_BEGIN("chain");

TEST_CASE("local update on the worked neighborhood {2,4,4,5,3}") {
    CenterFixture fx({2, 4, 4, 5, 3});
    CHECK(local_update(fx.g, 0, fx.state, -2, -1) == 4);
}

TEST_CASE("local update is zero when all neighbors are zero") {
    CenterFixture fx({0, 0, 0});
    CHECK(local_update(fx.g, 0, fx.state, 0, 0) == 0);
}

TEST_CASE("local update on {3,3,1} with t=0 and a very small p") {
    CenterFixture fx({3, 3, 1});
    CHECK(naive_local_rule({3, 3, 1}, 0, -10) == 2);
    CHECK(local_update(fx.g, 0, fx.state, 0, -10) == 2);
}

TEST_CASE("local update agrees with the naive rule on random neighborhoods") {
    SplitMix64 rng(501);
    for (int rep = 0; rep < 300; ++rep) {
        int deg = 1 + rng.below_int(8);
        std::vector<int> values(static_cast<std::size_t>(deg));
        for (int& value : values) value = rng.below_int(9);
        int t = -4 + rng.below_int(9);
        int p = -6 + rng.below_int(7 + std::min(6, deg));
        p = std::min(p, deg);
        CenterFixture fx(values);
        CHECK(local_update(fx.g, 0, fx.state, t, p) == naive_local_rule(values, t, p));
    }
}

TEST_CASE("decompose recovers the cores of K4") {
    Graph g = complete(4);
    IterationStats stats;
    RankVector ranks = decompose(g, ParamVectors::constant_t(g, 0), &stats);
    CHECK(ranks == RankVector{3, 3, 3, 3});
    // degree vector is already stable here
    CHECK(stats.decrements == 0);
    CHECK(stats.sweeps == 1);
}

TEST_CASE("decompose on P4 matches the enumeration oracle") {
    Graph g = path(4);
    auto params = ParamVectors::constant_t(g, 0);
    RankVector expected = brute_max_chain(g, params);
    CHECK(expected == RankVector{1, 1, 1, 1});
    CHECK(decompose(g, params) == expected);
}

TEST_CASE("decompose on the star at t=-2 matches the enumeration oracle") {
    Graph g = star(3);
    auto params = ParamVectors::constant_t(g, -2);
    RankVector expected = brute_max_chain(g, params);
    CHECK(expected == RankVector{3, 1, 1, 1});
    CHECK(decompose(g, params) == expected);
}

TEST_CASE("infeasible parameters are rejected with the offending node") {
    Graph g = path(3);
    ParamVectors params = ParamVectors::constant(g, 0, 0);
    params.p[0] = g.degree(0) + 1;
    CHECK_THROWS_WITH_AS(decompose(g, params), doctest::Contains(g.label(0).c_str()),
                         feasibility_error);
}

TEST_CASE("init states above the degree vector are rejected") {
    Graph g = path(3);
    RankVector init = g.degrees();
    init[0]++;
    CHECK_THROWS_AS(fixed_point(g, ParamVectors::constant_t(g, 0), init), validation_error);
    CHECK_THROWS_AS(fixed_point(g, ParamVectors::constant_t(g, 0), RankVector{1}), validation_error);
}

TEST_CASE("the output of decompose is a fixed point") {
    SplitMix64 rng(502);
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = random_connected(3 + rng.below_int(10), 0.3, rng.next());
        ParamVectors params = random_feasible_params(g, rng);
        RankVector z = decompose(g, params);
        for (int v = 0; v < g.node_count(); ++v)
            CHECK(local_update(g, v, z, params.t[v], params.p[v]) == z[v]);
        CHECK(verify_chain(g, params, z));
    }
}

TEST_CASE("every schedule policy and seed reaches the same fixed point") {
    SplitMix64 rng(503);
    for (int rep = 0; rep < 15; ++rep) {
        Graph g = random_connected(4 + rng.below_int(12), 0.3, rng.next());
        ParamVectors params = random_feasible_params(g, rng);
        RankVector reference = decompose(g, params);
        for (auto policy : {UpdateSchedule::Policy::RoundRobin, UpdateSchedule::Policy::RandomPerm,
                            UpdateSchedule::Policy::Worklist})
            for (std::uint64_t seed : {7ULL, 8ULL, 9ULL})
                CHECK(fixed_point(g, params, g.degrees(), {policy, seed}) == reference);
    }
}

TEST_CASE("from the degree vector the trajectory only decreases") {
    SplitMix64 rng(504);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = random_connected(4 + rng.below_int(10), 0.3, rng.next());
        ParamVectors params = random_feasible_params(g, rng);

        // hand-rolled round-robin sweep observing every intermediate state
        RankVector state = g.degrees();
        std::uint64_t decrements = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g.node_count(); ++v) {
                int next = local_update(g, v, state, params.t[v], params.p[v]);
                CHECK(next <= state[v]);
                if (next != state[v]) {
                    decrements += static_cast<std::uint64_t>(state[v] - next);
                    state[v] = next;
                    changed = true;
                }
            }
        }
        CHECK(decrements <= degree_sum(g));
        CHECK(state == decompose(g, params));

        IterationStats stats;
        decompose(g, params, &stats);
        CHECK(stats.decrements == decrements);
    }
}

TEST_CASE("spectrum rows equal cold starts, the k-core row and the endpoints") {
    SplitMix64 rng(505);
    for (int rep = 0; rep < 15; ++rep) {
        Graph g = random_connected(4 + rng.below_int(12), 0.35, rng.next());
        CoreSpectrum spec = spectrum(g);
        CHECK(spec.lambda == lambda(g));
        CHECK(spec.row(-spec.lambda) == g.degrees());
        CHECK(spec.row(0) == kcore_peeling(g));
        for (int t = -spec.lambda; t <= 0; ++t) {
            CHECK(decompose(g, ParamVectors::constant_t(g, t)) == spec.row(t));
            if (t > -spec.lambda) {
                for (int v = 0; v < g.node_count(); ++v)
                    CHECK(spec.rank(v, t) <= spec.rank(v, t - 1));
            }
        }
        // below -lambda the ranks stay at the degrees
        CHECK(decompose(g, ParamVectors::constant_t(g, -spec.lambda - 1)) == g.degrees());
    }
}

TEST_CASE("spectrum of K4 is the single k-core row") {
    CoreSpectrum spec = spectrum(complete(4));
    CHECK(spec.lambda == 0);
    CHECK(spec.rows.size() == 1);
    CHECK(spec.row(0) == RankVector{3, 3, 3, 3});
}

TEST_CASE("spectrum of the star") {
    CoreSpectrum spec = spectrum(star(3));
    REQUIRE(spec.lambda == 2);
    CHECK(spec.row(-2) == RankVector{3, 1, 1, 1});
    CHECK(spec.row(-1) == RankVector{2, 1, 1, 1});
    CHECK(spec.row(0) == RankVector{1, 1, 1, 1});
}

TEST_CASE("spectrum of P3") {
    Graph g = path(3);
    CoreSpectrum spec = spectrum(g);
    REQUIRE(spec.lambda == 1);
    CHECK(spec.row(-1) == RankVector{1, 2, 1});
    CHECK(spec.row(0) == RankVector{1, 1, 1});
}

TEST_CASE("verify_chain accepts the k-core ranks of K4 and rejects an inflated rank") {
    Graph g = complete(4);
    auto params = ParamVectors::constant_t(g, 0);
    CHECK(verify_chain(g, params, {3, 3, 3, 3}));
    CHECK_FALSE(verify_chain(g, params, {4, 3, 3, 3}));
}

TEST_CASE("verify_chain rejects infeasible parameters and negative ranks") {
    Graph g = complete(4);
    ParamVectors params = ParamVectors::constant(g, 0, 4);
    CHECK_THROWS_AS(verify_chain(g, params, {0, 0, 0, 0}), feasibility_error);
    CHECK_THROWS_AS(verify_chain(g, ParamVectors::constant_t(g, 0), {-1, 0, 0, 0}),
                    validation_error);
}

TEST_CASE("chain size is the deepest nonempty level") {
    Graph g = star(3);
    CHECK(chain_size(decompose(g, ParamVectors::constant_t(g, -2))) == 3);
    CHECK(chain_size(decompose(g, ParamVectors::constant_t(g, 0))) == 1);
}

TEST_CASE("iteration from a low start still lands on a fixed point") {
    // states can rise from a start below the target; the result is a fixed
    // point, though not necessarily the maximal-chain one
    SplitMix64 rng(509);
    for (int rep = 0; rep < 15; ++rep) {
        Graph g = random_connected(4 + rng.below_int(8), 0.3, rng.next());
        ParamVectors params = ParamVectors::constant_t(g, -1 - rng.below_int(2));
        RankVector zeros(static_cast<std::size_t>(g.node_count()), 0);
        RankVector z = fixed_point(g, params, zeros);
        for (int v = 0; v < g.node_count(); ++v)
            CHECK(local_update(g, v, z, params.t[v], params.p[v]) == z[v]);
        RankVector maximal = decompose(g, params);
        for (int v = 0; v < g.node_count(); ++v) CHECK(z[v] <= maximal[v]);
    }
}

TEST_CASE("valid chains are closed under entrywise merge") {
    SplitMix64 rng(506);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = random_connected(3 + rng.below_int(5), 0.35, rng.next());
        ParamVectors params = random_feasible_params(g, rng);
        std::vector<RankVector> valid;
        for (int tries = 0; tries < 150 && valid.size() < 5; ++tries) {
            RankVector z(static_cast<std::size_t>(g.node_count()));
            for (int v = 0; v < g.node_count(); ++v) z[v] = rng.below_int(g.degree(v) + 1);
            if (verify_chain(g, params, z)) valid.push_back(std::move(z));
        }
        for (std::size_t i = 0; i < valid.size(); ++i)
            for (std::size_t j = i + 1; j < valid.size(); ++j) {
                RankVector merged = valid[i];
                for (int v = 0; v < g.node_count(); ++v)
                    merged[v] = std::max(merged[v], valid[j][v]);
                CHECK(verify_chain(g, params, merged));
            }
    }
}

TEST_CASE("decompose equals the enumeration oracle under general parameters") {
    SplitMix64 rng(507);
    int built = 0;
    while (built < 60) {
        int n = 3 + rng.below_int(5); // up to 7
        try {
            Graph g = erdos_renyi(n, 0.5, rng.next());
            for (int rep = 0; rep < 4; ++rep) {
                ParamVectors params = random_feasible_params(g, rng);
                CHECK(decompose(g, params) == brute_max_chain(g, params));
            }
            built++;
        } catch (const error&) {
        }
    }
}

TEST_SUITE_END();
