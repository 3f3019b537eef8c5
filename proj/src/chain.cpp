#include "sepchain/chain.hpp"

#include "sepchain/errors.hpp"
#include "sepchain/rng.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sepchain {

ParamVectors ParamVectors::constant(const Graph& g, int t_value, int p_value) {
    const auto n = static_cast<std::size_t>(g.node_count());
    return {std::vector<int>(n, t_value), std::vector<int>(n, p_value)};
}

ParamVectors ParamVectors::constant_t(const Graph& g, int t_value) {
    ParamVectors params;
    params.t.assign(static_cast<std::size_t>(g.node_count()), t_value);
    params.p.resize(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) params.p[v] = -g.degree(v);
    return params;
}

void check_feasible(const Graph& g, const ParamVectors& params) {
    const auto n = static_cast<std::size_t>(g.node_count());
    if (params.t.size() != n || params.p.size() != n)
        throw validation_error("parameter vectors must have one entry per node");
    std::ostringstream offenders;
    int count = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        if (params.p[v] > g.degree(v)) {
            if (count++) offenders << ", ";
            offenders << g.label(v) << " (p=" << params.p[v] << " > degree=" << g.degree(v) << ")";
        }
    }
    if (count)
        throw feasibility_error("no separate chain exists; offending nodes: " + offenders.str());
}

int local_update(const Graph& g, int v, const RankVector& state, int t_v, int p_v) {
    auto nb = g.neighbors(v);
    const int deg = static_cast<int>(nb.size());

    // Neighbor states, sorted descending once; #values >= x is then a prefix.
    static thread_local std::vector<int> vals;
    vals.clear();
    for (int u : nb) vals.push_back(state[u]);
    std::sort(vals.begin(), vals.end(), std::greater<int>());

    auto count_at_least = [&](int x) -> int {
        if (x <= 0) return deg;
        return static_cast<int>(std::upper_bound(vals.begin(), vals.end(), x, std::greater<int>()) -
                                vals.begin());
    };

    for (int k = deg; k >= 1; --k) {
        if (count_at_least(k + t_v) >= k && count_at_least(k) >= std::max(0, k + p_v)) return k;
    }
    return 0;
}

namespace {

std::uint64_t decrement_budget(const Graph& g) {
    std::uint64_t sum_deg = 0;
    for (int d : g.degrees()) sum_deg += static_cast<std::uint64_t>(d);
    return sum_deg + static_cast<std::uint64_t>(g.node_count());
}

// One pass over `order`; returns number of changed nodes.
int apply_pass(const Graph& g, const ParamVectors& params, RankVector& state,
               const std::vector<int>& order, std::uint64_t& decrements) {
    int changed = 0;
    for (int v : order) {
        int next = local_update(g, v, state, params.t[v], params.p[v]);
        if (next == state[v]) continue;
        if (next < state[v]) decrements += static_cast<std::uint64_t>(state[v] - next);
        state[v] = next;
        changed++;
    }
    return changed;
}

} // namespace

RankVector fixed_point(const Graph& g, const ParamVectors& params, RankVector init,
                       const UpdateSchedule& schedule, IterationStats* stats) {
    check_feasible(g, params);
    const int n = g.node_count();
    if (static_cast<int>(init.size()) != n)
        throw validation_error("init state must have one entry per node");
    for (int v = 0; v < n; ++v) {
        if (init[v] < 0 || init[v] > g.degree(v))
            throw validation_error("init state out of [0, degree] bounds at node " + g.label(v));
    }

    const std::uint64_t budget = decrement_budget(g);
    IterationStats local;
    RankVector state = std::move(init);

    auto guard = [&] {
        if (local.decrements > budget)
            throw internal_error("fixed-point iteration exceeded its decrement budget");
    };

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    switch (schedule.policy) {
    case UpdateSchedule::Policy::RoundRobin: {
        for (;;) {
            int changed = apply_pass(g, params, state, order, local.decrements);
            local.sweeps++;
            guard();
            if (!changed) break;
        }
        break;
    }
    case UpdateSchedule::Policy::RandomPerm: {
        SplitMix64 rng(schedule.seed);
        for (;;) {
            fisher_yates(order, rng);
            int changed = apply_pass(g, params, state, order, local.decrements);
            local.sweeps++;
            guard();
            if (!changed) break;
        }
        break;
    }
    case UpdateSchedule::Policy::Worklist: {
        // One node at a time; a change re-queues the neighbors (the local
        // function reads neighbor states only). Drains, then one verifying
        // pass below.
        std::vector<char> queued(static_cast<std::size_t>(n), 1);
        std::vector<int> queue = order;
        std::uint64_t pops = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            queued[v] = 0;
            pops++;
            int next = local_update(g, v, state, params.t[v], params.p[v]);
            if (next != state[v]) {
                if (next < state[v]) local.decrements += static_cast<std::uint64_t>(state[v] - next);
                state[v] = next;
                guard();
                for (int u : g.neighbors(v)) {
                    if (!queued[u]) {
                        queued[u] = 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        local.sweeps = (pops + static_cast<std::uint64_t>(n) - 1) / static_cast<std::uint64_t>(n);
        int changed = apply_pass(g, params, state, order, local.decrements);
        local.sweeps++;
        if (changed) throw internal_error("worklist drained on a non-fixed state");
        break;
    }
    }

    if (stats) {
        stats->decrements += local.decrements;
        stats->sweeps += local.sweeps;
    }
    return state;
}

RankVector decompose(const Graph& g, const ParamVectors& params, IterationStats* stats) {
    return fixed_point(g, params, g.degrees(), UpdateSchedule{}, stats);
}

bool verify_chain(const Graph& g, const ParamVectors& params, const RankVector& ranks) {
    check_feasible(g, params);
    const int n = g.node_count();
    if (static_cast<int>(ranks.size()) != n)
        throw validation_error("rank vector must have one entry per node");
    for (int v = 0; v < n; ++v)
        if (ranks[v] < 0) throw validation_error("rank vector has a negative entry");

    for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        for (int i = 0; i <= ranks[v]; ++i) {
            const int same_needed = std::max(0, i + params.p[v]);
            const int reach_level = std::max(0, i + params.t[v]);
            int same = 0, reach = 0;
            for (int u : nb) {
                if (ranks[u] >= i) same++;
                if (ranks[u] >= reach_level) reach++;
            }
            if (same < same_needed || reach < i) return false;
        }
    }
    return true;
}

int chain_size(const RankVector& ranks) {
    return *std::max_element(ranks.begin(), ranks.end());
}

CoreSpectrum spectrum(const Graph& g, IterationStats* stats) {
    CoreSpectrum result;
    result.lambda = lambda(g);
    result.rows.reserve(static_cast<std::size_t>(result.lambda) + 1);

    RankVector state = g.degrees();
    for (int t = -result.lambda; t <= 0; ++t) {
        state = fixed_point(g, ParamVectors::constant_t(g, t), std::move(state), UpdateSchedule{},
                            stats);
        result.rows.push_back(state);
    }
    return result;
}

} // namespace sepchain
