#include "sepchain/random_graphs.hpp"

#include "sepchain/errors.hpp"
#include "sepchain/rng.hpp"

#include <set>
#include <vector>

namespace sepchain {

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 2 || p < 0.0 || p > 1.0) throw validation_error("bad erdos_renyi arguments");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.emplace_back(u, v);
    return Graph::from_int_edges(edges);
}

Graph gnm(int n, std::int64_t m, std::uint64_t seed) {
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (n < 2 || m < 1 || m > max_edges) throw validation_error("bad gnm arguments");
    SplitMix64 rng(seed);
    std::set<std::pair<int, int>> picked;
    while (static_cast<std::int64_t>(picked.size()) < m) {
        int u = rng.below_int(n);
        int v = rng.below_int(n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        picked.emplace(u, v);
    }
    return Graph::from_int_edges({picked.begin(), picked.end()});
}

Graph barabasi_albert(int n, int attach, std::uint64_t seed) {
    if (attach < 1 || n <= attach) throw validation_error("bad barabasi_albert arguments");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    // endpoint pool: each node appears once per incident edge, so uniform
    // draws from it are degree-proportional
    std::vector<int> pool;

    // seed clique on attach + 1 nodes
    for (int u = 0; u <= attach; ++u)
        for (int v = u + 1; v <= attach; ++v) {
            edges.emplace_back(u, v);
            pool.push_back(u);
            pool.push_back(v);
        }

    std::set<int> targets;
    for (int v = attach + 1; v < n; ++v) {
        targets.clear();
        while (static_cast<int>(targets.size()) < attach)
            targets.insert(pool[rng.below(pool.size())]);
        for (int u : targets) {
            edges.emplace_back(u, v);
            pool.push_back(u);
            pool.push_back(v);
        }
    }
    return Graph::from_int_edges(edges);
}

Graph random_connected(int n, double extra_p, std::uint64_t seed) {
    if (n < 2) throw validation_error("bad random_connected arguments");
    SplitMix64 rng(seed);
    std::set<std::pair<int, int>> picked;
    for (int v = 1; v < n; ++v) {
        int u = rng.below_int(v);
        picked.emplace(u, v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < extra_p) picked.emplace(u, v);
    return Graph::from_int_edges({picked.begin(), picked.end()});
}

} // namespace sepchain
