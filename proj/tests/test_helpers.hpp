#pragma once

#include "sepchain/chain.hpp"
#include "sepchain/graph.hpp"
#include "sepchain/rng.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sepchain::testing {

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_int_edges(edges);
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_int_edges(edges);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_int_edges(edges);
}

// Center is node 0.
inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_int_edges(edges);
}

inline ParamVectors random_feasible_params(const Graph& g, SplitMix64& rng, int span = 3) {
    ParamVectors params;
    params.t.resize(static_cast<std::size_t>(g.node_count()));
    params.p.resize(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) {
        params.t[v] = -span + rng.below_int(2 * span + 1);
        params.p[v] = -span + rng.below_int(std::min(span, g.degree(v)) + span + 1);
    }
    return params;
}

} // namespace sepchain::testing
