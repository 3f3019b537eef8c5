#pragma once

#include "sepchain/chain.hpp"
#include "sepchain/graph.hpp"

#include <cstdint>
#include <optional>

namespace sepchain {

// Hard caps for the brute-force references. Exceeding a cap is an error,
// never a silent truncation.
struct OracleLimits {
    int max_nodes_chain = 7;
    int max_nodes_path = 14;
    std::int64_t max_state_space = 5'000'000; // cap on prod(degree(v) + 1)
};

// Maximal-chain ranks by exhaustion: enumerates every vector z with
// 0 <= z_v <= degree(v), keeps those accepted by verify_chain, and returns
// their pointwise maximum (entrywise merging of valid chains stays valid).
RankVector brute_max_chain(const Graph& g, const ParamVectors& params,
                           const OracleLimits& limits = {});

// Exact longest simple path with v as a terminal / containing v, by
// depth-first enumeration with a visited set.
int brute_longest_from(const Graph& g, int v, const OracleLimits& limits = {});
int brute_longest_through(const Graph& g, int v, const OracleLimits& limits = {});

// Classic iterative min-degree peeling; the independent cross-check for the
// t = 0 spectrum row.
RankVector kcore_peeling(const Graph& g);

// Minimum cycle length by exhaustive cycle enumeration (small graphs only);
// nullopt for forests. Cross-check for girth().
std::optional<int> brute_girth(const Graph& g, int max_nodes = 8);

} // namespace sepchain
