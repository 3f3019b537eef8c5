#pragma once

#include "sepchain/graph.hpp"

#include <cstdint>

namespace sepchain {

// Seeded generators used by the self-check suites and benchmarks. All of them
// are deterministic in (arguments, seed). Isolated nodes are dropped by the
// Graph builder, so the resulting node count can be below n.

// G(n, p): every pair independently with probability p. Throws when no edge
// is drawn.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

// G(n, m): exactly m distinct edges sampled uniformly.
Graph gnm(int n, std::int64_t m, std::uint64_t seed);

// Preferential attachment: each new node attaches to `attach` distinct
// existing nodes picked proportionally to degree.
Graph barabasi_albert(int n, int attach, std::uint64_t seed);

// Random recursive tree plus each extra pair independently with probability
// extra_p; always connected.
Graph random_connected(int n, double extra_p, std::uint64_t seed);

} // namespace sepchain
