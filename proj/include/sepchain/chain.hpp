#pragma once

#include "sepchain/graph.hpp"

#include <cstdint>
#include <vector>

namespace sepchain {

// Per-node chain ranks. Doubles as a node-state vector of the update system.
using RankVector = std::vector<int>;

// Per-node (t, p) parameters of a separate-chain decomposition. Feasible iff
// p_v <= degree(v) for every v.
struct ParamVectors {
    std::vector<int> t;
    std::vector<int> p;

    static ParamVectors constant(const Graph& g, int t_value, int p_value);
    // Constant t with p_v = -degree(v), the degenerate p used by the spectrum.
    static ParamVectors constant_t(const Graph& g, int t_value);
};

// Throws feasibility_error listing every node with p_v > degree(v).
void check_feasible(const Graph& g, const ParamVectors& params);

// Node update order. All fair policies reach the same fixed point; the
// randomized ones exist to test exactly that.
struct UpdateSchedule {
    enum class Policy { RoundRobin, RandomPerm, Worklist };
    Policy policy = Policy::RoundRobin;
    std::uint64_t seed = 0;
};

struct IterationStats {
    std::uint64_t decrements = 0; // total unit decreases of node states
    std::uint64_t sweeps = 0;     // full passes over the node set
};

// Largest k such that at least k neighbor states are >= k + t_v and at least
// max{0, k + p_v} of them are >= k. Always well defined (k = 0 qualifies when
// p_v <= degree(v)).
int local_update(const Graph& g, int v, const RankVector& state, int t_v, int p_v);

// Runs the update system from `init` until a full pass changes nothing.
// Requires 0 <= init <= degree pointwise; inits above the degree vector are
// rejected. Aborts with internal_error if total decrements ever exceed
// sum(degree) + n, which a run from the degree vector can never do.
RankVector fixed_point(const Graph& g, const ParamVectors& params, RankVector init,
                       const UpdateSchedule& schedule = {}, IterationStats* stats = nullptr);

// Maximal-chain ranks: the fixed point reached from the degree vector.
RankVector decompose(const Graph& g, const ParamVectors& params, IterationStats* stats = nullptr);

// True iff `ranks` induces a valid [t, p]-separate chain: for every level
// i <= ranks_v, v has >= max{0, i + p_v} neighbors of rank >= i and >= i
// neighbors of rank >= max{0, i + t_v}.
bool verify_chain(const Graph& g, const ParamVectors& params, const RankVector& ranks);

// Size of the induced chain: the deepest nonempty level.
int chain_size(const RankVector& ranks);

// Ranks C_t(v) for every constant t in [-lambda(G), 0] with degenerate p.
struct CoreSpectrum {
    int lambda = 0;
    std::vector<RankVector> rows; // rows[i] is the row for t = -lambda + i

    int t_min() const { return -lambda; }
    const RankVector& row(int t) const { return rows[static_cast<std::size_t>(t + lambda)]; }
    int rank(int v, int t) const { return row(t)[static_cast<std::size_t>(v)]; }
};

// Builds the full spectrum: the row at t = -lambda starts from the degree
// vector, each later row warm-starts from its predecessor. Stats, when given,
// accumulate over all rows.
CoreSpectrum spectrum(const Graph& g, IterationStats* stats = nullptr);

} // namespace sepchain
