#pragma once

#include "sepchain/chain.hpp"
#include "sepchain/graph.hpp"

#include <optional>
#include <vector>

namespace sepchain {

// Decomposition of a rank z against a negative t: z = remainder + |t| * quotient
// with 0 <= remainder < |t|, plus the least j making remainder + |t| * j >= 2.
struct RankParts {
    int quotient = 0;
    int remainder = 0;
    int steps_to_two = 0;
};

// Requires t <= -1 (the t = 0 cases of the bounds are handled by convention,
// never here) and z >= 0.
RankParts rank_parts(int z, int t);

// Capped floor expression shared by all bounds. For t <= -1, g >= 3 and z >= 0:
//   min{ quotient, max{ -1, floor[(quotient + x - 1 - (g-2)(remainder - 1))
//                                 / (1 - t(g-2))] } }
// The result lies in [-1, quotient].
int deficit(int z, int x, int t, int g);

// Spectrum plus the girth value fed into the formulas.
struct BoundContext {
    CoreSpectrum spectrum;
    int girth_used = 3;

    // Validates girth_used >= 3 and, when the exact girth is known and finite,
    // girth_used <= exact.
    static BoundContext create(CoreSpectrum spectrum, int girth_used,
                               std::optional<int> exact_girth = std::nullopt);
};

// Per-t terms, exposed for direct checking. t = 0 has its own closed form.
int terminal_term(int z, int t, int g);                        // t <= -1: quotient - deficit(z, 0)
int terminal_term_zero(int c0, int g);                         // (g-2)(c0 - 1) + 1
int containing_term(int z, int t, int g);                      // t <= -1: 2q - deficit - second-arm deficit
std::optional<int> refined_terminal_term(int z, int t, int g); // t <= -1; empty when no k qualifies

// Longest-path lower bounds read off the spectrum.
int terminal_bound(const BoundContext& ctx, int v);                        // path with v as a terminal
int containing_bound(const BoundContext& ctx, int v);                      // path containing v
std::optional<int> refined_terminal_bound(const BoundContext& ctx, int v); // sharper terminal bound; empty when inapplicable

// Remaining-extension potential after `consumed` nodes are already used, and
// the set of t values (ascending) attaining it. These drive the relay search.
int extension_bound(const BoundContext& ctx, int v, int consumed);
std::vector<int> extension_argmax(const BoundContext& ctx, int v, int consumed);

// All three bounds for every node, with the t attaining each (largest on ties).
struct PathBounds {
    std::vector<int> l_e;
    std::vector<int> l_m;
    std::vector<std::optional<int>> l_e_hat;
    std::vector<int> argmax_t_le;
    std::vector<int> argmax_t_lm;
    std::vector<std::optional<int>> argmax_t_le_hat;
};

PathBounds all_bounds(const BoundContext& ctx);

// Classical comparison bounds: a path of length erdos_gallai (largest k with
// edge_count > n(k-1)/2) and of length min_degree always exists.
struct ClassicalBounds {
    int erdos_gallai = 0;
    int min_degree = 0;
};

ClassicalBounds classical_bounds(const Graph& g);

} // namespace sepchain
