#include "sepchain/bounds.hpp"

#include "sepchain/errors.hpp"

#include <algorithm>
#include <limits>

namespace sepchain {

namespace {

// Floor division for a positive divisor (rounds toward minus infinity).
int floor_div(int num, int den) {
    int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

// remainder + |t| * j, the rank left over after j quotient steps.
int window(const RankParts& parts, int t, int j) { return parts.remainder + (-t) * j; }

} // namespace

RankParts rank_parts(int z, int t) {
    if (t >= 0) throw validation_error("rank_parts requires t <= -1");
    if (z < 0) throw validation_error("rank_parts requires z >= 0");
    const int step = -t;
    RankParts parts;
    parts.quotient = z / step;
    parts.remainder = z % step;
    parts.steps_to_two = 0;
    while (window(parts, t, parts.steps_to_two) < 2) parts.steps_to_two++;
    return parts;
}

int deficit(int z, int x, int t, int g) {
    const RankParts parts = rank_parts(z, t);
    const int num = parts.quotient + x - 1 - (g - 2) * (parts.remainder - 1);
    const int den = 1 - t * (g - 2); // positive for t <= -1, g >= 3
    return std::min(parts.quotient, std::max(-1, floor_div(num, den)));
}

BoundContext BoundContext::create(CoreSpectrum spectrum, int girth_used,
                                  std::optional<int> exact_girth) {
    if (girth_used < 3) throw validation_error("girth value must be at least 3");
    if (exact_girth && girth_used > *exact_girth)
        throw validation_error("girth value exceeds the exact girth of the graph");
    return BoundContext{std::move(spectrum), girth_used};
}

int terminal_term(int z, int t, int g) {
    return rank_parts(z, t).quotient - deficit(z, 0, t, g);
}

int terminal_term_zero(int c0, int g) { return (g - 2) * (c0 - 1) + 1; }

int containing_term(int z, int t, int g) {
    const int q = rank_parts(z, t).quotient;
    const int first = deficit(z, 0, t, g);
    const int second = deficit(z, q - first, t, g);
    return 2 * q - first - second;
}

std::optional<int> refined_terminal_term(int z, int t, int g) {
    const RankParts parts = rank_parts(z, t);
    const int q = parts.quotient;
    const int first = deficit(z, 0, t, g);
    if (first - parts.steps_to_two < 0) return std::nullopt;

    int inner_best = std::numeric_limits<int>::max();
    for (int k = 0; k <= first - parts.steps_to_two; ++k) {
        const int used = q - first + k - (g - 2) * (window(parts, t, first - k) - 1);
        const int carry_rank = std::max(0, window(parts, t, q - used + 1));
        const int tail = deficit(carry_rank, q - first + k, t, g);
        inner_best = std::min(inner_best, k - used - tail);
    }
    return 2 * q - first + inner_best;
}

int terminal_bound(const BoundContext& ctx, int v) {
    const CoreSpectrum& spec = ctx.spectrum;
    int best = terminal_term_zero(spec.rank(v, 0), ctx.girth_used);
    for (int t = -spec.lambda; t <= -1; ++t)
        best = std::max(best, terminal_term(spec.rank(v, t), t, ctx.girth_used));
    return best;
}

int containing_bound(const BoundContext& ctx, int v) {
    const CoreSpectrum& spec = ctx.spectrum;
    int best = terminal_term_zero(spec.rank(v, 0), ctx.girth_used);
    for (int t = -spec.lambda; t <= -1; ++t)
        best = std::max(best, containing_term(spec.rank(v, t), t, ctx.girth_used));
    return best;
}

std::optional<int> refined_terminal_bound(const BoundContext& ctx, int v) {
    const CoreSpectrum& spec = ctx.spectrum;
    std::optional<int> best;
    for (int t = -spec.lambda; t <= -1; ++t) {
        auto term = refined_terminal_term(spec.rank(v, t), t, ctx.girth_used);
        if (term && (!best || *term > *best)) best = term;
    }
    return best;
}

int extension_bound(const BoundContext& ctx, int v, int consumed) {
    const CoreSpectrum& spec = ctx.spectrum;
    int best = std::max(spec.rank(v, 0) - consumed, 0);
    for (int t = -spec.lambda; t <= -1; ++t) {
        const int z = spec.rank(v, t);
        best = std::max(best,
                        std::max(rank_parts(z, t).quotient - deficit(z, consumed, t, ctx.girth_used), 0));
    }
    return best;
}

std::vector<int> extension_argmax(const BoundContext& ctx, int v, int consumed) {
    const CoreSpectrum& spec = ctx.spectrum;
    const int best = extension_bound(ctx, v, consumed);
    std::vector<int> winners;
    for (int t = -spec.lambda; t <= 0; ++t) {
        int term;
        if (t == 0) {
            term = std::max(spec.rank(v, 0) - consumed, 0);
        } else {
            const int z = spec.rank(v, t);
            term = std::max(rank_parts(z, t).quotient - deficit(z, consumed, t, ctx.girth_used), 0);
        }
        if (term == best) winners.push_back(t);
    }
    return winners;
}

PathBounds all_bounds(const BoundContext& ctx) {
    const CoreSpectrum& spec = ctx.spectrum;
    const int n = static_cast<int>(spec.rows.front().size());
    PathBounds out;
    out.l_e.resize(n);
    out.l_m.resize(n);
    out.l_e_hat.resize(n);
    out.argmax_t_le.resize(n);
    out.argmax_t_lm.resize(n);
    out.argmax_t_le_hat.resize(n);

    for (int v = 0; v < n; ++v) {
        int best_le = terminal_term_zero(spec.rank(v, 0), ctx.girth_used);
        int best_lm = best_le;
        int arg_le = 0, arg_lm = 0;
        std::optional<int> best_hat;
        std::optional<int> arg_hat;
        for (int t = -spec.lambda; t <= -1; ++t) {
            const int z = spec.rank(v, t);
            const int te = terminal_term(z, t, ctx.girth_used);
            // ties keep the largest t, so start from the most negative
            if (te > best_le) {
                best_le = te;
                arg_le = t;
            } else if (te == best_le && arg_le != 0) {
                arg_le = std::max(arg_le, t);
            }
            const int tm = containing_term(z, t, ctx.girth_used);
            if (tm > best_lm) {
                best_lm = tm;
                arg_lm = t;
            } else if (tm == best_lm && arg_lm != 0) {
                arg_lm = std::max(arg_lm, t);
            }
            auto th = refined_terminal_term(z, t, ctx.girth_used);
            if (th && (!best_hat || *th >= *best_hat)) {
                best_hat = th;
                arg_hat = t;
            }
        }
        out.l_e[v] = best_le;
        out.l_m[v] = best_lm;
        out.l_e_hat[v] = best_hat;
        out.argmax_t_le[v] = arg_le;
        out.argmax_t_lm[v] = arg_lm;
        out.argmax_t_le_hat[v] = arg_hat;
    }
    return out;
}

ClassicalBounds classical_bounds(const Graph& g) {
    ClassicalBounds out;
    const std::int64_t n = g.node_count();
    const std::int64_t m = g.edge_count();
    // largest k with n(k-1) < 2m
    out.erdos_gallai = static_cast<int>((2 * m - 1) / n + 1);
    out.min_degree = *std::min_element(g.degrees().begin(), g.degrees().end());
    return out;
}

} // namespace sepchain
