#include "sepchain/relay.hpp"

#include "sepchain/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepchain {

void LocalView::require_local(int u) const {
    if (u == current_) return;
    require_neighbor(u);
}

void LocalView::require_neighbor(int u) const {
    auto nb = graph_.neighbors(current_);
    if (!std::binary_search(nb.begin(), nb.end(), u))
        throw std::logic_error("relay decision touched a non-neighbor node");
}

namespace {

// Extension term for one t as seen from the walker (reads only its own ranks).
int extension_term(const LocalView& view, int self, int t, int consumed, int g) {
    const int z = view.rank(self, t);
    if (t == 0) return std::max(z - consumed, 0);
    return std::max(rank_parts(z, t).quotient - deficit(z, consumed, t, g), 0);
}

int pick_t(const LocalView& view, int self, int consumed, int g, const TiePolicy& policy,
           TMode mode, SplitMix64& rng) {
    if (mode == TMode::ZeroOnly) return 0;
    int best = 0;
    std::vector<int> winners;
    for (int t = view.t_min(); t <= 0; ++t) {
        const int term = extension_term(view, self, t, consumed, g);
        if (winners.empty() || term > best) {
            best = term;
            winners.assign(1, t);
        } else if (term == best) {
            winners.push_back(t);
        }
    }
    switch (policy.t_choice) {
    case TiePolicy::TChoice::LargestT: return winners.back();
    case TiePolicy::TChoice::SmallestT: return winners.front();
    case TiePolicy::TChoice::Random: return winners[rng.below(winners.size())];
    }
    return winners.back();
}

// One relay arm. `visited` already marks nodes that may not be reused;
// `consumed` counts every node committed to the path so far (including the
// start). Appends the chosen hops to `out` and marks them visited.
void grow_arm(const Graph& g, const CoreSpectrum& spectrum, int start, int girth_used,
              const TiePolicy& policy, TMode mode, SplitMix64& rng, std::vector<char>& visited,
              int consumed, std::vector<int>& out) {
    int current = start;
    std::vector<int> candidates;
    for (;;) {
        LocalView view(g, spectrum, visited, current);
        const int t = pick_t(view, current, consumed - 1, girth_used, policy, mode, rng);
        int best_score = -1;
        candidates.clear();
        for (int u : view.neighbors()) {
            if (view.visited(u)) continue;
            const int score = view.rank(u, t);
            if (score > best_score) {
                best_score = score;
                candidates.assign(1, u);
            } else if (score == best_score) {
                candidates.push_back(u);
            }
        }
        if (candidates.empty()) return;
        const int next = candidates.size() == 1
                             ? candidates.front()
                             : candidates[rng.below(candidates.size())];
        visited[next] = 1;
        out.push_back(next);
        current = next;
        consumed++;
    }
}

void require_source(const Graph& g, int source) {
    if (source < 0 || source >= g.node_count()) throw validation_error("source node out of range");
}

RelayPath greedy_walk(const Graph& g, int source, SplitMix64& rng, bool max_degree_only) {
    require_source(g, source);
    std::vector<char> visited(static_cast<std::size_t>(g.node_count()), 0);
    visited[source] = 1;
    RelayPath path;
    path.nodes.push_back(source);
    std::vector<int> candidates;
    int current = source;
    for (;;) {
        int best_deg = -1;
        candidates.clear();
        for (int u : g.neighbors(current)) {
            if (visited[u]) continue;
            if (!max_degree_only) {
                candidates.push_back(u);
            } else if (g.degree(u) > best_deg) {
                best_deg = g.degree(u);
                candidates.assign(1, u);
            } else if (g.degree(u) == best_deg) {
                candidates.push_back(u);
            }
        }
        if (candidates.empty()) break;
        int next = candidates.size() == 1 ? candidates.front()
                                          : candidates[rng.below(candidates.size())];
        visited[next] = 1;
        path.nodes.push_back(next);
        current = next;
    }
    return path;
}

} // namespace

RelayPath relay_start(const Graph& g, const CoreSpectrum& spectrum, int source, int girth_used,
                      const TiePolicy& policy, TMode mode) {
    require_source(g, source);
    SplitMix64 rng(policy.seed);
    std::vector<char> visited(static_cast<std::size_t>(g.node_count()), 0);
    visited[source] = 1;
    RelayPath path;
    path.nodes.push_back(source);
    grow_arm(g, spectrum, source, girth_used, policy, mode, rng, visited, 1, path.nodes);
    return path;
}

RelayPath relay_containing(const Graph& g, const CoreSpectrum& spectrum, int source,
                           int girth_used, const TiePolicy& policy) {
    require_source(g, source);
    SplitMix64 rng(policy.seed);
    std::vector<char> visited(static_cast<std::size_t>(g.node_count()), 0);
    visited[source] = 1;

    std::vector<int> arm1;
    grow_arm(g, spectrum, source, girth_used, policy, TMode::Full, rng, visited, 1, arm1);

    // Second arm restarts at the source; its step budget continues counting
    // the nodes the first arm already used.
    std::vector<int> arm2;
    grow_arm(g, spectrum, source, girth_used, policy, TMode::Full, rng, visited,
             static_cast<int>(arm1.size()) + 1, arm2);

    RelayPath path;
    path.nodes.assign(arm2.rbegin(), arm2.rend());
    path.nodes.push_back(source);
    path.nodes.insert(path.nodes.end(), arm1.begin(), arm1.end());
    return path;
}

RelayPath baseline_random(const Graph& g, int source, SplitMix64& rng) {
    return greedy_walk(g, source, rng, false);
}

RelayPath baseline_maxdeg(const Graph& g, int source, SplitMix64& rng) {
    return greedy_walk(g, source, rng, true);
}

} // namespace sepchain
