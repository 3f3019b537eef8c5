#include "sepchain/oracle.hpp"

#include "sepchain/errors.hpp"

#include <algorithm>
#include <limits>

namespace sepchain {

RankVector brute_max_chain(const Graph& g, const ParamVectors& params, const OracleLimits& limits) {
    check_feasible(g, params);
    const int n = g.node_count();
    if (n > limits.max_nodes_chain)
        throw size_error("graph too large for chain enumeration");
    std::int64_t states = 1;
    for (int v = 0; v < n; ++v) {
        states *= g.degree(v) + 1;
        if (states > limits.max_state_space)
            throw size_error("state space too large for chain enumeration");
    }

    RankVector best(static_cast<std::size_t>(n), -1);
    RankVector z(static_cast<std::size_t>(n), 0);
    for (;;) {
        if (verify_chain(g, params, z))
            for (int v = 0; v < n; ++v) best[v] = std::max(best[v], z[v]);
        // odometer step
        int v = 0;
        while (v < n && z[v] == g.degree(v)) z[v++] = 0;
        if (v == n) break;
        z[v]++;
    }
    if (best.front() < 0) throw internal_error("no valid rank vector found; zero should verify");
    return best;
}

namespace {

struct PathSearch {
    const Graph& g;
    std::vector<char> visited;
    int best = 0;

    explicit PathSearch(const Graph& graph)
        : g(graph), visited(static_cast<std::size_t>(graph.node_count()), 0) {}

    void extend(int u, int len) {
        best = std::max(best, len);
        for (int w : g.neighbors(u)) {
            if (visited[w]) continue;
            visited[w] = 1;
            extend(w, len + 1);
            visited[w] = 0;
        }
    }

    // Longest second arm from `anchor`, avoiding everything currently visited.
    int second_arm(int anchor) {
        int saved = best;
        best = 0;
        extend(anchor, 0);
        int result = best;
        best = saved;
        return result;
    }

    void extend_two_sided(int u, int anchor, int len) {
        best = std::max(best, len + second_arm(anchor));
        for (int w : g.neighbors(u)) {
            if (visited[w]) continue;
            visited[w] = 1;
            extend_two_sided(w, anchor, len + 1);
            visited[w] = 0;
        }
    }
};

void check_path_limits(const Graph& g, int v, const OracleLimits& limits) {
    if (g.node_count() > limits.max_nodes_path)
        throw size_error("graph too large for longest-path enumeration");
    if (v < 0 || v >= g.node_count()) throw validation_error("node out of range");
}

} // namespace

int brute_longest_from(const Graph& g, int v, const OracleLimits& limits) {
    check_path_limits(g, v, limits);
    PathSearch search(g);
    search.visited[v] = 1;
    search.extend(v, 0);
    return search.best;
}

int brute_longest_through(const Graph& g, int v, const OracleLimits& limits) {
    check_path_limits(g, v, limits);
    PathSearch search(g);
    search.visited[v] = 1;
    search.extend_two_sided(v, v, 0);
    return search.best;
}

RankVector kcore_peeling(const Graph& g) {
    const int n = g.node_count();
    const int max_deg = *std::max_element(g.degrees().begin(), g.degrees().end());

    // Batagelj-Zaversnik bucket peeling.
    std::vector<int> core = g.degrees();
    std::vector<int> bin(static_cast<std::size_t>(max_deg) + 2, 0);
    for (int v = 0; v < n; ++v) bin[core[v] + 1]++;
    for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
    std::vector<int> vert(static_cast<std::size_t>(n));
    std::vector<int> pos(static_cast<std::size_t>(n));
    {
        std::vector<int> cursor(bin.begin(), bin.end() - 1);
        for (int v = 0; v < n; ++v) {
            pos[v] = cursor[core[v]]++;
            vert[pos[v]] = v;
        }
    }
    std::vector<int> start(bin.begin(), bin.end() - 1);
    for (int idx = 0; idx < n; ++idx) {
        int v = vert[idx];
        for (int u : g.neighbors(v)) {
            if (core[u] <= core[v]) continue;
            // swap u to the front of its bucket, then shrink it by one
            int du = core[u];
            int pu = pos[u];
            int pw = start[du];
            int w = vert[pw];
            if (u != w) {
                std::swap(vert[pu], vert[pw]);
                pos[u] = pw;
                pos[w] = pu;
            }
            start[du]++;
            core[u]--;
        }
    }
    return core;
}

std::optional<int> brute_girth(const Graph& g, int max_nodes) {
    if (g.node_count() > max_nodes) throw size_error("graph too large for cycle enumeration");
    const int n = g.node_count();
    int best = std::numeric_limits<int>::max();
    std::vector<char> visited(static_cast<std::size_t>(n), 0);

    // Enumerate paths from each root, closing back to the root; for each
    // cycle the smallest id is some root, so all cycles are seen.
    auto dfs = [&](auto&& self, int root, int u, int len) -> void {
        for (int w : g.neighbors(u)) {
            if (w == root && len >= 2) best = std::min(best, len + 1);
            if (w <= root || visited[w]) continue;
            visited[w] = 1;
            self(self, root, w, len + 1);
            visited[w] = 0;
        }
    };
    for (int root = 0; root < n; ++root) {
        visited[root] = 1;
        dfs(dfs, root, root, 0);
        visited[root] = 0;
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

} // namespace sepchain
