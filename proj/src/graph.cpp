#include "sepchain/graph.hpp"

#include "sepchain/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace sepchain {

namespace {

struct LabelInterner {
    // provisional id = order of first appearance over all labels seen
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> ids;

    int intern(const std::string& label) {
        auto it = ids.find(label);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(label);
        ids.emplace(label, id);
        return id;
    }
};

} // namespace

Graph Graph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
    LabelInterner raw;
    std::vector<std::pair<int, int>> raw_edges;
    raw_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        int u = raw.intern(a); // sequenced: ids follow left-to-right appearance
        int v = raw.intern(b);
        raw_edges.emplace_back(u, v);
    }
    return from_raw(std::move(raw.labels), std::move(raw_edges));
}

Graph Graph::from_int_edges(const std::vector<std::pair<int, int>>& edges) {
    LabelInterner raw;
    std::vector<std::pair<int, int>> raw_edges;
    raw_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        int u = raw.intern(std::to_string(a));
        int v = raw.intern(std::to_string(b));
        raw_edges.emplace_back(u, v);
    }
    return from_raw(std::move(raw.labels), std::move(raw_edges));
}

Graph Graph::from_raw(std::vector<std::string>&& raw_labels,
                      std::vector<std::pair<int, int>>&& raw_edges) {
    const int total = static_cast<int>(raw_labels.size());
    DropCounts drops;

    std::set<std::pair<int, int>> unique_edges;
    for (auto [u, v] : raw_edges) {
        if (u == v) {
            drops.self_loops++;
            continue;
        }
        if (u > v) std::swap(u, v);
        if (!unique_edges.emplace(u, v).second) drops.duplicate_edges++;
    }
    if (unique_edges.empty()) throw error("graph has no edges");

    std::vector<char> has_incident(total, 0);
    for (const auto& [u, v] : unique_edges) {
        has_incident[u] = 1;
        has_incident[v] = 1;
    }

    // Densify ids over surviving nodes, keeping first-appearance order.
    std::vector<int> dense(total, -1);
    int n = 0;
    for (int p = 0; p < total; ++p) {
        if (has_incident[p])
            dense[p] = n++;
        else
            drops.isolated_nodes++;
    }

    Graph g;
    g.n_ = n;
    g.m_ = static_cast<std::int64_t>(unique_edges.size());
    g.drops_ = drops;
    g.labels_.resize(n);
    for (int p = 0; p < total; ++p) {
        if (dense[p] < 0) continue;
        g.labels_[dense[p]] = std::move(raw_labels[p]);
        g.label_to_id_.emplace(g.labels_[dense[p]], dense[p]);
    }

    g.degrees_.assign(n, 0);
    for (const auto& [u, v] : unique_edges) {
        g.degrees_[dense[u]]++;
        g.degrees_[dense[v]]++;
    }
    g.offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + g.degrees_[v];
    g.adj_.resize(static_cast<std::size_t>(2) * unique_edges.size());
    std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [pu, pv] : unique_edges) {
        int u = dense[pu], v = dense[pv];
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> Graph::id_of(std::string_view label) const {
    auto it = label_to_id_.find(std::string(label));
    if (it == label_to_id_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph load_edge_list(std::istream& in, const ParseOptions& options) {
    LabelInterner raw;
    std::vector<std::pair<int, int>> raw_edges;
    std::string line;
    std::int64_t line_no = 0;
    std::vector<std::string> tokens;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (options.comment_chars.find(line[start]) != std::string::npos) continue;

        tokens.clear();
        std::string token;
        for (char c : line) {
            if (c == ' ' || c == '\t' || c == ',') {
                if (!token.empty()) tokens.push_back(std::exchange(token, {}));
            } else {
                token.push_back(c);
            }
        }
        if (!token.empty()) tokens.push_back(std::move(token));

        if (tokens.size() != 2) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 2 node labels, got " << tokens.size();
            throw parse_error(msg.str());
        }
        int u = raw.intern(tokens[0]);
        int v = raw.intern(tokens[1]);
        raw_edges.emplace_back(u, v);
    }
    return Graph::from_raw(std::move(raw.labels), std::move(raw_edges));
}

Graph load_edge_list_file(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path);
    if (!in) throw error("cannot open edge list file: " + path);
    return load_edge_list(in, options);
}

std::string canonical_edge_list(const Graph& g) {
    std::string out;
    for (int u = 0; u < g.node_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (u >= v) continue;
            out += g.label(u);
            out += ' ';
            out += g.label(v);
            out += '\n';
        }
    }
    return out;
}

bool labeled_equal(const Graph& a, const Graph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
    for (int v = 0; v < a.node_count(); ++v) {
        auto id = b.id_of(a.label(v));
        if (!id) return false;
        if (b.degree(*id) != a.degree(v)) return false;
        for (int u : a.neighbors(v)) {
            auto uid = b.id_of(a.label(u));
            if (!uid || !b.has_edge(*id, *uid)) return false;
        }
    }
    return true;
}

int lambda(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.node_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) best = std::max(best, std::abs(g.degree(u) - g.degree(v)));
    return best;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.node_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    std::vector<int> queue;
    queue.reserve(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[root] = 0;
        parent[root] = -1;
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            // Beyond this depth no shorter cycle through root can be found.
            if (2 * dist[u] >= best - 1) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.n = g.node_count();
    s.edge_count = g.edge_count();
    s.k_max = *std::max_element(g.degrees().begin(), g.degrees().end());
    s.avg_degree = 2.0 * static_cast<double>(s.edge_count) / static_cast<double>(s.n);
    s.lambda = lambda(g);
    s.girth = girth(g);
    s.dropped_self_loops = g.drops().self_loops;
    s.dropped_duplicate_edges = g.drops().duplicate_edges;
    s.dropped_isolated_nodes = g.drops().isolated_nodes;
    return s;
}

} // namespace sepchain
