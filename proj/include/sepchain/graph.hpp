#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sepchain {

// Immutable simple undirected graph with dense node ids 0..n-1.
// Self-loops, duplicate edges and isolated nodes are stripped at build time
// (counts are kept); every remaining node has degree >= 1. Adjacency lists
// are sorted, so neighbor membership is a binary search.
class Graph {
  public:
    struct DropCounts {
        std::int64_t self_loops = 0;
        std::int64_t duplicate_edges = 0;
        std::int64_t isolated_nodes = 0;
    };

    // Builds from labeled endpoint pairs, applying the drop rules. Labels are
    // mapped to dense ids in order of first appearance among surviving nodes.
    static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges);

    // Convenience for generated graphs: integer endpoints, labels are their
    // decimal strings.
    static Graph from_int_edges(const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    const std::vector<int>& degrees() const { return degrees_; }
    bool has_edge(int u, int v) const;

    const std::string& label(int v) const { return labels_[v]; }
    std::optional<int> id_of(std::string_view label) const;

    const DropCounts& drops() const { return drops_; }

    // Edges as (u, v) pairs with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const;

  private:
    Graph() = default;

    // Shared builder: `labels` indexed by provisional id, `raw_edges` over
    // provisional ids, possibly with loops and duplicates.
    static Graph from_raw(std::vector<std::string>&& labels,
                          std::vector<std::pair<int, int>>&& raw_edges);
    friend Graph load_edge_list(std::istream& in, const struct ParseOptions& options);

    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<int> offsets_; // size n_+1, CSR row starts
    std::vector<int> adj_;     // size 2*m_, sorted per node
    std::vector<int> degrees_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> label_to_id_;
    DropCounts drops_;
};

struct ParseOptions {
    std::string comment_chars = "#%"; // a line starting with one of these is skipped
};

// Parses "u v" or "u,v" lines into a Graph. Throws parse_error (with the line
// number) on a wrong token count and error when no edges survive.
Graph load_edge_list(std::istream& in, const ParseOptions& options = {});
Graph load_edge_list_file(const std::string& path, const ParseOptions& options = {});

// One edge per line "label_u label_v" with internal u < v, rows ascending by
// (u, v), newline-terminated. Reloading this text gives the same labeled graph.
std::string canonical_edge_list(const Graph& g);

// Same node-label set and same labeled edge set.
bool labeled_equal(const Graph& a, const Graph& b);

struct GraphStats {
    int n = 0;
    std::int64_t edge_count = 0;
    int k_max = 0;
    double avg_degree = 0.0;          // 2 * edge_count / n
    int lambda = 0;                   // max |deg(u) - deg(v)| over edges
    std::optional<int> girth;         // nullopt = acyclic (infinite girth)
    std::int64_t dropped_self_loops = 0;
    std::int64_t dropped_duplicate_edges = 0;
    std::int64_t dropped_isolated_nodes = 0;
};

GraphStats stats(const Graph& g);

// Max absolute degree difference across any edge.
int lambda(const Graph& g);

// Exact girth via a shortest-cycle BFS from every root; nullopt for forests.
std::optional<int> girth(const Graph& g);

} // namespace sepchain
