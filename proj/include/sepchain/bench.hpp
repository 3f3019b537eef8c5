#pragma once

#include "sepchain/bounds.hpp"
#include "sepchain/chain.hpp"
#include "sepchain/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sepchain {

enum class RelayAlgo { ChainRank, ZeroCore, Random, MaxDeg };

const std::string& algo_name(RelayAlgo algo);
std::optional<RelayAlgo> algo_from_name(const std::string& name);

// Girth selection shared by the bounds/relay/bench surfaces: either compute
// the exact girth (forests fall back to 3) or use a fixed value >= 3.
struct GirthChoice {
    bool exact = false;
    int fixed_value = 3;
};

int resolve_girth(const Graph& g, const GirthChoice& choice);
GirthChoice parse_girth_choice(const std::string& text); // "exact", "3", any integer >= 3

struct BenchConfig {
    std::string graph_path;
    int source_count = 100;
    int trials_per_source = 1000;
    std::vector<RelayAlgo> algorithms = {RelayAlgo::ChainRank, RelayAlgo::ZeroCore,
                                         RelayAlgo::Random, RelayAlgo::MaxDeg};
    std::uint64_t master_seed = 0;
    GirthChoice girth;
};

struct AlgoStats {
    double mean = 0.0;
    int max = 0;
    int min = 0;
    std::optional<double> normalized_gain; // only for non-random algorithms
};

struct SourceResult {
    std::string source_label;
    std::vector<std::pair<RelayAlgo, AlgoStats>> algos; // config order
};

struct BenchReport {
    // provenance
    std::string graph_path;
    int n = 0;
    std::int64_t edge_count = 0;
    int k_max = 0;
    double avg_degree = 0.0;
    int lambda = 0;
    int girth_used = 3;
    std::uint64_t master_seed = 0;
    int source_count = 0;
    int trials_per_source = 0;
    std::vector<RelayAlgo> algorithms;
    ClassicalBounds classical;
    int max_l_e = 0;

    std::vector<SourceResult> per_source;                    // sample order
    std::vector<std::pair<RelayAlgo, AlgoStats>> aggregate;  // config order
    double wall_seconds = 0.0; // diagnostic only, never emitted in reports
};

// Runs the full protocol: samples `source_count` distinct sources, runs every
// configured algorithm `trials_per_source` times per source with per-(source,
// trial, algorithm) derived seeds, and aggregates. Deterministic in
// (graph, config).
BenchReport run_bench(const Graph& g, const BenchConfig& cfg);

// Per-source rows "source,algorithm,mean,normalized_gain,max,min" followed by
// four-field aggregate rows; gains with 4 decimals, blank for random.
std::string emit_csv(const BenchReport& report);

// Full nested report, stable (alphabetical) key order, canonical under
// parse + re-dump.
std::string emit_json(const BenchReport& report);

} // namespace sepchain
