#include "sepchain/bench.hpp"

#include "sepchain/errors.hpp"
#include "sepchain/relay.hpp"
#include "sepchain/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace sepchain {

namespace {

const std::vector<std::pair<RelayAlgo, std::string>> kAlgoNames = {
    {RelayAlgo::ChainRank, "chainrank"},
    {RelayAlgo::ZeroCore, "zerocore"},
    {RelayAlgo::Random, "random"},
    {RelayAlgo::MaxDeg, "maxdeg"},
};

double round4(double x) { return std::round(x * 10000.0) / 10000.0; }

std::string fixed4(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    return buf;
}

int run_trial(const Graph& g, const CoreSpectrum& spectrum, int girth_used, RelayAlgo algo,
              int source, std::uint64_t seed) {
    switch (algo) {
    case RelayAlgo::ChainRank: {
        TiePolicy policy;
        policy.seed = seed;
        return relay_start(g, spectrum, source, girth_used, policy, TMode::Full).length();
    }
    case RelayAlgo::ZeroCore: {
        TiePolicy policy;
        policy.seed = seed;
        return relay_start(g, spectrum, source, girth_used, policy, TMode::ZeroOnly).length();
    }
    case RelayAlgo::Random: {
        SplitMix64 rng(seed);
        return baseline_random(g, source, rng).length();
    }
    case RelayAlgo::MaxDeg: {
        SplitMix64 rng(seed);
        return baseline_maxdeg(g, source, rng).length();
    }
    }
    throw internal_error("unknown relay algorithm");
}

} // namespace

const std::string& algo_name(RelayAlgo algo) {
    for (const auto& [a, name] : kAlgoNames)
        if (a == algo) return name;
    throw internal_error("unknown relay algorithm");
}

std::optional<RelayAlgo> algo_from_name(const std::string& name) {
    for (const auto& [a, n] : kAlgoNames)
        if (n == name) return a;
    return std::nullopt;
}

int resolve_girth(const Graph& g, const GirthChoice& choice) {
    if (choice.exact) {
        auto exact = girth(g);
        return exact ? *exact : 3; // forests: conservative default
    }
    if (choice.fixed_value < 3) throw validation_error("girth value must be at least 3");
    return choice.fixed_value;
}

GirthChoice parse_girth_choice(const std::string& text) {
    if (text == "exact") return GirthChoice{true, 3};
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        if (value < 3) throw validation_error("girth value must be at least 3");
        return GirthChoice{false, value};
    } catch (const std::invalid_argument&) {
        throw validation_error("girth must be 'exact' or an integer >= 3, got '" + text + "'");
    } catch (const std::out_of_range&) {
        throw validation_error("girth value out of range: '" + text + "'");
    }
}

BenchReport run_bench(const Graph& g, const BenchConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();

    if (cfg.source_count < 1 || cfg.source_count > g.node_count())
        throw validation_error("source_count must be in [1, node count]");
    if (cfg.trials_per_source < 1) throw validation_error("trials_per_source must be >= 1");
    if (cfg.algorithms.empty()) throw validation_error("no algorithms configured");
    if (std::find(cfg.algorithms.begin(), cfg.algorithms.end(), RelayAlgo::Random) ==
        cfg.algorithms.end())
        throw validation_error("algorithm set must include 'random' (the normalization baseline)");

    BenchReport report;
    report.graph_path = cfg.graph_path;
    report.n = g.node_count();
    report.edge_count = g.edge_count();
    report.k_max = *std::max_element(g.degrees().begin(), g.degrees().end());
    report.avg_degree = 2.0 * static_cast<double>(g.edge_count()) / g.node_count();
    report.lambda = lambda(g);
    report.girth_used = resolve_girth(g, cfg.girth);
    report.master_seed = cfg.master_seed;
    report.source_count = cfg.source_count;
    report.trials_per_source = cfg.trials_per_source;
    report.algorithms = cfg.algorithms;
    report.classical = classical_bounds(g);

    const CoreSpectrum spec = spectrum(g);
    const BoundContext ctx = BoundContext::create(spec, report.girth_used);
    report.max_l_e = 0;
    for (int v = 0; v < g.node_count(); ++v)
        report.max_l_e = std::max(report.max_l_e, terminal_bound(ctx, v));

    // sources: first source_count entries of a seeded shuffle of all nodes
    std::vector<int> nodes(static_cast<std::size_t>(g.node_count()));
    std::iota(nodes.begin(), nodes.end(), 0);
    SplitMix64 source_rng(mix_seed(cfg.master_seed, 0x5009ce5ULL));
    fisher_yates(nodes, source_rng);
    nodes.resize(static_cast<std::size_t>(cfg.source_count));

    for (int source : nodes) {
        SourceResult row;
        row.source_label = g.label(source);
        double mean_random = 0.0;
        for (RelayAlgo algo : cfg.algorithms) {
            AlgoStats stats;
            std::int64_t total = 0;
            stats.max = std::numeric_limits<int>::min();
            stats.min = std::numeric_limits<int>::max();
            const auto tag = static_cast<std::uint64_t>(algo);
            for (int trial = 0; trial < cfg.trials_per_source; ++trial) {
                const std::uint64_t seed =
                    mix_seed(cfg.master_seed, static_cast<std::uint64_t>(source) + 1,
                             static_cast<std::uint64_t>(trial) + 1, tag + 1);
                const int len = run_trial(g, spec, report.girth_used, algo, source, seed);
                total += len;
                stats.max = std::max(stats.max, len);
                stats.min = std::min(stats.min, len);
            }
            stats.mean = static_cast<double>(total) / cfg.trials_per_source;
            if (algo == RelayAlgo::Random) mean_random = stats.mean;
            row.algos.emplace_back(algo, stats);
        }
        for (auto& [algo, stats] : row.algos)
            if (algo != RelayAlgo::Random)
                stats.normalized_gain = (stats.mean - mean_random) / mean_random;
        report.per_source.push_back(std::move(row));
    }

    // aggregate mean = mean of per-source means; gains from aggregate means
    double agg_random = 0.0;
    for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
        AlgoStats agg;
        double sum = 0.0;
        agg.max = std::numeric_limits<int>::min();
        agg.min = std::numeric_limits<int>::max();
        for (const auto& row : report.per_source) {
            const AlgoStats& s = row.algos[ai].second;
            sum += s.mean;
            agg.max = std::max(agg.max, s.max);
            agg.min = std::min(agg.min, s.min);
        }
        agg.mean = sum / static_cast<double>(report.per_source.size());
        if (cfg.algorithms[ai] == RelayAlgo::Random) agg_random = agg.mean;
        report.aggregate.emplace_back(cfg.algorithms[ai], agg);
    }
    for (auto& [algo, stats] : report.aggregate)
        if (algo != RelayAlgo::Random)
            stats.normalized_gain = (stats.mean - agg_random) / agg_random;

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string emit_csv(const BenchReport& report) {
    std::string out = "source,algorithm,mean,normalized_gain,max,min\n";
    for (const auto& row : report.per_source) {
        for (const auto& [algo, stats] : row.algos) {
            out += row.source_label;
            out += ',';
            out += algo_name(algo);
            out += ',';
            out += fixed4(stats.mean);
            out += ',';
            if (stats.normalized_gain) out += fixed4(*stats.normalized_gain);
            out += ',';
            out += std::to_string(stats.max);
            out += ',';
            out += std::to_string(stats.min);
            out += '\n';
        }
    }
    for (const auto& [algo, stats] : report.aggregate) {
        out += "aggregate,";
        out += algo_name(algo);
        out += ',';
        out += fixed4(stats.mean);
        out += ',';
        if (stats.normalized_gain) out += fixed4(*stats.normalized_gain);
        out += '\n';
    }
    return out;
}

std::string emit_json(const BenchReport& report) {
    nlohmann::json doc;

    nlohmann::json algos = nlohmann::json::array();
    for (RelayAlgo a : report.algorithms) algos.push_back(algo_name(a));
    doc["provenance"] = {
        {"graph",
         {{"path", report.graph_path},
          {"n", report.n},
          {"edge_count", report.edge_count},
          {"k_max", report.k_max},
          {"avg_degree", round4(report.avg_degree)},
          {"lambda", report.lambda}}},
        {"config",
         {{"source_count", report.source_count},
          {"trials_per_source", report.trials_per_source},
          {"algorithms", algos},
          {"master_seed", report.master_seed}}},
        {"girth_used", report.girth_used},
        {"classical",
         {{"erdos_gallai", report.classical.erdos_gallai},
          {"min_degree", report.classical.min_degree},
          {"max_l_e", report.max_l_e}}},
    };

    auto stats_json = [](const AlgoStats& s) {
        nlohmann::json j = {{"mean", round4(s.mean)}, {"max", s.max}, {"min", s.min}};
        if (s.normalized_gain) j["normalized_gain"] = round4(*s.normalized_gain);
        return j;
    };

    nlohmann::json per_source = nlohmann::json::array();
    for (const auto& row : report.per_source) {
        nlohmann::json by_algo;
        for (const auto& [algo, stats] : row.algos) by_algo[algo_name(algo)] = stats_json(stats);
        per_source.push_back({{"source", row.source_label}, {"algorithms", by_algo}});
    }
    doc["per_source"] = std::move(per_source);

    nlohmann::json aggregate;
    for (const auto& [algo, stats] : report.aggregate) aggregate[algo_name(algo)] = stats_json(stats);
    doc["aggregate"] = std::move(aggregate);

    return doc.dump(2) + "\n";
}

} // namespace sepchain
