#include "sepchain/cli.hpp"

#include "sepchain/bench.hpp"
#include "sepchain/bounds.hpp"
#include "sepchain/chain.hpp"
#include "sepchain/errors.hpp"
#include "sepchain/graph.hpp"
#include "sepchain/relay.hpp"
#include "sepchain/rng.hpp"
#include "sepchain/selfcheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <fstream>
#include <ostream>
#include <sstream>

namespace sepchain {

namespace {

std::string fixed4(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    return buf;
}

// Tries the path as given, then under $SEPCHAIN_DATA_DIR.
std::string resolve_graph_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* dir = std::getenv("SEPCHAIN_DATA_DIR")) {
        fs::path candidate = fs::path(dir) / path;
        if (fs::exists(candidate)) return candidate.string();
    }
    throw error("dataset not found: " + path +
                " (fetch it with scripts/fetch_datasets.sh or point SEPCHAIN_DATA_DIR at it)");
}

Graph load_graph(const std::string& path) { return load_edge_list_file(resolve_graph_path(path)); }

void write_sidecar(const std::string& path, const IterationStats& stats) {
    nlohmann::json j;
    j["decrements"] = stats.decrements;
    j["sweeps"] = stats.sweeps;
    std::ofstream out(path);
    if (!out) throw error("cannot write sidecar file: " + path);
    out << j.dump() << '\n';
}

int cmd_stats(const std::string& graph_path, std::ostream& out) {
    Graph g = load_graph(graph_path);
    GraphStats s = stats(g);
    out << "n=" << s.n << '\n';
    out << "edges=" << s.edge_count << '\n';
    out << "k_max=" << s.k_max << '\n';
    out << "avg_degree=" << fixed4(s.avg_degree) << '\n';
    out << "lambda=" << s.lambda << '\n';
    out << "girth=" << (s.girth ? std::to_string(*s.girth) : "inf") << '\n';
    out << "dropped_self_loops=" << s.dropped_self_loops << '\n';
    out << "dropped_duplicate_edges=" << s.dropped_duplicate_edges << '\n';
    out << "dropped_isolated_nodes=" << s.dropped_isolated_nodes << '\n';
    return 0;
}

int cmd_decompose(const std::string& graph_path, int t_value, const std::string& p_text,
                  const std::string& sidecar, std::ostream& out) {
    Graph g = load_graph(graph_path);
    ParamVectors params;
    if (p_text == "negdeg") {
        params = ParamVectors::constant_t(g, t_value);
    } else {
        int p_value = 0;
        try {
            p_value = std::stoi(p_text);
        } catch (const std::exception&) {
            throw validation_error("--p must be an integer or 'negdeg', got '" + p_text + "'");
        }
        params = ParamVectors::constant(g, t_value, p_value);
    }
    IterationStats iteration;
    RankVector ranks = decompose(g, params, &iteration);
    out << "node_label,rank\n";
    for (int v = 0; v < g.node_count(); ++v) out << g.label(v) << ',' << ranks[v] << '\n';
    if (!sidecar.empty()) write_sidecar(sidecar, iteration);
    return 0;
}

int cmd_spectrum(const std::string& graph_path, const std::string& sidecar, std::ostream& out) {
    Graph g = load_graph(graph_path);
    IterationStats iteration;
    CoreSpectrum spec = spectrum(g, &iteration);
    out << "node_label";
    for (int t = -spec.lambda; t <= 0; ++t) out << ",t=" << t;
    out << '\n';
    for (int v = 0; v < g.node_count(); ++v) {
        out << g.label(v);
        for (int t = -spec.lambda; t <= 0; ++t) out << ',' << spec.rank(v, t);
        out << '\n';
    }
    if (!sidecar.empty()) write_sidecar(sidecar, iteration);
    return 0;
}

int cmd_bounds(const std::string& graph_path, const std::string& girth_text, std::ostream& out) {
    Graph g = load_graph(graph_path);
    GirthChoice choice = parse_girth_choice(girth_text);
    CoreSpectrum spec = spectrum(g);
    int girth_used = resolve_girth(g, choice);
    BoundContext ctx = BoundContext::create(spec, girth_used,
                                            choice.exact ? girth(g) : std::optional<int>{});
    PathBounds bounds = all_bounds(ctx);

    out << "node_label,L_e,L_m,L_e_hat,argmax_t_Le\n";
    int max_le = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        out << g.label(v) << ',' << bounds.l_e[v] << ',' << bounds.l_m[v] << ',';
        if (bounds.l_e_hat[v]) out << *bounds.l_e_hat[v];
        out << ',' << bounds.argmax_t_le[v] << '\n';
        max_le = std::max(max_le, bounds.l_e[v]);
    }
    ClassicalBounds classical = classical_bounds(g);
    out << "# max_L_e=" << max_le << '\n';
    out << "# erdos_gallai=" << classical.erdos_gallai << '\n';
    out << "# min_degree=" << classical.min_degree << '\n';
    return 0;
}

int cmd_relay(const std::string& graph_path, const std::string& source_label,
              const std::string& algo_text, int trials, std::uint64_t seed,
              const std::string& girth_text, std::ostream& out) {
    Graph g = load_graph(graph_path);
    auto source = g.id_of(source_label);
    if (!source) throw validation_error("source node '" + source_label + "' not in graph");
    auto algo = algo_from_name(algo_text);
    if (!algo) throw validation_error("unknown algorithm '" + algo_text + "'");
    if (trials < 1) throw validation_error("--trials must be >= 1");

    const bool needs_spectrum = *algo == RelayAlgo::ChainRank || *algo == RelayAlgo::ZeroCore;
    CoreSpectrum spec;
    int girth_used = 3;
    if (needs_spectrum) {
        spec = spectrum(g);
        girth_used = resolve_girth(g, parse_girth_choice(girth_text));
    }

    out << "trial,length,path\n";
    std::int64_t total = 0;
    int max_len = 0, min_len = g.node_count();
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = mix_seed(seed, static_cast<std::uint64_t>(trial) + 1);
        RelayPath path;
        TiePolicy policy;
        policy.seed = trial_seed;
        switch (*algo) {
        case RelayAlgo::ChainRank:
            path = relay_start(g, spec, *source, girth_used, policy, TMode::Full);
            break;
        case RelayAlgo::ZeroCore:
            path = relay_start(g, spec, *source, girth_used, policy, TMode::ZeroOnly);
            break;
        case RelayAlgo::Random: {
            SplitMix64 rng(trial_seed);
            path = baseline_random(g, *source, rng);
            break;
        }
        case RelayAlgo::MaxDeg: {
            SplitMix64 rng(trial_seed);
            path = baseline_maxdeg(g, *source, rng);
            break;
        }
        }
        total += path.length();
        max_len = std::max(max_len, path.length());
        min_len = std::min(min_len, path.length());
        out << trial << ',' << path.length() << ',';
        for (std::size_t i = 0; i < path.nodes.size(); ++i) {
            if (i) out << ' ';
            out << g.label(path.nodes[i]);
        }
        out << '\n';
    }
    out << "mean,max,min\n";
    out << fixed4(static_cast<double>(total) / trials) << ',' << max_len << ',' << min_len << '\n';
    return 0;
}

// key=value lines; blank lines and #-comments allowed.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open config file: " + path);
    static const std::set<std::string> known = {"graph", "sources", "trials", "algos",
                                                "seed",  "girth",   "format"};
    std::map<std::string, std::string> kv;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("config line " + std::to_string(line_no) + ": expected key=value");
        std::string key = line.substr(0, eq);
        if (!known.count(key))
            throw validation_error("config line " + std::to_string(line_no) + ": unknown key '" +
                                   key + "'");
        kv[key] = line.substr(eq + 1);
    }
    return kv;
}

int cmd_bench(BenchConfig cfg, const std::string& algos_text, const std::string& girth_text,
              const std::string& format, std::ostream& out, std::ostream& err) {
    if (cfg.graph_path.empty()) throw validation_error("bench needs a graph (positional or graph= in --config)");
    if (format != "csv" && format != "json")
        throw validation_error("--format must be csv or json, got '" + format + "'");

    cfg.algorithms.clear();
    std::stringstream algos(algos_text);
    std::string token;
    while (std::getline(algos, token, ',')) {
        if (token.empty()) continue;
        auto algo = algo_from_name(token);
        if (!algo) throw validation_error("unknown algorithm '" + token + "'");
        if (std::find(cfg.algorithms.begin(), cfg.algorithms.end(), *algo) == cfg.algorithms.end())
            cfg.algorithms.push_back(*algo);
    }
    cfg.girth = parse_girth_choice(girth_text);

    Graph g = load_graph(cfg.graph_path);
    BenchReport report = run_bench(g, cfg);
    out << (format == "csv" ? emit_csv(report) : emit_json(report));
    err << "# wall_seconds=" << fixed4(report.wall_seconds) << '\n';
    return 0;
}

int cmd_verify(std::ostream& out) {
    auto results = run_small_checks();
    bool all_pass = true;
    for (const auto& r : results) {
        if (r.pass) {
            out << "ok   " << r.name << '\n';
        } else {
            all_pass = false;
            out << "FAIL " << r.name << " (" << r.detail << ")\n";
        }
    }
    out << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
    return all_pass ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"separate-chain decomposition, longest-path bounds and message relaying"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string girth_text = "3";

    auto* stats_cmd = app.add_subcommand("stats", "basic statistics of an edge-list graph");
    stats_cmd->add_option("graph", graph_path, "edge list file")->required();

    int t_value = 0;
    std::string p_text = "negdeg";
    std::string sidecar;
    auto* decompose_cmd = app.add_subcommand("decompose", "maximal-chain ranks for constant (t, p)");
    decompose_cmd->add_option("graph", graph_path, "edge list file")->required();
    decompose_cmd->add_option("--t", t_value, "constant t for every node (default 0)");
    decompose_cmd->add_option("--p", p_text, "constant p, or 'negdeg' for p_v = -degree(v)");
    decompose_cmd->add_option("--sidecar", sidecar, "write iteration counters to this JSON file");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "ranks for every t in [-lambda, 0]");
    spectrum_cmd->add_option("graph", graph_path, "edge list file")->required();
    spectrum_cmd->add_option("--sidecar", sidecar, "write iteration counters to this JSON file");

    auto* bounds_cmd = app.add_subcommand("bounds", "longest-path lower bounds per node");
    bounds_cmd->add_option("graph", graph_path, "edge list file")->required();
    bounds_cmd->add_option("--girth", girth_text, "'exact', or an integer >= 3 (default 3)");

    std::string source_label, algo_text = "chainrank";
    int trials = 1;
    std::uint64_t seed = 0;
    auto* relay_cmd = app.add_subcommand("relay", "search long paths by local decisions");
    relay_cmd->add_option("graph", graph_path, "edge list file")->required();
    relay_cmd->add_option("--source", source_label, "source node label")->required();
    relay_cmd->add_option("--algo", algo_text, "chainrank|zerocore|random|maxdeg");
    relay_cmd->add_option("--trials", trials, "number of seeded trials (default 1)");
    relay_cmd->add_option("--seed", seed, "master seed (default 0)");
    relay_cmd->add_option("--girth", girth_text, "'exact', or an integer >= 3 (default 3)");

    BenchConfig cfg;
    std::string algos_text = "chainrank,zerocore,random,maxdeg";
    std::string format = "csv";
    std::string config_path;
    auto* bench_cmd = app.add_subcommand("bench", "relay benchmark over sampled sources");
    auto* opt_graph =
        bench_cmd->add_option("graph", graph_path, "edge list file (or graph= in --config)");
    auto* opt_sources =
        bench_cmd->add_option("--sources", cfg.source_count, "number of source nodes (default 100)");
    auto* opt_trials =
        bench_cmd->add_option("--trials", cfg.trials_per_source, "trials per source (default 1000)");
    auto* opt_algos = bench_cmd->add_option("--algos", algos_text, "comma list; must include random");
    auto* opt_seed = bench_cmd->add_option("--seed", cfg.master_seed, "master seed (default 0)");
    auto* opt_girth =
        bench_cmd->add_option("--girth", girth_text, "'exact', or an integer >= 3 (default 3)");
    auto* opt_format = bench_cmd->add_option("--format", format, "csv|json (default csv)");
    bench_cmd->add_option("--config", config_path, "key=value file mirroring the flags");

    bool small = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the oracle cross-check suite");
    verify_cmd->add_flag("--small", small, "small generated graphs (the only mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (stats_cmd->parsed()) return cmd_stats(graph_path, out);
        if (decompose_cmd->parsed()) return cmd_decompose(graph_path, t_value, p_text, sidecar, out);
        if (spectrum_cmd->parsed()) return cmd_spectrum(graph_path, sidecar, out);
        if (bounds_cmd->parsed()) return cmd_bounds(graph_path, girth_text, out);
        if (relay_cmd->parsed())
            return cmd_relay(graph_path, source_label, algo_text, trials, seed, girth_text, out);
        if (bench_cmd->parsed()) {
            cfg.graph_path = graph_path;
            if (!config_path.empty()) {
                // explicit flags win over config values
                auto kv = read_config_file(config_path);
                auto take = [&](const char* key, const CLI::Option* opt) -> const std::string* {
                    auto it = kv.find(key);
                    return (it != kv.end() && opt->count() == 0) ? &it->second : nullptr;
                };
                if (const auto* v = take("graph", opt_graph)) cfg.graph_path = *v;
                if (const auto* v = take("sources", opt_sources)) cfg.source_count = std::stoi(*v);
                if (const auto* v = take("trials", opt_trials)) cfg.trials_per_source = std::stoi(*v);
                if (const auto* v = take("algos", opt_algos)) algos_text = *v;
                if (const auto* v = take("seed", opt_seed)) cfg.master_seed = std::stoull(*v);
                if (const auto* v = take("girth", opt_girth)) girth_text = *v;
                if (const auto* v = take("format", opt_format)) format = *v;
            }
            return cmd_bench(cfg, algos_text, girth_text, format, out, err);
        }
        if (verify_cmd->parsed()) {
            if (!small) throw validation_error("verify requires --small");
            return cmd_verify(out);
        }
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace sepchain
