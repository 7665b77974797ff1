// spanet: generate and analyze SPA / random geometric graphs and run
// round-based rumour-spreading experiments on them.
//
// Exit codes: 0 success, 1 assertion failure, 2 usage/config error, 3 I/O.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "spanet/experiments.hpp"
#include "spanet/io.hpp"
#include "spanet/metrics.hpp"
#include "spanet/percolation.hpp"
#include "spanet/rgg.hpp"
#include "spanet/rng.hpp"
#include "spanet/rumour.hpp"
#include "spanet/spa_graph.hpp"

#include <json.hpp>

using namespace spanet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssert = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void write_or_print(const std::optional<std::string>& path, const std::string& text) {
    if (!path.has_value()) {
        std::cout << text;
        return;
    }
    std::ofstream os(*path);
    if (!os) throw io_error("cannot write " + *path);
    os << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SPA model and rumour spreading toolkit"};
    app.require_subcommand(1);

    // ---- generate ----
    auto* cmd_generate = app.add_subcommand("generate", "generate an SPA graph file");
    SpaParams spa_prm;
    std::string out_path = "graph.spa";
    cmd_generate->add_option("--m", spa_prm.m, "dimension");
    cmd_generate->add_option("--A1", spa_prm.A1, "degree coefficient, in [0,1)");
    cmd_generate->add_option("--A2", spa_prm.A2, "base volume coefficient, > 0");
    cmd_generate->add_option("--p", spa_prm.p, "link probability, in (0,1]");
    cmd_generate->add_option("--n", spa_prm.n, "number of vertices")->required();
    cmd_generate->add_option("--seed", spa_prm.seed, "rng seed");
    cmd_generate->add_option("--out", out_path, "output file");

    // ---- rgg ----
    auto* cmd_rgg = app.add_subcommand("rgg", "generate a random geometric graph file");
    uint32_t rgg_n = 1000;
    double rgg_r = 0.0, rgg_m = 0.0;
    std::string rgg_metric = "torus";
    uint64_t rgg_seed = 1;
    std::string rgg_out = "graph.rgg";
    cmd_rgg->add_option("--N", rgg_n, "number of vertices")->required();
    cmd_rgg->add_option("--r", rgg_r, "connection radius");
    cmd_rgg->add_option("--M", rgg_m, "density pi*N*r^2 (alternative to --r)");
    cmd_rgg->add_option("--metric", rgg_metric, "torus | euclidean-square");
    cmd_rgg->add_option("--seed", rgg_seed, "rng seed");
    cmd_rgg->add_option("--out", rgg_out, "output file");

    // ---- crossings ----
    auto* cmd_crossings = app.add_subcommand("crossings", "slab crossing report for an RGG file");
    std::string crossings_in;
    std::optional<std::string> crossings_out;
    std::optional<uint32_t> crossings_t;
    cmd_crossings->add_option("--in", crossings_in, "rgg or spa graph file")->required();
    cmd_crossings->add_option("--t", crossings_t, "snapshot level (spa input only)");
    cmd_crossings->add_option("--out", crossings_out, "output json (default stdout)");

    // ---- components ----
    auto* cmd_components = app.add_subcommand("components", "connected components summary");
    std::string components_in;
    cmd_components->add_option("--in", components_in, "graph file")->required();

    // ---- rumour ----
    auto* cmd_rumour = app.add_subcommand("rumour", "run a rumour protocol on a graph file");
    std::string rumour_in, rumour_protocol = "push-and-pull";
    uint32_t rumour_source = 1;
    uint32_t rumour_max_rounds = 1u << 20;
    uint64_t rumour_seed = 1;
    std::optional<double> rumour_L;
    std::optional<std::string> rumour_trace_out, rumour_events_out;
    cmd_rumour->add_option("--in", rumour_in, "graph file")->required();
    cmd_rumour->add_option("--protocol", rumour_protocol, "push | push-and-pull");
    cmd_rumour->add_option("--source", rumour_source, "source vertex id");
    cmd_rumour->add_option("--max-rounds", rumour_max_rounds, "round limit");
    cmd_rumour->add_option("--seed", rumour_seed, "rng seed");
    cmd_rumour->add_option("--L", rumour_L, "long-edge cutoff distance");
    cmd_rumour->add_option("--trace", rumour_trace_out, "per-round csv (default stdout)");
    cmd_rumour->add_option("--events", rumour_events_out, "per-transmission csv");

    // ---- effdiam ----
    auto* cmd_effdiam = app.add_subcommand("effdiam", "effective diameter of a graph file");
    std::string effdiam_in, effdiam_sampler = "sampled";
    double effdiam_fraction = 0.9;
    uint32_t effdiam_pairs = 10000;
    uint64_t effdiam_seed = 1;
    cmd_effdiam->add_option("--in", effdiam_in, "graph file")->required();
    cmd_effdiam->add_option("--fraction", effdiam_fraction, "quantile, in (0,1]");
    cmd_effdiam->add_option("--sampler", effdiam_sampler, "exact | sampled");
    cmd_effdiam->add_option("--pairs", effdiam_pairs, "sampled pairs");
    cmd_effdiam->add_option("--seed", effdiam_seed, "rng seed");

    // ---- classify ----
    auto* cmd_classify = app.add_subcommand("classify", "old/new x long/short edge table");
    std::string classify_in;
    double classify_beta = 0.5, classify_eta = 0.1;
    std::optional<std::string> classify_out;
    cmd_classify->add_option("--in", classify_in, "spa graph file")->required();
    cmd_classify->add_option("--beta", classify_beta, "old/new exponent");
    cmd_classify->add_option("--eta", classify_eta, "long/short exponent");
    cmd_classify->add_option("--out", classify_out, "output csv (default stdout)");

    // ---- params ----
    auto* cmd_params = app.add_subcommand("params", "slow-spread exponent block");
    double params_a = 0.5;
    int params_m = 2;
    std::optional<double> params_delta;
    cmd_params->add_option("--a", params_a, "a = p*A1, in (0,1)")->required();
    cmd_params->add_option("--m", params_m, "dimension");
    cmd_params->add_option("--delta", params_delta, "margin, in (0, a(1-a)/K)");

    // ---- experiment ----
    auto* cmd_experiment = app.add_subcommand("experiment", "run a named experiment preset");
    std::string experiment_name;
    std::optional<std::string> experiment_config;
    std::vector<std::string> experiment_sets;
    cmd_experiment->add_option("--name", experiment_name,
                               "diameter | rumour | percolation | degree-laws")
        ->required();
    cmd_experiment->add_option("--config", experiment_config, "key = value config file");
    cmd_experiment->add_option("--set", experiment_sets, "override, key=value (repeatable)");
    // config keys double as flags; a flag overrides the same key from the
    // config file, so overrides are stored under the section-qualified name
    const std::map<std::string, std::string> key_sections = {
        {"model", "model"},         {"m", "model"},
        {"A1", "model"},            {"A2", "model"},
        {"p", "model"},             {"n_list", "model"},
        {"seeds", "model"},         {"N", "model"},
        {"M_list", "model"},        {"protocol", "protocol"},
        {"max_rounds", "protocol"}, {"fraction", "metrics"},
        {"pairs", "metrics"},       {"beta", "metrics"},
        {"eta", "metrics"},         {"min_deg", "metrics"},
        {"stretch_pairs", "metrics"}, {"gamma_hat", "metrics"},
        {"diam_const", "assert"},   {"ratio_growth", "assert"},
        {"slope_min", "assert"},    {"doubling_tol", "assert"},
        {"outdeg_const", "assert"}, {"traj_exp", "assert"},
        {"out_dir", "output"},      {"write_graphs", "output"}};
    KeyValueConfig flag_overrides;
    auto qualify = [&key_sections](const std::string& key) {
        if (key.find('.') != std::string::npos) return key;
        auto it = key_sections.find(key);
        return it == key_sections.end() ? key : it->second + "." + key;
    };
    for (const auto& [key, section] : key_sections) {
        std::string qualified = section + "." + key;
        cmd_experiment
            ->add_option_function<std::string>(
                "--" + key,
                [&flag_overrides, qualified](const std::string& v) {
                    flag_overrides.set(qualified, v);
                })
            ->expected(1);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_generate->parsed()) {
            SpaGraph g = generate(spa_prm);
            write_spa_file(out_path, g);
            uint32_t max_deg = 0;
            for (uint32_t v = 1; v <= g.n(); ++v)
                max_deg = std::max(max_deg, g.degree_at(v, g.n()));
            std::cout << "n " << g.n() << "\nedges " << g.edges.size() << "\nmax_degree "
                      << max_deg << "\nfile " << out_path << "\n";
            return kExitOk;
        }

        if (cmd_rgg->parsed()) {
            if (rgg_r <= 0.0 && rgg_m <= 0.0)
                throw CLI::ValidationError("rgg", "one of --r or --M is required");
            double r = rgg_r > 0.0 ? rgg_r : std::sqrt(rgg_m / (M_PI * rgg_n));
            RggSnapshot snap = generate_rgg(rgg_n, r, metric_mode_from_name(rgg_metric), rgg_seed);
            write_rgg_file(rgg_out, snap);
            std::cout << "N " << snap.t << "\nr " << format_real(snap.r) << "\nedges "
                      << snap.edges.size() << "\nfile " << rgg_out << "\n";
            return kExitOk;
        }

        if (cmd_crossings->parsed()) {
            LoadedGraph loaded = load_graph_file(crossings_in);
            RggSnapshot snap;
            if (loaded.kind == LoadedGraph::Kind::rgg) {
                snap = std::move(*loaded.rgg);
            } else {
                uint32_t t = crossings_t.value_or(loaded.spa->n());
                snap = snapshot(*loaded.spa, t);
            }
            CrossingReport report = find_crossings(snap);
            write_or_print(crossings_out, crossing_report_json(report) + "\n");
            return kExitOk;
        }

        if (cmd_components->parsed()) {
            LoadedGraph loaded = load_graph_file(components_in);
            ComponentLabeling labeling = connected_components(loaded.graph);
            std::cout << "vertices " << loaded.graph.num_vertices() << "\nedges "
                      << loaded.graph.num_edges() << "\ncomponents " << labeling.num_components
                      << "\ngiant_size " << labeling.giant_size << "\ngiant_fraction "
                      << format_real(labeling.giant_fraction) << "\n";
            return kExitOk;
        }

        if (cmd_rumour->parsed()) {
            LoadedGraph loaded = load_graph_file(rumour_in);
            ProtocolConfig pc;
            pc.protocol = protocol_from_name(rumour_protocol);
            pc.source = rumour_source;
            pc.max_rounds = rumour_max_rounds;
            pc.seed = rumour_seed;
            RumourTrace trace = run(loaded.graph, pc, &loaded.points, rumour_L);
            std::ostringstream csv;
            write_trace_csv(csv, trace);
            write_or_print(rumour_trace_out, csv.str());
            if (rumour_events_out.has_value()) {
                std::ofstream os(*rumour_events_out);
                if (!os) throw io_error("cannot write " + *rumour_events_out);
                write_trace_events_csv(os, trace, &loaded.points);
            }
            std::cerr << "spread_time "
                      << (trace.spread_time.has_value() ? std::to_string(*trace.spread_time)
                                                        : std::string("not-reached"))
                      << "\n";
            return kExitOk;
        }

        if (cmd_effdiam->parsed()) {
            LoadedGraph loaded = load_graph_file(effdiam_in);
            int d;
            if (effdiam_sampler == "exact")
                d = effective_diameter_exact(loaded.graph, effdiam_fraction);
            else if (effdiam_sampler == "sampled")
                d = effective_diameter_sampled(loaded.graph, effdiam_fraction, effdiam_pairs,
                                               effdiam_seed);
            else
                throw CLI::ValidationError("effdiam", "--sampler must be exact or sampled");
            std::cout << d << "\n";
            return kExitOk;
        }

        if (cmd_classify->parsed()) {
            LoadedGraph loaded = load_graph_file(classify_in);
            if (loaded.kind != LoadedGraph::Kind::spa)
                throw CLI::ValidationError("classify", "--in must be an spa graph file");
            EdgeClassification cls = classify_edges(*loaded.spa, classify_beta, classify_eta);
            std::ostringstream os;
            os << "tau," << format_real(cls.tau) << "\nL," << format_real(cls.L) << "\n";
            os << "class,count\nold_long," << cls.old_long << "\nold_short," << cls.old_short
               << "\nnew_long," << cls.new_long << "\nnew_short," << cls.new_short << "\n";
            os << "old_vertex,degree_ratio,long_fraction\n";
            for (size_t i = 0; i < cls.old_vertices.size(); ++i)
                os << cls.old_vertices[i] << ',' << format_real(cls.old_degree_ratio[i]) << ','
                   << format_real(cls.old_long_fraction[i]) << '\n';
            write_or_print(classify_out, os.str());
            return kExitOk;
        }

        if (cmd_params->parsed()) {
            TheoremParams tp = theorem_params(params_a, params_m, params_delta);
            nlohmann::json j;
            j["a"] = tp.a;
            j["m"] = tp.m;
            j["K"] = tp.K;
            j["alpha_max"] = tp.alpha_max;
            j["delta"] = tp.delta;
            j["tau_exp"] = tp.tau_exp;
            j["y_exp"] = tp.y_exp;
            j["L_exp"] = tp.L_exp;
            j["T_exp"] = tp.T_exp;
            j["epsilon"] = tp.epsilon;
            j["valid"] = tp.valid;
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (cmd_experiment->parsed()) {
            KeyValueConfig kv;
            if (experiment_config.has_value()) kv = KeyValueConfig::parse_file(*experiment_config);
            for (const std::string& s : experiment_sets) {
                auto eq = s.find('=');
                if (eq == std::string::npos)
                    throw CLI::ValidationError("experiment", "--set expects key=value");
                kv.set(qualify(s.substr(0, eq)), s.substr(eq + 1));
            }
            for (const auto& [key, value] : flag_overrides.values()) kv.set(key, value);
            ExperimentConfig cfg = ExperimentConfig::from_config(kv);
            ExperimentResult result = run_experiment(experiment_name, cfg);
            std::cout << experiment_name << (result.pass ? ": pass" : ": FAIL") << "\nsummary "
                      << (std::filesystem::path(cfg.out_dir) /
                          (experiment_name + "_summary.json"))
                             .string()
                      << "\n";
            if (!result.pass) {
                for (const std::string& f : result.failures) std::cerr << "FAIL: " << f << "\n";
                return kExitAssert;
            }
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const format_error& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
