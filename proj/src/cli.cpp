#include "migraph/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "migraph/dot_export.hpp"
#include "migraph/errors.hpp"
#include "migraph/estimates.hpp"
#include "migraph/json_io.hpp"
#include "migraph/patterns.hpp"
#include "migraph/random_graphs.hpp"
#include "migraph/report.hpp"
#include "migraph/sampling.hpp"
#include "migraph/strategy.hpp"

namespace migraph::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
}

// --seed fallback chain: flag, then MIGRAPH_SEED, then 0.
std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed) {
    if (seed_given) return seed;
    const char* env = std::getenv("MIGRAPH_SEED");
    if (!env || !*env) return 0;
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw CLI::ValidationError("MIGRAPH_SEED", "must be an unsigned integer");
    return parsed;
}

std::vector<long long> parse_n_list(const std::string& text) {
    std::vector<long long> result;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t pos = 0;
            long long value = std::stoll(item, &pos);
            if (pos != item.size() || value < 2) throw std::invalid_argument(item);
            result.push_back(value);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--n", "'" + item + "' is not an integer >= 2");
        }
    }
    if (result.empty()) throw CLI::ValidationError("--n", "expected at least one value");
    return result;
}

void write_graph_output(const MigrationGraph& g, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << serialize_graph(g);
    else
        save_graph_file(g, out_path);
}

struct SizeSummary {
    std::size_t min = 0, max = 0;
    double mean = 0, sd = 0;
};

SizeSummary cluster_size_summary(const CondensationGraph& cg, std::size_t n) {
    SizeSummary s;
    if (cg.clusters.empty()) return s;
    s.min = cg.clusters.front().size();
    for (const MigrationCluster& c : cg.clusters) {
        s.min = std::min(s.min, c.size());
        s.max = std::max(s.max, c.size());
    }
    s.mean = static_cast<double>(n) / static_cast<double>(cg.cluster_count());
    if (cg.cluster_count() > 1) {
        double ss = 0.0;
        for (const MigrationCluster& c : cg.clusters) {
            double d = static_cast<double>(c.size()) - s.mean;
            ss += d * d;
        }
        s.sd = std::sqrt(ss / static_cast<double>(cg.cluster_count() - 1));
    }
    return s;
}

void cmd_analyze(const std::string& path, bool as_json, std::ostream& out) {
    MigrationGraph g = load_graph_file(path);
    CondensationGraph cg = condensation(g);
    int depth = 0;
    for (int t : cg.times) depth = std::max(depth, t);
    std::vector<int> level_sizes(depth, 0);
    for (int t : cg.times) ++level_sizes[t - 1];
    int width = 0;
    for (int s : level_sizes) width = std::max(width, s);
    SizeSummary sizes = cluster_size_summary(cg, g.node_count());

    if (as_json) {
        ordered_json doc;
        doc["components"] = g.node_count();
        doc["dependencies"] = g.edge_count();
        doc["length"] = cg.cluster_count();
        doc["depth"] = depth;
        doc["width"] = width;
        doc["cluster_sizes"] = {{"min", sizes.min}, {"max", sizes.max}, {"mean", sizes.mean},
                                {"sd", sizes.sd}};
        doc["comparison"] = ordered_json::array();
        if (!g.empty()) {
            for (const ComparisonRow& row : compare_report(g).rows) {
                ordered_json entry;
                entry["metric"] = row.metric;
                entry["formula"] = row.formula;
                if (std::isnan(row.expected))
                    entry["expected"] = nullptr;
                else
                    entry["expected"] = row.expected;
                entry["observed"] = row.observed;
                doc["comparison"].push_back(std::move(entry));
            }
        }
        out << doc.dump(2) << "\n";
        return;
    }

    out << "components: " << g.node_count() << "\n"
        << "dependencies: " << g.edge_count() << "\n"
        << "clusters (length): " << cg.cluster_count() << "\n"
        << "depth: " << depth << "\n"
        << "width: " << width << "\n";
    if (!cg.clusters.empty()) {
        out << "cluster sizes: min " << sizes.min << " | max " << sizes.max << " | mean "
            << format2(sizes.mean) << " | sd " << format2(sizes.sd) << "\n";
    }
    if (!g.empty()) {
        out << "\n" << render_comparison(compare_report(g));
    } else {
        out << "empty graph: no comparison\n";
    }
}

void cmd_plan(const std::string& path, bool as_json, std::ostream& out) {
    MigrationGraph g = load_graph_file(path);
    CanonicalPlan plan = canonical_plan(g);

    if (as_json) {
        ordered_json doc;
        doc["length"] = plan.length;
        doc["depth"] = plan.depth;
        doc["strategy_count"] = plan.strategy_count.str();
        doc["levels"] = ordered_json::array();
        for (const auto& level : plan.levels) {
            ordered_json level_doc = ordered_json::array();
            for (const MigrationCluster& c : level) level_doc.push_back(c.members);
            doc["levels"].push_back(std::move(level_doc));
        }
        out << doc.dump(2) << "\n";
        return;
    }

    out << "length: " << plan.length << "\n"
        << "depth: " << plan.depth << "\n";
    for (std::size_t k = 0; k < plan.levels.size(); ++k) {
        out << "T(" << (k + 1) << "):";
        for (const MigrationCluster& c : plan.levels[k]) {
            out << " {";
            for (std::size_t i = 0; i < c.members.size(); ++i) {
                if (i) out << ",";
                out << c.members[i];
            }
            out << "}";
        }
        out << "\n";
    }
    out << "strategies: " << plan.strategy_count.str() << "\n";
}

void cmd_step(const std::string& path, const std::string& id, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
    MigrationGraph g = load_graph_file(path);
    if (!g.contains(id)) throw UnknownComponent("unknown component '" + id + "'");
    MigrationGraph next = apply_migration(g, id);
    if (next.node_count() == g.node_count())
        err << "note: '" << id << "' is not migratable; graph unchanged\n";
    write_graph_output(next, out_path, out);
}

void cmd_patterns(const std::string& path, int min_fan, std::ostream& out) {
    MigrationGraph g = load_graph_file(path);
    std::vector<PatternInstance> instances = detect_patterns(g, min_fan);
    for (const PatternInstance& inst : instances) {
        out << pattern_kind_name(inst.kind) << " focus=" << inst.focus << " arity=" << inst.arity
            << " members=";
        for (std::size_t i = 0; i < inst.participants.size(); ++i) {
            if (i) out << ",";
            out << inst.participants[i];
        }
        if (inst.kind == PatternKind::Cycle && !inst.simple) out << " non-simple";
        out << "\n";
    }
    PatternSummary summary = pattern_summary(instances);
    out << "summary:";
    for (const auto& [kind, count] : summary.counts)
        out << " " << pattern_kind_name(kind) << "=" << count;
    out << "\narity histogram:";
    for (const auto& [arity, count] : summary.arity_histogram)
        out << " " << arity << "=" << count;
    out << "\n";
}

void cmd_sample_partition(int n, std::uint64_t seed, std::ostream& out) {
    Rng rng(seed);
    Partition p = sample_uniform_partition(n, rng);
    for (const auto& block : p.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out << " ";
            out << block[i];
        }
        out << "\n";
    }
}

void cmd_montecarlo(int n, long long trials, std::uint64_t seed, bool as_json,
                    std::ostream& out) {
    ClusterStatistics stats = monte_carlo_report(n, trials, seed);
    double exact_count = -1.0;
    if (n + 1 <= static_cast<int>(kCombinatoricsBound))
        exact_count = BigRat(bell(n + 1), bell(n)).convert_to<double>() - 1.0;

    if (as_json) {
        ordered_json doc;
        doc["n"] = stats.n;
        doc["trials"] = trials;
        doc["seed"] = seed;
        doc["expected"] = {{"cluster_size", stats.expected_cluster_size},
                           {"cluster_count", stats.expected_cluster_count},
                           {"cluster_count_sd", stats.cluster_count_sd},
                           {"depth_conservative", stats.depth_conservative},
                           {"depth_optimistic", stats.depth_optimistic}};
        if (exact_count >= 0.0) doc["expected"]["cluster_count_exact"] = exact_count;
        doc["observed"] = {{"cluster_count_mean", *stats.observed_cluster_count},
                           {"cluster_count_sd", *stats.observed_count_sd},
                           {"cluster_size_mean", *stats.observed_mean_size}};
        doc["low_sample"] = stats.low_sample;
        out << doc.dump(2) << "\n";
        return;
    }

    out << "n: " << n << "  trials: " << trials << "  seed: " << seed << "\n"
        << "expected cluster count (n/ln n): " << format2(stats.expected_cluster_count) << "\n";
    if (exact_count >= 0.0)
        out << "expected cluster count (exact): " << fmt("%.4f", exact_count) << "\n";
    out << "observed cluster count: mean " << fmt("%.4f", *stats.observed_cluster_count) << " | sd "
        << fmt("%.4f", *stats.observed_count_sd) << "\n"
        << "expected cluster size (ln n): " << format2(stats.expected_cluster_size) << "\n"
        << "observed cluster size: mean " << fmt("%.4f", *stats.observed_mean_size) << "\n";
    if (stats.low_sample) out << "warning: single trial, standard deviation reported as 0\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"migration dependency graph analyzer"};
    app.require_subcommand(1);

    // analyze
    std::string analyze_file;
    bool analyze_json = false;
    CLI::App* analyze = app.add_subcommand("analyze", "structural metrics and comparison table");
    analyze->add_option("file", analyze_file, "graph JSON file")->required();
    analyze->add_flag("--json", analyze_json, "machine-readable output");
    analyze->callback([&] { cmd_analyze(analyze_file, analyze_json, out); });

    // plan
    std::string plan_file;
    bool plan_json = false;
    CLI::App* plan = app.add_subcommand("plan", "canonical migration plan");
    plan->add_option("file", plan_file, "graph JSON file")->required();
    plan->add_flag("--json", plan_json, "machine-readable output");
    plan->callback([&] { cmd_plan(plan_file, plan_json, out); });

    // step
    std::string step_file, step_id, step_out;
    CLI::App* step = app.add_subcommand("step", "apply one migration");
    step->add_option("file", step_file, "graph JSON file")->required();
    step->add_option("--migrate", step_id, "component to migrate")->required();
    step->add_option("-o,--output", step_out, "output file (stdout when absent)");
    step->callback([&] { cmd_step(step_file, step_id, step_out, out, err); });

    // patterns
    std::string patterns_file;
    int min_fan = 2;
    CLI::App* patterns = app.add_subcommand("patterns", "local dependency patterns");
    patterns->add_option("file", patterns_file, "graph JSON file")->required();
    patterns->add_option("--min-fan", min_fan, "fan threshold (>= 2)")
        ->check(CLI::Range(2, 1000000));
    patterns->callback([&] { cmd_patterns(patterns_file, min_fan, out); });

    // sample
    CLI::App* sample = app.add_subcommand("sample", "draw random partitions or graphs");
    sample->require_subcommand(1);
    int sample_n = 1;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double sample_c = 0.0;
    std::string sample_out;

    CLI::App* sample_partition = sample->add_subcommand("partition", "uniform set partition");
    sample_partition->add_option("--n", sample_n, "ground-set size")->required()
        ->check(CLI::Range(1, 1000000));
    sample_partition->add_option("--seed", seed, "random seed")->each([&](const std::string&) {
        seed_given = true;
    });
    sample_partition->callback(
        [&] { cmd_sample_partition(sample_n, resolve_seed(seed_given, seed), out); });

    CLI::App* sample_graph = sample->add_subcommand("graph", "random migration graph");
    sample_graph->add_option("--n", sample_n, "component count")->required()
        ->check(CLI::Range(1, 1000000));
    sample_graph->add_option("--c", sample_c, "connectivity offset");
    sample_graph->add_option("--seed", seed, "random seed")->each([&](const std::string&) {
        seed_given = true;
    });
    sample_graph->add_option("-o,--output", sample_out, "output file (stdout when absent)");
    sample_graph->callback([&] {
        RandomGraphParams params;
        params.n = sample_n;
        params.c = sample_c;
        params.seed = resolve_seed(seed_given, seed);
        write_graph_output(synthesize_migration_graph(params), sample_out, out);
    });

    // stats
    CLI::App* stats = app.add_subcommand("stats", "closed-form estimates");
    stats->require_subcommand(1);
    std::string table1_ns;
    long long bound_n = 2;
    double bound_s = 1.0, conn_c = 0.0;

    CLI::App* table1 = stats->add_subcommand("table1", "expected-behavior table");
    table1->add_option("--n", table1_ns, "comma-separated component counts")->required();
    table1->callback([&] { out << render_table1(parse_n_list(table1_ns)); });

    CLI::App* bound = stats->add_subcommand("bound", "expected maximum cluster count bound");
    bound->add_option("--n", bound_n, "component count")->required()
        ->check(CLI::Range(2ll, 2000000000ll));
    bound->add_option("--s", bound_s, "project count (real, >= 1)")->required();
    bound->callback([&] { out << fmt("%.6f", max_clusters_bound(bound_n, bound_s)) << "\n"; });

    CLI::App* connectivity = stats->add_subcommand("connectivity", "limit connectivity probability");
    connectivity->add_option("--c", conn_c, "connectivity offset")->required();
    connectivity->callback([&] { out << fmt("%.6f", connectivity_probability(conn_c)) << "\n"; });

    // montecarlo
    int mc_n = 2;
    long long mc_trials = 1;
    bool mc_json = false;
    CLI::App* montecarlo = app.add_subcommand("montecarlo", "partition sampling vs estimates");
    montecarlo->add_option("--n", mc_n, "component count")->required()
        ->check(CLI::Range(2, 1000000));
    montecarlo->add_option("--trials", mc_trials, "number of sampled partitions")->required()
        ->check(CLI::Range(1ll, 1000000000ll));
    montecarlo->add_option("--seed", seed, "random seed")->each([&](const std::string&) {
        seed_given = true;
    });
    montecarlo->add_flag("--json", mc_json, "machine-readable output");
    montecarlo->callback([&] {
        cmd_montecarlo(mc_n, mc_trials, resolve_seed(seed_given, seed), mc_json, out);
    });

    // export-dot
    std::string dot_file, dot_mode;
    CLI::App* export_dot_cmd = app.add_subcommand("export-dot", "GraphViz export");
    export_dot_cmd->add_option("file", dot_file, "graph JSON file")->required();
    export_dot_cmd->add_option("--mode", dot_mode, "flat | clustered | condensed")->required()
        ->check(CLI::IsMember({"flat", "clustered", "condensed"}));
    export_dot_cmd->callback([&] {
        DotMode mode = dot_mode == "flat"        ? DotMode::flat
                       : dot_mode == "clustered" ? DotMode::clustered
                                                 : DotMode::condensed;
        out << export_dot(load_graph_file(dot_file), mode);
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("migraph");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const OutOfRange& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExceeded& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const TooLarge& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace migraph::cli
