#include "cli.hpp"

#include "smp/analysis.hpp"
#include "smp/dynamo.hpp"
#include "smp/error.hpp"
#include "smp/grid_io.hpp"
#include "smp/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace smp::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
    std::uint64_t seed = 0;

    // simulate / verify / render
    std::string file;
    int target = 0;
    int max_rounds = 0;
    std::string roundmap_path;
    std::string trace_path;
    bool highlight = false;

    // construct / search
    std::string topology;
    int rows = 0;
    int cols = 0;
    int palette = 0;
    int offset = 0;
    std::string policy = "auto";
    std::uint64_t node_limit = FillerOptions{}.node_limit;
    std::string out_path;

    // search
    std::string mode = "monotone";
    int size = 0;
    int bound = 0;
    int shards = 1;
    int threads = 0;
    bool cross_validate = false;
    std::uint64_t samples = 100'000;
    bool progress = false;

    // batch
    std::string config;
};

Topology require_topology(const std::string& name) {
    const auto t = parse_topology(name);
    if (!t) throw CLI::ValidationError("topology", "unknown topology '" + name + "'");
    return *t;
}

Color require_target(int k, int palette) {
    if (k < 1 || k > palette) {
        throw std::out_of_range("target color " + std::to_string(k) + " is not in 1.." + std::to_string(palette));
    }
    return static_cast<Color>(k);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_simulate(const Options& o, std::ostream& out) {
    const TorusGrid grid = read_grid_file(o.file);
    RunOptions options;
    options.max_rounds = o.max_rounds;
    // Without -k, monotonicity is judged for the color the run ends on.
    std::optional<Color> k;
    if (o.target != 0) k = require_target(o.target, grid.palette());
    if (!k) {
        const auto probe = run(grid, options);
        if (probe.outcome == Outcome::monochromatic) k = probe.color;
    }
    options.track_monotone = k;
    const Trajectory traj = run_trajectory(grid, options);
    const auto& r = traj.result;

    out << "outcome=" << to_string(r.outcome) << " color=";
    if (r.outcome == Outcome::monochromatic) {
        out << static_cast<int>(r.color);
    } else {
        out << "none";
    }
    out << " rounds=" << r.rounds << " monotone=" << (k ? yes_no(r.monotone) : std::string("n/a"));
    if (r.outcome == Outcome::cycle) out << " cycle_length=" << r.cycle_length;
    out << " seed=" << o.seed << '\n';

    if (!o.roundmap_path.empty()) {
        if (!k) throw std::invalid_argument("--roundmap needs -k when the run does not end monochromatic");
        write_text_file(o.roundmap_path, format_round_map_csv(round_map(traj, *k)));
    }
    if (!o.trace_path.empty()) write_text_file(o.trace_path, format_trajectory(traj.frames));
    return exit_ok;
}

int cmd_construct(const Options& o, std::ostream& out) {
    const Topology top = require_topology(o.topology);
    const auto policy = parse_filler_policy(o.policy);
    if (!policy) throw CLI::ValidationError("--policy", "expected auto, theorem or strict");
    FillerOptions fo;
    fo.policy = *policy;
    fo.seed = o.seed;
    fo.node_limit = o.node_limit;
    const Color k = require_target(o.target == 0 ? 1 : o.target, std::max(o.palette, 1));
    const auto dc = construct_dynamo(top, o.rows, o.cols, o.palette, k, fo, o.offset);

    out << "seed_size=" << dc.seed_set.size() << " predicted_rounds=";
    if (dc.predicted_rounds) {
        out << *dc.predicted_rounds;
    } else {
        out << "none";
    }
    out << " layout=" << to_string(dc.layout) << " filler=" << to_string(dc.filler) << " k=" << static_cast<int>(k)
        << " seed=" << o.seed << '\n';
    if (o.out_path.empty()) {
        out << format_grid(dc.grid);
    } else {
        write_grid_file(o.out_path, dc.grid);
    }
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const TorusGrid grid = read_grid_file(o.file);
    const Color k = require_target(o.target == 0 ? 1 : o.target, grid.palette());

    DynamoConstruction dc{grid, k, grid.cells_of(k), SeedLayout::row_and_column, 0, FillerPolicy::theorem, o.seed,
                          std::nullopt};
    if (grid.topology() != Topology::mesh) {
        dc.layout = grid.topology() == Topology::serpentinus && grid.rows() < grid.cols() ? SeedLayout::column_plus_cell
                                                                                         : SeedLayout::row_plus_cell;
    }
    if (dc.layout != SeedLayout::column_plus_cell) {
        dc.predicted_rounds = predicted_rounds(grid.topology(), grid.rows(), grid.cols());
    }

    out << structure_summary(analyze_structure(grid, k)) << '\n';
    const auto report = verify_construction(dc, o.max_rounds);
    out << format_verification(report);
    out << "verdict=" << (report.passed() ? "pass" : "fail") << " seed=" << o.seed << '\n';
    return report.passed() ? exit_ok : exit_failed;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    SearchSpec spec;
    spec.topology = require_topology(o.topology);
    spec.rows = o.rows;
    spec.cols = o.cols;
    spec.palette = o.palette;
    spec.target = require_target(o.target == 0 ? 1 : o.target, std::max(o.palette, 1));
    spec.size = o.size;
    spec.max_rounds = o.max_rounds;
    spec.shards = o.shards;
    spec.threads = o.threads;
    if (o.progress) spec.progress = &err;
    const auto mode = parse_search_mode(o.mode);
    if (!mode) throw CLI::ValidationError("--mode", "expected min, monotone or exists");
    spec.mode = *mode;

    if (o.cross_validate) {
        const auto r = cross_validate_blocks(spec, o.samples, o.seed);
        out << "cross_validate topology=" << to_string(spec.topology) << " m=" << spec.rows << " n=" << spec.cols
            << " k_max=" << spec.palette << " samples=" << r.samples << " agreements=" << r.agreements
            << " seed=" << o.seed << '\n';
        if (r.first_disagreement) err << "first disagreement:\n" << format_grid(*r.first_disagreement);
        return r.agreed() ? exit_ok : exit_failed;
    }
    if (o.bound > 0) {
        const auto r = verify_lower_bound(spec, o.bound);
        out << format_lower_bound(spec, o.bound, r) << " seed=" << o.seed << '\n';
        if (r.counterexample && !o.out_path.empty()) write_grid_file(o.out_path, *r.counterexample);
        return r.holds ? exit_ok : exit_failed;
    }
    const auto r = enumerate_min_dynamo(spec);
    out << format_search_result(spec, r) << " seed=" << o.seed << '\n';
    if (r.witness && !o.out_path.empty()) write_grid_file(o.out_path, *r.witness);
    if (spec.mode == SearchMode::exists_dynamo_of_size) return r.minimum_size ? exit_ok : exit_failed;
    return exit_ok;
}

char round_glyph(int sigma) {
    if (sigma < 0) return '.';
    if (sigma < 10) return static_cast<char>('0' + sigma);
    if (sigma < 36) return static_cast<char>('a' + sigma - 10);
    return '?';
}

int cmd_render(const Options& o, std::ostream& out) {
    const std::string text = read_text_file(o.file);
    std::istringstream first_line(text);
    std::string head;
    first_line >> head;

    if (parse_topology(head)) {
        const TorusGrid grid = parse_grid(text);
        const int k = o.target == 0 ? 1 : o.target;
        for (int i = 0; i < grid.rows(); ++i) {
            for (int j = 0; j < grid.cols(); ++j) {
                const int c = grid.at({i, j});
                out << (o.highlight && c == k ? '#' : color_glyph(c));
            }
            out << '\n';
        }
    } else {
        const RoundMap map = parse_round_map_csv(text);
        for (int i = 0; i < map.rows; ++i) {
            for (int j = 0; j < map.cols; ++j) {
                const int s = map.at(i, j);
                out << (o.highlight && s == 0 ? '#' : round_glyph(s));
            }
            out << '\n';
        }
    }
    return exit_ok;
}

struct BatchJob {
    std::size_t line = 0;
    std::vector<std::string> args;
};

// Inputs and outputs named by a job, for the no-overwrite check.
void collect_paths(const std::vector<std::string>& args, std::vector<fs::path>& inputs,
                   std::vector<fs::path>& outputs) {
    const bool reads_file = !args.empty() && (args[0] == "simulate" || args[0] == "verify" || args[0] == "render");
    bool positional_seen = false;
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) != 0) {
            if (reads_file && !positional_seen) inputs.emplace_back(a);
            positional_seen = true;
            continue;
        }
        const auto eq = a.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = a.substr(2, eq - 2);
        const std::string value = a.substr(eq + 1);
        if (key == "file") inputs.emplace_back(value);
        if (key == "out" || key == "roundmap" || key == "trace") outputs.emplace_back(value);
    }
}

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int depth);

int cmd_batch(const Options& o, std::ostream& out, std::ostream& err, int depth, bool seed_given) {
    if (depth > 0) throw std::invalid_argument("batch jobs cannot start another batch");
    std::istringstream in(read_text_file(o.config));
    std::vector<BatchJob> jobs;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        auto args = job_arguments(line);
        if (args.empty()) continue;
        if (seed_given && std::none_of(args.begin(), args.end(),
                                       [](const std::string& a) { return a.rfind("--seed", 0) == 0; })) {
            args.push_back("--seed=" + std::to_string(o.seed));
        }
        jobs.push_back({n, std::move(args)});
    }

    // A job may not write a file that it or an earlier job reads. Reading
    // what an earlier job wrote is the normal pipeline.
    std::vector<fs::path> inputs;
    for (const auto& job : jobs) {
        std::vector<fs::path> outputs;
        collect_paths(job.args, inputs, outputs);
        for (const auto& w : outputs) {
            for (const auto& r : inputs) {
                if (fs::weakly_canonical(w) == fs::weakly_canonical(r)) {
                    err << "error: " << o.config << ": line " << job.line << ": output " << w.string()
                        << " would overwrite an input\n";
                    return exit_error;
                }
            }
        }
    }

    int worst = exit_ok;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const int status = run_app(jobs[i].args, out, err, depth + 1);
        out << "job=" << i + 1 << " line=" << jobs[i].line << " command=" << jobs[i].args[0] << " status=" << status
            << '\n';
        worst = std::max(worst, status);
    }
    out << "batch jobs=" << jobs.size() << " status=" << worst << " seed=" << o.seed << '\n';
    return worst;
}

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int depth) {
    Options o;
    CLI::App app{"SMP majority recoloring on colored tori", "smp"};
    app.require_subcommand(1);

    auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "randomness seed (echoed in reports)"); };
    auto add_shape = [&](CLI::App* sub) {
        sub->add_option("topology,--topology", o.topology, "mesh, cordalis or serpentinus")->required();
        sub->add_option("m,--m", o.rows, "rows")->required();
        sub->add_option("n,--n", o.cols, "columns")->required();
        sub->add_option("k_max,--k_max,--kmax", o.palette, "palette size")->required();
        sub->add_option("-k,--target", o.target, "target color (default 1)");
    };

    auto* simulate = app.add_subcommand("simulate", "run SMP to a fixed point, cycle or the round cap");
    simulate->add_option("file,--file", o.file, "grid file")->required();
    simulate->add_option("-k,--target", o.target, "color to track for monotonicity and the round map");
    simulate->add_option("--max-rounds,--max_rounds", o.max_rounds, "round cap (default 4mn)");
    simulate->add_option("--roundmap", o.roundmap_path, "write the round map CSV here");
    simulate->add_option("--trace", o.trace_path, "write every frame here");
    add_seed(simulate);

    auto* construct = app.add_subcommand("construct", "build a minimum-size monotone dynamo");
    add_shape(construct);
    construct->add_option("--offset", o.offset, "row (or column) of the seed");
    construct->add_option("--policy", o.policy, "filler constraints: auto, theorem or strict");
    construct->add_option("--node-limit,--node_limit", o.node_limit, "filler search nodes per attempt, 0 = unlimited");
    construct->add_option("--out", o.out_path, "write the grid here instead of standard output");
    add_seed(construct);

    auto* verify = app.add_subcommand("verify", "check a dynamo grid structurally and by simulation");
    verify->add_option("file,--file", o.file, "grid file")->required();
    verify->add_option("-k,--target", o.target, "target color (default 1)");
    verify->add_option("--max-rounds,--max_rounds", o.max_rounds, "round cap (default 4mn)");
    add_seed(verify);

    auto* search = app.add_subcommand("search", "exhaustive search over all colorings of a small torus");
    add_shape(search);
    search->add_option("--mode", o.mode, "min, monotone or exists");
    search->add_option("--size", o.size, "seed size for --mode exists");
    search->add_option("--bound", o.bound, "check that no monotone dynamo is smaller than this");
    search->add_option("--max-rounds,--max_rounds", o.max_rounds, "round cap per simulation (default 2mn)");
    search->add_option("--shards", o.shards, "index-range shards")->check(CLI::PositiveNumber);
    search->add_option("--threads", o.threads, "worker threads (default: hardware)");
    search->add_flag("--cross-validate,--cross_validate", o.cross_validate, "compare block detectors with brute force");
    search->add_option("--samples", o.samples, "colorings sampled by --cross-validate");
    search->add_option("--out", o.out_path, "write the witness grid here");
    search->add_flag("--progress", o.progress, "report progress on standard error");
    add_seed(search);

    auto* render = app.add_subcommand("render", "print a grid file or round-map CSV as ASCII");
    render->add_option("file,--file", o.file, "grid file or round-map CSV")->required();
    render->add_option("-k,--target", o.target, "color highlighted by --highlight (default 1)");
    render->add_flag("--highlight", o.highlight, "draw the target color (or round 0) as '#'");
    add_seed(render);

    auto* batch = app.add_subcommand("batch", "run the jobs of a config file in order");
    batch->add_option("config", o.config, "one job per line: <command> key=value ...")->required();
    add_seed(batch);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(o, out);
        if (construct->parsed()) return cmd_construct(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (search->parsed()) return cmd_search(o, out, err);
        if (render->parsed()) return cmd_render(o, out);
        if (batch->parsed()) return cmd_batch(o, out, err, depth, batch->count("--seed") > 0);
    } catch (const ParseError& e) {
        err << "error: " << o.file << ": " << e.what() << '\n';
        return exit_error;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

} // namespace

char color_glyph(int color) {
    if (color >= 1 && color <= 9) return static_cast<char>('0' + color);
    if (color >= 10 && color < 36) return static_cast<char>('a' + color - 10);
    return '?';
}

std::vector<std::string> job_arguments(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> args;
    std::string token;
    while (in >> token) {
        if (args.empty() && token[0] == '#') return {};
        if (args.empty()) {
            args.push_back(token);
            continue;
        }
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            args.push_back(token);
        } else if (token.compare(0, eq, "k") == 0) {
            args.push_back("-k");
            args.push_back(token.substr(2));
        } else {
            args.push_back("--" + token);
        }
    }
    return args;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return run_app(args, out, err, 0);
}

} // namespace smp::cli
