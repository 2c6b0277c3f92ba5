// Command-line front end: generate instances, solve them, sweep benchmark
// classes, and verify small instances exactly.
//
// Exit codes: 0 success, 2 parse/validation error, 3 integrity error
// (a solver result above the known optimum).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mpgsd/aco.hpp"
#include "mpgsd/bench.hpp"
#include "mpgsd/exact.hpp"
#include "mpgsd/generator.hpp"
#include "mpgsd/io.hpp"

namespace {

using namespace mpgsd;

struct GenOptions {
    int supply = 0;
    int demand = 0;
    std::string kind;
    std::uint64_t seed = 0;
    std::string out;
    std::int64_t value_min = 1;
    std::int64_t value_max = 10;
    double extra_edges = 0.3;
};

struct SolveOptions {
    std::string in;
    std::string algo;
    AcoParams params;
    std::string trace;
};

struct BenchOptions {
    std::string classes;
    int instances = 40;
    std::string algos = "greedy,aco,aco-c";
    std::uint64_t seed_base = 0;
    std::string out;
    bool full_scale = false;
};

struct ExactOptions {
    std::string in;
    std::uint64_t budget = 10'000'000;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

int parse_positive_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(s, &used);
        if (used == s.size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("bad ") + what + ": '" + s + "'");
}

// A class spec is `tree:SxD` or `general:SxD`; `default` expands to the desk
// grid (2-10 supplies), `full` to the whole 24-size grid, each in both kinds.
std::vector<ClassSpec> parse_classes(const std::string& text) {
    std::vector<ClassSpec> classes;
    auto add_grid = [&](int max_supply) {
        for (auto kind : {InstanceSpec::Kind::General, InstanceSpec::Kind::Tree})
            for (int supply : {2, 5, 10, 25, 50, 100}) {
                if (supply > max_supply) continue;
                for (int factor : {3, 5, 10, 20})
                    classes.push_back({kind, supply, supply * factor});
            }
    };
    if (text == "default") {
        add_grid(10);
        return classes;
    }
    if (text == "full") {
        add_grid(100);
        return classes;
    }
    for (const auto& entry : split(text, ',')) {
        const auto kind_size = split(entry, ':');
        if (kind_size.size() != 2)
            throw ValidationError("bad class '" + entry + "' (expected kind:SUPPLYxDEMAND)");
        ClassSpec cls;
        cls.kind = kind_from_string(kind_size[0]);
        const auto dims = split(kind_size[1], 'x');
        if (dims.size() != 2)
            throw ValidationError("bad class size '" + kind_size[1] + "' (expected SUPPLYxDEMAND)");
        cls.n_supply = parse_positive_int(dims[0], "supply count");
        cls.n_demand = parse_positive_int(dims[1], "demand count");
        classes.push_back(cls);
    }
    if (classes.empty()) throw ValidationError("no benchmark classes given");
    return classes;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!out) throw std::runtime_error("failed writing: " + path);
}

int run_gen(const GenOptions& opt) {
    InstanceSpec spec{opt.supply,    opt.demand,    kind_from_string(opt.kind), opt.seed,
                      opt.value_min, opt.value_max, opt.extra_edges};
    write_instance(generate(spec), opt.out);
    return 0;
}

int run_solve(const SolveOptions& opt) {
    const ProblemGraph g = read_instance(opt.in);
    Value found = 0;
    std::vector<Value> history;
    if (opt.algo == "greedy") {
        if (!opt.trace.empty())
            throw ValidationError("--trace needs an iterative algorithm (aco or aco-c)");
        found = objective(g, greedy_solve(g));
    } else {
        AcoParams params = opt.params;
        params.use_correction = algo_from_string(opt.algo) == Algo::AcoC;
        auto result = solve(g, params);
        found = result.best_objective;
        history = std::move(result.history);
    }

    if (g.optimum()) {
        const double error = normalized_error(*g.optimum(), found);
        std::printf("found=%lld optimum=%lld error=%.6f\n", static_cast<long long>(found),
                    static_cast<long long>(*g.optimum()), error);
    } else {
        std::printf("found=%lld optimum=unknown error=n/a\n", static_cast<long long>(found));
    }

    if (!opt.trace.empty()) {
        if (!g.optimum())
            throw ValidationError("--trace needs an instance with a recorded optimum");
        std::vector<TracePoint> trace;
        trace.reserve(history.size());
        for (std::size_t k = 0; k < history.size(); ++k) {
            const double e = normalized_error(*g.optimum(), history[k]);
            trace.push_back({static_cast<int>(k) + 1, e, e, e});
        }
        write_file(opt.trace, trace_to_csv(trace));
    }
    return 0;
}

int run_bench(const BenchOptions& opt) {
    const auto classes = parse_classes(opt.classes);
    if (!opt.full_scale)
        for (const auto& cls : classes)
            if (cls.n_supply > 10 || cls.n_demand > 200)
                throw ValidationError("class " + cls.label() +
                                      " is beyond the desk-scale sweep; pass --full-scale");
    std::vector<Algo> algos;
    for (const auto& name : split(opt.algos, ',')) algos.push_back(algo_from_string(name));

    AcoParams params;  // the benchmark protocol runs the published defaults
    std::vector<RunStats> rows;
    for (const auto& cls : classes) {
        auto part = run_class(cls, opt.instances, algos, params, opt.seed_base);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    write_file(opt.out, stats_to_csv(rows));
    return 0;
}

int run_exact(const ExactOptions& opt) {
    const ProblemGraph g = read_instance(opt.in);
    const auto result = exact_optimum(g, opt.budget);
    if (!result.decided) {
        std::printf("undecided expansions=%llu\n",
                    static_cast<unsigned long long>(result.expansions));
        return 0;
    }
    std::printf("optimum=%lld expansions=%llu\n", static_cast<long long>(result.optimum),
                static_cast<unsigned long long>(result.expansions));
    if (g.optimum() && *g.optimum() != result.optimum)
        throw IntegrityError("instance records optimum " + std::to_string(*g.optimum()) +
                             " but the exact solver found " + std::to_string(result.optimum));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MPGSD solver suite: greedy, ACO and ACO-C for maximum partitioning "
                 "of graphs with supply and demand"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "Generate an instance with a known optimum");
    gen->add_option("--supply", gen_opt.supply, "Number of supply vertices")->required();
    gen->add_option("--demand", gen_opt.demand, "Number of demand vertices")->required();
    gen->add_option("--kind", gen_opt.kind, "tree or general")->required();
    gen->add_option("--seed", gen_opt.seed, "Generator seed")->required();
    gen->add_option("--out", gen_opt.out, "Output instance path")->required();
    gen->add_option("--value-min", gen_opt.value_min, "Smallest demand magnitude")->capture_default_str();
    gen->add_option("--value-max", gen_opt.value_max, "Largest demand magnitude")->capture_default_str();
    gen->add_option("--extra-edges", gen_opt.extra_edges,
                    "Extra edges per demand vertex (general graphs)")->capture_default_str();

    SolveOptions solve_opt;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
    solve_cmd->add_option("--in", solve_opt.in, "Instance path")->required();
    solve_cmd->add_option("--algo", solve_opt.algo, "greedy, aco or aco-c")->required();
    solve_cmd->add_option("--ants", solve_opt.params.ants, "Ants per colony iteration")->capture_default_str();
    solve_cmd->add_option("--iters", solve_opt.params.iterations, "Colony iterations")->capture_default_str();
    solve_cmd->add_option("--p", solve_opt.params.p, "Global update weight")->capture_default_str();
    solve_cmd->add_option("--phi", solve_opt.params.phi, "Local decay factor")->capture_default_str();
    solve_cmd->add_option("--q0", solve_opt.params.q0, "Exploration threshold")->capture_default_str();
    solve_cmd->add_option("--seed", solve_opt.params.seed, "Random seed")->capture_default_str();
    solve_cmd->add_option("--trace", solve_opt.trace, "Write per-iteration error CSV here");

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "Sweep benchmark classes and write CSV stats");
    bench->add_option("--classes", bench_opt.classes,
                      "Comma list of kind:SxD entries, or 'default'/'full'")
        ->required();
    bench->add_option("--instances", bench_opt.instances, "Instances per class")->capture_default_str();
    bench->add_option("--algos", bench_opt.algos, "Comma list of algorithms")->capture_default_str();
    bench->add_option("--seed-base", bench_opt.seed_base,
                      "Instance i uses seed seed-base + i for generation and solving")->capture_default_str();
    bench->add_option("--out", bench_opt.out, "Output CSV path")->required();
    bench->add_flag("--full-scale", bench_opt.full_scale,
                    "Allow classes beyond 10x200 (long runtimes)");

    ExactOptions exact_opt;
    auto* exact = app.add_subcommand("exact", "Exactly solve a small instance");
    exact->add_option("--in", exact_opt.in, "Instance path")->required();
    exact->add_option("--budget", exact_opt.budget, "Search node budget")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_opt);
        if (solve_cmd->parsed()) return run_solve(solve_opt);
        if (bench->parsed()) return run_bench(bench_opt);
        if (exact->parsed()) return run_exact(exact_opt);
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
