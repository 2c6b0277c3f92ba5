#ifndef MPGSD_BENCH_HPP
#define MPGSD_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "mpgsd/aco.hpp"
#include "mpgsd/construction.hpp"
#include "mpgsd/generator.hpp"
#include "mpgsd/graph.hpp"

namespace mpgsd {

enum class Algo { Greedy, Aco, AcoC };

inline const char* to_string(Algo a) {
    switch (a) {
        case Algo::Greedy: return "greedy";
        case Algo::Aco: return "aco";
        case Algo::AcoC: return "aco-c";
    }
    return "?";
}

inline Algo algo_from_string(const std::string& s) {
    if (s == "greedy") return Algo::Greedy;
    if (s == "aco") return Algo::Aco;
    if (s == "aco-c") return Algo::AcoC;
    throw ValidationError("unknown algorithm '" + s + "' (expected greedy, aco or aco-c)");
}

// (optimal - found) / optimal * 100. A found value above the optimum means a
// solver or generator bug, not a bad run.
inline double normalized_error(Value optimal, Value found) {
    check_arg(optimal > 0, "normalized_error: optimal must be positive");
    check_arg(found >= 0, "normalized_error: found must be nonnegative");
    if (found > optimal)
        throw IntegrityError("objective " + std::to_string(found) + " exceeds the known optimum " +
                             std::to_string(optimal));
    return static_cast<double>(optimal - found) / static_cast<double>(optimal) * 100.0;
}

// One benchmark size class: kind plus the supply/demand vertex counts.
struct ClassSpec {
    InstanceSpec::Kind kind = InstanceSpec::Kind::Tree;
    int n_supply = 0;
    int n_demand = 0;
    Value value_min = 1;
    Value value_max = 10;
    double extra_edge_factor = 0.3;

    std::string label() const {
        return std::string(to_string(kind)) + ":" + std::to_string(n_supply) + "x" +
               std::to_string(n_demand);
    }

    InstanceSpec instance(std::uint64_t seed) const {
        return {n_supply, n_demand, kind, seed, value_min, value_max, extra_edge_factor};
    }
};

// Table-row shape: per-instance normalized errors of one algorithm on one
// class, plus their aggregate statistics. stdev is the population standard
// deviation (divide by N).
struct RunStats {
    std::string size_label;
    Algo algo = Algo::Greedy;
    std::vector<double> errors;
    double avg = 0;
    double stdev = 0;
    double max = 0;
    int hits = 0;

    void aggregate() {
        avg = stdev = max = 0;
        hits = 0;
        if (errors.empty()) return;
        for (double e : errors) {
            avg += e;
            max = e > max ? e : max;
            hits += e == 0.0;
        }
        avg /= static_cast<double>(errors.size());
        for (double e : errors) stdev += (e - avg) * (e - avg);
        stdev = std::sqrt(stdev / static_cast<double>(errors.size()));
    }
};

// Runs every requested algorithm once on `instances` generated instances
// (generation seed and solver seed are both seed_base + index) and aggregates
// the normalized errors. Instances are independent, so they are fanned out to
// `jobs` worker threads (0 = hardware concurrency); results are reduced in
// index order, making the output independent of the scheduling.
inline std::vector<RunStats> run_class(const ClassSpec& cls, int instances,
                                       const std::vector<Algo>& algos, const AcoParams& base_params,
                                       std::uint64_t seed_base, int jobs = 0) {
    check_arg(instances > 0, "run_class: need at least one instance");
    check_arg(!algos.empty(), "run_class: need at least one algorithm");
    base_params.validate();

    const std::size_t n_algos = algos.size();
    std::vector<std::vector<Value>> found(instances, std::vector<Value>(n_algos, 0));
    std::vector<Value> optima(instances, 0);
    std::vector<std::exception_ptr> failures(instances);

    auto run_instance = [&](int i) {
        try {
            const auto g = generate(cls.instance(seed_base + i));
            optima[i] = *g.optimum();
            for (std::size_t a = 0; a < n_algos; ++a) {
                if (algos[a] == Algo::Greedy) {
                    found[i][a] = objective(g, greedy_solve(g));
                } else {
                    AcoParams params = base_params;
                    params.seed = seed_base + i;
                    params.use_correction = algos[a] == Algo::AcoC;
                    found[i][a] = solve(g, params).best_objective;
                }
            }
        } catch (...) {
            failures[i] = std::current_exception();
        }
    };

    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::min(std::max(workers, 1), instances);
    if (workers == 1) {
        for (int i = 0; i < instances; ++i) run_instance(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < instances; i = next.fetch_add(1))
                    run_instance(i);
            });
        for (auto& t : pool) t.join();
    }
    for (int i = 0; i < instances; ++i)
        if (failures[i]) std::rethrow_exception(failures[i]);

    std::vector<RunStats> out(n_algos);
    for (std::size_t a = 0; a < n_algos; ++a) {
        out[a].size_label = cls.label();
        out[a].algo = algos[a];
        out[a].errors.reserve(instances);
        for (int i = 0; i < instances; ++i)
            out[a].errors.push_back(normalized_error(optima[i], found[i][a]));
        out[a].aggregate();
    }
    return out;
}

struct TracePoint {
    int iteration = 0;  // 1-based colony iteration
    double min = 0;
    double avg = 0;
    double max = 0;
};

// Best-so-far normalized error per colony iteration, summarized over `runs`
// seeded solves (seeds params.seed .. params.seed + runs - 1). The instance
// must carry a known optimum.
inline std::vector<TracePoint> convergence_trace(const ProblemGraph& g, const AcoParams& params,
                                                 int runs) {
    check_arg(runs > 0, "convergence_trace: need at least one run");
    if (!g.optimum())
        throw ValidationError("convergence_trace: instance has no known optimum");
    const Value optimum = *g.optimum();

    std::vector<std::vector<Value>> histories(runs);
    for (int r = 0; r < runs; ++r) {
        AcoParams run_params = params;
        run_params.seed = params.seed + static_cast<std::uint64_t>(r);
        histories[r] = solve(g, run_params).history;
    }

    std::vector<TracePoint> trace(params.iterations);
    for (int k = 0; k < params.iterations; ++k) {
        TracePoint& point = trace[k];
        point.iteration = k + 1;
        point.min = 100.0;
        for (int r = 0; r < runs; ++r) {
            const double e = normalized_error(optimum, histories[r][k]);
            point.min = e < point.min ? e : point.min;
            point.max = e > point.max ? e : point.max;
            point.avg += e;
        }
        point.avg /= runs;
    }
    return trace;
}

namespace detail {

inline void append_fixed(std::string& out, double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", x);
    out += buffer;
}

}  // namespace detail

inline std::string stats_to_csv(const std::vector<RunStats>& rows) {
    std::string out = "size,algo,avg,stdev,max,hits\n";
    for (const auto& row : rows) {
        out += row.size_label;
        out += ',';
        out += to_string(row.algo);
        out += ',';
        detail::append_fixed(out, row.avg);
        out += ',';
        detail::append_fixed(out, row.stdev);
        out += ',';
        detail::append_fixed(out, row.max);
        out += ',';
        out += std::to_string(row.hits);
        out += '\n';
    }
    return out;
}

inline std::string trace_to_csv(const std::vector<TracePoint>& trace) {
    std::string out = "iteration,min,avg,max\n";
    for (const auto& point : trace) {
        out += std::to_string(point.iteration);
        out += ',';
        detail::append_fixed(out, point.min);
        out += ',';
        detail::append_fixed(out, point.avg);
        out += ',';
        detail::append_fixed(out, point.max);
        out += '\n';
    }
    return out;
}

}  // namespace mpgsd

#endif
