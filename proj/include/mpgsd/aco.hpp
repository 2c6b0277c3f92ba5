#ifndef MPGSD_ACO_HPP
#define MPGSD_ACO_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mpgsd/construction.hpp"
#include "mpgsd/correction.hpp"
#include "mpgsd/graph.hpp"
#include "mpgsd/rng.hpp"

namespace mpgsd {

// Learned weight of the solution element "demand vertex v sits in subgraph s".
// Entries stay strictly positive: decay multiplies by phi in (0,1) and the
// deposit is a convex blend with a positive quality.
class PheromoneMatrix {
public:
    PheromoneMatrix(int vertices, int subgraphs, double initial)
        : vertices_(vertices),
          subgraphs_(subgraphs),
          tau_(static_cast<std::size_t>(vertices) * subgraphs, initial) {
        check_arg(initial > 0, "pheromone must be initialized to a positive value");
    }

    double get(int v, int s) const { return tau_[index(v, s)]; }
    void set(int v, int s, double value) { tau_[index(v, s)] = value; }

    int vertex_count() const { return vertices_; }
    int subgraph_count() const { return subgraphs_; }

    double min_entry() const {
        double m = tau_.empty() ? 0.0 : tau_[0];
        for (double t : tau_) m = t < m ? t : m;
        return m;
    }

private:
    std::size_t index(int v, int s) const {
        return static_cast<std::size_t>(v) * subgraphs_ + s;
    }

    int vertices_ = 0;
    int subgraphs_ = 0;
    std::vector<double> tau_;
};

struct AcoParams {
    int ants = 10;
    int iterations = 150;
    double p = 0.1;        // weight of the global (best-solution) deposit
    double phi = 0.9;      // per-solution decay
    double q0 = 0.1;       // q > q0 exploits (argmax), q <= q0 explores
    std::uint64_t seed = 0;
    bool use_correction = false;

    void validate() const {
        if (ants < 1) throw ValidationError("aco: need at least one ant");
        if (iterations < 0) throw ValidationError("aco: iterations must be >= 0");
        if (!(p > 0 && p < 1)) throw ValidationError("aco: p must lie in (0,1)");
        if (!(phi > 0 && phi < 1)) throw ValidationError("aco: phi must lie in (0,1)");
        if (!(q0 >= 0 && q0 <= 1)) throw ValidationError("aco: q0 must lie in [0,1]");
    }
};

struct AcoResult {
    Partition best;
    Value best_objective = 0;
    std::vector<Value> history;  // best-so-far objective after each colony iteration
    std::uint64_t solutions_generated = 0;
};

// Solution quality: 1 / (unused supply + 1), so saturating the total supply
// scores 1 and the score never divides by zero.
inline double quality(const ProblemGraph& g, const Partition& pi) {
    return 1.0 / static_cast<double>(g.total_supply() - objective(g, pi) + 1);
}

// Every entry starts at the quality of the greedy solution.
inline PheromoneMatrix init_pheromone(const ProblemGraph& g) {
    return PheromoneMatrix(g.vertex_count(), g.supply_count(), quality(g, greedy_solve(g)));
}

// Pseudo-random proportional rule for one expansion of subgraph s. The caller
// draws q uniformly beforehand: q > q0 picks the candidate maximizing
// tau * demand outright (ties to the lowest vertex index), otherwise the
// candidate is drawn with probability proportional to tau * demand.
inline int transition_select(const GrowState& state, const PheromoneMatrix& tau, int s,
                             double q0, double q, Rng& rng) {
    const ProblemGraph& g = state.graph();
    std::vector<int> cand;
    state.candidates(s, cand);
    check_arg(!cand.empty(), "transition_select: subgraph has no candidate");

    if (q > q0) {
        int best = cand[0];
        double best_weight = tau.get(best, s) * static_cast<double>(g.demand(best));
        for (int v : cand) {
            const double w = tau.get(v, s) * static_cast<double>(g.demand(v));
            if (w > best_weight || (w == best_weight && v < best)) {
                best = v;
                best_weight = w;
            }
        }
        return best;
    }

    double total = 0;
    std::vector<double> weight(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) {
        weight[i] = tau.get(cand[i], s) * static_cast<double>(g.demand(cand[i]));
        total += weight[i];
    }
    if (!(total > 0)) return cand[rng.next_index(static_cast<int>(cand.size()))];  // guarded; cannot occur
    const double r = rng.next_double() * total;
    double acc = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        acc += weight[i];
        if (r < acc) return cand[i];
    }
    return cand.back();
}

// Decay the entries of one generated solution.
inline void local_update(PheromoneMatrix& tau, const ProblemGraph& g, const Partition& pi,
                         double phi) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_demand(v) && pi.is_assigned(v)) {
            const int s = pi.subgraph_of(v);
            tau.set(v, s, phi * tau.get(v, s));
        }
}

// Pull the entries of the best-so-far solution toward its quality. Entries
// outside the solution are untouched.
inline void global_update(PheromoneMatrix& tau, const ProblemGraph& g, const Partition& best,
                          double p) {
    const double deposit = quality(g, best);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_demand(v) && best.is_assigned(v)) {
            const int s = best.subgraph_of(v);
            tau.set(v, s, (1 - p) * tau.get(v, s) + p * deposit);
        }
}

// Ant Colony System main loop. The greedy solution seeds the pheromone matrix
// and stands as the initial incumbent, so the result is never worse than
// greedy. Each ant grows a partition by repeatedly expanding a uniformly
// random expandable subgraph with a transition-rule pick; the finished (and
// optionally corrected) solution decays its own entries, and after each
// colony iteration the incumbent deposits. Single random stream, ants in
// sequence: one seed, one result, bit for bit.
inline AcoResult solve(const ProblemGraph& g, const AcoParams& params) {
    params.validate();
    Rng rng(params.seed);

    const Partition greedy = greedy_solve(g);
    PheromoneMatrix tau(g.vertex_count(), g.supply_count(), quality(g, greedy));

    AcoResult result;
    result.best = greedy;
    result.best_objective = objective(g, greedy);
    result.history.reserve(params.iterations);

    std::vector<int> expandable;
    for (int iteration = 0; iteration < params.iterations; ++iteration) {
        for (int ant = 0; ant < params.ants; ++ant) {
            GrowState state(g);
            for (;;) {
                state.expandable_subgraphs(expandable);
                if (expandable.empty()) break;
                const int s = expandable[rng.next_index(static_cast<int>(expandable.size()))];
                const double q = rng.next_double();
                state.extend(s, transition_select(state, tau, s, params.q0, q, rng));
            }
            Partition pi = state.partition();
            if (params.use_correction) pi = correct(g, pi);
            local_update(tau, g, pi, params.phi);
            ++result.solutions_generated;
            const Value obj = objective(g, pi);
            if (obj > result.best_objective) {
                result.best = std::move(pi);
                result.best_objective = obj;
            }
        }
        global_update(tau, g, result.best, params.p);
        result.history.push_back(result.best_objective);
    }
    return result;
}

}  // namespace mpgsd

#endif
