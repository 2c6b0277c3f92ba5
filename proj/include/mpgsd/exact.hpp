#ifndef MPGSD_EXACT_HPP
#define MPGSD_EXACT_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mpgsd/graph.hpp"

namespace mpgsd {

struct ExactResult {
    bool decided = false;      // false: budget ran out, optimum unknown
    Value optimum = 0;
    Partition witness;
    std::uint64_t expansions = 0;
};

namespace detail {

// Exhaustive search for the best feasible partition.
//
// Subgraphs are settled one at a time: for subgraph i we enumerate every
// connected vertex set containing its supply vertex (over the vertices the
// earlier subgraphs left free), then recurse into subgraph i+1. The
// enumeration adds one adjacent vertex at a time and forbids a candidate in
// all later branches of the node that skipped it, which yields each vertex
// set exactly once; since every connected set can be built by adjacent
// single-vertex additions, nothing is missed. Two prunes keep it tractable:
// a vertex whose demand exceeds the running surplus can never join (demands
// only accumulate), and a branch whose satisfied demand cannot reach the
// incumbent even if the optimistic bound min(unassigned demand, remaining
// supply) fully materializes is cut.
class ExactSearch {
public:
    ExactSearch(const ProblemGraph& g, std::uint64_t budget)
        : g_(g),
          n_(g.supply_count()),
          budget_(budget),
          assignment_(g.vertex_count(), kUnassigned),
          forbidden_(static_cast<std::size_t>(n_) * g.vertex_count(), 0),
          listed_(static_cast<std::size_t>(n_) * g.vertex_count(), 0) {
        remaining_demand_ = g.total_demand();
        future_supply_.assign(n_ + 1, 0);
        for (int i = n_ - 1; i >= 0; --i)
            future_supply_[i] = future_supply_[i + 1] + g.value(g.supply_vertex(i));
    }

    ExactResult run() {
        best_value_ = 0;
        best_assignment_ = assignment_;  // empty partition is always feasible
        settle_subgraph(0);
        ExactResult result;
        result.expansions = expansions_;
        if (aborted_) return result;
        result.decided = true;
        result.optimum = best_value_;
        result.witness = Partition(g_);
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (best_assignment_[v] != kUnassigned) result.witness.assign(v, best_assignment_[v]);
        return result;
    }

private:
    std::size_t flat(int i, int v) const {
        return static_cast<std::size_t>(i) * g_.vertex_count() + v;
    }

    bool count_expansion() {
        if (++expansions_ > budget_) aborted_ = true;
        return !aborted_;
    }

    void settle_subgraph(int i) {
        if (aborted_ || !count_expansion()) return;
        if (i == n_) {
            if (satisfied_ > best_value_) {
                best_value_ = satisfied_;
                best_assignment_ = assignment_;
            }
            return;
        }
        const int root = g_.supply_vertex(i);
        std::vector<int> ext;
        for (int u : g_.neighbors(root))
            if (g_.is_demand(u) && assignment_[u] == kUnassigned && !listed_[flat(i, u)]) {
                listed_[flat(i, u)] = 1;
                ext.push_back(u);
            }
        order_by_demand(ext);
        grow(i, g_.value(root), ext);
        for (int u : ext) listed_[flat(i, u)] = 0;
    }

    void grow(int i, Value surplus, const std::vector<int>& ext) {
        if (aborted_ || !count_expansion()) return;
        const Value reachable = std::min<Value>(remaining_demand_, surplus + future_supply_[i + 1]);
        if (satisfied_ + reachable <= best_value_) return;

        settle_subgraph(i + 1);  // freeze subgraph i as it stands

        std::vector<int> forbidden_here;
        std::vector<int> next_ext, newly_listed;
        for (std::size_t k = 0; k < ext.size() && !aborted_; ++k) {
            const int u = ext[k];
            if (g_.demand(u) <= surplus) {
                assignment_[u] = i;
                satisfied_ += g_.demand(u);
                remaining_demand_ -= g_.demand(u);

                next_ext.assign(ext.begin() + k + 1, ext.end());
                newly_listed.clear();
                for (int w : g_.neighbors(u))
                    if (g_.is_demand(w) && assignment_[w] == kUnassigned &&
                        !forbidden_[flat(i, w)] && !listed_[flat(i, w)]) {
                        listed_[flat(i, w)] = 1;
                        newly_listed.push_back(w);
                        next_ext.push_back(w);
                    }
                order_by_demand(next_ext);
                grow(i, surplus - g_.demand(u), next_ext);

                for (int w : newly_listed) listed_[flat(i, w)] = 0;
                assignment_[u] = kUnassigned;
                satisfied_ -= g_.demand(u);
                remaining_demand_ += g_.demand(u);
            }
            forbidden_[flat(i, u)] = 1;
            forbidden_here.push_back(u);
        }
        for (int u : forbidden_here) forbidden_[flat(i, u)] = 0;
    }

    // Big demands first so the surplus prune bites early.
    void order_by_demand(std::vector<int>& vs) const {
        std::sort(vs.begin(), vs.end(), [this](int a, int b) {
            return g_.demand(a) != g_.demand(b) ? g_.demand(a) > g_.demand(b) : a < b;
        });
    }

    const ProblemGraph& g_;
    const int n_;
    const std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    bool aborted_ = false;

    std::vector<int> assignment_;
    std::vector<std::uint8_t> forbidden_;  // per (subgraph, vertex): skipped at an earlier branch
    std::vector<std::uint8_t> listed_;     // per (subgraph, vertex): sits in a live ext list
    Value satisfied_ = 0;
    Value remaining_demand_ = 0;
    std::vector<Value> future_supply_;

    Value best_value_ = 0;
    std::vector<int> best_assignment_;
};

}  // namespace detail

// Exact maximum satisfied demand over all feasible partitions, with a witness.
// `budget` caps the number of search-node expansions; when it runs out the
// result is explicitly undecided, never a guess. Meant for small instances
// (roughly up to 20 demand vertices).
inline ExactResult exact_optimum(const ProblemGraph& g, std::uint64_t budget = 10'000'000) {
    return detail::ExactSearch(g, budget).run();
}

}  // namespace mpgsd

#endif
