#ifndef MPGSD_CONSTRUCTION_HPP
#define MPGSD_CONSTRUCTION_HPP

#include <cstdint>
#include <vector>

#include "mpgsd/graph.hpp"

namespace mpgsd {

// Incremental state for growing a partition one vertex at a time, shared by
// the greedy algorithm and the ant constructions.
//
// Each subgraph keeps its remaining surplus and a frontier of demand vertices
// adjacent to it. Frontier entries go stale (vertex assigned elsewhere, or
// its demand now above the surplus); staleness is permanent during a
// construction because surplus only ever decreases, so scans drop stale
// entries as they pass them. The candidate set of subgraph s is the frontier
// filtered down to unassigned vertices that fit the surplus.
//
// Single-owner mutable; distinct states over one shared graph may be grown
// concurrently.
class GrowState {
public:
    // Start with every subgraph holding just its supply vertex.
    explicit GrowState(const ProblemGraph& g) : g_(&g), pi_(g) {
        if (g.supply_count() == 0)
            throw ValidationError("instance has no supply vertex");
        const int n = g.supply_count();
        surplus_.resize(n);
        frontier_.resize(n);
        in_frontier_.assign(static_cast<std::size_t>(n) * g.vertex_count(), 0);
        for (int i = 0; i < n; ++i) {
            const int s = g.supply_vertex(i);
            surplus_[i] = g.value(s);
            for (int u : g.neighbors(s)) push_frontier(i, u);
        }
    }

    const ProblemGraph& graph() const { return *g_; }
    const Partition& partition() const { return pi_; }
    Value surplus(int s) const { return surplus_[s]; }

    // N_s: unassigned frontier vertices whose demand fits the surplus.
    void candidates(int s, std::vector<int>& out) const {
        out.clear();
        scan(s, [&](int v) { out.push_back(v); return false; });
    }

    std::vector<int> candidates(int s) const {
        std::vector<int> out;
        candidates(s, out);
        return out;
    }

    bool has_candidate(int s) const {
        bool found = false;
        scan(s, [&](int) { found = true; return true; });
        return found;
    }

    // Subgraphs that can still be expanded (nonempty candidate set).
    void expandable_subgraphs(std::vector<int>& out) const {
        out.clear();
        for (int s = 0; s < static_cast<int>(surplus_.size()); ++s)
            if (has_candidate(s)) out.push_back(s);
    }

    // Assign v to subgraph s. v must be a current candidate of s.
    void extend(int s, int v) {
        check_arg(s >= 0 && s < static_cast<int>(surplus_.size()), "extend: bad subgraph index");
        check_arg(v >= 0 && v < g_->vertex_count() && g_->is_demand(v) && !pi_.is_assigned(v) &&
                      in_frontier_[flat(s, v)] && g_->demand(v) <= surplus_[s],
                  "extend: vertex is not a candidate of the subgraph");
        pi_.assign(v, s);
        surplus_[s] -= g_->demand(v);
        for (int u : g_->neighbors(v)) push_frontier(s, u);
    }

private:
    std::size_t flat(int s, int v) const {
        return static_cast<std::size_t>(s) * g_->vertex_count() + v;
    }

    void push_frontier(int s, int u) {
        if (g_->is_demand(u) && !pi_.is_assigned(u) && !in_frontier_[flat(s, u)]) {
            in_frontier_[flat(s, u)] = 1;
            frontier_[s].push_back(u);
        }
    }

    // Walks the live candidates of s in insertion order, compacting out
    // entries that can never become candidates again. Stops early when fn
    // returns true. Logically const: the candidate set is unchanged.
    template <typename Fn>
    bool scan(int s, Fn&& fn) const {
        auto& fr = frontier_[s];
        std::size_t keep = 0, i = 0;
        bool stopped = false;
        for (; i < fr.size(); ++i) {
            const int v = fr[i];
            if (pi_.is_assigned(v) || g_->demand(v) > surplus_[s]) {
                in_frontier_[flat(s, v)] = 0;
                continue;
            }
            fr[keep++] = v;
            if (fn(v)) {
                ++i;
                stopped = true;
                break;
            }
        }
        for (; i < fr.size(); ++i) fr[keep++] = fr[i];
        fr.resize(keep);
        return stopped;
    }

    const ProblemGraph* g_ = nullptr;
    Partition pi_;
    std::vector<Value> surplus_;
    mutable std::vector<std::vector<int>> frontier_;
    mutable std::vector<std::uint8_t> in_frontier_;
};

// Deterministic greedy construction: repeatedly expand the subgraph with the
// largest remaining surplus (among the expandable ones) by its candidate of
// largest demand. Ties break toward the lower index so runs are reproducible
// across platforms.
inline Partition greedy_solve(const ProblemGraph& g) {
    GrowState state(g);
    const int n = g.supply_count();
    std::vector<int> cand;
    for (;;) {
        int best_s = -1;
        Value best_surplus = -1;
        for (int s = 0; s < n; ++s)
            if (state.surplus(s) > best_surplus && state.has_candidate(s)) {
                best_s = s;
                best_surplus = state.surplus(s);
            }
        if (best_s < 0) break;
        state.candidates(best_s, cand);
        int best_v = cand[0];
        for (int v : cand)
            if (g.demand(v) > g.demand(best_v) || (g.demand(v) == g.demand(best_v) && v < best_v))
                best_v = v;
        state.extend(best_s, best_v);
    }
    return state.partition();
}

}  // namespace mpgsd

#endif
