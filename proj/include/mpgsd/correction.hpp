#ifndef MPGSD_CORRECTION_HPP
#define MPGSD_CORRECTION_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "mpgsd/graph.hpp"

namespace mpgsd {

// One improving step on a feasible partition. Every move ends in an insert,
// so every move strictly raises the objective.
//
//   Insert    assign unassigned `vertex` to adjacent `to_subgraph`.
//   Transfer  relocate assigned `vertex` from `from_subgraph` to
//             `to_subgraph`, which unlocks inserting `enabled_vertex` into
//             `enabled_subgraph`.
//   Swap      exchange `vertex` (from_subgraph) with `other_vertex`
//             (to_subgraph), which unlocks the recorded insert.
struct Move {
    enum class Kind { Insert, Transfer, Swap };
    Kind kind = Kind::Insert;
    int vertex = -1;
    int from_subgraph = kUnassigned;
    int to_subgraph = -1;
    int other_vertex = -1;
    int enabled_vertex = -1;
    int enabled_subgraph = -1;
    Value delta = 0;
};

namespace detail {

// Shared machinery for enumerating moves on one partition. Scans are in
// ascending vertex/subgraph order so the first hit is deterministic.
class MoveScanner {
public:
    MoveScanner(const ProblemGraph& g, Partition& pi)
        : g_(&g), pi_(&pi), stamp_(g.vertex_count(), 0) {
        rebuild();
    }

    void rebuild() {
        const int n = g_->supply_count();
        surplus_.assign(n, 0);
        member_count_.assign(n, 1);
        for (int i = 0; i < n; ++i) surplus_[i] = g_->value(g_->supply_vertex(i));
        for (int v = 0; v < g_->vertex_count(); ++v)
            if (g_->is_demand(v) && pi_->is_assigned(v)) {
                surplus_[pi_->subgraph_of(v)] -= g_->demand(v);
                ++member_count_[pi_->subgraph_of(v)];
            }
    }

    // Feasible inserts of the current partition, lexicographic (vertex,
    // subgraph) order.
    std::vector<std::pair<int, int>> inserts() const {
        std::vector<std::pair<int, int>> out;
        std::vector<int> targets;
        for (int v = 0; v < g_->vertex_count(); ++v) {
            if (!g_->is_demand(v) || pi_->is_assigned(v)) continue;
            adjacent_subgraphs(v, targets);
            for (int s : targets)
                if (g_->demand(v) <= surplus_[s]) out.emplace_back(v, s);
        }
        return out;
    }

    bool find_insert(Move& move) const {
        const auto all = inserts();
        if (all.empty()) return false;
        move = insert_move(all.front());
        return true;
    }

    bool find_transfer(Move& move) { return scan_transfers(&move, nullptr); }
    bool find_swap(Move& move) { return scan_swaps(&move, nullptr); }

    void collect(std::vector<Move>& out) {
        for (const auto& vs : inserts()) out.push_back(insert_move(vs));
        scan_transfers(nullptr, &out);
        scan_swaps(nullptr, &out);
    }

    void apply(const Move& move) {
        switch (move.kind) {
            case Move::Kind::Insert:
                do_assign(move.vertex, move.to_subgraph);
                break;
            case Move::Kind::Transfer:
                do_move(move.vertex, move.from_subgraph, move.to_subgraph);
                do_assign(move.enabled_vertex, move.enabled_subgraph);
                break;
            case Move::Kind::Swap:
                do_move(move.vertex, move.from_subgraph, move.to_subgraph);
                do_move(move.other_vertex, move.to_subgraph, move.from_subgraph);
                do_assign(move.enabled_vertex, move.enabled_subgraph);
                break;
        }
    }

private:
    Move insert_move(const std::pair<int, int>& vs) const {
        Move m;
        m.kind = Move::Kind::Insert;
        m.vertex = vs.first;
        m.to_subgraph = vs.second;
        m.delta = g_->demand(vs.first);
        return m;
    }

    // Either reports the first hit through `first` (returning true) or
    // appends every hit to `all`.
    bool scan_transfers(Move* first, std::vector<Move>* all) {
        const auto before = inserts();
        std::vector<int> targets;
        for (int v = 0; v < g_->vertex_count(); ++v) {
            if (!g_->is_demand(v) || !pi_->is_assigned(v)) continue;
            const int s = pi_->subgraph_of(v);
            if (!connected_without(s, v)) continue;
            adjacent_subgraphs(v, targets);
            for (int to : targets) {
                if (to == s || g_->demand(v) > surplus_[to]) continue;
                do_move(v, s, to);
                Move m;
                const bool enables = first_new_insert(before, m.enabled_vertex, m.enabled_subgraph);
                if (enables) {
                    m.kind = Move::Kind::Transfer;
                    m.vertex = v;
                    m.from_subgraph = s;
                    m.to_subgraph = to;
                    m.delta = g_->demand(m.enabled_vertex);
                }
                do_move(v, to, s);
                if (enables) {
                    if (first) {
                        *first = m;
                        return true;
                    }
                    all->push_back(m);
                }
            }
        }
        return false;
    }

    bool scan_swaps(Move* first, std::vector<Move>* all) {
        const auto before = inserts();
        std::vector<int> targets;
        for (int v = 0; v < g_->vertex_count(); ++v) {
            if (!g_->is_demand(v) || !pi_->is_assigned(v)) continue;
            const int s = pi_->subgraph_of(v);
            adjacent_subgraphs(v, targets);
            for (int to : targets) {
                if (to == s) continue;
                for (int u = 0; u < g_->vertex_count(); ++u) {
                    if (u == v || !g_->is_demand(u) || pi_->subgraph_of(u) != to) continue;
                    if (surplus_[s] + g_->demand(v) - g_->demand(u) < 0) continue;
                    if (surplus_[to] + g_->demand(u) - g_->demand(v) < 0) continue;
                    if (!touches(u, s)) continue;
                    do_move(v, s, to);
                    do_move(u, to, s);
                    Move m;
                    bool good = connected(s) && connected(to) &&
                                first_new_insert(before, m.enabled_vertex, m.enabled_subgraph);
                    if (good) {
                        m.kind = Move::Kind::Swap;
                        m.vertex = v;
                        m.from_subgraph = s;
                        m.to_subgraph = to;
                        m.other_vertex = u;
                        m.delta = g_->demand(m.enabled_vertex);
                    }
                    do_move(u, s, to);
                    do_move(v, to, s);
                    if (good) {
                        if (first) {
                            *first = m;
                            return true;
                        }
                        all->push_back(m);
                    }
                }
            }
        }
        return false;
    }

    // First insert feasible now but absent from `before` (which is sorted).
    bool first_new_insert(const std::vector<std::pair<int, int>>& before, int& vertex,
                          int& subgraph) const {
        for (const auto& vs : inserts()) {
            if (!std::binary_search(before.begin(), before.end(), vs)) {
                vertex = vs.first;
                subgraph = vs.second;
                return true;
            }
        }
        return false;
    }

    // Distinct subgraphs that v's neighbors belong to, ascending.
    void adjacent_subgraphs(int v, std::vector<int>& out) const {
        out.clear();
        for (int u : g_->neighbors(v)) {
            const int s = pi_->subgraph_of(u);
            if (s != kUnassigned) out.push_back(s);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    bool touches(int v, int s) const {
        for (int u : g_->neighbors(v))
            if (pi_->subgraph_of(u) == s) return true;
        return false;
    }

    bool connected(int s) { return bfs_count(s, -1) == member_count_[s]; }
    bool connected_without(int s, int skip) { return bfs_count(s, skip) == member_count_[s] - 1; }

    int bfs_count(int s, int skip) {
        ++epoch_;
        const int start = g_->supply_vertex(s);
        queue_.assign(1, start);
        stamp_[start] = epoch_;
        int reached = 1;
        for (std::size_t head = 0; head < queue_.size(); ++head)
            for (int u : g_->neighbors(queue_[head]))
                if (u != skip && stamp_[u] != epoch_ && pi_->subgraph_of(u) == s) {
                    stamp_[u] = epoch_;
                    ++reached;
                    queue_.push_back(u);
                }
        return reached;
    }

    void do_assign(int v, int s) {
        pi_->assign(v, s);
        surplus_[s] -= g_->demand(v);
        ++member_count_[s];
    }

    void do_move(int v, int from, int to) {
        pi_->assign(v, to);
        surplus_[from] += g_->demand(v);
        --member_count_[from];
        surplus_[to] -= g_->demand(v);
        ++member_count_[to];
    }

    const ProblemGraph* g_;
    Partition* pi_;
    std::vector<Value> surplus_;
    std::vector<int> member_count_;
    std::vector<int> stamp_;
    int epoch_ = 0;
    std::vector<int> queue_;
};

}  // namespace detail

// Every improving move available from pi, each with its exact objective gain.
inline std::vector<Move> improving_moves(const ProblemGraph& g, const Partition& pi) {
    Partition scratch = pi;
    detail::MoveScanner scanner(g, scratch);
    std::vector<Move> out;
    scanner.collect(out);
    return out;
}

// First-improvement hill climbing: apply the first insert found, falling back
// to transfers and then swaps when no insert exists, until no move remains.
// Never lowers the objective and terminates because every accepted move adds
// at least one unit of satisfied demand.
inline Partition correct(const ProblemGraph& g, const Partition& pi) {
    Partition out = pi;
    detail::MoveScanner scanner(g, out);
    Move move;
    while (scanner.find_insert(move) || scanner.find_transfer(move) || scanner.find_swap(move))
        scanner.apply(move);
    return out;
}

}  // namespace mpgsd

#endif
