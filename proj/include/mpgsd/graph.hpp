#ifndef MPGSD_GRAPH_HPP
#define MPGSD_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpgsd/errors.hpp"

namespace mpgsd {

using Value = std::int64_t;
using Edge = std::pair<int, int>;

// Sentinel subgraph index for demand vertices not served by any supply vertex.
inline constexpr int kUnassigned = -1;

inline void check_arg(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// Undirected graph whose vertices carry a nonzero integer value: positive for
// supply vertices, negative for demand vertices. Immutable once built, so it
// can be shared freely across workers.
class ProblemGraph {
public:
    ProblemGraph() = default;

    // Validates values (nonzero), edges (in range, no self-loops, no
    // duplicates) and builds the adjacency lists. Throws ValidationError.
    ProblemGraph(std::vector<Value> values, std::vector<Edge> edges,
                 std::optional<Value> optimum = std::nullopt)
        : values_(std::move(values)), edges_(std::move(edges)), optimum_(optimum) {
        const int n = static_cast<int>(values_.size());
        adjacency_.assign(n, {});
        for (int v = 0; v < n; ++v) {
            if (values_[v] == 0) throw ValidationError("vertex " + std::to_string(v) + " has value 0");
            if (values_[v] > 0) supply_indices_.push_back(v);
        }
        std::vector<std::vector<int>> seen(n);
        for (const auto& [u, v] : edges_) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                      ") references an invalid vertex");
            if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
            for (int w : seen[u])
                if (w == v)
                    throw ValidationError("duplicate edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ")");
            seen[u].push_back(v);
            seen[v].push_back(u);
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (int s : supply_indices_) total_supply_ += values_[s];
        for (int v = 0; v < n; ++v)
            if (values_[v] < 0) total_demand_ -= values_[v];
    }

    int vertex_count() const { return static_cast<int>(values_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    Value value(int v) const { return values_[v]; }
    bool is_supply(int v) const { return values_[v] > 0; }
    bool is_demand(int v) const { return values_[v] < 0; }

    // Demand magnitude |sup(v)|; only meaningful for demand vertices.
    Value demand(int v) const { return -values_[v]; }

    // NV(v): vertices adjacent to v.
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }

    // Supply vertices in index order; position i is the supply vertex of
    // subgraph i.
    const std::vector<int>& supply_vertices() const { return supply_indices_; }
    int supply_count() const { return static_cast<int>(supply_indices_.size()); }
    int supply_vertex(int subgraph) const { return supply_indices_[subgraph]; }

    Value total_supply() const { return total_supply_; }
    Value total_demand() const { return total_demand_; }

    const std::vector<Edge>& edges() const { return edges_; }

    // Best objective known for this instance, when it came out of the
    // generator or an instance file that records it.
    const std::optional<Value>& optimum() const { return optimum_; }
    void set_optimum(std::optional<Value> opt) { optimum_ = opt; }

private:
    std::vector<Value> values_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> supply_indices_;
    std::optional<Value> optimum_;
    Value total_supply_ = 0;
    Value total_demand_ = 0;
};

// Assignment of each demand vertex to a subgraph (one per supply vertex) or
// to kUnassigned. Subgraph i always contains supply vertex i; disjointness is
// structural because the assignment is a function of the vertex.
class Partition {
public:
    Partition() = default;

    // All demand vertices start unassigned; supply vertex i is pinned to
    // subgraph i.
    explicit Partition(const ProblemGraph& g)
        : map_(g.vertex_count(), kUnassigned), n_(g.supply_count()) {
        const auto& supply = g.supply_vertices();
        for (int i = 0; i < n_; ++i) map_[supply[i]] = i;
    }

    int subgraph_count() const { return n_; }
    int vertex_count() const { return static_cast<int>(map_.size()); }

    // Subgraph of v, kUnassigned for an unserved demand vertex.
    int subgraph_of(int v) const { return map_[v]; }
    bool is_assigned(int v) const { return map_[v] != kUnassigned; }

    void assign(int v, int s) {
        check_arg(s >= 0 && s < n_, "Partition::assign: subgraph index out of range");
        map_[v] = s;
    }
    void unassign(int v) { map_[v] = kUnassigned; }

    // Vertex sets S_0..S_{n-1}, each holding its supply vertex plus the
    // demand vertices assigned to it. Derived view, ascending vertex order.
    std::vector<std::vector<int>> subgraph_members() const {
        std::vector<std::vector<int>> members(n_);
        for (int v = 0; v < vertex_count(); ++v)
            if (map_[v] != kUnassigned) members[map_[v]].push_back(v);
        return members;
    }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> map_;
    int n_ = 0;
};

inline void check_dimensions(const ProblemGraph& g, const Partition& pi) {
    check_arg(pi.subgraph_count() == g.supply_count() && pi.vertex_count() == g.vertex_count(),
              "partition does not match graph dimensions");
}

// D(pi): total demand satisfied, i.e. the sum of demand magnitudes over all
// assigned demand vertices. Unassigned vertices contribute nothing.
inline Value objective(const ProblemGraph& g, const Partition& pi) {
    check_dimensions(g, pi);
    Value total = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_demand(v) && pi.is_assigned(v)) total += g.demand(v);
    return total;
}

// Remaining capacity of subgraph i: its supply minus the demand assigned to it.
inline Value subgraph_surplus(const ProblemGraph& g, const Partition& pi, int i) {
    check_dimensions(g, pi);
    check_arg(i >= 0 && i < pi.subgraph_count(), "subgraph index out of range");
    Value surplus = g.value(g.supply_vertex(i));
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_demand(v) && pi.subgraph_of(v) == i) surplus -= g.demand(v);
    return surplus;
}

struct Violation {
    enum class Kind { SupplyExceeded, Disconnected };
    Kind kind;
    int subgraph;

    std::string describe() const {
        return std::string(kind == Kind::SupplyExceeded ? "supply exceeded" : "disconnected") +
               " in subgraph " + std::to_string(subgraph);
    }
};

struct FeasibilityReport {
    bool ok = true;
    std::vector<Violation> violations;

    explicit operator bool() const { return ok; }
};

// Checks, per subgraph: assigned demand within supply, and the member set
// inducing a connected subgraph. Disjointness cannot be violated by
// construction. Off the hot path; solvers keep these invariants incrementally.
inline FeasibilityReport is_feasible(const ProblemGraph& g, const Partition& pi) {
    check_dimensions(g, pi);
    FeasibilityReport report;
    const auto members = pi.subgraph_members();
    std::vector<char> in_set(g.vertex_count(), 0);
    std::vector<char> reached(g.vertex_count(), 0);
    std::vector<int> queue;
    for (int i = 0; i < pi.subgraph_count(); ++i) {
        Value surplus = 0;
        for (int v : members[i]) surplus += g.value(v);
        if (surplus < 0)
            report.violations.push_back({Violation::Kind::SupplyExceeded, i});

        for (int v : members[i]) in_set[v] = 1;
        queue.assign(1, g.supply_vertex(i));
        reached[g.supply_vertex(i)] = 1;
        std::size_t head = 0, seen = 1;
        while (head < queue.size()) {
            int v = queue[head++];
            for (int u : g.neighbors(v)) {
                if (in_set[u] && !reached[u]) {
                    reached[u] = 1;
                    ++seen;
                    queue.push_back(u);
                }
            }
        }
        if (seen != members[i].size())
            report.violations.push_back({Violation::Kind::Disconnected, i});
        for (int v : members[i]) in_set[v] = 0, reached[v] = 0;
    }
    report.ok = report.violations.empty();
    return report;
}

}  // namespace mpgsd

#endif
