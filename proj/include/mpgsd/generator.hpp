#ifndef MPGSD_GENERATOR_HPP
#define MPGSD_GENERATOR_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mpgsd/graph.hpp"
#include "mpgsd/rng.hpp"

namespace mpgsd {

// Recipe for a random instance with a known optimum. Supply values are set to
// exactly the demand of their group, so the all-assigned partition is feasible
// and its value equals both total demand and total supply; no partition can do
// better, which makes the recorded optimum self-certifying.
struct InstanceSpec {
    enum class Kind { Tree, General };

    int n_supply = 0;
    int n_demand = 0;
    Kind kind = Kind::Tree;
    std::uint64_t seed = 0;
    Value value_min = 1;   // demand magnitudes, inclusive
    Value value_max = 10;
    double extra_edge_factor = 0.3;  // Kind::General only

    void validate() const {
        if (n_supply < 1) throw ValidationError("instance spec: need at least one supply vertex");
        if (n_demand < n_supply)
            throw ValidationError("instance spec: need at least one demand vertex per supply vertex");
        if (value_min < 1 || value_max < value_min)
            throw ValidationError("instance spec: demand value range must satisfy 1 <= min <= max");
        if (extra_edge_factor < 0) throw ValidationError("instance spec: extra edge factor must be >= 0");
    }
};

inline InstanceSpec::Kind kind_from_string(const std::string& s) {
    if (s == "tree") return InstanceSpec::Kind::Tree;
    if (s == "general") return InstanceSpec::Kind::General;
    throw ValidationError("unknown instance kind '" + s + "' (expected tree or general)");
}

inline const char* to_string(InstanceSpec::Kind k) {
    return k == InstanceSpec::Kind::Tree ? "tree" : "general";
}

struct GeneratedInstance {
    ProblemGraph graph;
    Partition witness;  // the embedded optimal partition: every group assigned to its supply
};

// Construction: demand vertices are split into n_supply nonempty groups, each
// group is wired as a random tree rooted at its supply vertex, and the groups
// are joined into one tree by n_supply-1 cross-group connector edges. General
// instances then receive ceil(extra_edge_factor * n_demand) extra random
// edges (duplicates avoided). Supply vertices occupy indices 0..n_supply-1.
// Deterministic: one spec, one instance, byte for byte.
inline GeneratedInstance generate_instance(const InstanceSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    const int ns = spec.n_supply, nd = spec.n_demand;
    const int n = ns + nd;

    // group sizes: a uniformly random composition of nd into ns positive parts
    std::vector<int> cuts(nd - 1);
    for (int i = 0; i < nd - 1; ++i) cuts[i] = i + 1;
    rng.shuffle(cuts);
    cuts.resize(ns - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(nd);
    std::vector<int> group_size(ns);
    for (int i = 0, prev = 0; i < ns; ++i) {
        group_size[i] = cuts[i] - prev;
        prev = cuts[i];
    }

    // deal shuffled demand vertices into the groups
    std::vector<int> demand_vertices(nd);
    for (int i = 0; i < nd; ++i) demand_vertices[i] = ns + i;
    rng.shuffle(demand_vertices);

    std::vector<Value> values(n, 0);
    std::vector<Edge> edges;
    edges.reserve(nd + ns - 1);
    std::vector<std::vector<int>> group_members(ns);  // supply vertex first
    std::vector<int> group_of(n, -1);

    int next = 0;
    for (int i = 0; i < ns; ++i) {
        group_members[i].push_back(i);
        group_of[i] = i;
        Value group_demand = 0;
        for (int k = 0; k < group_size[i]; ++k) {
            const int v = demand_vertices[next++];
            const Value d = rng.next_int(spec.value_min, spec.value_max);
            values[v] = -d;
            group_demand += d;
            // random recursive tree: attach to any earlier member of the group
            const int parent = group_members[i][rng.next_index(static_cast<int>(group_members[i].size()))];
            edges.emplace_back(parent, v);
            group_members[i].push_back(v);
            group_of[v] = i;
        }
        values[i] = group_demand;  // supply saturates its group exactly
    }

    // join the group trees into one tree
    for (int i = 1; i < ns; ++i) {
        const int other = rng.next_index(i);
        const int a = group_members[i][rng.next_index(static_cast<int>(group_members[i].size()))];
        const int b = group_members[other][rng.next_index(static_cast<int>(group_members[other].size()))];
        edges.emplace_back(a, b);
    }

    if (spec.kind == InstanceSpec::Kind::General) {
        int wanted = static_cast<int>(std::ceil(spec.extra_edge_factor * nd));
        std::set<std::pair<int, int>> present;
        for (const auto& [u, v] : edges) present.insert(std::minmax(u, v));
        // rejection sampling; bail out if the graph is too dense for the requested count
        long long attempts = 64LL * wanted + 64;
        while (wanted > 0 && attempts-- > 0) {
            const int a = rng.next_index(n);
            const int b = rng.next_index(n);
            if (a == b) continue;
            const auto key = std::minmax(a, b);
            if (present.count(key)) continue;
            present.insert(key);
            edges.emplace_back(a, b);
            --wanted;
        }
    }

    Value optimum = 0;
    for (int i = 0; i < ns; ++i) optimum += values[i];

    GeneratedInstance out{ProblemGraph(std::move(values), std::move(edges), optimum), Partition{}};
    out.witness = Partition(out.graph);
    for (int v = ns; v < n; ++v) out.witness.assign(v, group_of[v]);
    return out;
}

inline ProblemGraph generate(const InstanceSpec& spec) { return generate_instance(spec).graph; }

}  // namespace mpgsd

#endif
