#ifndef MPGSD_TESTS_FIXTURES_HPP
#define MPGSD_TESTS_FIXTURES_HPP

#include "mpgsd/graph.hpp"
#include "mpgsd/rng.hpp"

namespace fixtures {

// One supply vertex 0 (+5), demands 1 (-3), 2 (-2), 3 (-4).
// Optimum 5: assign vertices 1 and 2.
inline mpgsd::ProblemGraph g1() {
    return mpgsd::ProblemGraph({5, -3, -2, -4}, {{0, 1}, {0, 2}, {1, 3}});
}

// One supply vertex 0 (+7), demands 1 (-3), 2 (-2), 3 (-5).
// Greedy takes vertex 3 first and ends at 5, which is also the optimum.
inline mpgsd::ProblemGraph t1() {
    return mpgsd::ProblemGraph({7, -3, -2, -5}, {{0, 1}, {0, 3}, {1, 2}});
}

// Chain: supply 0 (+3) - demand 2 (-3) - demand 3 (-2) - supply 1 (+2).
// Optimum 5: vertex 2 to subgraph 0, vertex 3 to subgraph 1.
inline mpgsd::ProblemGraph chain4() {
    return mpgsd::ProblemGraph({3, 2, -3, -2}, {{0, 2}, {2, 3}, {3, 1}});
}

// Supplies 0 (+5) and 1 (+2); demands 2 (-2), 3 (-3) in a path 0-2-3 with a
// spur 1-2. From {2->S1} no insert fits, but moving 2 over to S0 frees the
// path to 3. Optimum 5.
inline mpgsd::ProblemGraph transfer4() {
    return mpgsd::ProblemGraph({5, 2, -2, -3}, {{0, 2}, {2, 3}, {1, 2}});
}

// Two supplies 0 (+5) and 1 (+4); demands 2 (-4), 3 (-3), 4 (-2).
// From {2->S0, 3->S1} only swapping 2 and 3 frees enough surplus to insert 4.
// Optimum 9 assigns everything.
inline mpgsd::ProblemGraph swap5() {
    return mpgsd::ProblemGraph({5, 4, -4, -3, -2},
                               {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}});
}

// Small random instance for property tests: spanning tree plus a few chords,
// at least one supply vertex, values in +-[1,9]. Unrelated to the production
// generator on purpose.
inline mpgsd::ProblemGraph random_small(std::uint64_t seed, int max_vertices = 10) {
    mpgsd::Rng rng(seed);
    const int n = 3 + static_cast<int>(rng.next_below(max_vertices - 2));
    std::vector<mpgsd::Value> values(n);
    int supplies = 0;
    for (int v = 0; v < n; ++v) {
        const bool supply = rng.next_below(4) == 0;
        supplies += supply;
        values[v] = (supply ? 1 : -1) * rng.next_int(1, 9);
    }
    if (supplies == 0) values[static_cast<int>(rng.next_below(n))] = rng.next_int(1, 9);

    std::vector<mpgsd::Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng.next_below(v)), v);
    const int extra = static_cast<int>(rng.next_below(n));
    for (int k = 0; k < extra; ++k) {
        int a = static_cast<int>(rng.next_below(n));
        int b = static_cast<int>(rng.next_below(n));
        if (a == b) continue;
        bool dup = false;
        for (const auto& [u, w] : edges)
            if ((u == a && w == b) || (u == b && w == a)) dup = true;
        if (!dup) edges.emplace_back(a, b);
    }
    return mpgsd::ProblemGraph(values, edges);
}

}  // namespace fixtures

#endif
