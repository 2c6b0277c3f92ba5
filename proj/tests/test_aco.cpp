#include "doctest.h"

#include <cmath>

#include "mpgsd/aco.hpp"
#include "mpgsd/exact.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace mpgsd;

TEST_CASE("quality is inverse to the unused supply") {
    const auto g = fixtures::g1();  // T = 5
    Partition full(g);
    full.assign(1, 0);
    full.assign(2, 0);  // D = 5, supply saturated
    CHECK(quality(g, full) == 1.0);

    const ProblemGraph t10({10, -7, -3}, {{0, 1}, {0, 2}});
    Partition part(t10);
    part.assign(1, 0);  // D = 7 of T = 10
    CHECK(quality(t10, part) == 0.25);

    Partition empty(t10);
    CHECK(quality(t10, empty) == doctest::Approx(1.0 / 11).epsilon(1e-15));
}

TEST_CASE("pheromone initializes to the greedy quality everywhere") {
    const auto g1 = fixtures::g1();  // greedy reaches D = T = 5
    const auto tau = init_pheromone(g1);
    for (int v = 0; v < g1.vertex_count(); ++v)
        CHECK(tau.get(v, 0) == 1.0);

    // greedy satisfies nothing here: quality = 1 / (9 + 1)
    const ProblemGraph hopeless({9, -10}, {{0, 1}});
    const auto tau2 = init_pheromone(hopeless);
    CHECK(tau2.get(1, 0) == 0.1);
}

TEST_CASE("exploitation picks the heaviest candidate under uniform pheromone") {
    const auto g = fixtures::g1();
    GrowState state(g);
    const auto tau = init_pheromone(g);
    Rng rng(1);
    // candidates of subgraph 0: vertices 1 (demand 3) and 2 (demand 2)
    CHECK(transition_select(state, tau, 0, 0.1, 0.9, rng) == 1);

    state.extend(0, 1);
    state.extend(0, 2);
    CHECK_THROWS_AS(transition_select(state, tau, 0, 0.1, 0.9, rng), std::invalid_argument);
}

TEST_CASE("a single candidate wins under either branch") {
    const ProblemGraph g({4, -3}, {{0, 1}});
    GrowState state(g);
    const auto tau = init_pheromone(g);
    Rng rng(2);
    CHECK(transition_select(state, tau, 0, 0.1, 0.99, rng) == 1);
    CHECK(transition_select(state, tau, 0, 0.1, 0.0, rng) == 1);
}

TEST_CASE("exploration frequencies follow the demand weights") {
    const auto g = fixtures::g1();
    GrowState state(g);
    const auto tau = init_pheromone(g);  // uniform
    Rng rng(7);
    const int draws = 100000;
    int picked_heavy = 0;
    for (int i = 0; i < draws; ++i) {
        const double q = rng.next_double();  // q0 = 1: always the proportional branch
        picked_heavy += transition_select(state, tau, 0, 1.0, q, rng) == 1;
    }
    const double f = static_cast<double>(picked_heavy) / draws;
    CHECK(std::abs(f - 0.6) <= 0.01);        // expected 3/(3+2)
    CHECK(std::abs((1 - f) - 0.4) <= 0.01);  // expected 2/(3+2)
}

TEST_CASE("local update decays exactly the assigned pairs") {
    const auto g = fixtures::g1();
    PheromoneMatrix tau(g.vertex_count(), 1, 1.0);
    tau.set(1, 0, 0.5);
    Partition pi(g);
    pi.assign(1, 0);

    local_update(tau, g, pi, 0.9);
    CHECK(tau.get(1, 0) == 0.45);  // bit-exact in IEEE doubles
    CHECK(tau.get(2, 0) == 1.0);
    CHECK(tau.get(3, 0) == 1.0);

    local_update(tau, g, pi, 0.9);
    CHECK(tau.get(1, 0) == doctest::Approx(0.405).epsilon(1e-15));

    Partition empty(g);
    PheromoneMatrix before = tau;
    local_update(tau, g, empty, 0.9);
    CHECK(tau.get(1, 0) == before.get(1, 0));
    CHECK(tau.get(2, 0) == before.get(2, 0));
}

TEST_CASE("global update blends toward the deposit on the best pairs only") {
    const auto g = fixtures::g1();
    PheromoneMatrix tau(g.vertex_count(), 1, 0.5);
    Partition best(g);
    best.assign(1, 0);
    best.assign(2, 0);  // quality 1.0

    global_update(tau, g, best, 0.1);
    CHECK(tau.get(1, 0) == 0.55);  // bit-exact in IEEE doubles
    CHECK(tau.get(2, 0) == 0.55);
    CHECK(tau.get(3, 0) == 0.5);  // not in the solution, untouched

    SUBCASE("the deposit value is a fixed point") {
        tau.set(1, 0, 1.0);
        global_update(tau, g, best, 0.1);
        CHECK(tau.get(1, 0) == 1.0);
    }

    SUBCASE("repetition converges monotonically toward the deposit") {
        double prev_gap = std::abs(tau.get(1, 0) - 1.0);
        for (int k = 0; k < 60; ++k) {
            global_update(tau, g, best, 0.1);
            const double gap = std::abs(tau.get(1, 0) - 1.0);
            CHECK(gap <= prev_gap);
            prev_gap = gap;
        }
        CHECK(prev_gap < 1e-3);
    }
}

TEST_CASE("forced exploitation with uniform pheromone replays the greedy vertex picks") {
    const auto g = fixtures::t1();  // one supply vertex: subgraph choice is forced
    const auto greedy = greedy_solve(g);

    GrowState state(g);
    const auto tau = init_pheromone(g);
    Rng rng(3);
    while (state.has_candidate(0))
        state.extend(0, transition_select(state, tau, 0, /*q0=*/0.0, /*q=*/0.5, rng));
    CHECK(state.partition() == greedy);
}

TEST_CASE("solve on G1 is optimal from the first iteration") {
    const auto g = fixtures::g1();
    const auto r = solve(g, {});
    CHECK(r.best_objective == 5);
    CHECK(objective(g, r.best) == 5);
    REQUIRE(r.history.size() == 150);
    CHECK(r.history.front() == 5);
    CHECK(r.history.back() == 5);
    CHECK(r.solutions_generated == 1500);
}

TEST_CASE("zero iterations returns the greedy seed") {
    const auto g = fixtures::t1();
    AcoParams params;
    params.iterations = 0;
    const auto r = solve(g, params);
    CHECK(r.best == greedy_solve(g));
    CHECK(r.history.empty());
    CHECK(r.solutions_generated == 0);
}

TEST_CASE("one seed, one result") {
    const auto g = fixtures::random_small(991, 14);
    AcoParams params;
    params.iterations = 25;
    params.seed = 123;
    params.use_correction = true;
    const auto a = solve(g, params);
    const auto b = solve(g, params);
    CHECK(a.best == b.best);
    CHECK(a.best_objective == b.best_objective);
    CHECK(a.history == b.history);
    CHECK(a.solutions_generated == b.solutions_generated);
}

TEST_CASE("solve respects the solver-wide invariants on random instances") {
    for (std::uint64_t seed = 500; seed < 515; ++seed) {
        const auto g = fixtures::random_small(seed, 12);
        AcoParams params;
        params.iterations = 20;
        params.seed = seed;
        params.use_correction = seed % 2 == 0;
        const auto r = solve(g, params);

        REQUIRE(is_feasible(g, r.best).ok);
        CHECK(objective(g, r.best) == r.best_objective);
        CHECK(r.best_objective >= objective(g, greedy_solve(g)));
        CHECK(r.best_objective <= oracle::brute_force_best(g).best);
        for (std::size_t k = 1; k < r.history.size(); ++k)
            CHECK(r.history[k] >= r.history[k - 1]);
        if (!r.history.empty()) CHECK(r.history.back() == r.best_objective);
    }
}

TEST_CASE("parameter validation rejects out-of-range values") {
    const auto g = fixtures::g1();
    AcoParams params;
    params.p = 0.0;
    CHECK_THROWS_AS(solve(g, params), ValidationError);
    params = {};
    params.phi = 1.0;
    CHECK_THROWS_AS(solve(g, params), ValidationError);
    params = {};
    params.q0 = 1.5;
    CHECK_THROWS_AS(solve(g, params), ValidationError);
    params = {};
    params.ants = 0;
    CHECK_THROWS_AS(solve(g, params), ValidationError);
}
