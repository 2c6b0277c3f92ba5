#include "doctest.h"

#include "mpgsd/bench.hpp"
#include "mpgsd/generator.hpp"

using namespace mpgsd;

TEST_CASE("normalized error is the percentage gap to the optimum") {
    CHECK(normalized_error(100, 100) == 0.0);
    CHECK(normalized_error(100, 90) == 10.0);
    CHECK(normalized_error(40, 37) == 7.5);
    CHECK_THROWS_AS(normalized_error(40, 41), IntegrityError);
    CHECK_THROWS_AS(normalized_error(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(normalized_error(10, -1), std::invalid_argument);
}

TEST_CASE("stats aggregation matches hand arithmetic") {
    RunStats st;
    st.errors = {7.5};
    st.aggregate();
    CHECK(st.avg == 7.5);
    CHECK(st.max == 7.5);
    CHECK(st.stdev == 0.0);
    CHECK(st.hits == 0);

    st.errors = {0.0, 10.0, 0.0, 2.0};
    st.aggregate();
    CHECK(st.avg == doctest::Approx(3.0));
    CHECK(st.max == 10.0);
    CHECK(st.hits == 2);
    // population stdev: sqrt(((3)^2 + (7)^2 + (3)^2 + (1)^2) / 4)
    CHECK(st.stdev == doctest::Approx(std::sqrt(17.0)));
}

TEST_CASE("a class every run solves exactly reports zeros across the board") {
    ClassSpec cls{.kind = InstanceSpec::Kind::Tree, .n_supply = 1, .n_demand = 1};
    AcoParams params;
    params.iterations = 3;
    const auto rows = run_class(cls, 5, {Algo::Greedy, Algo::Aco, Algo::AcoC}, params, 0);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.avg == 0.0);
        CHECK(row.stdev == 0.0);
        CHECK(row.max == 0.0);
        CHECK(row.hits == 5);
        CHECK(row.errors.size() == 5);
    }
}

TEST_CASE("run_class is deterministic and ordered, regardless of worker count") {
    ClassSpec cls{.kind = InstanceSpec::Kind::General, .n_supply = 2, .n_demand = 6};
    AcoParams params;
    params.iterations = 15;
    const auto algos = std::vector<Algo>{Algo::Greedy, Algo::Aco, Algo::AcoC};

    const auto serial = run_class(cls, 8, algos, params, 42, 1);
    const auto parallel = run_class(cls, 8, algos, params, 42, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t a = 0; a < serial.size(); ++a)
        CHECK(serial[a].errors == parallel[a].errors);
    CHECK(stats_to_csv(serial) == stats_to_csv(parallel));

    // the greedy incumbent makes both ACO flavors at least as good as greedy
    for (std::size_t i = 0; i < serial[0].errors.size(); ++i) {
        CHECK(serial[1].errors[i] <= serial[0].errors[i]);
        CHECK(serial[2].errors[i] <= serial[0].errors[i]);
    }
    for (const auto& row : serial) {
        CHECK(row.size_label == "general:2x6");
        CHECK(row.avg <= row.max);
        for (double e : row.errors) {
            CHECK(e >= 0.0);
            CHECK(e <= 100.0);
        }
    }
}

TEST_CASE("csv output is stable byte for byte") {
    RunStats row;
    row.size_label = "tree:2x6";
    row.algo = Algo::AcoC;
    row.errors = {0.0, 7.5};
    row.aggregate();
    CHECK(stats_to_csv({row}) ==
          "size,algo,avg,stdev,max,hits\n"
          "tree:2x6,aco-c,3.750000,3.750000,7.500000,1\n");
}

TEST_CASE("convergence traces summarize best-so-far errors") {
    const auto g = generate({.n_supply = 2, .n_demand = 10, .kind = InstanceSpec::Kind::General,
                             .seed = 5});
    AcoParams params;
    params.iterations = 12;
    params.seed = 9;

    SUBCASE("one run collapses min/avg/max") {
        const auto trace = convergence_trace(g, params, 1);
        REQUIRE(trace.size() == 12);
        for (const auto& point : trace) {
            CHECK(point.min == point.avg);
            CHECK(point.avg == point.max);
        }
    }

    SUBCASE("the averaged trace never rises") {
        const auto trace = convergence_trace(g, params, 5);
        for (std::size_t k = 1; k < trace.size(); ++k) CHECK(trace[k].avg <= trace[k - 1].avg);
        const std::string csv = trace_to_csv(trace);
        CHECK(csv.rfind("iteration,min,avg,max\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
    }

    SUBCASE("an instance without a recorded optimum is rejected") {
        ProblemGraph bare({4, -3}, {{0, 1}});
        CHECK_THROWS_AS(convergence_trace(bare, params, 2), ValidationError);
    }
}
