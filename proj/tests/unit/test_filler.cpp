#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

#include "smp/analysis.hpp"
#include "smp/dynamics.hpp"
#include "smp/dynamo.hpp"
#include "smp/filler.hpp"

using namespace smp;

TEST_CASE("policy names") {
    for (auto p : {FillerPolicy::automatic, FillerPolicy::theorem, FillerPolicy::strict}) {
        CHECK(parse_filler_policy(to_string(p)) == p);
    }
    CHECK_FALSE(parse_filler_policy("loose"));
}

TEST_CASE("theorem fillers satisfy both conditions and keep the seed") {
    FillerOptions fo;
    fo.policy = FillerPolicy::theorem;
    for (auto [m, n] : {std::pair{4, 6}, std::pair{7, 3}, std::pair{5, 5}, std::pair{9, 9}}) {
        const auto seed = mesh_seed(m, n);
        const auto r = generate_filler(Topology::mesh, m, n, 4, 2, seed, fo);
        REQUIRE(r.status == FillerStatus::found);
        CHECK(r.policy == FillerPolicy::theorem);
        CHECK(r.grid->cells_of(2) == seed);
        CHECK(check_distinct_neighbor_colors(*r.grid, 2).empty());
        for (Color c : {1, 3, 4}) CHECK(check_forest(*r.grid, c));
        CHECK(satisfies_policy(*r.grid, 2, FillerPolicy::theorem));
    }
}

TEST_CASE("strict fillers need a fifth color away from the seed") {
    FillerOptions fo;
    fo.policy = FillerPolicy::strict;
    auto r = generate_filler(Topology::mesh, 5, 5, 4, 1, mesh_seed(5, 5), fo);
    CHECK(r.status == FillerStatus::infeasible);
    CHECK_FALSE(r.grid);

    r = generate_filler(Topology::mesh, 5, 5, 5, 1, mesh_seed(5, 5), fo);
    REQUIRE(r.status == FillerStatus::found);
    CHECK(satisfies_policy(*r.grid, 1, FillerPolicy::strict));

    // automatic falls back to theorem when strict is impossible.
    fo.policy = FillerPolicy::automatic;
    r = generate_filler(Topology::mesh, 5, 5, 4, 1, mesh_seed(5, 5), fo);
    REQUIRE(r.status == FillerStatus::found);
    CHECK(r.policy == FillerPolicy::theorem);
}

TEST_CASE("three colors cannot satisfy the conditions on a 4x4 mesh") {
    FillerOptions fo;
    fo.policy = FillerPolicy::theorem;
    fo.node_limit = 0;
    const auto r = generate_filler(Topology::mesh, 4, 4, 3, 1, mesh_seed(4, 4), fo);
    CHECK(r.status == FillerStatus::infeasible);
    CHECK(r.diagnostic().find("exhausted") != std::string::npos);
}

TEST_CASE("a tiny node budget is reported as exhausted, not infeasible") {
    FillerOptions fo;
    fo.policy = FillerPolicy::theorem;
    fo.node_limit = 3;
    fo.attempts = 2;
    const auto r = generate_filler(Topology::mesh, 9, 9, 4, 1, mesh_seed(9, 9), fo);
    CHECK(r.status == FillerStatus::budget_exhausted);
    CHECK(r.attempts_used == 2);
    CHECK(r.diagnostic().find("budget") != std::string::npos);
}

TEST_CASE("fillers are deterministic per seed") {
    for (std::uint64_t s : {0ULL, 1ULL, 99ULL}) {
        FillerOptions fo;
        fo.seed = s;
        const auto a = generate_filler(Topology::cordalis, 6, 5, 5, 3, cordalis_seed(6, 5), fo);
        const auto b = generate_filler(Topology::cordalis, 6, 5, 5, 3, cordalis_seed(6, 5), fo);
        REQUIRE(a.grid);
        CHECK(*a.grid == *b.grid);
    }
}

TEST_CASE("strict fillers from different seeds give the same round count") {
    // Under strict constraints a cell turns to the target exactly when two
    // neighbors hold it, so the run equals threshold-2 bootstrap from the seed.
    for (auto t : testing::all_topologies) {
        const auto seed = t == Topology::mesh ? mesh_seed(6, 5) : cordalis_seed(6, 5);
        const int expected = oracle::bootstrap_time(t, 6, 5, testing::to_pos(seed));
        for (std::uint64_t s = 0; s < 10; ++s) {
            FillerOptions fo;
            fo.policy = FillerPolicy::strict;
            fo.seed = s;
            const auto r = generate_filler(t, 6, 5, 5, 1, seed, fo);
            REQUIRE(r.grid);
            CHECK(satisfies_policy(*r.grid, 1, FillerPolicy::strict));
            const auto sim = run(*r.grid);
            CHECK(sim.reached(1));
            CHECK(sim.rounds == expected);
        }
    }
}

TEST_CASE("generator argument checks") {
    CHECK_THROWS(generate_filler(Topology::mesh, 5, 5, 4, 5, mesh_seed(5, 5)));
    CHECK_THROWS(generate_filler(Topology::mesh, 5, 5, 4, 1, CellSet{{5, 0}}));
    // Nothing to fill: the seed covers the grid.
    CellSet all;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) all.insert({i, j});
    const auto r = generate_filler(Topology::mesh, 2, 2, 1, 1, all);
    REQUIRE(r.grid);
    CHECK(r.grid->is_monochromatic());
}
