#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

#include "smp/error.hpp"
#include "smp/grid.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace smp;

TEST_CASE("topology names round-trip") {
    for (auto t : testing::all_topologies) CHECK(parse_topology(to_string(t)) == t);
    CHECK(to_string(Topology::serpentinus) == "serpentinus");
    CHECK_FALSE(parse_topology("Mesh"));
    CHECK_FALSE(parse_topology("torus"));
}

TEST_CASE("neighbor examples") {
    using A = std::array<Coord, 4>;
    CHECK(wired_neighbors(Topology::mesh, 5, 5, {0, 0}) == A{Coord{4, 0}, {1, 0}, {0, 4}, {0, 1}});
    CHECK(wired_neighbors(Topology::cordalis, 5, 5, {2, 4})[right] == Coord{3, 0});
    CHECK(wired_neighbors(Topology::serpentinus, 5, 5, {4, 2})[down] == Coord{0, 1});
    CHECK(wired_neighbors(Topology::mesh, 3, 2, {1, 0}) == A{Coord{0, 0}, {2, 0}, {1, 1}, {1, 1}});

    // Corner seams.
    CHECK(wired_neighbors(Topology::cordalis, 5, 5, {4, 4})[right] == Coord{0, 0});
    CHECK(wired_neighbors(Topology::cordalis, 5, 5, {0, 0})[left] == Coord{4, 4});
    CHECK(wired_neighbors(Topology::serpentinus, 5, 5, {0, 4})[up] == Coord{4, 0});
    CHECK(wired_neighbors(Topology::serpentinus, 5, 5, {4, 0})[down] == Coord{0, 4});
}

TEST_CASE("wiring agrees with the chain oracle for all sizes up to 8x8") {
    for (auto t : testing::all_topologies) {
        for (int m = 2; m <= 8; ++m) {
            for (int n = 2; n <= 8; ++n) {
                for (int r = 0; r < m; ++r) {
                    for (int c = 0; c < n; ++c) {
                        const auto got = wired_neighbors(t, m, n, {r, c});
                        const auto want = oracle::neighbors(t, m, n, {r, c});
                        for (int s = 0; s < 4; ++s) {
                            CHECK(got[s].row == want[s].r);
                            CHECK(got[s].col == want[s].c);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("neighbor reciprocity with multiplicity, m,n <= 8") {
    for (auto t : testing::all_topologies) {
        for (int m = 2; m <= 8; ++m) {
            for (int n = 2; n <= 8; ++n) {
                auto wiring = make_wiring(t, m, n);
                std::map<std::pair<std::size_t, std::size_t>, int> mult;
                for (std::size_t u = 0; u < wiring->cell_count(); ++u) {
                    for (auto v : wiring->slots(u)) ++mult[{u, v}];
                }
                bool ok = true;
                for (auto [edge, count] : mult) ok = ok && mult[{edge.second, edge.first}] == count;
                INFO(to_string(t), " ", m, "x", n);
                CHECK(ok);
            }
        }
    }
}

TEST_CASE("grid construction validates its input") {
    CHECK_THROWS(TorusGrid(Topology::mesh, 1, 3, 2, std::vector<Color>(3, 1)));
    CHECK_THROWS(TorusGrid(Topology::mesh, 2, 2, 0, std::vector<Color>(4, 1)));
    CHECK_THROWS(TorusGrid(Topology::mesh, 2, 2, 2, std::vector<Color>(3, 1)));
    CHECK_THROWS(TorusGrid(Topology::mesh, 2, 2, 2, {1, 2, 3, 1}));
    CHECK_THROWS(TorusGrid(Topology::mesh, 2, 2, 2, {1, 2, 0, 1}));

    const auto g = TorusGrid::uniform(Topology::cordalis, 3, 4, 3, 2);
    CHECK(g.is_monochromatic());
    CHECK(g.count(2) == 12);
    CHECK_THROWS_AS(g.at({3, 0}), std::out_of_range);
    CHECK_THROWS_AS(g.neighbors({0, 4}), std::out_of_range);
    CHECK(g.neighbors({0, 3})[right] == Coord{1, 0});
}

TEST_CASE("copies are independent values") {
    auto a = TorusGrid::uniform(Topology::mesh, 3, 3, 2, 1);
    auto b = a;
    b.set({1, 1}, 2);
    CHECK(a.at({1, 1}) == 1);
    CHECK(b.at({1, 1}) == 2);
    CHECK_FALSE(a == b);
    CHECK(a.cells_of(1).size() == 9);
    CHECK(b.cells_of(2) == CellSet{{1, 1}});
}

TEST_CASE("cell set keeps sorted unique members") {
    CellSet s{{2, 1}, {0, 3}, {2, 1}};
    CHECK(s.size() == 2);
    CHECK(s.items().front() == Coord{0, 3});
    s.insert({0, 3});
    CHECK(s.size() == 2);
    CHECK(s.contains({2, 1}));
    CHECK_FALSE(s.contains({1, 2}));
}

TEST_CASE("bounding rectangle examples") {
    const auto g = TorusGrid::uniform(Topology::mesh, 5, 5, 2, 1);
    CHECK(bounding_rect(g, CellSet{{0, 0}, {4, 0}}) == BoundingRect{2, 1});
    CellSet cross;
    for (int i = 0; i < 5; ++i) {
        cross.insert({0, i});
        cross.insert({i, 0});
    }
    CHECK(bounding_rect(g, cross) == BoundingRect{5, 5});
    CHECK(bounding_rect(g, CellSet{{2, 2}}) == BoundingRect{1, 1});
    CHECK_THROWS_WITH_AS(bounding_rect(g, CellSet{}), "empty set has no rectangle", Error);
}

TEST_CASE("bounding rectangle matches window enumeration and is shift invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 7), n = 2 + static_cast<int>(rng() % 7);
        const auto g = TorusGrid::uniform(Topology::mesh, m, n, 2, 1);
        CellSet s;
        const int members = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < members; ++i) s.insert({static_cast<int>(rng() % m), static_cast<int>(rng() % n)});
        const auto r = bounding_rect(g, s);
        const auto [wr, wc] = oracle::rect(m, n, testing::to_pos(s));
        CHECK(r.rows == wr);
        CHECK(r.cols == wc);

        const int dr = static_cast<int>(rng() % m), dc = static_cast<int>(rng() % n);
        CellSet shifted;
        for (auto c : s) shifted.insert({(c.row + dr) % m, (c.col + dc) % n});
        CHECK(bounding_rect(g, shifted) == r);
    }
}

TEST_CASE("collapse_colors maps the target to 2 and the rest to 1") {
    const TorusGrid g(Topology::mesh, 2, 2, 3, {1, 3, 3, 2});
    const auto c = collapse_colors(g, 3);
    CHECK(c.palette() == 2);
    CHECK(std::vector<Color>(c.cells().begin(), c.cells().end()) == std::vector<Color>{1, 2, 2, 1});
    CHECK(collapse_colors(TorusGrid::uniform(Topology::mesh, 2, 2, 3, 3), 3).count(2) == 4);
    CHECK(collapse_colors(TorusGrid::uniform(Topology::mesh, 2, 2, 3, 1), 3).count(1) == 4);
    CHECK_THROWS(collapse_colors(g, 4));
    CHECK_THROWS(collapse_colors(g, 0));

    // Collapsing a two-color grid on its color 2 is the identity.
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto r = testing::random_grid(rng, Topology::serpentinus, 4, 5, 2);
        CHECK(collapse_colors(r, 2) == r);
        CHECK(collapse_colors(collapse_colors(r, 1), 2) == collapse_colors(r, 1));
    }
}
