#include <doctest.h>

#include "helpers.hpp"

#include "smp/error.hpp"
#include "smp/grid_io.hpp"

#include <filesystem>
#include <random>

using namespace smp;

namespace {

ParseError parse_failure(std::string_view text) {
    try {
        parse_grid(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("parse unexpectedly succeeded");
    return ParseError(0, 0, "");
}

} // namespace

TEST_CASE("grid text round-trips") {
    std::mt19937_64 rng(11);
    for (auto t : testing::all_topologies) {
        for (int i = 0; i < 50; ++i) {
            const int m = 2 + static_cast<int>(rng() % 6), n = 2 + static_cast<int>(rng() % 6);
            const int palette = 1 + static_cast<int>(rng() % 12);
            const auto g = testing::random_grid(rng, t, m, n, palette);
            CHECK(parse_grid(format_grid(g)) == g);
        }
    }
}

TEST_CASE("grid format layout") {
    const TorusGrid g(Topology::mesh, 2, 3, 4, {1, 2, 3, 4, 1, 2});
    CHECK(format_grid(g) == "mesh 2 3 4\n1 2 3\n4 1 2\n");
    CHECK(parse_grid("cordalis 2 2 2\n1 2\n2 1\n\n\n").topology() == Topology::cordalis);
    CHECK(parse_grid("mesh 2 2 2\r\n1 2\r\n2  1\r\n") == TorusGrid(Topology::mesh, 2, 2, 2, {1, 2, 2, 1}));
}

TEST_CASE("grid parse errors carry positions") {
    auto e = parse_failure("torus 2 2 2\n1 1\n1 1\n");
    CHECK(e.line() == 1);
    CHECK(e.column() == 1);

    e = parse_failure("mesh 2 2\n1 1\n1 1\n");
    CHECK(e.line() == 1);

    e = parse_failure("mesh 1 2 2\n1 1\n");
    CHECK(e.line() == 1);

    e = parse_failure("mesh 2 2 2\n1 1\n1 3\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);

    e = parse_failure("mesh 2 2 2\n1 1 1\n1 1\n");
    CHECK(e.line() == 2);

    e = parse_failure("mesh 2 2 2\n1 1\n");
    CHECK(e.line() >= 2);

    e = parse_failure("mesh 2 2 2\n1 1\n1 0\n");
    CHECK(e.line() == 3);

    e = parse_failure("mesh 2 2 2\n1 x\n1 1\n");
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("line 2, column 3") == 0);
}

TEST_CASE("round map CSV round-trips and rejects malformed input") {
    const RoundMap map{2, 3, {0, 1, -1, 12, 3, 0}};
    const auto text = format_round_map_csv(map);
    CHECK(text == "0,1,-1\n12,3,0\n");
    CHECK(parse_round_map_csv(text) == map);

    CHECK_THROWS_AS(parse_round_map_csv("0,1\n2\n"), ParseError);
    CHECK_THROWS_AS(parse_round_map_csv("0,,1\n"), ParseError);
    CHECK_THROWS_AS(parse_round_map_csv("0,a\n"), ParseError);
    CHECK_THROWS_AS(parse_round_map_csv("0,-2\n"), ParseError);
    CHECK_THROWS_AS(parse_round_map_csv(""), ParseError);
}

TEST_CASE("files round-trip") {
    const auto dir = std::filesystem::temp_directory_path() / "smp_grid_io_test";
    std::filesystem::create_directories(dir);
    const TorusGrid g(Topology::serpentinus, 3, 2, 3, {1, 2, 3, 3, 2, 1});
    write_grid_file(dir / "g.txt", g);
    CHECK(read_grid_file(dir / "g.txt") == g);
    CHECK_THROWS(read_grid_file(dir / "missing.txt"));

    const std::vector<TorusGrid> frames{g, g};
    CHECK(format_trajectory(frames) == format_grid(g) + "\n" + format_grid(g));
    std::filesystem::remove_all(dir);
}
