#ifndef SMP_TESTS_HELPERS_HPP
#define SMP_TESTS_HELPERS_HPP

#include "oracles.hpp"

#include "smp/grid.hpp"

#include <random>
#include <set>
#include <vector>

namespace testing {

inline oracle::Cells to_cells(const smp::TorusGrid& g) {
    return oracle::Cells(g.cells().begin(), g.cells().end());
}

inline smp::TorusGrid from_cells(smp::Topology t, int m, int n, int palette, const oracle::Cells& cells) {
    return smp::TorusGrid(t, m, n, palette, std::vector<smp::Color>(cells.begin(), cells.end()));
}

inline std::set<oracle::Pos> to_pos(const smp::CellSet& s) {
    std::set<oracle::Pos> out;
    for (auto c : s) out.insert({c.row, c.col});
    return out;
}

inline smp::TorusGrid random_grid(std::mt19937_64& rng, smp::Topology t, int m, int n, int palette) {
    std::uniform_int_distribution<int> pick(1, palette);
    std::vector<smp::Color> cells(static_cast<std::size_t>(m * n));
    for (auto& c : cells) c = static_cast<smp::Color>(pick(rng));
    return smp::TorusGrid(t, m, n, palette, std::move(cells));
}

inline const smp::Topology all_topologies[] = {smp::Topology::mesh, smp::Topology::cordalis,
                                               smp::Topology::serpentinus};

} // namespace testing

#endif // SMP_TESTS_HELPERS_HPP
