#include "smp/dynamo.hpp"

#include "smp/analysis.hpp"
#include "smp/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace smp {

namespace {

int ceil_half(int x) { return (x + 1) / 2; }

void check_construction_args(int rows, int cols, int palette, Color target) {
    if (rows < 3 || cols < 3) {
        throw std::invalid_argument("constructions need m, n >= 3");
    }
    if (palette < 4) {
        throw Error("insufficient palette: constructions need at least 4 colors, got " + std::to_string(palette));
    }
    if (palette > max_palette) {
        throw std::invalid_argument("palette too large");
    }
    if (target < 1 || target > palette) {
        throw std::out_of_range("target color is not in the palette");
    }
}

DynamoConstruction build(Topology topology, int rows, int cols, int palette, Color target, CellSet seed,
                         SeedLayout layout, int offset, const FillerOptions& options) {
    check_construction_args(rows, cols, palette, target);
    auto filler = generate_filler(topology, rows, cols, palette, target, seed, options);
    if (filler.status != FillerStatus::found) {
        throw Error(std::string(to_string(topology)) + " " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " with " + std::to_string(palette) + " colors: " + filler.diagnostic());
    }
    DynamoConstruction dc{std::move(*filler.grid), target, std::move(seed), layout, offset, filler.policy,
                          options.seed, std::nullopt};
    if (layout != SeedLayout::column_plus_cell) {
        dc.predicted_rounds = predicted_rounds(topology, rows, cols);
    }
    return dc;
}

std::string format_counts(std::size_t a, std::size_t b) {
    return std::to_string(a) + " vs " + std::to_string(b);
}

} // namespace

std::string_view to_string(SeedLayout layout) noexcept {
    switch (layout) {
    case SeedLayout::row_and_column: return "row_and_column";
    case SeedLayout::row_plus_cell: return "row_plus_cell";
    case SeedLayout::column_plus_cell: return "column_plus_cell";
    }
    return "unknown";
}

int seed_size_bound(Topology topology, int rows, int cols) {
    switch (topology) {
    case Topology::mesh: return rows + cols - 2;
    case Topology::cordalis: return cols + 1;
    case Topology::serpentinus: return std::min(rows, cols) + 1;
    }
    return 0;
}

int predicted_rounds(Topology topology, int rows, int cols) {
    if (rows < 2 || cols < 2) {
        throw std::invalid_argument("torus must be at least 2x2");
    }
    if (topology == Topology::mesh) {
        return 2 * std::max(ceil_half(cols - 1) - 1, ceil_half(rows - 1) - 1) + 1;
    }
    if (topology == Topology::serpentinus && rows < cols) {
        throw Error("no round-count formula for the column-seeded serpentinus (m < n)");
    }
    const int sweeps = (rows - 1) / 2 - 1;
    return rows % 2 == 1 ? sweeps * cols + ceil_half(cols) : sweeps * cols + 1;
}

CellSet mesh_seed(int rows, int cols) {
    CellSet seed;
    for (int i = 0; i < rows; ++i) seed.insert({i, 0});
    for (int j = 0; j + 1 < cols; ++j) seed.insert({0, j});
    return seed;
}

CellSet cordalis_seed(int rows, int cols, int row_offset) {
    const int i = ((row_offset % rows) + rows) % rows;
    CellSet seed;
    for (int j = 0; j < cols; ++j) seed.insert({i, j});
    seed.insert({(i + 1) % rows, 0});
    return seed;
}

CellSet serpentinus_seed(int rows, int cols, int offset) {
    if (cols <= rows) {
        return cordalis_seed(rows, cols, offset);
    }
    const int j = ((offset % cols) + cols) % cols;
    CellSet seed;
    for (int i = 0; i < rows; ++i) seed.insert({i, j});
    seed.insert({0, (j + 1) % cols});
    return seed;
}

DynamoConstruction construct_mesh_dynamo(int rows, int cols, int palette, Color target, const FillerOptions& options) {
    check_construction_args(rows, cols, palette, target);
    return build(Topology::mesh, rows, cols, palette, target, mesh_seed(rows, cols), SeedLayout::row_and_column, 0,
                 options);
}

DynamoConstruction construct_cordalis_dynamo(int rows, int cols, int palette, Color target,
                                             const FillerOptions& options, int row_offset) {
    check_construction_args(rows, cols, palette, target);
    return build(Topology::cordalis, rows, cols, palette, target, cordalis_seed(rows, cols, row_offset),
                 SeedLayout::row_plus_cell, row_offset, options);
}

DynamoConstruction construct_serpentinus_dynamo(int rows, int cols, int palette, Color target,
                                                 const FillerOptions& options, int offset) {
    check_construction_args(rows, cols, palette, target);
    const auto layout = cols <= rows ? SeedLayout::row_plus_cell : SeedLayout::column_plus_cell;
    return build(Topology::serpentinus, rows, cols, palette, target, serpentinus_seed(rows, cols, offset), layout,
                 offset, options);
}

DynamoConstruction construct_dynamo(Topology topology, int rows, int cols, int palette, Color target,
                                    const FillerOptions& options, int offset) {
    switch (topology) {
    case Topology::mesh: return construct_mesh_dynamo(rows, cols, palette, target, options);
    case Topology::cordalis: return construct_cordalis_dynamo(rows, cols, palette, target, options, offset);
    case Topology::serpentinus: return construct_serpentinus_dynamo(rows, cols, palette, target, options, offset);
    }
    throw std::invalid_argument("unknown topology");
}

bool VerificationReport::passed() const noexcept {
    return std::all_of(assertions.begin(), assertions.end(), [](const auto& a) { return a.passed; });
}

const AssertionResult* VerificationReport::find(std::string_view name) const noexcept {
    for (const auto& a : assertions) {
        if (a.name == name) return &a;
    }
    return nullptr;
}

VerificationReport verify_construction(const DynamoConstruction& dc, int max_rounds) {
    VerificationReport report;
    const TorusGrid& grid = dc.grid;
    const Color k = dc.target;

    RunOptions options;
    options.max_rounds = max_rounds;
    options.track_monotone = k;
    report.simulation = run(grid, options);
    const auto& sim = report.simulation;

    {
        std::ostringstream detail;
        detail << "outcome=" << to_string(sim.outcome) << " color=" << static_cast<int>(sim.color)
               << " rounds=" << sim.rounds;
        bool ok = sim.reached(k);
        if (dc.predicted_rounds) {
            detail << " predicted=" << *dc.predicted_rounds;
            ok = ok && sim.rounds == *dc.predicted_rounds;
        } else {
            detail << " predicted=none";
        }
        report.assertions.push_back({"rounds", ok, detail.str()});
    }
    report.assertions.push_back(
        {"monotone", sim.monotone, sim.monotone ? "target set never shrank" : "a target cell changed color"});

    {
        const auto blocks = find_k_blocks(grid, k);
        std::size_t in_blocks = 0;
        for (const auto& b : blocks) in_blocks += b.size();
        const auto non_blocks = find_non_k_blocks(grid, k);
        const std::size_t k_cells = grid.count(k);
        const bool ok = in_blocks == k_cells && non_blocks.empty();
        report.assertions.push_back({"block_structure", ok,
                                     "k_cells_in_blocks=" + format_counts(in_blocks, k_cells) +
                                         " nonblocks=" + std::to_string(non_blocks.size())});
    }
    {
        const int bound = seed_size_bound(grid.topology(), grid.rows(), grid.cols());
        const bool matches_grid = grid.cells_of(k) == dc.seed_set;
        const bool ok = matches_grid && dc.seed_set.size() == static_cast<std::size_t>(bound);
        report.assertions.push_back({"seed_size", ok,
                                     "size=" + std::to_string(dc.seed_set.size()) + " bound=" + std::to_string(bound) +
                                         (matches_grid ? "" : " seed differs from target cells")});
    }
    {
        const auto violations = check_distinct_neighbor_colors(grid, k);
        std::string bad_forests;
        for (int c = 1; c <= grid.palette(); ++c) {
            if (c != k && !check_forest(grid, static_cast<Color>(c))) bad_forests += " " + std::to_string(c);
        }
        const bool ok = violations.empty() && bad_forests.empty();
        report.assertions.push_back({"filler_conditions", ok,
                                     "violations=" + std::to_string(violations.size()) + " non_forest_colors=" +
                                         (bad_forests.empty() ? std::string("none") : bad_forests.substr(1))});
    }
    return report;
}

std::string format_verification(const VerificationReport& report) {
    std::ostringstream out;
    for (const auto& a : report.assertions) {
        out << "assertion=" << a.name << " status=" << (a.passed ? "pass" : "fail") << " detail=" << a.detail
            << '\n';
    }
    return out.str();
}

std::string_view to_string(RoundMapMatch match) noexcept {
    switch (match) {
    case RoundMapMatch::exact: return "exact";
    case RoundMapMatch::map_mismatch: return "map_mismatch";
    case RoundMapMatch::rounds_mismatch: return "rounds_mismatch";
    }
    return "unknown";
}

RoundMapMatch compare_round_maps(const RoundMap& observed, const RoundMap& expected) noexcept {
    if (observed.rows != expected.rows || observed.cols != expected.cols || observed.max() != expected.max()) {
        return RoundMapMatch::rounds_mismatch;
    }
    return observed.sigma == expected.sigma ? RoundMapMatch::exact : RoundMapMatch::map_mismatch;
}

} // namespace smp
