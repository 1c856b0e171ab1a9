#ifndef SMP_FILLER_HPP
#define SMP_FILLER_HPP

#include "smp/grid.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace smp {

// Constraint sets for coloring the cells outside a seed.
//
// theorem: every non-target color class induces a forest, and for every
//   non-target cell the neighbor slots colored neither like the cell nor with
//   the target carry pairwise different colors.
// strict: theorem, plus every non-target cell has at most one neighbor slot of
//   its own color, plus every target cell keeps the target color after one
//   round. Under these constraints a cell turns to the target exactly when two
//   of its neighbors hold it, so round counts depend on the seed alone. Needs
//   at least five colors wherever a cell has no target-colored neighbor.
// automatic: strict, falling back to theorem when strict has no solution.
enum class FillerPolicy : std::uint8_t { automatic, theorem, strict };

std::string_view to_string(FillerPolicy policy) noexcept;
std::optional<FillerPolicy> parse_filler_policy(std::string_view name) noexcept;

struct FillerOptions {
    FillerPolicy policy = FillerPolicy::automatic;
    // Seed 0 starts with ascending color order; every other seed (and every
    // restart) shuffles the per-cell color order from this value.
    std::uint64_t seed = 0;
    // Search nodes per attempt; 0 means unlimited (exhaustive).
    std::uint64_t node_limit = 4'000'000;
    int attempts = 6;
};

enum class FillerStatus : std::uint8_t {
    found,
    // The whole search space was explored: no filler exists.
    infeasible,
    // Every attempt hit the node limit.
    budget_exhausted,
};

struct FillerResult {
    FillerStatus status = FillerStatus::infeasible;
    std::optional<TorusGrid> grid;
    FillerPolicy policy = FillerPolicy::theorem; // policy that produced the result
    std::uint64_t nodes = 0;
    int attempts_used = 0;

    std::string diagnostic() const;
};

// Colors every cell outside `seed` from the palette minus `target`; seed cells
// get `target`. Cells are visited in row-major order.
FillerResult generate_filler(Topology topology, int rows, int cols, int palette, Color target, const CellSet& seed,
                             const FillerOptions& options = {});

// True iff `grid` satisfies the constraint set (theorem or strict) for `target`.
bool satisfies_policy(const TorusGrid& grid, Color target, FillerPolicy policy);

} // namespace smp

#endif // SMP_FILLER_HPP
