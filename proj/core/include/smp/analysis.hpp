#ifndef SMP_ANALYSIS_HPP
#define SMP_ANALYSIS_HPP

#include "smp/grid.hpp"

#include <map>
#include <string>
#include <vector>

namespace smp {

// Maximal k-blocks: connected sets of k-colored cells in which every member
// has at least two neighbor slots inside the set. Computed as the connected
// components of the 2-core of the k-colored subgraph, so every k-block of the
// grid lies inside exactly one returned set. Sorted by first cell.
std::vector<CellSet> find_k_blocks(const TorusGrid& grid, Color k);

// Maximal non-k-blocks: same construction over cells not colored k with a
// threshold of three slots.
std::vector<CellSet> find_non_k_blocks(const TorusGrid& grid, Color k);

// Components of the `threshold`-core of the subgraph induced by `member`.
// Degrees count neighbor slots, so a doubled neighbor counts twice.
std::vector<CellSet> core_components(const TorusGrid& grid, const std::vector<bool>& member, int threshold);

// True iff the cells of color c induce an acyclic graph. Two distinct cells
// joined through two slots form a cycle.
bool check_forest(const TorusGrid& grid, Color c);

struct NeighborViolation {
    Coord cell;
    std::string description;
};

// For every cell x not colored k, the neighbor slots whose color is neither
// x's own color nor k must carry pairwise different colors.
std::vector<NeighborViolation> check_distinct_neighbor_colors(const TorusGrid& grid, Color k);

// The k-set is exactly the union of maximal k-blocks and the rest of the grid
// holds no non-k-block. Necessary for a monotone dynamo.
bool check_monotone_dynamo_structure(const TorusGrid& grid, Color k);

struct StructureReport {
    Color target = 0;
    std::vector<CellSet> k_blocks;
    std::vector<CellSet> non_k_blocks;
    std::map<Color, bool> forest_verdicts; // every palette color other than the target
    std::vector<NeighborViolation> neighbor_condition_violations;

    bool forests_ok() const noexcept;
};

StructureReport analyze_structure(const TorusGrid& grid, Color k);

// BLOCKS / NONBLOCKS / FORESTS / VIOLATIONS sections.
std::string format_structure_report(const StructureReport& report);

// blocks=<n> nonblocks=<n> forests=<ok|fail> violations=<n>
std::string structure_summary(const StructureReport& report);

} // namespace smp

#endif // SMP_ANALYSIS_HPP
