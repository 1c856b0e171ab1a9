#ifndef SMP_DYNAMO_HPP
#define SMP_DYNAMO_HPP

#include "smp/dynamics.hpp"
#include "smp/filler.hpp"
#include "smp/grid.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smp {

// Where the target-colored seed sits.
//   row_and_column:   column 0 plus row 0 without its last cell (mesh)
//   row_plus_cell:    row i plus cell (i+1, 0) (cordalis, serpentinus with n <= m)
//   column_plus_cell: column j plus cell (0, j+1) (serpentinus with m < n)
enum class SeedLayout : std::uint8_t { row_and_column, row_plus_cell, column_plus_cell };

std::string_view to_string(SeedLayout layout) noexcept;

struct DynamoConstruction {
    TorusGrid grid;
    Color target = 0;
    CellSet seed_set;
    SeedLayout layout = SeedLayout::row_and_column;
    // Row (or column) the seed starts on.
    int offset = 0;
    FillerPolicy filler = FillerPolicy::theorem;
    std::uint64_t rng_seed = 0;
    // Closed-form round count; empty where no formula exists.
    std::optional<int> predicted_rounds;
};

// Minimum seed size for a monotone dynamo: m+n-2 (mesh), n+1 (cordalis),
// min(m,n)+1 (serpentinus).
int seed_size_bound(Topology topology, int rows, int cols);

// Round counts of the constructions:
//   mesh:                    2*max(ceil((n-1)/2) - 1, ceil((m-1)/2) - 1) + 1
//   cordalis / serpentinus:  (floor((m-1)/2) - 1)*n + ceil(n/2)   m odd
//                            (floor((m-1)/2) - 1)*n + 1           m even
// Serpentinus is only covered for the row-seeded case n <= m; otherwise throws.
int predicted_rounds(Topology topology, int rows, int cols);

CellSet mesh_seed(int rows, int cols);
CellSet cordalis_seed(int rows, int cols, int row_offset = 0);
CellSet serpentinus_seed(int rows, int cols, int offset = 0);

// All constructions require m, n >= 3, palette >= 4 and target in the
// palette. The filler is re-validated before return; a failed filler search
// throws smp::Error carrying the search diagnostic.
DynamoConstruction construct_mesh_dynamo(int rows, int cols, int palette, Color target,
                                         const FillerOptions& options = {});
DynamoConstruction construct_cordalis_dynamo(int rows, int cols, int palette, Color target,
                                             const FillerOptions& options = {}, int row_offset = 0);
DynamoConstruction construct_serpentinus_dynamo(int rows, int cols, int palette, Color target,
                                                const FillerOptions& options = {}, int offset = 0);
DynamoConstruction construct_dynamo(Topology topology, int rows, int cols, int palette, Color target,
                                    const FillerOptions& options = {}, int offset = 0);

struct AssertionResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<AssertionResult> assertions;
    SimulationResult simulation;

    bool passed() const noexcept;
    const AssertionResult* find(std::string_view name) const noexcept;
};

// Checks a dynamo candidate:
//   rounds            reaches the target monochromatically in predicted_rounds
//   monotone          the target set never shrinks
//   block_structure   at time 0 the target set is a union of k-blocks and no
//                     non-k-block exists
//   seed_size         the seed equals the target set and has the bound's size
//   filler_conditions forests and distinct neighbor colors hold
// Failures are reported, never thrown. max_rounds 0 selects the default cap.
VerificationReport verify_construction(const DynamoConstruction& construction, int max_rounds = 0);

// Lines of the form `assertion=<name> status=<pass|fail> detail=<...>`.
std::string format_verification(const VerificationReport& report);

// Comparison of an observed round map against a golden one.
enum class RoundMapMatch : std::uint8_t {
    exact,
    // Same maximum (total rounds) but some cells differ.
    map_mismatch,
    // Different maximum or shape.
    rounds_mismatch,
};

std::string_view to_string(RoundMapMatch match) noexcept;
RoundMapMatch compare_round_maps(const RoundMap& observed, const RoundMap& expected) noexcept;

} // namespace smp

#endif // SMP_DYNAMO_HPP
