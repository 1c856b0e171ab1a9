#ifndef SMP_DYNAMICS_HPP
#define SMP_DYNAMICS_HPP

#include "smp/grid.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace smp {

// The local recoloring rule. A cell adopts the unique color held by at least
// two of its four neighbor slots; on a 2+2 tie or four distinct colors it
// keeps its current color.
constexpr Color smp_rule(const std::array<Color, 4>& nbr, Color current) noexcept {
    // Pairwise equalities decide every partition shape of a 4-multiset.
    const bool ab = nbr[0] == nbr[1], ac = nbr[0] == nbr[2], ad = nbr[0] == nbr[3];
    const bool bc = nbr[1] == nbr[2], bd = nbr[1] == nbr[3], cd = nbr[2] == nbr[3];
    const int pairs = ab + ac + ad + bc + bd + cd;
    switch (pairs) {
    case 0: return current;                  // 1+1+1+1
    case 1:                                  // 2+1+1
        return (ab || ac || ad) ? nbr[0] : (bc || bd) ? nbr[1] : nbr[2];
    case 2: return current;                  // 2+2
    case 3:                                  // 3+1
        return (ab || ac) ? nbr[0] : nbr[1];
    default: return nbr[0];                  // 4
    }
}

enum class Outcome : std::uint8_t { monochromatic, fixed_point, cycle, truncated };

std::string_view to_string(Outcome outcome) noexcept;

struct SimulationResult {
    Outcome outcome = Outcome::truncated;
    // Color of the final configuration when monochromatic.
    Color color = 0;
    // Monochromatic: first time t the grid is uniform.
    // Fixed point: first time t with config(t) == config(t + 1).
    // Cycle: first time t of the repeating segment (== cycle_start).
    // Truncated: the round cap.
    int rounds = 0;
    int cycle_start = 0;
    int cycle_length = 0;
    // Number of step applications performed.
    int rounds_executed = 0;
    // Set when monotonicity tracking was requested: true iff the tracked color's
    // cell set never lost a member across any executed step.
    std::optional<Color> monotone_color;
    bool monotone = false;

    bool reached(Color k) const noexcept { return outcome == Outcome::monochromatic && color == k; }
};

struct RunOptions {
    // 0 selects default_max_rounds(grid).
    int max_rounds = 0;
    std::optional<Color> track_monotone;
    // Stop as soon as the tracked color loses a cell (result is then truncated
    // at that round with monotone == false). Used by exhaustive searches.
    bool stop_on_monotone_violation = false;
};

int default_max_rounds(const TorusGrid& grid) noexcept;

TorusGrid step(const TorusGrid& grid);

SimulationResult run(const TorusGrid& grid, const RunOptions& options = {});

// Every configuration from time 0 to the last one observed, plus the result.
struct Trajectory {
    std::vector<TorusGrid> frames;
    SimulationResult result;
};

Trajectory run_trajectory(const TorusGrid& grid, const RunOptions& options = {});

// Per-cell first round after which the cell holds `k` for the rest of the
// observed run; -1 where it does not end on `k`.
struct RoundMap {
    int rows = 0;
    int cols = 0;
    std::vector<int> sigma;

    int at(int row, int col) const { return sigma.at(static_cast<std::size_t>(row) * cols + col); }
    int max() const noexcept;
    friend bool operator==(const RoundMap&, const RoundMap&) = default;
};

RoundMap round_map(const TorusGrid& grid, Color k, int max_rounds = 0);
RoundMap round_map(const Trajectory& trajectory, Color k);

// Reusable simulation engine over raw cell buffers. Holds scratch space so
// that repeated runs (exhaustive search) do not allocate.
class Simulator {
public:
    explicit Simulator(std::shared_ptr<const Wiring> wiring);

    SimulationResult run(std::span<const Color> initial, const RunOptions& options);

    // History of the last run: configuration t occupies
    // [t * cell_count, (t + 1) * cell_count).
    std::span<const Color> history() const noexcept { return history_; }
    std::size_t cell_count() const noexcept { return wiring_->cell_count(); }

private:
    void step_into(const Color* in, Color* out) const noexcept;

    std::shared_ptr<const Wiring> wiring_;
    std::vector<Color> history_;
    std::vector<std::uint64_t> digests_;
};

} // namespace smp

#endif // SMP_DYNAMICS_HPP
