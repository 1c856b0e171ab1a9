#include "smp/dynamics.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace smp {

namespace {

std::uint64_t digest(const Color* cells, std::size_t n) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= cells[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

std::string_view to_string(Outcome outcome) noexcept {
    switch (outcome) {
    case Outcome::monochromatic: return "mono";
    case Outcome::fixed_point: return "fixed";
    case Outcome::cycle: return "cycle";
    case Outcome::truncated: return "truncated";
    }
    return "unknown";
}

int default_max_rounds(const TorusGrid& grid) noexcept { return 4 * grid.rows() * grid.cols(); }

Simulator::Simulator(std::shared_ptr<const Wiring> wiring) : wiring_(std::move(wiring)) {}

void Simulator::step_into(const Color* in, Color* out) const noexcept {
    const std::size_t n = wiring_->cell_count();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = wiring_->slots(i);
        out[i] = smp_rule({in[s[0]], in[s[1]], in[s[2]], in[s[3]]}, in[i]);
    }
}

SimulationResult Simulator::run(std::span<const Color> initial, const RunOptions& options) {
    const std::size_t n = wiring_->cell_count();
    if (initial.size() != n) {
        throw std::invalid_argument("initial configuration has the wrong number of cells");
    }
    const int cap = options.max_rounds > 0 ? options.max_rounds : 4 * wiring_->rows() * wiring_->cols();

    SimulationResult result;
    const bool tracking = options.track_monotone.has_value();
    const Color tracked = tracking ? *options.track_monotone : Color{0};
    if (tracking) {
        result.monotone_color = tracked;
        result.monotone = true;
    }

    history_.assign(initial.begin(), initial.end());
    digests_.assign(1, digest(history_.data(), n));

    for (int t = 0;; ++t) {
        const Color* cur = history_.data() + static_cast<std::size_t>(t) * n;
        if (std::all_of(cur, cur + n, [c = cur[0]](Color x) { return x == c; })) {
            result.outcome = Outcome::monochromatic;
            result.color = cur[0];
            result.rounds = t;
            break;
        }
        if (t == cap) {
            result.outcome = Outcome::truncated;
            result.rounds = cap;
            break;
        }

        history_.resize(static_cast<std::size_t>(t + 2) * n);
        cur = history_.data() + static_cast<std::size_t>(t) * n;
        Color* next = history_.data() + static_cast<std::size_t>(t + 1) * n;
        step_into(cur, next);
        result.rounds_executed = t + 1;

        if (tracking && result.monotone) {
            for (std::size_t i = 0; i < n; ++i) {
                if (cur[i] == tracked && next[i] != tracked) {
                    result.monotone = false;
                    break;
                }
            }
            if (!result.monotone && options.stop_on_monotone_violation) {
                result.outcome = Outcome::truncated;
                result.rounds = t + 1;
                break;
            }
        }

        if (std::memcmp(cur, next, n) == 0) {
            result.outcome = Outcome::fixed_point;
            result.rounds = t;
            break;
        }

        const std::uint64_t h = digest(next, n);
        bool repeated = false;
        for (int s = 0; s < t; ++s) {
            if (digests_[s] == h && std::memcmp(history_.data() + static_cast<std::size_t>(s) * n, next, n) == 0) {
                result.outcome = Outcome::cycle;
                result.cycle_start = s;
                result.cycle_length = t + 1 - s;
                result.rounds = s;
                repeated = true;
                break;
            }
        }
        if (repeated) break;
        digests_.push_back(h);
    }
    return result;
}

TorusGrid step(const TorusGrid& grid) {
    std::vector<Color> next(grid.cell_count());
    for (std::size_t i = 0; i < next.size(); ++i) {
        const auto& s = grid.neighbor_slots(i);
        next[i] = smp_rule({grid[s[0]], grid[s[1]], grid[s[2]], grid[s[3]]}, grid[i]);
    }
    return grid.with_cells(std::move(next));
}

SimulationResult run(const TorusGrid& grid, const RunOptions& options) {
    Simulator sim(grid.shared_wiring());
    return sim.run(grid.cells(), options);
}

Trajectory run_trajectory(const TorusGrid& grid, const RunOptions& options) {
    Simulator sim(grid.shared_wiring());
    Trajectory out;
    out.result = sim.run(grid.cells(), options);
    const std::size_t n = grid.cell_count();
    const auto history = sim.history();
    const std::size_t frames = history.size() / n;
    out.frames.reserve(frames);
    for (std::size_t t = 0; t < frames; ++t) {
        auto slice = history.subspan(t * n, n);
        out.frames.push_back(grid.with_cells(std::vector<Color>(slice.begin(), slice.end())));
    }
    return out;
}

int RoundMap::max() const noexcept {
    return sigma.empty() ? -1 : *std::max_element(sigma.begin(), sigma.end());
}

RoundMap round_map(const Trajectory& trajectory, Color k) {
    if (trajectory.frames.empty()) {
        throw std::invalid_argument("trajectory has no frames");
    }
    const TorusGrid& first = trajectory.frames.front();
    RoundMap map{first.rows(), first.cols(), std::vector<int>(first.cell_count(), -1)};
    const std::size_t last = trajectory.frames.size() - 1;
    for (std::size_t i = 0; i < first.cell_count(); ++i) {
        if (trajectory.frames[last][i] != k) continue;
        std::size_t t = last;
        while (t > 0 && trajectory.frames[t - 1][i] == k) --t;
        map.sigma[i] = static_cast<int>(t);
    }
    return map;
}

RoundMap round_map(const TorusGrid& grid, Color k, int max_rounds) {
    if (k < 1 || k > grid.palette()) {
        throw std::out_of_range("target color is not in the palette");
    }
    RunOptions options;
    options.max_rounds = max_rounds;
    return round_map(run_trajectory(grid, options), k);
}

} // namespace smp
