#include "smp/filler.hpp"

#include "smp/analysis.hpp"
#include "smp/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace smp {

namespace {

constexpr Color unassigned = 0;

class Backtracker {
public:
    Backtracker(const Wiring& wiring, int palette, Color target, const CellSet& seed, bool strict)
        : wiring_(wiring), palette_(palette), target_(target), strict_(strict),
          colors_(wiring.cell_count(), unassigned), parent_(wiring.cell_count()), size_(wiring.cell_count(), 1) {
        for (Coord c : seed) colors_[static_cast<std::size_t>(c.row) * wiring.cols() + c.col] = target;
        for (std::size_t i = 0; i < colors_.size(); ++i) {
            if (colors_[i] == unassigned) order_.push_back(i);
        }
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    // Cheap necessary condition for the strict constraints: a cell needs one
    // distinct color for every neighbor slot beyond the one allowed twin.
    bool strict_possible() const {
        const int non_target = palette_ - 1;
        for (std::size_t x : order_) {
            int open = 0;
            for (auto s : wiring_.slots(x)) open += colors_[s] != target_ ? 1 : 0;
            if (open > non_target) return false;
        }
        return true;
    }

    bool has_non_target_color() const { return palette_ >= 2; }
    bool nothing_to_fill() const { return order_.empty(); }

    enum class Outcome { found, exhausted, aborted };

    Outcome search(std::vector<std::vector<Color>> color_order, std::uint64_t node_limit, std::uint64_t& nodes) {
        color_order_ = std::move(color_order);
        node_limit_ = node_limit;
        nodes_ = 0;
        aborted_ = false;
        const bool found = descend(0);
        nodes += nodes_;
        if (found) return Outcome::found;
        return aborted_ ? Outcome::aborted : Outcome::exhausted;
    }

    const std::vector<Color>& colors() const noexcept { return colors_; }
    std::size_t fill_count() const noexcept { return order_.size(); }

private:
    std::size_t find(std::size_t x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        unions_.push_back(b);
    }

    void undo_unions(std::size_t mark) {
        while (unions_.size() > mark) {
            const std::size_t b = unions_.back();
            unions_.pop_back();
            const std::size_t a = parent_[b];
            size_[a] -= size_[b];
            parent_[b] = b;
        }
    }

    int own_slots(std::size_t z) const {
        int own = 0;
        for (auto s : wiring_.slots(z)) own += colors_[s] == colors_[z] ? 1 : 0;
        return own;
    }

    // Assigned neighbor slots of a non-target cell, excluding its own color and
    // the target, must be pairwise distinct.
    bool distinct_ok(std::size_t z) const {
        const Color own = colors_[z];
        std::array<Color, 4> other{};
        int count = 0;
        for (auto s : wiring_.slots(z)) {
            const Color c = colors_[s];
            if (c == unassigned || c == own || c == target_) continue;
            for (int i = 0; i < count; ++i) {
                if (other[i] == c) return false;
            }
            other[count++] = c;
        }
        return true;
    }

    // A fully surrounded target cell must keep the target after one round.
    bool survives(std::size_t z) const {
        std::array<Color, 4> nbr{};
        const auto& slots = wiring_.slots(z);
        for (std::size_t i = 0; i < 4; ++i) {
            nbr[i] = colors_[slots[i]];
            if (nbr[i] == unassigned) return true;
        }
        return smp_rule(nbr, target_) == target_;
    }

    bool place(std::size_t x, Color c) {
        colors_[x] = c;
        const auto& slots = wiring_.slots(x);

        if (strict_ && own_slots(x) > 1) return false;

        for (auto s : slots) {
            if (colors_[s] != c) continue;
            const std::size_t rs = find(s);
            const std::size_t rx = find(x);
            if (rs == rx) return false; // cycle, including a doubled edge
            unite(rs, rx);
            if (strict_ && own_slots(s) > 1) return false;
        }

        if (!distinct_ok(x)) return false;
        for (auto s : slots) {
            const Color cs = colors_[s];
            if (cs == unassigned) continue;
            if (cs == target_) {
                if (strict_ && !survives(s)) return false;
            } else if (!distinct_ok(s)) {
                return false;
            }
        }
        return true;
    }

    bool descend(std::size_t depth) {
        if (depth == order_.size()) return true;
        if (node_limit_ != 0 && nodes_ >= node_limit_) {
            aborted_ = true;
            return false;
        }
        ++nodes_;
        const std::size_t x = order_[depth];
        for (Color c : color_order_[depth]) {
            const std::size_t mark = unions_.size();
            if (place(x, c) && descend(depth + 1)) return true;
            undo_unions(mark);
            colors_[x] = unassigned;
            if (aborted_) return false;
        }
        return false;
    }

    const Wiring& wiring_;
    int palette_;
    Color target_;
    bool strict_;
    std::vector<Color> colors_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::vector<std::size_t> unions_;
    std::vector<std::vector<Color>> color_order_;
    std::uint64_t node_limit_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

std::vector<std::vector<Color>> make_color_order(std::size_t cells, int palette, Color target, std::uint64_t seed,
                                                 int attempt) {
    std::vector<Color> ascending;
    for (int c = 1; c <= palette; ++c) {
        if (c != target) ascending.push_back(static_cast<Color>(c));
    }
    std::vector<std::vector<Color>> order(cells, ascending);
    if (seed == 0 && attempt == 0) return order;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(seq);
    for (auto& colors : order) std::shuffle(colors.begin(), colors.end(), rng);
    return order;
}

FillerResult run_policy(const Wiring& wiring, int palette, Color target, const CellSet& seed, bool strict,
                        const FillerOptions& options) {
    FillerResult result;
    result.policy = strict ? FillerPolicy::strict : FillerPolicy::theorem;
    Backtracker bt(wiring, palette, target, seed, strict);

    if (!bt.nothing_to_fill() && (!bt.has_non_target_color() || (strict && !bt.strict_possible()))) {
        result.status = FillerStatus::infeasible;
        return result;
    }

    const int attempts = std::max(1, options.attempts);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        result.attempts_used = attempt + 1;
        auto order = make_color_order(bt.fill_count(), palette, target, options.seed, attempt);
        const auto outcome = bt.search(std::move(order), options.node_limit, result.nodes);
        if (outcome == Backtracker::Outcome::found) {
            result.status = FillerStatus::found;
            result.grid = TorusGrid(wiring.topology(), wiring.rows(), wiring.cols(), palette, bt.colors());
            return result;
        }
        if (outcome == Backtracker::Outcome::exhausted) {
            result.status = FillerStatus::infeasible;
            return result;
        }
    }
    result.status = FillerStatus::budget_exhausted;
    return result;
}

} // namespace

std::string_view to_string(FillerPolicy policy) noexcept {
    switch (policy) {
    case FillerPolicy::automatic: return "auto";
    case FillerPolicy::theorem: return "theorem";
    case FillerPolicy::strict: return "strict";
    }
    return "unknown";
}

std::optional<FillerPolicy> parse_filler_policy(std::string_view name) noexcept {
    if (name == "auto") return FillerPolicy::automatic;
    if (name == "theorem") return FillerPolicy::theorem;
    if (name == "strict") return FillerPolicy::strict;
    return std::nullopt;
}

std::string FillerResult::diagnostic() const {
    std::string out = "filler policy=" + std::string(to_string(policy)) + " nodes=" + std::to_string(nodes) +
                      " attempts=" + std::to_string(attempts_used) + ": ";
    switch (status) {
    case FillerStatus::found: return out + "found";
    case FillerStatus::infeasible: return out + "no coloring satisfies the constraints (search space exhausted)";
    case FillerStatus::budget_exhausted: return out + "node budget exhausted before a coloring was found";
    }
    return out;
}

FillerResult generate_filler(Topology topology, int rows, int cols, int palette, Color target, const CellSet& seed,
                             const FillerOptions& options) {
    if (target < 1 || target > palette) {
        throw std::out_of_range("target color is not in the palette");
    }
    const auto wiring = make_wiring(topology, rows, cols);
    for (Coord c : seed) {
        if (c.row < 0 || c.row >= rows || c.col < 0 || c.col >= cols) {
            throw std::out_of_range("seed cell outside the grid");
        }
    }

    FillerResult result;
    if (options.policy != FillerPolicy::theorem) {
        result = run_policy(*wiring, palette, target, seed, true, options);
        if (result.status == FillerStatus::found || options.policy == FillerPolicy::strict) {
            if (result.grid && !satisfies_policy(*result.grid, target, FillerPolicy::strict)) {
                throw std::logic_error("filler failed strict re-validation");
            }
            return result;
        }
    }
    const std::uint64_t spent = result.nodes;
    result = run_policy(*wiring, palette, target, seed, false, options);
    result.nodes += spent;
    if (result.grid && !satisfies_policy(*result.grid, target, FillerPolicy::theorem)) {
        throw std::logic_error("filler failed re-validation");
    }
    return result;
}

bool satisfies_policy(const TorusGrid& grid, Color target, FillerPolicy policy) {
    for (int c = 1; c <= grid.palette(); ++c) {
        if (c != target && !check_forest(grid, static_cast<Color>(c))) return false;
    }
    if (!check_distinct_neighbor_colors(grid, target).empty()) return false;
    if (policy == FillerPolicy::theorem) return true;

    for (std::size_t x = 0; x < grid.cell_count(); ++x) {
        if (grid[x] == target) continue;
        int own = 0;
        for (auto s : grid.neighbor_slots(x)) own += grid[s] == grid[x] ? 1 : 0;
        if (own > 1) return false;
    }
    const TorusGrid next = step(grid);
    for (std::size_t x = 0; x < grid.cell_count(); ++x) {
        if (grid[x] == target && next[x] != target) return false;
    }
    return true;
}

} // namespace smp
