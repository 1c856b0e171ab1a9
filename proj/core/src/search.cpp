#include "smp/search.hpp"

#include "smp/analysis.hpp"
#include "smp/dynamics.hpp"
#include "smp/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace smp {

namespace {

constexpr std::uint64_t progress_interval = 1'000'000;
constexpr std::uint64_t no_index = std::numeric_limits<std::uint64_t>::max();

void validate_spec(const SearchSpec& spec) {
    if (spec.rows < 2 || spec.cols < 2) throw std::invalid_argument("torus must be at least 2x2");
    if (spec.palette < 1 || spec.palette > max_palette) throw std::invalid_argument("palette out of range");
    if (spec.target < 1 || spec.target > spec.palette) {
        throw std::out_of_range("target color is not in the palette");
    }
    if (spec.shards < 1) throw std::invalid_argument("shard count must be positive");
}

int effective_rounds(const SearchSpec& spec) {
    return spec.max_rounds > 0 ? spec.max_rounds : 2 * spec.rows * spec.cols;
}

// Scan state shared by one worker's shards.
class Odometer {
public:
    Odometer(std::size_t cells, int palette, std::uint64_t start) : digits_(cells), palette_(palette) {
        for (std::size_t i = cells; i-- > 0;) {
            digits_[i] = static_cast<Color>(start % static_cast<std::uint64_t>(palette) + 1);
            start /= static_cast<std::uint64_t>(palette);
        }
    }

    const std::vector<Color>& colors() const noexcept { return digits_; }

    void next() noexcept {
        for (std::size_t i = digits_.size(); i-- > 0;) {
            if (digits_[i] < palette_) {
                ++digits_[i];
                return;
            }
            digits_[i] = 1;
        }
    }

private:
    std::vector<Color> digits_;
    int palette_;
};

struct ProgressSink {
    std::ostream* out = nullptr;
    std::uint64_t total = 0;
    std::atomic<std::uint64_t> done{0};
    std::mutex mutex;

    void add(std::uint64_t n) {
        if (out == nullptr) return;
        const std::uint64_t before = done.fetch_add(n);
        if ((before + n) / progress_interval != before / progress_interval) {
            std::lock_guard lock(mutex);
            *out << "progress scanned=" << before + n << "/" << total << '\n';
        }
    }
};

// Runs body(shard, lo, hi) for every shard on a small thread pool.
template <typename Body>
void for_each_shard(int shards, int threads, std::uint64_t total, Body&& body) {
    const int workers = std::max(1, std::min(shards, threads > 0 ? threads
                                                                  : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))));
    std::atomic<int> next{0};
    auto work = [&] {
        for (int s = next++; s < shards; s = next++) {
            const std::uint64_t lo = total / shards * s + std::min<std::uint64_t>(s, total % shards);
            const std::uint64_t hi = lo + total / shards + (static_cast<std::uint64_t>(s) < total % shards ? 1 : 0);
            body(s, lo, hi);
        }
    };
    if (workers == 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

struct ShardOutcome {
    std::optional<int> size;
    std::uint64_t index = no_index;
    std::uint64_t scanned = 0;
    std::uint64_t simulations = 0;
    std::uint64_t truncated = 0;
};

int count_target(const std::vector<Color>& cells, Color target) {
    return static_cast<int>(std::count(cells.begin(), cells.end(), target));
}

// Blocks by definition: every connected cell subset of `members` whose cells
// each have `threshold` slots inside it, reduced to the inclusion-maximal ones.
std::vector<std::uint32_t> brute_force_blocks(const TorusGrid& grid, std::uint32_t members, int threshold) {
    const std::size_t n = grid.cell_count();
    auto qualifies = [&](std::uint32_t set) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!(set >> i & 1U)) continue;
            int inside = 0;
            for (auto s : grid.neighbor_slots(i)) inside += (set >> s & 1U) ? 1 : 0;
            if (inside < threshold) return false;
        }
        std::uint32_t reached = set & (~set + 1);
        for (std::uint32_t frontier = reached; frontier != 0;) {
            std::uint32_t grown = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (!(frontier >> i & 1U)) continue;
                for (auto s : grid.neighbor_slots(i)) grown |= 1U << s;
            }
            grown &= set & ~reached;
            reached |= grown;
            frontier = grown;
        }
        return reached == set;
    };

    std::vector<std::uint32_t> blocks;
    for (std::uint32_t sub = members; sub != 0; sub = (sub - 1) & members) {
        if (qualifies(sub)) blocks.push_back(sub);
    }
    std::vector<std::uint32_t> maximal;
    for (auto b : blocks) {
        const bool dominated = std::any_of(blocks.begin(), blocks.end(),
                                           [b](std::uint32_t o) { return o != b && (o & b) == b; });
        if (!dominated) maximal.push_back(b);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

std::vector<std::uint32_t> to_masks(const TorusGrid& grid, const std::vector<CellSet>& sets) {
    std::vector<std::uint32_t> masks;
    for (const auto& set : sets) {
        std::uint32_t m = 0;
        for (Coord c : set) m |= 1U << grid.index_of(c);
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    return masks;
}

} // namespace

std::string_view to_string(SearchMode mode) noexcept {
    switch (mode) {
    case SearchMode::min_dynamo: return "min_dynamo";
    case SearchMode::min_monotone_dynamo: return "min_monotone_dynamo";
    case SearchMode::exists_dynamo_of_size: return "exists_dynamo_of_size";
    }
    return "unknown";
}

std::optional<SearchMode> parse_search_mode(std::string_view name) noexcept {
    if (name == "min_dynamo" || name == "min") return SearchMode::min_dynamo;
    if (name == "min_monotone_dynamo" || name == "monotone") return SearchMode::min_monotone_dynamo;
    if (name == "exists_dynamo_of_size" || name == "exists") return SearchMode::exists_dynamo_of_size;
    return std::nullopt;
}

std::uint64_t configuration_count(const SearchSpec& spec) {
    validate_spec(spec);
    const int cells = spec.rows * spec.cols;
    const double bits = cells * std::log2(static_cast<double>(spec.palette));
    if (bits > 40.0 + 1e-9) {
        std::ostringstream msg;
        msg << "search budget exceeded: " << spec.palette << "^" << cells << " = "
            << std::pow(static_cast<double>(spec.palette), cells) << " configurations (limit 2^40)";
        throw Error(msg.str());
    }
    std::uint64_t total = 1;
    for (int i = 0; i < cells; ++i) total *= static_cast<std::uint64_t>(spec.palette);
    return total;
}

TorusGrid decode_configuration(const SearchSpec& spec, std::uint64_t index) {
    const std::uint64_t total = configuration_count(spec);
    if (index >= total) throw std::out_of_range("configuration index out of range");
    Odometer od(static_cast<std::size_t>(spec.rows * spec.cols), spec.palette, index);
    return TorusGrid(spec.topology, spec.rows, spec.cols, spec.palette, od.colors());
}

SearchResult enumerate_min_dynamo(const SearchSpec& spec) {
    const auto started = std::chrono::steady_clock::now();
    const std::uint64_t total = configuration_count(spec);
    if (spec.mode == SearchMode::exists_dynamo_of_size && (spec.size < 0 || spec.size > spec.rows * spec.cols)) {
        throw std::invalid_argument("size must lie in [0, m*n]");
    }
    const auto wiring = make_wiring(spec.topology, spec.rows, spec.cols);
    const bool monotone = spec.mode == SearchMode::min_monotone_dynamo;
    const bool exists = spec.mode == SearchMode::exists_dynamo_of_size;

    RunOptions options;
    options.max_rounds = effective_rounds(spec);
    if (monotone) {
        options.track_monotone = spec.target;
        options.stop_on_monotone_violation = true;
    }

    ProgressSink progress;
    progress.out = spec.progress;
    progress.total = total;

    std::vector<ShardOutcome> outcomes(static_cast<std::size_t>(spec.shards));
    for_each_shard(spec.shards, spec.threads, total, [&](int shard, std::uint64_t lo, std::uint64_t hi) {
        ShardOutcome& out = outcomes[static_cast<std::size_t>(shard)];
        Simulator sim(wiring);
        Odometer od(wiring->cell_count(), spec.palette, lo);
        std::uint64_t pending = 0;
        for (std::uint64_t idx = lo; idx < hi; ++idx, od.next()) {
            ++out.scanned;
            if (++pending == progress_interval) {
                progress.add(pending);
                pending = 0;
            }
            const int k_cells = count_target(od.colors(), spec.target);
            if (exists ? k_cells != spec.size : (out.size && k_cells >= *out.size)) continue;

            ++out.simulations;
            const auto r = sim.run(od.colors(), options);
            if (r.outcome == Outcome::truncated && (!monotone || r.monotone)) ++out.truncated;
            if (!r.reached(spec.target) || (monotone && !r.monotone)) continue;
            out.size = k_cells;
            out.index = idx;
            if (exists || k_cells == 0) break;
        }
        progress.add(pending);
    });

    SearchResult result;
    for (const auto& o : outcomes) {
        result.scanned += o.scanned;
        result.simulations += o.simulations;
        result.truncated += o.truncated;
        if (!o.size) continue;
        if (!result.minimum_size || *o.size < *result.minimum_size ||
            (*o.size == *result.minimum_size && o.index < result.witness_index)) {
            result.minimum_size = o.size;
            result.witness_index = o.index;
        }
    }
    if (result.minimum_size) result.witness = decode_configuration(spec, result.witness_index);
    result.elapsed = std::chrono::steady_clock::now() - started;
    return result;
}

LowerBoundResult verify_lower_bound(const SearchSpec& spec, int bound) {
    const auto started = std::chrono::steady_clock::now();
    const std::uint64_t total = configuration_count(spec);
    const auto wiring = make_wiring(spec.topology, spec.rows, spec.cols);

    RunOptions options;
    options.max_rounds = effective_rounds(spec);
    options.track_monotone = spec.target;
    options.stop_on_monotone_violation = true;

    ProgressSink progress;
    progress.out = spec.progress;
    progress.total = total;

    std::atomic<std::uint64_t> found{no_index};
    std::atomic<std::uint64_t> scanned{0}, simulations{0}, truncated{0};

    for_each_shard(spec.shards, spec.threads, total, [&](int, std::uint64_t lo, std::uint64_t hi) {
        Simulator sim(wiring);
        Odometer od(wiring->cell_count(), spec.palette, lo);
        std::uint64_t local_scanned = 0, local_sims = 0, local_trunc = 0, pending = 0;
        for (std::uint64_t idx = lo; idx < hi; ++idx, od.next()) {
            // A lower-index counterexample already exists; nothing here can beat it.
            if (idx > found.load(std::memory_order_relaxed)) break;
            ++local_scanned;
            if (++pending == progress_interval) {
                progress.add(pending);
                pending = 0;
            }
            if (count_target(od.colors(), spec.target) >= bound) continue;
            ++local_sims;
            const auto r = sim.run(od.colors(), options);
            if (r.outcome == Outcome::truncated && r.monotone) ++local_trunc;
            if (r.reached(spec.target) && r.monotone) {
                std::uint64_t prev = found.load();
                while (idx < prev && !found.compare_exchange_weak(prev, idx)) {
                }
                break;
            }
        }
        progress.add(pending);
        scanned += local_scanned;
        simulations += local_sims;
        truncated += local_trunc;
    });

    LowerBoundResult result;
    result.scanned = scanned;
    result.simulations = simulations;
    result.truncated = truncated;
    if (found != no_index) {
        result.holds = false;
        result.counterexample_index = found;
        result.counterexample = decode_configuration(spec, found);
    }
    result.elapsed = std::chrono::steady_clock::now() - started;
    return result;
}

CrossValidationResult cross_validate_blocks(const SearchSpec& spec, std::uint64_t samples, std::uint64_t seed) {
    validate_spec(spec);
    if (spec.rows * spec.cols > 12) throw std::invalid_argument("cross validation needs m*n <= 12");
    const auto wiring = make_wiring(spec.topology, spec.rows, spec.cols);
    const std::size_t n = wiring->cell_count();

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, spec.palette);
    CrossValidationResult result;
    std::vector<Color> cells(n);
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (auto& c : cells) c = static_cast<Color>(pick(rng));
        const TorusGrid grid(spec.topology, spec.rows, spec.cols, spec.palette, cells);
        std::uint32_t k_mask = 0;
        for (std::size_t i = 0; i < n; ++i) k_mask |= grid[i] == spec.target ? 1U << i : 0U;
        const std::uint32_t other_mask = ((1U << n) - 1) & ~k_mask;

        const bool ok =
            brute_force_blocks(grid, k_mask, 2) == to_masks(grid, find_k_blocks(grid, spec.target)) &&
            brute_force_blocks(grid, other_mask, 3) == to_masks(grid, find_non_k_blocks(grid, spec.target));
        ++result.samples;
        if (ok) {
            ++result.agreements;
        } else if (!result.first_disagreement) {
            result.first_disagreement = grid;
        }
    }
    return result;
}

std::string format_search_result(const SearchSpec& spec, const SearchResult& result) {
    std::ostringstream out;
    out << "search topology=" << to_string(spec.topology) << " m=" << spec.rows << " n=" << spec.cols
        << " k_max=" << spec.palette << " k=" << static_cast<int>(spec.target) << " mode=" << to_string(spec.mode);
    if (spec.mode == SearchMode::exists_dynamo_of_size) out << " size=" << spec.size;
    out << " minimum_size=";
    if (result.minimum_size) {
        out << *result.minimum_size << " witness_index=" << result.witness_index;
    } else {
        out << "none";
    }
    out << " scanned=" << result.scanned << " simulations=" << result.simulations
        << " truncated=" << result.truncated << " elapsed_s=" << result.elapsed.count();
    return out.str();
}

std::string format_lower_bound(const SearchSpec& spec, int bound, const LowerBoundResult& result) {
    std::ostringstream out;
    out << "lower_bound topology=" << to_string(spec.topology) << " m=" << spec.rows << " n=" << spec.cols
        << " k_max=" << spec.palette << " k=" << static_cast<int>(spec.target) << " bound=" << bound
        << " holds=" << (result.holds ? "yes" : "no");
    if (!result.holds) out << " counterexample_index=" << result.counterexample_index;
    out << " scanned=" << result.scanned << " simulations=" << result.simulations
        << " truncated=" << result.truncated << " elapsed_s=" << result.elapsed.count();
    return out.str();
}

} // namespace smp
