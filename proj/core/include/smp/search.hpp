#ifndef SMP_SEARCH_HPP
#define SMP_SEARCH_HPP

#include "smp/grid.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace smp {

enum class SearchMode : std::uint8_t {
    min_dynamo,
    min_monotone_dynamo,
    // Is there a dynamo (not necessarily monotone) with exactly `size` target cells?
    exists_dynamo_of_size,
};

std::string_view to_string(SearchMode mode) noexcept;
std::optional<SearchMode> parse_search_mode(std::string_view name) noexcept;

struct SearchSpec {
    Topology topology = Topology::mesh;
    int rows = 3;
    int cols = 3;
    int palette = 3;
    Color target = 1;
    SearchMode mode = SearchMode::min_monotone_dynamo;
    int size = 0; // exists_dynamo_of_size only
    int max_rounds = 0; // 0 selects 2*m*n
    int shards = 1;
    int threads = 0; // 0 selects hardware concurrency, capped by shards
    std::ostream* progress = nullptr; // one line per 10^6 configurations
};

// Total colorings palette^(m*n). Throws smp::Error when the spec exceeds the
// budget m*n*log2(palette) <= 40; the message carries the count.
std::uint64_t configuration_count(const SearchSpec& spec);

struct SearchResult {
    std::optional<int> minimum_size;
    std::optional<TorusGrid> witness;
    // Row-major base-palette index of the witness, cell 0 most significant,
    // digit d meaning color d+1.
    std::uint64_t witness_index = 0;
    std::uint64_t scanned = 0;
    std::uint64_t simulations = 0;
    // Runs that hit the round cap; counted as non-dynamos.
    std::uint64_t truncated = 0;
    std::chrono::duration<double> elapsed{};
};

// Coloring with the given configuration index.
TorusGrid decode_configuration(const SearchSpec& spec, std::uint64_t index);

// Smallest number of initially target-colored cells among colorings that reach
// the target monochromatically (monotonically, in monotone mode). Among the
// minimizers the witness is the one with the lowest index, so the result does
// not depend on the shard count.
SearchResult enumerate_min_dynamo(const SearchSpec& spec);

struct LowerBoundResult {
    bool holds = true;
    std::optional<TorusGrid> counterexample; // lowest-index one
    std::uint64_t counterexample_index = 0;
    std::uint64_t scanned = 0;
    std::uint64_t simulations = 0;
    std::uint64_t truncated = 0;
    std::chrono::duration<double> elapsed{};
};

// True iff no coloring with fewer than `bound` target cells is a monotone
// dynamo. Stops early on a counterexample. The mode field of the spec is ignored.
LowerBoundResult verify_lower_bound(const SearchSpec& spec, int bound);

struct CrossValidationResult {
    std::uint64_t samples = 0;
    std::uint64_t agreements = 0;
    std::optional<TorusGrid> first_disagreement;

    bool agreed() const noexcept { return samples == agreements; }
};

// Compares the peeling detectors with subset enumeration of the block
// definitions on random colorings. Needs m*n <= 12.
CrossValidationResult cross_validate_blocks(const SearchSpec& spec, std::uint64_t samples = 100'000,
                                            std::uint64_t seed = 0);

// One-line summaries.
std::string format_search_result(const SearchSpec& spec, const SearchResult& result);
std::string format_lower_bound(const SearchSpec& spec, int bound, const LowerBoundResult& result);

} // namespace smp

#endif // SMP_SEARCH_HPP
