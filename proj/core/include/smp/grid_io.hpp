#ifndef SMP_GRID_IO_HPP
#define SMP_GRID_IO_HPP

#include "smp/dynamics.hpp"
#include "smp/grid.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace smp {

// Grid file format:
//   <topology> <m> <n> <k_max>
//   m lines of n space-separated colors in 1..k_max
// Trailing blank lines are ignored. Throws ParseError with a 1-based position.
TorusGrid parse_grid(std::string_view text);
std::string format_grid(const TorusGrid& grid);

TorusGrid read_grid_file(const std::filesystem::path& path);
void write_grid_file(const std::filesystem::path& path, const TorusGrid& grid);

// Grid frames separated by one blank line.
std::string format_trajectory(std::span<const TorusGrid> frames);

// m lines of n comma-separated integers, -1 for "never".
std::string format_round_map_csv(const RoundMap& map);
RoundMap parse_round_map_csv(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace smp

#endif // SMP_GRID_IO_HPP
