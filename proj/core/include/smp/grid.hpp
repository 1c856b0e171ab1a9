#ifndef SMP_GRID_HPP
#define SMP_GRID_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace smp {

// Colors are 1..palette; 0 never appears in a valid grid.
using Color = std::uint8_t;
inline constexpr int max_palette = 255;

enum class Topology : std::uint8_t { mesh, cordalis, serpentinus };

std::string_view to_string(Topology topology) noexcept;
std::optional<Topology> parse_topology(std::string_view name) noexcept;

struct Coord {
    int row = 0;
    int col = 0;

    friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

// Slot order of every neighbor list: up, down, left, right.
enum Slot : std::size_t { up = 0, down = 1, left = 2, right = 3 };

// Neighbor of `pos` on an m x n torus of the given wiring, computed directly
// from the wiring rules. No range check.
std::array<Coord, 4> wired_neighbors(Topology topology, int rows, int cols, Coord pos) noexcept;

// Row-major neighbor slots for every cell of a torus shape.
class Wiring {
public:
    Wiring(Topology topology, int rows, int cols);

    Topology topology() const noexcept { return topology_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::size_t cell_count() const noexcept { return slots_.size(); }

    const std::array<std::uint32_t, 4>& slots(std::size_t cell) const noexcept { return slots_[cell]; }

private:
    Topology topology_;
    int rows_;
    int cols_;
    std::vector<std::array<std::uint32_t, 4>> slots_;
};

// Shared, immutable wiring for a shape. Equal shapes may share one table.
std::shared_ptr<const Wiring> make_wiring(Topology topology, int rows, int cols);

// Sorted set of grid coordinates.
class CellSet {
public:
    CellSet() = default;
    CellSet(std::initializer_list<Coord> cells);
    explicit CellSet(std::vector<Coord> cells);

    void insert(Coord c);
    bool contains(Coord c) const noexcept;
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }

    auto begin() const noexcept { return cells_.begin(); }
    auto end() const noexcept { return cells_.end(); }
    const std::vector<Coord>& items() const noexcept { return cells_; }

    friend bool operator==(const CellSet&, const CellSet&) = default;

private:
    std::vector<Coord> cells_;
};

// Extents of the smallest axis-aligned rectangle containing a cell set,
// minimized over cyclic shifts of each axis independently.
struct BoundingRect {
    int rows = 0;
    int cols = 0;

    friend bool operator==(const BoundingRect&, const BoundingRect&) = default;
};

// A colored torus: the system state. Value type; copies share the wiring.
class TorusGrid {
public:
    TorusGrid(Topology topology, int rows, int cols, int palette, std::vector<Color> cells);

    static TorusGrid uniform(Topology topology, int rows, int cols, int palette, Color color);

    Topology topology() const noexcept { return wiring_->topology(); }
    int rows() const noexcept { return wiring_->rows(); }
    int cols() const noexcept { return wiring_->cols(); }
    int palette() const noexcept { return palette_; }
    std::size_t cell_count() const noexcept { return cells_.size(); }

    bool contains(Coord c) const noexcept;
    std::size_t index_of(Coord c) const;
    Coord coord_of(std::size_t index) const noexcept;

    Color at(Coord c) const;
    Color operator[](std::size_t index) const noexcept { return cells_[index]; }
    void set(Coord c, Color color);

    std::span<const Color> cells() const noexcept { return cells_; }
    const Wiring& wiring() const noexcept { return *wiring_; }
    const std::shared_ptr<const Wiring>& shared_wiring() const noexcept { return wiring_; }

    // Four neighbor coordinates (up, down, left, right); duplicates kept.
    std::array<Coord, 4> neighbors(Coord pos) const;
    const std::array<std::uint32_t, 4>& neighbor_slots(std::size_t index) const noexcept {
        return wiring_->slots(index);
    }

    std::size_t count(Color color) const noexcept;
    CellSet cells_of(Color color) const;
    bool is_monochromatic() const noexcept;

    // Same shape and palette with different cell colors.
    TorusGrid with_cells(std::vector<Color> cells) const;

    friend bool operator==(const TorusGrid& a, const TorusGrid& b) noexcept;

private:
    TorusGrid(std::shared_ptr<const Wiring> wiring, int palette, std::vector<Color> cells);
    void check_color(Color color) const;

    std::shared_ptr<const Wiring> wiring_;
    int palette_;
    std::vector<Color> cells_;
};

BoundingRect bounding_rect(const TorusGrid& grid, const CellSet& set);

// Two-color image of `grid`: cells of color k become 2, all others 1.
TorusGrid collapse_colors(const TorusGrid& grid, Color k);

} // namespace smp

#endif // SMP_GRID_HPP
