#include "smp/grid.hpp"

#include "smp/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace smp {

namespace {

int wrap(int value, int modulus) noexcept {
    int r = value % modulus;
    return r < 0 ? r + modulus : r;
}

void check_shape(int rows, int cols, int palette) {
    if (rows < 2 || cols < 2) {
        throw std::invalid_argument("torus must be at least 2x2, got " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
    if (palette < 1 || palette > max_palette) {
        throw std::invalid_argument("palette size must be in 1.." + std::to_string(max_palette) + ", got " +
                                    std::to_string(palette));
    }
}

// Length of the longest circular run of `false` in `occupied`.
int largest_empty_gap(const std::vector<bool>& occupied) {
    const int size = static_cast<int>(occupied.size());
    const auto first = std::find(occupied.begin(), occupied.end(), true);
    if (first == occupied.end()) {
        return size;
    }
    // Walk once around the circle starting at an occupied index.
    const int start = static_cast<int>(first - occupied.begin());
    int best = 0;
    int run = 0;
    for (int step = 1; step <= size; ++step) {
        if (occupied[(start + step) % size]) {
            best = std::max(best, run);
            run = 0;
        } else {
            ++run;
        }
    }
    return best;
}

} // namespace

std::string_view to_string(Topology topology) noexcept {
    switch (topology) {
    case Topology::mesh: return "mesh";
    case Topology::cordalis: return "cordalis";
    case Topology::serpentinus: return "serpentinus";
    }
    return "unknown";
}

std::optional<Topology> parse_topology(std::string_view name) noexcept {
    if (name == "mesh") return Topology::mesh;
    if (name == "cordalis") return Topology::cordalis;
    if (name == "serpentinus") return Topology::serpentinus;
    return std::nullopt;
}

std::array<Coord, 4> wired_neighbors(Topology topology, int rows, int cols, Coord pos) noexcept {
    const int i = pos.row;
    const int j = pos.col;
    Coord up{wrap(i - 1, rows), j};
    Coord down{wrap(i + 1, rows), j};
    Coord left{i, wrap(j - 1, cols)};
    Coord right{i, wrap(j + 1, cols)};

    if (topology != Topology::mesh) {
        // Row ends chain into the start of the next row.
        if (j == cols - 1) right = {wrap(i + 1, rows), 0};
        if (j == 0) left = {wrap(i - 1, rows), cols - 1};
    }
    if (topology == Topology::serpentinus) {
        // Column ends chain into the start of the previous column.
        if (i == rows - 1) down = {0, wrap(j - 1, cols)};
        if (i == 0) up = {rows - 1, wrap(j + 1, cols)};
    }
    return {up, down, left, right};
}

Wiring::Wiring(Topology topology, int rows, int cols) : topology_(topology), rows_(rows), cols_(cols) {
    check_shape(rows, cols, 1);
    slots_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const auto nbrs = wired_neighbors(topology, rows, cols, {i, j});
            auto& out = slots_[static_cast<std::size_t>(i) * cols + j];
            for (std::size_t s = 0; s < 4; ++s) {
                out[s] = static_cast<std::uint32_t>(nbrs[s].row * cols + nbrs[s].col);
            }
        }
    }
}

std::shared_ptr<const Wiring> make_wiring(Topology topology, int rows, int cols) {
    return std::make_shared<const Wiring>(topology, rows, cols);
}

CellSet::CellSet(std::initializer_list<Coord> cells) : CellSet(std::vector<Coord>(cells)) {}

CellSet::CellSet(std::vector<Coord> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

void CellSet::insert(Coord c) {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) {
        cells_.insert(it, c);
    }
}

bool CellSet::contains(Coord c) const noexcept {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

TorusGrid::TorusGrid(Topology topology, int rows, int cols, int palette, std::vector<Color> cells)
    : TorusGrid((check_shape(rows, cols, palette), make_wiring(topology, rows, cols)), palette, std::move(cells)) {}

TorusGrid::TorusGrid(std::shared_ptr<const Wiring> wiring, int palette, std::vector<Color> cells)
    : wiring_(std::move(wiring)), palette_(palette), cells_(std::move(cells)) {
    if (cells_.size() != wiring_->cell_count()) {
        throw std::invalid_argument("expected " + std::to_string(wiring_->cell_count()) + " cells, got " +
                                    std::to_string(cells_.size()));
    }
    for (Color c : cells_) {
        check_color(c);
    }
}

TorusGrid TorusGrid::uniform(Topology topology, int rows, int cols, int palette, Color color) {
    check_shape(rows, cols, palette);
    return TorusGrid(topology, rows, cols, palette,
                     std::vector<Color>(static_cast<std::size_t>(rows) * cols, color));
}

TorusGrid TorusGrid::with_cells(std::vector<Color> cells) const {
    return TorusGrid(wiring_, palette_, std::move(cells));
}

void TorusGrid::check_color(Color color) const {
    if (color < 1 || color > palette_) {
        throw std::out_of_range("color " + std::to_string(color) + " outside palette 1.." +
                                std::to_string(palette_));
    }
}

bool TorusGrid::contains(Coord c) const noexcept {
    return c.row >= 0 && c.row < rows() && c.col >= 0 && c.col < cols();
}

std::size_t TorusGrid::index_of(Coord c) const {
    if (!contains(c)) {
        throw std::out_of_range("coordinate (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                ") outside " + std::to_string(rows()) + "x" + std::to_string(cols()) + " torus");
    }
    return static_cast<std::size_t>(c.row) * cols() + c.col;
}

Coord TorusGrid::coord_of(std::size_t index) const noexcept {
    const auto n = static_cast<std::size_t>(cols());
    return {static_cast<int>(index / n), static_cast<int>(index % n)};
}

Color TorusGrid::at(Coord c) const { return cells_[index_of(c)]; }

void TorusGrid::set(Coord c, Color color) {
    check_color(color);
    cells_[index_of(c)] = color;
}

std::array<Coord, 4> TorusGrid::neighbors(Coord pos) const {
    const auto& slots = wiring_->slots(index_of(pos));
    std::array<Coord, 4> out;
    for (std::size_t s = 0; s < 4; ++s) {
        out[s] = coord_of(slots[s]);
    }
    return out;
}

std::size_t TorusGrid::count(Color color) const noexcept {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), color));
}

CellSet TorusGrid::cells_of(Color color) const {
    std::vector<Coord> out;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] == color) out.push_back(coord_of(i));
    }
    return CellSet(std::move(out));
}

bool TorusGrid::is_monochromatic() const noexcept {
    return std::adjacent_find(cells_.begin(), cells_.end(), std::not_equal_to<>()) == cells_.end();
}

bool operator==(const TorusGrid& a, const TorusGrid& b) noexcept {
    return a.topology() == b.topology() && a.rows() == b.rows() && a.cols() == b.cols() &&
           a.palette_ == b.palette_ && a.cells_ == b.cells_;
}

BoundingRect bounding_rect(const TorusGrid& grid, const CellSet& set) {
    if (set.empty()) {
        throw Error("empty set has no rectangle");
    }
    std::vector<bool> rows(static_cast<std::size_t>(grid.rows()), false);
    std::vector<bool> cols(static_cast<std::size_t>(grid.cols()), false);
    for (Coord c : set) {
        if (!grid.contains(c)) {
            throw std::out_of_range("cell set member outside the grid");
        }
        rows[c.row] = true;
        cols[c.col] = true;
    }
    return {grid.rows() - largest_empty_gap(rows), grid.cols() - largest_empty_gap(cols)};
}

TorusGrid collapse_colors(const TorusGrid& grid, Color k) {
    if (k < 1 || k > grid.palette()) {
        throw std::out_of_range("color " + std::to_string(k) + " is not in the palette");
    }
    std::vector<Color> cells(grid.cells().begin(), grid.cells().end());
    for (Color& c : cells) {
        c = (c == k) ? 2 : 1;
    }
    return TorusGrid(grid.topology(), grid.rows(), grid.cols(), 2, std::move(cells));
}

} // namespace smp
