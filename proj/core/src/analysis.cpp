#include "smp/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace smp {

namespace {

void check_palette(const TorusGrid& grid, Color c) {
    if (c < 1 || c > grid.palette()) {
        throw std::out_of_range("color " + std::to_string(c) + " is not in the palette");
    }
}

std::string describe(Coord c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

void write_sets(std::ostream& out, const std::vector<CellSet>& sets) {
    for (std::size_t b = 0; b < sets.size(); ++b) {
        out << "  #" << b << " size=" << sets[b].size() << ":";
        for (Coord c : sets[b]) out << ' ' << describe(c);
        out << '\n';
    }
}

} // namespace

std::vector<CellSet> core_components(const TorusGrid& grid, const std::vector<bool>& member, int threshold) {
    const std::size_t n = grid.cell_count();
    std::vector<bool> alive = member;
    std::vector<int> degree(n, 0);
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        for (auto s : grid.neighbor_slots(i)) degree[i] += alive[s] ? 1 : 0;
        if (degree[i] < threshold) queue.push_back(i);
    }
    // Peel: a removed cell lowers each live neighbor's degree once per shared slot.
    while (!queue.empty()) {
        const std::size_t i = queue.back();
        queue.pop_back();
        if (!alive[i]) continue;
        alive[i] = false;
        for (auto s : grid.neighbor_slots(i)) {
            if (alive[s] && --degree[s] < threshold) queue.push_back(s);
        }
    }

    std::vector<CellSet> components;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (!alive[start] || seen[start]) continue;
        std::vector<Coord> cells;
        seen[start] = true;
        stack.assign(1, start);
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            cells.push_back(grid.coord_of(i));
            for (auto s : grid.neighbor_slots(i)) {
                if (alive[s] && !seen[s]) {
                    seen[s] = true;
                    stack.push_back(s);
                }
            }
        }
        components.emplace_back(std::move(cells));
    }
    return components;
}

std::vector<CellSet> find_k_blocks(const TorusGrid& grid, Color k) {
    check_palette(grid, k);
    std::vector<bool> member(grid.cell_count());
    for (std::size_t i = 0; i < member.size(); ++i) member[i] = grid[i] == k;
    return core_components(grid, member, 2);
}

std::vector<CellSet> find_non_k_blocks(const TorusGrid& grid, Color k) {
    check_palette(grid, k);
    std::vector<bool> member(grid.cell_count());
    for (std::size_t i = 0; i < member.size(); ++i) member[i] = grid[i] != k;
    return core_components(grid, member, 3);
}

bool check_forest(const TorusGrid& grid, Color c) {
    check_palette(grid, c);
    const std::size_t n = grid.cell_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t u = 0; u < n; ++u) {
        if (grid[u] != c) continue;
        for (auto v : grid.neighbor_slots(u)) {
            // Each undirected edge occurrence is seen once from its lower end.
            if (v <= u || grid[v] != c) continue;
            const auto ru = find(u);
            const auto rv = find(v);
            if (ru == rv) return false;
            parent[ru] = rv;
        }
    }
    return true;
}

std::vector<NeighborViolation> check_distinct_neighbor_colors(const TorusGrid& grid, Color k) {
    check_palette(grid, k);
    std::vector<NeighborViolation> out;
    for (std::size_t x = 0; x < grid.cell_count(); ++x) {
        const Color own = grid[x];
        if (own == k) continue;
        std::array<int, max_palette + 1> seen{};
        for (auto s : grid.neighbor_slots(x)) {
            const Color c = grid[s];
            if (c == own || c == k) continue;
            if (++seen[c] == 2) {
                out.push_back({grid.coord_of(x), "cell " + describe(grid.coord_of(x)) + " of color " +
                                                     std::to_string(own) + " has two neighbors of color " +
                                                     std::to_string(c)});
                break;
            }
        }
    }
    return out;
}

bool check_monotone_dynamo_structure(const TorusGrid& grid, Color k) {
    std::size_t in_blocks = 0;
    for (const auto& block : find_k_blocks(grid, k)) in_blocks += block.size();
    return in_blocks == grid.count(k) && find_non_k_blocks(grid, k).empty();
}

bool StructureReport::forests_ok() const noexcept {
    return std::all_of(forest_verdicts.begin(), forest_verdicts.end(), [](const auto& kv) { return kv.second; });
}

StructureReport analyze_structure(const TorusGrid& grid, Color k) {
    StructureReport report;
    report.target = k;
    report.k_blocks = find_k_blocks(grid, k);
    report.non_k_blocks = find_non_k_blocks(grid, k);
    for (int c = 1; c <= grid.palette(); ++c) {
        if (c != k) report.forest_verdicts[static_cast<Color>(c)] = check_forest(grid, static_cast<Color>(c));
    }
    report.neighbor_condition_violations = check_distinct_neighbor_colors(grid, k);
    return report;
}

std::string format_structure_report(const StructureReport& report) {
    std::ostringstream out;
    out << "BLOCKS (k=" << static_cast<int>(report.target) << ") count=" << report.k_blocks.size() << '\n';
    write_sets(out, report.k_blocks);
    out << "NONBLOCKS count=" << report.non_k_blocks.size() << '\n';
    write_sets(out, report.non_k_blocks);
    out << "FORESTS\n";
    for (const auto& [color, ok] : report.forest_verdicts) {
        out << "  color " << static_cast<int>(color) << ": " << (ok ? "forest" : "cycle") << '\n';
    }
    out << "VIOLATIONS count=" << report.neighbor_condition_violations.size() << '\n';
    for (const auto& v : report.neighbor_condition_violations) out << "  " << v.description << '\n';
    return out.str();
}

std::string structure_summary(const StructureReport& report) {
    std::ostringstream out;
    out << "blocks=" << report.k_blocks.size() << " nonblocks=" << report.non_k_blocks.size()
        << " forests=" << (report.forests_ok() ? "ok" : "fail")
        << " violations=" << report.neighbor_condition_violations.size();
    return out.str();
}

} // namespace smp
