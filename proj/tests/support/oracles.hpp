#ifndef SMP_TESTS_ORACLES_HPP
#define SMP_TESTS_ORACLES_HPP

// Independent reference implementations used only by tests. Nothing here
// calls into the engine except for the Topology enum.

#include "smp/grid.hpp"

#include <array>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using smp::Topology;

struct Pos {
    int r;
    int c;
    friend bool operator==(const Pos&, const Pos&) = default;
    friend auto operator<=>(const Pos&, const Pos&) = default;
};

inline int wrap(int x, int mod) { return ((x % mod) + mod) % mod; }

// Horizontal moves on cordalis and serpentinus follow the row-major chain
// p = r*n + c; vertical moves on serpentinus follow the chain that walks each
// column top to bottom and then continues at the top of the column to its left.
inline std::array<Pos, 4> neighbors(Topology t, int m, int n, Pos x) {
    Pos up{wrap(x.r - 1, m), x.c};
    Pos down{wrap(x.r + 1, m), x.c};
    Pos left{x.r, wrap(x.c - 1, n)};
    Pos right{x.r, wrap(x.c + 1, n)};
    if (t != Topology::mesh) {
        const int p = x.r * n + x.c;
        const int pl = wrap(p - 1, m * n), pr = wrap(p + 1, m * n);
        left = {pl / n, pl % n};
        right = {pr / n, pr % n};
    }
    if (t == Topology::serpentinus) {
        auto column_rank = [&](int c) { return wrap(-c, n); };
        const int q = column_rank(x.c) * m + x.r;
        auto decode = [&](int qq) {
            qq = wrap(qq, m * n);
            return Pos{qq % m, wrap(-(qq / m), n)};
        };
        up = decode(q - 1);
        down = decode(q + 1);
    }
    return {up, down, left, right};
}

inline int rule(const std::array<int, 4>& nbr, int current) {
    std::map<int, int> count;
    for (int c : nbr) ++count[c];
    int winner = 0, winners = 0;
    for (auto [c, k] : count) {
        if (k >= 2) {
            winner = c;
            ++winners;
        }
    }
    return winners == 1 ? winner : current;
}

using Cells = std::vector<int>;

inline Cells step(Topology t, int m, int n, const Cells& g) {
    Cells out(g.size());
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            std::array<int, 4> nb{};
            const auto ns = neighbors(t, m, n, {r, c});
            for (int s = 0; s < 4; ++s) nb[s] = g[ns[s].r * n + ns[s].c];
            out[r * n + c] = rule(nb, g[r * n + c]);
        }
    }
    return out;
}

enum class End { mono, fixed, cycle, capped };

struct Run {
    End end = End::capped;
    int color = 0;
    int rounds = 0;
    int cycle_length = 0;
    bool monotone = true; // for the tracked color
    std::vector<Cells> frames;
};

inline bool uniform(const Cells& g) {
    for (int c : g) {
        if (c != g[0]) return false;
    }
    return true;
}

inline Run run(Topology t, int m, int n, Cells g, int cap, int tracked = 0) {
    Run out;
    std::map<Cells, int> seen;
    out.frames.push_back(g);
    seen[g] = 0;
    for (int time = 0;; ++time) {
        if (uniform(g)) {
            out.end = End::mono;
            out.color = g[0];
            out.rounds = time;
            return out;
        }
        if (time == cap) {
            out.rounds = cap;
            return out;
        }
        Cells next = step(t, m, n, g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (tracked != 0 && g[i] == tracked && next[i] != tracked) out.monotone = false;
        }
        out.frames.push_back(next);
        if (next == g) {
            out.end = End::fixed;
            out.rounds = time;
            return out;
        }
        auto it = seen.find(next);
        if (it != seen.end()) {
            out.end = End::cycle;
            out.rounds = it->second;
            out.cycle_length = time + 1 - it->second;
            return out;
        }
        seen[next] = time + 1;
        g = std::move(next);
    }
}

// Threshold-2 bootstrap percolation from `seed`: a cell joins once two of its
// neighbor slots are members. Entry = joining round, -1 if never.
inline std::vector<int> bootstrap_map(Topology t, int m, int n, const std::set<Pos>& seed) {
    std::vector<int> when(static_cast<std::size_t>(m * n), -1);
    for (Pos p : seed) when[p.r * n + p.c] = 0;
    for (int round = 1;; ++round) {
        std::vector<int> joining;
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < n; ++c) {
                if (when[r * n + c] >= 0) continue;
                int in = 0;
                for (Pos q : neighbors(t, m, n, {r, c})) in += when[q.r * n + q.c] >= 0 ? 1 : 0;
                if (in >= 2) joining.push_back(r * n + c);
            }
        }
        if (joining.empty()) return when;
        for (int i : joining) when[i] = round;
    }
}

inline int bootstrap_time(Topology t, int m, int n, const std::set<Pos>& seed) {
    const auto map = bootstrap_map(t, m, n, seed);
    int worst = 0;
    for (int v : map) {
        if (v < 0) return -1;
        worst = std::max(worst, v);
    }
    return worst;
}

// Smallest cyclic window length covering every occupied index.
inline int circular_extent(const std::vector<bool>& occupied) {
    const int len = static_cast<int>(occupied.size());
    int best = len;
    for (int start = 0; start < len; ++start) {
        for (int width = 1; width <= len; ++width) {
            bool covers = true;
            for (int i = 0; i < len && covers; ++i) {
                if (!occupied[i]) continue;
                covers = wrap(i - start, len) < width;
            }
            if (covers) {
                best = std::min(best, width);
                break;
            }
        }
    }
    return best;
}

inline std::pair<int, int> rect(int m, int n, const std::set<Pos>& cells) {
    std::vector<bool> rows(m), cols(n);
    for (Pos p : cells) {
        rows[p.r] = true;
        cols[p.c] = true;
    }
    return {circular_extent(rows), circular_extent(cols)};
}

} // namespace oracle

#endif // SMP_TESTS_ORACLES_HPP
