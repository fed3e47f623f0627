#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "comcore/errors.hpp"

namespace comcore {

// Integer cell coordinates. x grows east (column), y grows north (row);
// the origin is the south-west cell.
struct Cell {
    int x = 0;
    int y = 0;

    friend bool operator==(const Cell& a, const Cell& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

inline std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

inline int chebyshev(const Cell& a, const Cell& b) {
    const int dx = std::abs(a.x - b.x);
    const int dy = std::abs(a.y - b.y);
    return dx > dy ? dx : dy;
}

inline int manhattan(const Cell& a, const Cell& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

enum class Heading : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline Heading rotate_right(Heading h) {
    return static_cast<Heading>((static_cast<int>(h) + 1) % 4);
}

inline Heading rotate_left(Heading h) {
    return static_cast<Heading>((static_cast<int>(h) + 3) % 4);
}

// Unit step for a heading, in the east/north frame.
inline Cell heading_step(Heading h) {
    switch (h) {
        case Heading::North: return {0, 1};
        case Heading::East: return {1, 0};
        case Heading::South: return {0, -1};
        case Heading::West: return {-1, 0};
    }
    return {0, 0};
}

inline const char* heading_name(Heading h) {
    switch (h) {
        case Heading::North: return "N";
        case Heading::East: return "E";
        case Heading::South: return "S";
        case Heading::West: return "W";
    }
    return "?";
}

inline std::optional<Heading> parse_heading(const std::string& s) {
    if (s == "N") return Heading::North;
    if (s == "E") return Heading::East;
    if (s == "S") return Heading::South;
    if (s == "W") return Heading::West;
    return std::nullopt;
}

// Heading of a single cardinal step from one cell to an adjacent one.
inline std::optional<Heading> step_heading(const Cell& from, const Cell& to) {
    const int dx = to.x - from.x;
    const int dy = to.y - from.y;
    if (dx == 0 && dy == 1) return Heading::North;
    if (dx == 1 && dy == 0) return Heading::East;
    if (dx == 0 && dy == -1) return Heading::South;
    if (dx == -1 && dy == 0) return Heading::West;
    return std::nullopt;
}

// The discretized workspace: cols x rows square cells of cell_size_m meters,
// with an optional set of impassable cells.
class GridSpec {
public:
    GridSpec(int cols, int rows, double cell_size_m = 10.0,
             std::set<Cell> blocked = {})
        : cols_(cols), rows_(rows), cell_size_m_(cell_size_m),
          blocked_(std::move(blocked)) {
        if (cols_ < 1 || rows_ < 1) {
            throw Error(ErrorKind::Scenario, "grid must be at least 1x1");
        }
        if (!(cell_size_m_ > 0.0)) {
            throw Error(ErrorKind::Scenario, "cell_size_m must be positive");
        }
        for (const Cell& c : blocked_) {
            if (!in_bounds(c)) {
                throw Error(ErrorKind::Scenario,
                            "blocked cell " + to_string(c) + " out of bounds");
            }
        }
    }

    int cols() const { return cols_; }
    int rows() const { return rows_; }
    double cell_size_m() const { return cell_size_m_; }
    const std::set<Cell>& blocked() const { return blocked_; }
    int cell_count() const { return cols_ * rows_; }

    bool in_bounds(const Cell& c) const {
        return c.x >= 0 && c.x < cols_ && c.y >= 0 && c.y < rows_;
    }

    bool is_blocked(const Cell& c) const { return blocked_.count(c) != 0; }

    bool passable(const Cell& c) const {
        return in_bounds(c) && !is_blocked(c);
    }

private:
    int cols_;
    int rows_;
    double cell_size_m_;
    std::set<Cell> blocked_;
};

// World coordinates of a cell's center, in meters.
inline std::pair<double, double> cell_center(const GridSpec& spec, const Cell& c) {
    if (!spec.in_bounds(c)) {
        throw Error(ErrorKind::Bounds, "cell " + to_string(c) + " out of bounds");
    }
    const double l = spec.cell_size_m();
    return {(c.x + 0.5) * l, (c.y + 0.5) * l};
}

// Successor states of (cell, heading): forward, 90-degree left, 90-degree
// right, in that fixed order. A turn and the advance into the turned-to cell
// happen in one step; there is no reverse move.
inline std::vector<std::pair<Cell, Heading>> neighbors(const GridSpec& spec,
                                                       const Cell& c, Heading h) {
    if (!spec.in_bounds(c)) {
        throw Error(ErrorKind::Bounds, "cell " + to_string(c) + " out of bounds");
    }
    std::vector<std::pair<Cell, Heading>> out;
    out.reserve(3);
    const Heading order[3] = {h, rotate_left(h), rotate_right(h)};
    for (Heading nh : order) {
        const Cell step = heading_step(nh);
        const Cell next{c.x + step.x, c.y + step.y};
        if (spec.passable(next)) {
            out.emplace_back(next, nh);
        }
    }
    return out;
}

// The 8 cells surrounding `center`, in anticlockwise order starting east:
// E, NE, N, NW, W, SW, S, SE. Bounds are the caller's concern.
inline std::array<Cell, 8> ring_cells(const Cell& center) {
    static constexpr int kOffsets[8][2] = {
        {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1},
    };
    std::array<Cell, 8> out{};
    for (int i = 0; i < 8; ++i) {
        out[i] = Cell{center.x + kOffsets[i][0], center.y + kOffsets[i][1]};
    }
    return out;
}

// Position of `c` on the ring around `center`, or nullopt if not adjacent.
inline std::optional<int> ring_index(const Cell& center, const Cell& c) {
    const int dx = c.x - center.x;
    const int dy = c.y - center.y;
    if (dx < -1 || dx > 1 || dy < -1 || dy > 1 || (dx == 0 && dy == 0)) {
        return std::nullopt;
    }
    // kIndex[dy+1][dx+1], anticlockwise from east.
    static constexpr int kIndex[3][3] = {
        {5, 6, 7},   // dy = -1: SW S SE
        {4, -1, 0},  // dy =  0: W  .  E
        {3, 2, 1},   // dy = +1: NW N NE
    };
    const int idx = kIndex[dy + 1][dx + 1];
    if (idx < 0) return std::nullopt;
    return idx;
}

// Number of anticlockwise steps from `from` to `to` along the ring around
// `center`. Both cells must lie on the ring.
inline int ring_count(const Cell& center, const Cell& from, const Cell& to) {
    const auto fi = ring_index(center, from);
    const auto ti = ring_index(center, to);
    if (!fi) {
        throw Error(ErrorKind::Ring, "cell " + to_string(from) +
                                         " not on ring of " + to_string(center));
    }
    if (!ti) {
        throw Error(ErrorKind::Ring, "cell " + to_string(to) +
                                         " not on ring of " + to_string(center));
    }
    return ((*ti - *fi) % 8 + 8) % 8;
}

}  // namespace comcore
