#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "windrose/board.hpp"
#include "windrose/solver.hpp"

namespace windrose {

// A board with wraparound moves: a cell's targets are the n-1 other
// positions on the full line through it (row, column, or wrapped
// diagonal), so opposite winds act identically.
class TorusBoard {
public:
    TorusBoard(int n, std::vector<Dir> cells);
    static TorusBoard filled(int n, Dir d);
    static TorusBoard random(int n, std::uint64_t seed);
    static TorusBoard from_board(const Board& b);

    int n() const { return n_; }
    Pos center() const { return {(n_ + 1) / 2, (n_ + 1) / 2}; }
    bool in_range(Pos p) const { return p.i >= 1 && p.i <= n_ && p.j >= 1 && p.j <= n_; }
    int flat(Pos p) const { return (p.i - 1) * n_ + (p.j - 1); }
    Pos unflat(int f) const { return {f / n_ + 1, f % n_ + 1}; }
    Dir at(Pos p) const { return cells_[flat(p)]; }
    std::span<const Dir> cells() const { return cells_; }

    friend bool operator==(const TorusBoard&, const TorusBoard&) = default;

private:
    int n_;
    std::vector<Dir> cells_;
};

// { pos + t*delta mod n : t = 1..n-1 }, in step order.
std::vector<Pos> torus_targets(const TorusBoard& tb, Pos pos);

template <class F>
void for_each_torus_target(const TorusBoard& tb, Pos pos, F&& fn) {
    const auto [di, dj] = delta(tb.at(pos));
    const int n = tb.n();
    int i = pos.i - 1, j = pos.j - 1;
    for (int t = 1; t < n; ++t) {
        i = (i + di + n) % n;
        j = (j + dj + n) % n;
        if (!fn(Pos{i + 1, j + 1})) return;
    }
}

bool is_directing_torus(const TorusBoard& tb, Pos from, Pos to);

SolveResult solve_torus(const TorusBoard& tb);

Game validate_game_torus(const TorusBoard& tb, std::span<const Pos> moves);

// A torus board of length exactly 2n-1: a chain of alternating row and
// column lines, each line feeding the next through a single portal cell,
// with the center's row entered last. BFS-verified before returning.
TorusBoard torus_spiral(int n);

enum class LineKind { row, column, diagonal, antidiagonal };

// One of the 4n full lines of the torus. Rows/columns are indexed by
// i-1 / j-1; diagonals by (j-i) mod n, antidiagonals by (i+j-2) mod n.
struct TorusLine {
    LineKind kind;
    int index;
    friend constexpr bool operator==(TorusLine, TorusLine) = default;
    friend constexpr auto operator<=>(TorusLine, TorusLine) = default;
};

std::array<TorusLine, 4> lines_through(Pos p, int n);
TorusLine dir_line(Dir d, Pos from, int n);
std::vector<Pos> line_positions(TorusLine line, int n);
std::string line_str(TorusLine line);

struct LineTrace {
    struct MoveLine {
        int move_index;  // transition moves[l] -> moves[l+1]
        TorusLine line;
    };
    struct Violation {
        int move_index;   // the move whose line is revisited
        int later_index;  // position index >= move_index + 2 on that line
    };
    std::vector<MoveLine> moves;
    std::vector<Violation> violations;
    bool ok = true;
};

// For each transition, the full line it travels along; flags any later
// game position on an earlier move's line. A shortest game never trips
// this (the move could have jumped there directly), so a violation
// certifies the game is not shortest.
LineTrace line_trace(const TorusBoard& tb, const Game& game);

std::string serialize_torus(const TorusBoard& tb);
TorusBoard parse_torus(std::string_view text);

}  // namespace windrose
