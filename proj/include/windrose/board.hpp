#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "windrose/rng.hpp"

namespace windrose {

// Domain error (bad parameters, infeasible constructions, invalid games).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text-format error with a 1-based source location.
struct ParseError : Error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_);
};

// The eight principal winds, encoded clockwise from north.
// This is also the canonical digit encoding of the text format.
enum class Dir : std::uint8_t { N = 0, NE, E, SE, S, SW, W, NW };

inline constexpr int dir_count = 8;
inline constexpr std::array<Dir, 8> all_dirs = {Dir::N,  Dir::NE, Dir::E,  Dir::SE,
                                                Dir::S,  Dir::SW, Dir::W,  Dir::NW};

struct Delta {
    int di;
    int dj;
};

// Matrix convention: north decreases the row index, east increases the column index.
constexpr Delta delta(Dir d) {
    constexpr std::array<Delta, 8> table{{{-1, 0}, {-1, 1}, {0, 1}, {1, 1},
                                          {1, 0},  {1, -1}, {0, -1}, {-1, -1}}};
    return table[static_cast<int>(d)];
}

// Reflection of a wind through the NW-SE axis: (di, dj) -> (dj, di).
// An involution: E <-> S, N <-> W, NE <-> SW, SE and NW are fixed.
constexpr Dir transpose_dir(Dir d) {
    constexpr std::array<Dir, 8> table = {Dir::W,  Dir::SW, Dir::S, Dir::SE,
                                          Dir::E,  Dir::NE, Dir::N, Dir::NW};
    return table[static_cast<int>(d)];
}

const char* dir_name(Dir d);

// 1-based (row, column) grid position.
struct Pos {
    int i = 0;
    int j = 0;
    friend constexpr bool operator==(Pos, Pos) = default;
    friend constexpr auto operator<=>(Pos, Pos) = default;
};

std::string pos_str(Pos p);

// An odd-sized square grid of winds. Immutable after construction; all
// operations on boards are pure, so concurrent reads need no coordination.
class Board {
public:
    Board(int n, std::vector<Dir> cells);

    static Board filled(int n, Dir d);

    // Each cell i.i.d. uniform over the eight winds; cell draws are keyed
    // by (seed, flat index), so the result does not depend on fill order.
    static Board random(int n, std::uint64_t seed);

    int n() const { return n_; }
    Pos center() const { return {(n_ + 1) / 2, (n_ + 1) / 2}; }
    static constexpr Pos start{1, 1};

    bool in_range(Pos p) const { return p.i >= 1 && p.i <= n_ && p.j >= 1 && p.j <= n_; }
    int flat(Pos p) const { return (p.i - 1) * n_ + (p.j - 1); }
    Pos unflat(int f) const { return {f / n_ + 1, f % n_ + 1}; }

    Dir at(Pos p) const { return cells_[flat(p)]; }
    Dir at(int i, int j) const { return cells_[(i - 1) * n_ + (j - 1)]; }

    // Functional single-cell edit; the original board is untouched.
    Board with_cell(Pos p, Dir d) const;

    std::span<const Dir> cells() const { return cells_; }

    friend bool operator==(const Board&, const Board&) = default;

private:
    int n_;
    std::vector<Dir> cells_;
};

// Positions reachable in one move from pos, nearest first.
// Empty when the arrow points off the board.
std::vector<Pos> targets(const Board& b, Pos pos);

// Walks the ray of pos in canonical (nearest-first) order without
// allocating; fn returns false to stop early.
template <class F>
void for_each_target(const Board& b, Pos pos, F&& fn) {
    const auto [di, dj] = delta(b.at(pos));
    const int n = b.n();
    for (int i = pos.i + di, j = pos.j + dj; i >= 1 && i <= n && j >= 1 && j <= n;
         i += di, j += dj) {
        if (!fn(Pos{i, j})) return;
    }
}

// True iff `to` lies on the ray of `from`. Throws on from == to or
// out-of-range positions.
bool is_directing(const Board& b, Pos from, Pos to);

enum class Outcome { won, lost, in_progress };

const char* outcome_name(Outcome o);

// A play-through: positions visited, starting at (1,1).
struct Game {
    std::vector<Pos> moves;
    Outcome outcome = Outcome::in_progress;
    int turns() const { return static_cast<int>(moves.size()) - 1; }
};

// Checks every transition, classifies the outcome, and rejects sequences
// that continue past the center or past a dead cell. Errors name the
// offending move index.
Game validate_game(const Board& b, std::span<const Pos> moves);

// --- canonical text format -------------------------------------------------
//
// Line 1: "n <N> <plain|torus>", then N lines of exactly N digits 0-7,
// LF endings, no trailing whitespace.

struct BoardText {
    bool torus = false;
    int n = 0;
    std::vector<Dir> cells;
};

BoardText parse_board_text(std::string_view text);
std::string serialize_cells(int n, std::span<const Dir> cells, bool torus);

Board parse_board(std::string_view text);  // rejects torus headers
std::string serialize_board(const Board& b);

}  // namespace windrose
