#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "windrose/board.hpp"
#include "windrose/stats.hpp"

namespace windrose {

// One of the 26 nonzero {-1,0,1}^3 deltas, indexed in lexicographic
// order of (di, dj, dk); the text encoding is 'a' + index.
struct Dir3 {
    int di;
    int dj;
    int dk;
    friend constexpr bool operator==(Dir3, Dir3) = default;
};

inline constexpr int dir3_count = 26;

Dir3 dir3_from_index(int idx);
int dir3_index(Dir3 d);
char dir3_letter(int idx);
int dir3_from_letter(char c);  // -1 if not a-z

struct Pos3 {
    int i = 0;
    int j = 0;
    int k = 0;
    friend constexpr bool operator==(Pos3, Pos3) = default;
};

std::string pos3_str(Pos3 p);

// n x n x n arrow cube; start (1,1,1), target the center cell.
class CubeBoard {
public:
    CubeBoard(int n, std::vector<std::uint8_t> cells);  // dir indices 0..25
    static CubeBoard filled(int n, int dir_index);
    static CubeBoard random(int n, std::uint64_t seed);

    int n() const { return n_; }
    Pos3 center() const { const int c = (n_ + 1) / 2; return {c, c, c}; }
    bool in_range(Pos3 p) const {
        return p.i >= 1 && p.i <= n_ && p.j >= 1 && p.j <= n_ && p.k >= 1 && p.k <= n_;
    }
    int flat(Pos3 p) const { return ((p.i - 1) * n_ + (p.j - 1)) * n_ + (p.k - 1); }
    Pos3 unflat(int f) const {
        return {f / (n_ * n_) + 1, f / n_ % n_ + 1, f % n_ + 1};
    }
    int dir_at(Pos3 p) const { return cells_[flat(p)]; }
    std::span<const std::uint8_t> cells() const { return cells_; }

    friend bool operator==(const CubeBoard&, const CubeBoard&) = default;

private:
    int n_;
    std::vector<std::uint8_t> cells_;
};

std::vector<Pos3> cube_targets(const CubeBoard& cb, Pos3 pos);

struct CubeSolveResult {
    bool solvable = false;
    std::optional<int> length;
    std::vector<Pos3> witness;  // empty if unsolvable
    std::int64_t visited_count = 0;
};

CubeSolveResult solve_cube(const CubeBoard& cb);

// Solvable-probability estimate over random cubes, with length histogram.
EstimateReport estimate_cube_stats(int n, std::int64_t samples, std::uint64_t seed,
                                   int workers);

// Text format: line 1 "cube <N>", then N blank-line-separated slabs
// (one per i), each of N rows (one per j) of N letters (one per k).
std::string serialize_cube(const CubeBoard& cb);
CubeBoard parse_cube(std::string_view text);

}  // namespace windrose
