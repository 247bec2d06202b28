#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "windrose/board.hpp"
#include "windrose/solver.hpp"

namespace windrose {

// Corner waypoints of the inward rectangular spiral, start to center.
std::vector<Pos> spiral_waypoints(int n);

// A board of length exactly 2n-1 whose shortest game follows the spiral
// waypoints. Filler cells start pointed outward (dead on a plain board's
// rim) and a bounded repair loop re-aims any filler cell that still
// admits a shortcut; the 2n-1 postcondition is enforced by BFS and a
// construction-failed error is raised rather than returning a wrong
// length.
Board spiral_board(int n, int repair_budget = 4096);

enum class ExtremalMode { max, min };

// Every cell takes a wind attaining the largest (resp. smallest) target
// count for its position; totals equal extremal_edge_totals(n).
Board extremal_degree_board(int n, ExtremalMode mode);

// Enlarges a board by repeating the named rows/columns adjacently
// (1-based original indices). Requires |rows| == |cols| and both even,
// so the result stays square with odd size. No length guarantee.
Board duplicate_expand(const Board& b, std::vector<int> rows, std::vector<int> cols);

struct MlExact {
    int value = 0;
    Board witness;
};

// Exact maximal length over solvable boards of size 3, from the census.
MlExact ml_exact(int n, int workers);

struct SearchParams {
    int n = 11;
    std::int64_t budget = 20000;  // mutation steps per restart
    int restarts = 1;
    std::uint64_t seed = 1;
    double initial_temperature = 1.5;
    double cooling = 0.9995;      // geometric schedule
    bool seed_spiral = true;      // restart 0 starts from spiral_board(n)
    std::string checkpoint_path;  // optional: board text + ".json" sidecar
    std::string resume_path;      // optional: seed restart 0 from a checkpoint
};

struct SearchReport {
    int n = 0;
    Board best;
    int best_length = 0;
    double ratio = 0.0;  // best_length / n
    std::int64_t iterations = 0;
    int restarts = 0;
    std::uint64_t seed = 0;
    std::int64_t accepted = 0;
    std::int64_t improved = 0;
};

// Simulated annealing over single-cell re-draws, objective = BFS length
// (unsolvable states score -1 but stay acceptable). Restarts run in
// parallel on substreams keyed by (seed, restart index); the merge takes
// the longest board, ties to the lower restart index.
SearchReport long_board_search(const SearchParams& params, int workers);

void save_checkpoint(const std::string& path, const Board& best, int length,
                     std::int64_t iter, std::uint64_t seed);
Board load_checkpoint(const std::string& path);

}  // namespace windrose
