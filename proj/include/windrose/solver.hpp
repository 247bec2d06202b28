#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "windrose/board.hpp"

namespace windrose {

struct SolveResult {
    bool solvable = false;
    std::optional<int> length;      // shortest number of turns, if solvable
    std::optional<Game> witness;    // a shortest winning game, if solvable
    std::int64_t visited_count = 0; // vertices dequeued by the search
};

// Shortest path from (1,1) to the center by breadth-first search.
// Deterministic witness: rays expanded nearest-first, FIFO queue.
SolveResult solve(const Board& b);

// Square bit matrix over flat position ids.
class BitMatrix {
public:
    explicit BitMatrix(int n)
        : n_(n), words_(static_cast<std::size_t>(n) * word_count(n), 0) {}

    int size() const { return n_; }

    bool get(int r, int c) const {
        return (words_[row_word(r) + c / 64] >> (c % 64)) & 1u;
    }

    void set(int r, int c) { words_[row_word(r) + c / 64] |= std::uint64_t{1} << (c % 64); }

    // rows[dst] |= rows[src]
    void or_row(int dst, int src) {
        const std::size_t w = word_count(n_);
        for (std::size_t k = 0; k < w; ++k) words_[row_word(dst) + k] |= words_[row_word(src) + k];
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }
    std::size_t row_word(int r) const { return static_cast<std::size_t>(r) * word_count(n_); }

    int n_;
    std::vector<std::uint64_t> words_;
};

// Reflexive-transitive closure of the raw move graph (the center's
// out-edges included; the game-over rule plays no role here).
BitMatrix reachability_closure(const Board& b);

struct Condensation {
    std::vector<int> component;                 // flat position -> component id
    int component_count = 0;
    std::vector<std::pair<int, int>> dag_edges; // deduplicated, sorted
};

// Strongly connected components and the induced acyclic component graph.
// Component ids are in reverse topological order of the DAG.
Condensation condensation(const Board& b);

bool is_all_to_all(const Board& b);

// All k <= cap such that some valid game wins in exactly k turns.
// Walks may revisit cells but never pass through the center mid-game
// (the game ends on first arrival), encoded by dropping the center's
// out-edges from the layered reachability step.
std::set<int> winning_lengths(const Board& b, int cap);

namespace detail {

struct BfsResult {
    bool found = false;
    int dist = -1;
    std::int64_t dequeued = 0;
    std::vector<std::int32_t> parent;
};

// Generic BFS over a ray graph; for_each_succ(v, visit) must call
// visit(u) for each successor in canonical order and stop when visit
// returns false. Shared by the plain, torus, field and cube solvers.
template <class SuccFn>
BfsResult bfs(int vertex_count, int start, int goal, SuccFn&& for_each_succ) {
    BfsResult res;
    res.parent.assign(vertex_count, -1);
    std::vector<std::int32_t> dist(vertex_count, -1);
    std::vector<std::int32_t> queue;
    queue.reserve(64);
    dist[start] = 0;
    queue.push_back(start);
    if (start == goal) {
        res.found = true;
        res.dist = 0;
        return res;
    }
    std::size_t head = 0;
    while (head < queue.size()) {
        const int v = queue[head++];
        ++res.dequeued;
        bool hit_goal = false;
        for_each_succ(v, [&](int u) {
            if (dist[u] >= 0) return true;
            dist[u] = dist[v] + 1;
            res.parent[u] = v;
            if (u == goal) {
                hit_goal = true;
                return false;
            }
            queue.push_back(u);
            return true;
        });
        if (hit_goal) {
            res.found = true;
            res.dist = dist[goal];
            return res;
        }
    }
    return res;
}

}  // namespace detail

}  // namespace windrose
