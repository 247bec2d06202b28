#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "windrose/extremal.hpp"
#include "windrose/graph.hpp"
#include "windrose/solver.hpp"

using namespace windrose;

namespace {

// A strongly connected 3x3 board (every position reaches every other).
Board all_to_all_board() { return parse_board("n 3 plain\n244\n066\n166\n"); }

}  // namespace

TEST_CASE("a corner SE arrow wins in one move on any board") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Board b = Board::random(5, seed).with_cell({1, 1}, Dir::SE);
        const SolveResult r = solve(b);
        CHECK(r.solvable);
        CHECK(*r.length == 1);
    }
}

TEST_CASE("an all-north board is unsolvable") {
    const SolveResult r = solve(Board::filled(5, Dir::N));
    CHECK_FALSE(r.solvable);
    CHECK_FALSE(r.length.has_value());
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("solve agrees with the dense shortest-path oracle") {
    CHECK(*solve(spiral_board(5)).length == 9);
    CHECK(oracles::shortest_length(spiral_board(5)) == 9);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Board b = Board::random(5, seed);
        const SolveResult r = solve(b);
        const auto oracle = oracles::shortest_length(b);
        CHECK(r.solvable == oracle.has_value());
        if (r.solvable) CHECK(*r.length == *oracle);
    }
}

TEST_CASE("witnesses validate as won games of the reported length") {
    for (std::uint64_t seed = 100; seed < 200; ++seed) {
        const Board b = Board::random(5, seed);
        const SolveResult r = solve(b);
        CHECK(r.visited_count <= 25);
        if (!r.solvable) continue;
        CHECK(*r.length <= 24);  // simple paths only
        const Game g = validate_game(b, r.witness->moves);
        CHECK(g.outcome == Outcome::won);
        CHECK(g.turns() == *r.length);
        auto sorted = r.witness->moves;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
}

TEST_CASE("solve length is invariant under the diagonal reflection") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const Board b = Board::random(5, seed);
        const SolveResult r = solve(b), rr = solve(reflect(b));
        CHECK(r.solvable == rr.solvable);
        if (r.solvable) CHECK(*r.length == *rr.length);
    }
}

TEST_CASE("reachability closure matches the Warshall oracle") {
    const Board se = Board::filled(3, Dir::SE);
    CHECK(reachability_closure(se).get(se.flat({1, 1}), se.flat({3, 3})));

    const Board n3 = Board::filled(3, Dir::N);
    const BitMatrix cn = reachability_closure(n3);
    for (int v = 1; v < 9; ++v) CHECK_FALSE(cn.get(0, v));

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Board b = Board::random(5, seed);
        const BitMatrix m = reachability_closure(b);
        const auto oracle = oracles::warshall_closure(b);
        for (int u = 0; u < 25; ++u)
            for (int v = 0; v < 25; ++v) CHECK(m.get(u, v) == oracle[u][v]);
    }
}

TEST_CASE("reachability closure is transitively closed") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Board b = Board::random(5, seed);
        const BitMatrix m = reachability_closure(b);
        for (int u = 0; u < 25; ++u)
            for (int v = 0; v < 25; ++v) {
                if (!m.get(u, v)) continue;
                for (int w = 0; w < 25; ++w)
                    if (m.get(v, w)) CHECK(m.get(u, w));
            }
    }
}

TEST_CASE("condensation of an all-north board is nine singletons") {
    const Board b = Board::filled(3, Dir::N);
    const Condensation c = condensation(b);
    CHECK(c.component_count == 9);
    CHECK(c.dag_edges.size() == 9);  // one DAG edge per graph edge here
    CHECK_FALSE(is_all_to_all(b));
}

TEST_CASE("a strongly connected board condenses to a point") {
    const Board b = all_to_all_board();
    const Condensation c = condensation(b);
    CHECK(c.component_count == 1);
    CHECK(c.dag_edges.empty());
    CHECK(is_all_to_all(b));
    const BitMatrix m = reachability_closure(b);
    for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v) CHECK(m.get(u, v));
}

TEST_CASE("components are the mutual-reachability classes of the closure") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Board b = Board::random(5, seed);
        const Condensation c = condensation(b);
        const BitMatrix m = reachability_closure(b);
        for (int u = 0; u < 25; ++u)
            for (int v = 0; v < 25; ++v) {
                const bool mutual = m.get(u, v) && m.get(v, u);
                CHECK(mutual == (c.component[u] == c.component[v]));
            }
        // the component DAG is acyclic: edges go down in reverse topological ids
        for (const auto& [from, to] : c.dag_edges) CHECK(from > to);
    }
}

TEST_CASE("winning lengths enumerate exact game lengths") {
    Board quick = Board::filled(3, Dir::N).with_cell({1, 1}, Dir::SE);
    CHECK(winning_lengths(quick, 1) == std::set<int>{1});
    CHECK(winning_lengths(Board::filled(3, Dir::N), 20).empty());
    CHECK_THROWS_AS(winning_lengths(quick, 0), Error);
}

TEST_CASE("winning lengths match the matrix-power oracle") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Board b = Board::random(5, seed);
        CHECK(winning_lengths(b, 30) == oracles::walk_lengths(b, 30));
    }
}

TEST_CASE("the shortest winning length is the solve length") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Board b = Board::random(5, seed);
        const SolveResult r = solve(b);
        const std::set<int> lens = winning_lengths(b, 25);
        if (r.solvable) {
            CHECK_FALSE(lens.empty());
            CHECK(*lens.begin() == *r.length);
        } else {
            CHECK(lens.empty());
        }
    }
}
