#include "windrose/torus.hpp"

#include <algorithm>

namespace windrose {

namespace {

void check_size(int n) {
    if (n < 3 || n % 2 == 0)
        throw Error("torus board size must be an odd integer >= 3, got " + std::to_string(n));
}

Game witness_from_parents(const TorusBoard& tb, const std::vector<std::int32_t>& parent,
                          int goal) {
    std::vector<Pos> path;
    for (int v = goal; v != -1; v = parent[v]) path.push_back(tb.unflat(v));
    std::reverse(path.begin(), path.end());
    Game g;
    g.moves = std::move(path);
    g.outcome = Outcome::won;
    return g;
}

}  // namespace

TorusBoard::TorusBoard(int n, std::vector<Dir> cells) : n_(n), cells_(std::move(cells)) {
    check_size(n);
    if (cells_.size() != static_cast<std::size_t>(n) * n)
        throw Error("cell count does not match board size");
}

TorusBoard TorusBoard::filled(int n, Dir d) {
    check_size(n);
    return TorusBoard(n, std::vector<Dir>(static_cast<std::size_t>(n) * n, d));
}

TorusBoard TorusBoard::random(int n, std::uint64_t seed) {
    Board b = Board::random(n, seed);
    return TorusBoard(n, std::vector<Dir>(b.cells().begin(), b.cells().end()));
}

TorusBoard TorusBoard::from_board(const Board& b) {
    return TorusBoard(b.n(), std::vector<Dir>(b.cells().begin(), b.cells().end()));
}

std::vector<Pos> torus_targets(const TorusBoard& tb, Pos pos) {
    if (!tb.in_range(pos)) throw Error("position " + pos_str(pos) + " out of range");
    std::vector<Pos> out;
    out.reserve(tb.n() - 1);
    for_each_torus_target(tb, pos, [&](Pos q) {
        out.push_back(q);
        return true;
    });
    return out;
}

bool is_directing_torus(const TorusBoard& tb, Pos from, Pos to) {
    if (!tb.in_range(from)) throw Error("position " + pos_str(from) + " out of range");
    if (!tb.in_range(to)) throw Error("position " + pos_str(to) + " out of range");
    if (from == to) throw Error("directing-to is only defined for distinct positions");
    bool hit = false;
    for_each_torus_target(tb, from, [&](Pos q) {
        if (q == to) {
            hit = true;
            return false;
        }
        return true;
    });
    return hit;
}

SolveResult solve_torus(const TorusBoard& tb) {
    const int n2 = tb.n() * tb.n();
    const int goal = tb.flat(tb.center());
    auto succ = [&](int v, auto&& visit) {
        for_each_torus_target(tb, tb.unflat(v), [&](Pos q) { return visit(tb.flat(q)); });
    };
    auto r = detail::bfs(n2, 0, goal, succ);
    SolveResult out;
    out.visited_count = r.dequeued;
    if (r.found) {
        out.solvable = true;
        out.length = r.dist;
        out.witness = witness_from_parents(tb, r.parent, goal);
    }
    return out;
}

Game validate_game_torus(const TorusBoard& tb, std::span<const Pos> moves) {
    if (moves.empty()) throw Error("a game has at least one position");
    if (moves.front() != Pos{1, 1})
        throw Error("games start at (1,1), got " + pos_str(moves.front()));
    const Pos center = tb.center();
    for (std::size_t k = 0; k + 1 < moves.size(); ++k) {
        if (moves[k] == center)
            throw Error("move " + std::to_string(k) + ": game continues past the center");
        if (!is_directing_torus(tb, moves[k], moves[k + 1]))
            throw Error("move " + std::to_string(k) + ": " + pos_str(moves[k]) +
                        " is not directing to " + pos_str(moves[k + 1]));
    }
    Game g;
    g.moves.assign(moves.begin(), moves.end());
    // On a torus every cell has n-1 targets, so games never die early.
    g.outcome = g.moves.back() == center ? Outcome::won : Outcome::in_progress;
    return g;
}

TorusBoard torus_spiral(int n) {
    check_size(n);
    const int c = (n + 1) / 2;

    // Chain of 2n-1 alternating lines: all n rows interleaved with the
    // n-1 columns other than column c. Row 1 (holding the start) comes
    // first and row c (holding the center) last; within every line one
    // portal cell points at the next line and every other cell points
    // along its own earliest line, so layer k of the BFS is exactly the
    // k-th line and the center is reached after 2n-1 moves.
    std::vector<int> row_order, col_order;
    for (int i = 1; i <= n; ++i)
        if (i != c) row_order.push_back(i);
    row_order.push_back(c);
    for (int j = 2; j <= n; ++j)
        if (j != c) col_order.push_back(j);
    col_order.push_back(1);

    std::vector<int> row_chain(n + 1, 0), col_chain(n + 1, -1);
    for (int k = 0; k < n; ++k) row_chain[row_order[k]] = 2 * k;
    for (int k = 0; k < n - 1; ++k) col_chain[col_order[k]] = 2 * k + 1;

    std::vector<Dir> cells(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const bool along_row = j == c || row_chain[i] < col_chain[j];
            cells[(i - 1) * n + (j - 1)] = along_row ? Dir::E : Dir::S;
        }
    for (int k = 0; k < n - 1; ++k) {
        const int row_from = row_order[k], col = col_order[k], row_to = row_order[k + 1];
        cells[(row_from - 1) * n + (col - 1)] = Dir::S;  // portal: row k -> column k
        cells[(row_to - 1) * n + (col - 1)] = Dir::E;    // portal: column k -> row k+1
    }

    TorusBoard tb(n, std::move(cells));
    const SolveResult check = solve_torus(tb);
    if (!check.solvable || *check.length != 2 * n - 1)
        throw Error("torus spiral construction failed verification at n = " +
                    std::to_string(n));
    return tb;
}

std::array<TorusLine, 4> lines_through(Pos p, int n) {
    return {TorusLine{LineKind::row, p.i - 1}, TorusLine{LineKind::column, p.j - 1},
            TorusLine{LineKind::diagonal, ((p.j - p.i) % n + n) % n},
            TorusLine{LineKind::antidiagonal, (p.i + p.j - 2) % n}};
}

TorusLine dir_line(Dir d, Pos from, int n) {
    const auto lines = lines_through(from, n);
    switch (d) {
        case Dir::E:
        case Dir::W: return lines[0];
        case Dir::N:
        case Dir::S: return lines[1];
        case Dir::SE:
        case Dir::NW: return lines[2];
        default: return lines[3];  // NE / SW
    }
}

std::vector<Pos> line_positions(TorusLine line, int n) {
    std::vector<Pos> out;
    out.reserve(n);
    for (int t = 0; t < n; ++t) {
        switch (line.kind) {
            case LineKind::row: out.push_back({line.index + 1, t + 1}); break;
            case LineKind::column: out.push_back({t + 1, line.index + 1}); break;
            case LineKind::diagonal:
                out.push_back({t + 1, (t + line.index) % n + 1});
                break;
            case LineKind::antidiagonal:
                out.push_back({t + 1, ((line.index - t) % n + n) % n + 1});
                break;
        }
    }
    return out;
}

std::string line_str(TorusLine line) {
    static constexpr const char* kinds[4] = {"row", "column", "diagonal", "antidiagonal"};
    return std::string(kinds[static_cast<int>(line.kind)]) + ":" + std::to_string(line.index);
}

LineTrace line_trace(const TorusBoard& tb, const Game& game) {
    std::vector<Pos> moves = game.moves;
    validate_game_torus(tb, moves);  // throws on an invalid game
    LineTrace out;
    const int n = tb.n();
    for (std::size_t l = 0; l + 1 < moves.size(); ++l) {
        const TorusLine line = dir_line(tb.at(moves[l]), moves[l], n);
        out.moves.push_back({static_cast<int>(l), line});
        for (std::size_t later = l + 2; later < moves.size(); ++later) {
            const auto through = lines_through(moves[later], n);
            if (std::find(through.begin(), through.end(), line) != through.end()) {
                out.violations.push_back({static_cast<int>(l), static_cast<int>(later)});
                out.ok = false;
            }
        }
    }
    return out;
}

std::string serialize_torus(const TorusBoard& tb) {
    return serialize_cells(tb.n(), tb.cells(), true);
}

TorusBoard parse_torus(std::string_view text) {
    BoardText t = parse_board_text(text);
    if (!t.torus) throw Error("plain board given to the torus parser");
    return TorusBoard(t.n, std::move(t.cells));
}

}  // namespace windrose
