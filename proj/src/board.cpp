#include "windrose/board.hpp"

#include <charconv>

namespace windrose {

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : Error("parse error at line " + std::to_string(line_) + ", col " +
            std::to_string(col_) + ": " + msg),
      line(line_),
      col(col_) {}

const char* dir_name(Dir d) {
    static constexpr const char* names[8] = {"N", "NE", "E", "SE", "S", "SW", "W", "NW"};
    return names[static_cast<int>(d)];
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::won: return "won";
        case Outcome::lost: return "lost";
        default: return "in-progress";
    }
}

std::string pos_str(Pos p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

static void check_size(int n) {
    if (n < 3 || n % 2 == 0)
        throw Error("board size must be an odd integer >= 3, got " + std::to_string(n));
}

Board::Board(int n, std::vector<Dir> cells) : n_(n), cells_(std::move(cells)) {
    check_size(n);
    if (cells_.size() != static_cast<std::size_t>(n) * n)
        throw Error("cell count does not match board size");
}

Board Board::filled(int n, Dir d) {
    check_size(n);
    return Board(n, std::vector<Dir>(static_cast<std::size_t>(n) * n, d));
}

Board Board::random(int n, std::uint64_t seed) {
    check_size(n);
    std::vector<Dir> cells(static_cast<std::size_t>(n) * n);
    for (std::size_t f = 0; f < cells.size(); ++f)
        cells[f] = static_cast<Dir>(rng::at(seed, f) >> 61);  // 3 unbiased top bits
    return Board(n, std::move(cells));
}

Board Board::with_cell(Pos p, Dir d) const {
    if (!in_range(p)) throw Error("position " + pos_str(p) + " out of range");
    Board copy = *this;
    copy.cells_[flat(p)] = d;
    return copy;
}

std::vector<Pos> targets(const Board& b, Pos pos) {
    if (!b.in_range(pos)) throw Error("position " + pos_str(pos) + " out of range");
    std::vector<Pos> out;
    for_each_target(b, pos, [&](Pos q) {
        out.push_back(q);
        return true;
    });
    return out;
}

bool is_directing(const Board& b, Pos from, Pos to) {
    if (!b.in_range(from)) throw Error("position " + pos_str(from) + " out of range");
    if (!b.in_range(to)) throw Error("position " + pos_str(to) + " out of range");
    if (from == to) throw Error("directing-to is only defined for distinct positions");
    bool hit = false;
    for_each_target(b, from, [&](Pos q) {
        if (q == to) {
            hit = true;
            return false;
        }
        return true;
    });
    return hit;
}

Game validate_game(const Board& b, std::span<const Pos> moves) {
    if (moves.empty()) throw Error("a game has at least one position");
    if (moves.front() != Board::start)
        throw Error("games start at (1,1), got " + pos_str(moves.front()));
    const Pos center = b.center();
    for (std::size_t k = 0; k < moves.size(); ++k) {
        if (!b.in_range(moves[k]))
            throw Error("move " + std::to_string(k) + ": position " + pos_str(moves[k]) +
                        " out of range");
        const bool last = k + 1 == moves.size();
        if (!last) {
            if (moves[k] == center)
                throw Error("move " + std::to_string(k) +
                            ": game continues past the center");
            if (!is_directing(b, moves[k], moves[k + 1]))
                throw Error("move " + std::to_string(k) + ": " + pos_str(moves[k]) +
                            " is not directing to " + pos_str(moves[k + 1]));
        }
    }
    Game g;
    g.moves.assign(moves.begin(), moves.end());
    const Pos end = g.moves.back();
    if (end == center) {
        g.outcome = Outcome::won;
    } else if (targets(b, end).empty()) {
        g.outcome = Outcome::lost;
    } else {
        g.outcome = Outcome::in_progress;
    }
    return g;
}

// --- text format -------------------------------------------------------

std::string serialize_cells(int n, std::span<const Dir> cells, bool torus) {
    std::string out = "n " + std::to_string(n) + (torus ? " torus" : " plain") + "\n";
    out.reserve(out.size() + static_cast<std::size_t>(n) * (n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            out.push_back(static_cast<char>('0' + static_cast<int>(cells[i * n + j])));
        out.push_back('\n');
    }
    return out;
}

std::string serialize_board(const Board& b) {
    return serialize_cells(b.n(), b.cells(), false);
}

BoardText parse_board_text(std::string_view text) {
    // Split into lines; a trailing newline on the last row is optional.
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (lines.empty()) throw ParseError("empty input", 1, 1);

    const std::string_view header = lines[0];
    if (header.size() < 2 || header.substr(0, 2) != "n ")
        throw ParseError("header must be 'n <N> <plain|torus>'", 1, 1);
    int n = 0;
    const char* num_begin = header.data() + 2;
    const char* num_end = header.data() + header.size();
    auto [rest, ec] = std::from_chars(num_begin, num_end, n);
    if (ec != std::errc{})
        throw ParseError("header must carry an integer size", 1, 3);
    std::string_view kind(rest, static_cast<std::size_t>(num_end - rest));
    BoardText out;
    if (kind == " plain") {
        out.torus = false;
    } else if (kind == " torus") {
        out.torus = true;
    } else {
        throw ParseError("header kind must be 'plain' or 'torus'",
                         1, static_cast<int>(rest - header.data()) + 1);
    }
    if (n < 3 || n % 2 == 0)
        throw ParseError("board size must be an odd integer >= 3", 1, 3);
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError("expected " + std::to_string(n) + " rows, got " +
                             std::to_string(lines.size() - 1),
                         static_cast<int>(lines.size()), 1);

    out.n = n;
    out.cells.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const std::string_view row = lines[i + 1];
        if (static_cast<int>(row.size()) != n)
            throw ParseError("row must have exactly " + std::to_string(n) + " cells",
                             i + 2, static_cast<int>(row.size()) + 1);
        for (int j = 0; j < n; ++j) {
            const char c = row[j];
            if (c < '0' || c > '7')
                throw ParseError(std::string("cell must be a digit 0-7, got '") + c + "'",
                                 i + 2, j + 1);
            out.cells[i * n + j] = static_cast<Dir>(c - '0');
        }
    }
    return out;
}

Board parse_board(std::string_view text) {
    BoardText t = parse_board_text(text);
    if (t.torus) throw Error("torus board given to the plain-board parser");
    return Board(t.n, std::move(t.cells));
}

}  // namespace windrose
