#include "windrose/f9.hpp"

#include <algorithm>
#include <charconv>

namespace windrose {

F9 f9_pow(F9 base, int exp) {
    F9 r = F9::one();
    for (int k = 0; k < exp; ++k) r = r * base;
    return r;
}

std::string f9_str(F9 e) {
    return std::to_string(int(e.a)) + "+" + std::to_string(int(e.b)) + "x";
}

F9 dir_to_f9(Dir d) {
    const auto [di, dj] = delta(d);
    // east component is the real part, north component the x coefficient
    return {static_cast<std::uint8_t>((dj % 3 + 3) % 3),
            static_cast<std::uint8_t>((-di % 3 + 3) % 3)};
}

Dir f9_to_dir(F9 e) {
    if (e.is_zero()) throw Error("the zero element is no wind");
    for (Dir d : all_dirs)
        if (dir_to_f9(d) == e) return d;
    throw Error("element " + f9_str(e) + " is no wind");  // unreachable: 8 nonzero = 8 winds
}

GeneralizedBoard::GeneralizedBoard(int n, std::vector<F9> cells)
    : n_(n), cells_(std::move(cells)) {
    if (n < 3 || n % 2 == 0)
        throw Error("board size must be an odd integer >= 3, got " + std::to_string(n));
    if (cells_.size() != static_cast<std::size_t>(n) * n)
        throw Error("cell count does not match board size");
}

GeneralizedBoard GeneralizedBoard::zero_board(int n) {
    return GeneralizedBoard(n, std::vector<F9>(static_cast<std::size_t>(n) * n, F9::zero()));
}

GeneralizedBoard GeneralizedBoard::from_board(const Board& b) {
    std::vector<F9> cells(b.cells().size());
    for (std::size_t f = 0; f < cells.size(); ++f) cells[f] = dir_to_f9(b.cells()[f]);
    return GeneralizedBoard(b.n(), std::move(cells));
}

GeneralizedBoard gb_add(const GeneralizedBoard& a, const GeneralizedBoard& b) {
    if (a.n() != b.n()) throw Error("board sizes differ");
    std::vector<F9> cells(a.cells().size());
    for (std::size_t f = 0; f < cells.size(); ++f) cells[f] = a.cells()[f] + b.cells()[f];
    return GeneralizedBoard(a.n(), std::move(cells));
}

GeneralizedBoard gb_mul(const GeneralizedBoard& a, const GeneralizedBoard& b) {
    if (a.n() != b.n()) throw Error("board sizes differ");
    const int n = a.n();
    std::vector<F9> cells(a.cells().size(), F9::zero());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const F9 aik = a.cells()[i * n + k];
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                cells[i * n + j] = cells[i * n + j] + aik * b.cells()[k * n + j];
        }
    return GeneralizedBoard(n, std::move(cells));
}

SolveResult solve_generalized(const GeneralizedBoard& gb) {
    const int n = gb.n();
    const int n2 = n * n;
    const int goal = gb.flat(gb.center());
    auto succ = [&](int v, auto&& visit) {
        const F9 e = gb.cells()[v];
        if (e.is_zero()) return;  // dead cell
        const auto [di, dj] = delta(f9_to_dir(e));
        const Pos p = gb.unflat(v);
        for (int i = p.i + di, j = p.j + dj; i >= 1 && i <= n && j >= 1 && j <= n;
             i += di, j += dj)
            if (!visit((i - 1) * n + (j - 1))) return;
    };
    auto r = detail::bfs(n2, 0, goal, succ);
    SolveResult out;
    out.visited_count = r.dequeued;
    if (r.found) {
        out.solvable = true;
        out.length = r.dist;
        std::vector<Pos> path;
        for (int v = goal; v != -1; v = r.parent[v]) path.push_back(gb.unflat(v));
        std::reverse(path.begin(), path.end());
        out.witness = Game{std::move(path), Outcome::won};
    }
    return out;
}

std::string serialize_generalized(const GeneralizedBoard& gb) {
    const int n = gb.n();
    std::string out = "f9 " + std::to_string(n) + "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            out.push_back(static_cast<char>('0' + gb.cells()[i * n + j].index()));
        out.push_back('\n');
    }
    return out;
}

GeneralizedBoard parse_generalized(std::string_view text) {
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
    if (header.size() < 3 || header.substr(0, 3) != "f9 ")
        throw ParseError("header must be 'f9 <N>'", 1, 1);
    int n = 0;
    auto [rest, ec] = std::from_chars(header.data() + 3, header.data() + header.size(), n);
    if (ec != std::errc{} || rest != header.data() + header.size())
        throw ParseError("header must be 'f9 <N>'", 1, 4);
    if (n < 3 || n % 2 == 0)
        throw ParseError("board size must be an odd integer >= 3", 1, 4);
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError("expected " + std::to_string(n) + " rows",
                         static_cast<int>(lines.size()), 1);
    std::vector<F9> cells(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const std::string_view row = lines[i + 1];
        if (static_cast<int>(row.size()) != n)
            throw ParseError("row must have exactly " + std::to_string(n) + " cells",
                             i + 2, static_cast<int>(row.size()) + 1);
        for (int j = 0; j < n; ++j) {
            const char ch = row[j];
            if (ch < '0' || ch > '8')
                throw ParseError(std::string("cell must be a digit 0-8, got '") + ch + "'",
                                 i + 2, j + 1);
            cells[i * n + j] = F9::from_index(ch - '0');
        }
    }
    return GeneralizedBoard(n, std::move(cells));
}

}  // namespace windrose
