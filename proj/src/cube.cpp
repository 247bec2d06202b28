#include "windrose/cube.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>

#include <omp.h>

#include "windrose/solver.hpp"

namespace windrose {

namespace {

constexpr std::array<Dir3, 26> make_dir3_table() {
    std::array<Dir3, 26> t{};
    int idx = 0;
    for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj)
            for (int dk = -1; dk <= 1; ++dk) {
                if (di == 0 && dj == 0 && dk == 0) continue;
                t[idx++] = {di, dj, dk};
            }
    return t;
}

constexpr auto dir3_table = make_dir3_table();

void check_size(int n) {
    if (n < 3 || n % 2 == 0)
        throw Error("cube size must be an odd integer >= 3, got " + std::to_string(n));
}

}  // namespace

Dir3 dir3_from_index(int idx) {
    if (idx < 0 || idx >= dir3_count) throw Error("cube wind index out of range");
    return dir3_table[idx];
}

int dir3_index(Dir3 d) {
    for (int idx = 0; idx < dir3_count; ++idx)
        if (dir3_table[idx] == d) return idx;
    throw Error("not a cube wind");
}

char dir3_letter(int idx) {
    if (idx < 0 || idx >= dir3_count) throw Error("cube wind index out of range");
    return static_cast<char>('a' + idx);
}

int dir3_from_letter(char c) { return c >= 'a' && c <= 'z' ? c - 'a' : -1; }

std::string pos3_str(Pos3 p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + "," +
           std::to_string(p.k) + ")";
}

CubeBoard::CubeBoard(int n, std::vector<std::uint8_t> cells)
    : n_(n), cells_(std::move(cells)) {
    check_size(n);
    if (cells_.size() != static_cast<std::size_t>(n) * n * n)
        throw Error("cell count does not match cube size");
    for (std::uint8_t c : cells_)
        if (c >= dir3_count) throw Error("cube wind index out of range");
}

CubeBoard CubeBoard::filled(int n, int dir_index) {
    check_size(n);
    if (dir_index < 0 || dir_index >= dir3_count) throw Error("cube wind index out of range");
    return CubeBoard(n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n * n,
                                                  static_cast<std::uint8_t>(dir_index)));
}

CubeBoard CubeBoard::random(int n, std::uint64_t seed) {
    check_size(n);
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n * n);
    for (std::size_t f = 0; f < cells.size(); ++f) {
        rng::SplitMix gen(rng::at(seed, f));
        cells[f] = static_cast<std::uint8_t>(gen.next_below(dir3_count));
    }
    return CubeBoard(n, std::move(cells));
}

std::vector<Pos3> cube_targets(const CubeBoard& cb, Pos3 pos) {
    if (!cb.in_range(pos)) throw Error("position " + pos3_str(pos) + " out of range");
    std::vector<Pos3> out;
    const Dir3 d = dir3_from_index(cb.dir_at(pos));
    const int n = cb.n();
    for (int i = pos.i + d.di, j = pos.j + d.dj, k = pos.k + d.dk;
         i >= 1 && i <= n && j >= 1 && j <= n && k >= 1 && k <= n;
         i += d.di, j += d.dj, k += d.dk)
        out.push_back({i, j, k});
    return out;
}

CubeSolveResult solve_cube(const CubeBoard& cb) {
    const int n = cb.n();
    const int n3 = n * n * n;
    const int goal = cb.flat(cb.center());
    auto succ = [&](int v, auto&& visit) {
        const Pos3 p = cb.unflat(v);
        const Dir3 d = dir3_from_index(cb.dir_at(p));
        for (int i = p.i + d.di, j = p.j + d.dj, k = p.k + d.dk;
             i >= 1 && i <= n && j >= 1 && j <= n && k >= 1 && k <= n;
             i += d.di, j += d.dj, k += d.dk)
            if (!visit(((i - 1) * n + (j - 1)) * n + (k - 1))) return;
    };
    auto r = detail::bfs(n3, 0, goal, succ);
    CubeSolveResult out;
    out.visited_count = r.dequeued;
    if (r.found) {
        out.solvable = true;
        out.length = r.dist;
        for (int v = goal; v != -1; v = r.parent[v]) out.witness.push_back(cb.unflat(v));
        std::reverse(out.witness.begin(), out.witness.end());
    }
    return out;
}

EstimateReport estimate_cube_stats(int n, std::int64_t samples, std::uint64_t seed,
                                   int workers) {
    check_size(n);
    if (samples < 1) throw Error("samples must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const int chunks = resolve_workers(workers);

    struct Accum {
        std::int64_t solvable = 0;
        std::vector<std::int64_t> hist;
    };
    std::vector<Accum> acc(chunks);
    for (auto& a : acc) a.hist.assign(static_cast<std::size_t>(n) * n * n, 0);

#pragma omp parallel for schedule(static) num_threads(chunks)
    for (int c = 0; c < chunks; ++c) {
        const std::int64_t lo = samples * c / chunks, hi = samples * (c + 1) / chunks;
        for (std::int64_t k = lo; k < hi; ++k) {
            const CubeBoard cb = CubeBoard::random(n, rng::at(seed, static_cast<std::uint64_t>(k)));
            const CubeSolveResult r = solve_cube(cb);
            if (r.solvable) {
                ++acc[c].solvable;
                ++acc[c].hist[static_cast<std::size_t>(*r.length)];
            }
        }
    }
    for (int c = 1; c < chunks; ++c) {
        acc[0].solvable += acc[c].solvable;
        for (std::size_t k = 0; k < acc[0].hist.size(); ++k) acc[0].hist[k] += acc[c].hist[k];
    }

    EstimateReport rep;
    rep.op = "cube-stats";
    rep.n = n;
    rep.samples = samples;
    rep.solvable_samples = acc[0].solvable;
    rep.seed = seed;
    rep.workers = chunks;
    const double p = static_cast<double>(acc[0].solvable) / static_cast<double>(samples);
    rep.estimate = p;
    rep.stderr_ = std::sqrt(p * (1 - p) / static_cast<double>(samples));
    rep.ci_lo = rep.estimate - 1.96 * rep.stderr_;
    rep.ci_hi = rep.estimate + 1.96 * rep.stderr_;
    for (std::size_t k = 0; k < acc[0].hist.size(); ++k)
        if (acc[0].hist[k] > 0) rep.histogram[static_cast<int>(k)] = acc[0].hist[k];
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

std::string serialize_cube(const CubeBoard& cb) {
    const int n = cb.n();
    std::string out = "cube " + std::to_string(n) + "\n";
    for (int i = 0; i < n; ++i) {
        if (i > 0) out.push_back('\n');
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k)
                out.push_back(dir3_letter(cb.cells()[(i * n + j) * n + k]));
            out.push_back('\n');
        }
    }
    return out;
}

CubeBoard parse_cube(std::string_view text) {
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
    if (header.size() < 5 || header.substr(0, 5) != "cube ")
        throw ParseError("header must be 'cube <N>'", 1, 1);
    int n = 0;
    auto [rest, ec] = std::from_chars(header.data() + 5, header.data() + header.size(), n);
    if (ec != std::errc{} || rest != header.data() + header.size())
        throw ParseError("header must be 'cube <N>'", 1, 6);
    if (n < 3 || n % 2 == 0)
        throw ParseError("cube size must be an odd integer >= 3", 1, 6);

    std::vector<std::uint8_t> cells;
    cells.reserve(static_cast<std::size_t>(n) * n * n);
    std::size_t line_no = 1;  // 0-based index into lines
    for (int i = 0; i < n; ++i) {
        if (i > 0) {
            if (line_no >= lines.size() || !lines[line_no].empty())
                throw ParseError("expected a blank line between slabs",
                                 static_cast<int>(line_no) + 1, 1);
            ++line_no;
        }
        for (int j = 0; j < n; ++j, ++line_no) {
            if (line_no >= lines.size())
                throw ParseError("unexpected end of input", static_cast<int>(line_no) + 1, 1);
            const std::string_view row = lines[line_no];
            if (static_cast<int>(row.size()) != n)
                throw ParseError("row must have exactly " + std::to_string(n) + " cells",
                                 static_cast<int>(line_no) + 1,
                                 static_cast<int>(row.size()) + 1);
            for (int k = 0; k < n; ++k) {
                const int idx = dir3_from_letter(row[k]);
                if (idx < 0 || idx >= dir3_count)
                    throw ParseError(std::string("cell must be a letter a-z, got '") +
                                         row[k] + "'",
                                     static_cast<int>(line_no) + 1, k + 1);
                cells.push_back(static_cast<std::uint8_t>(idx));
            }
        }
    }
    if (line_no != lines.size())
        throw ParseError("unexpected trailing content", static_cast<int>(line_no) + 1, 1);
    return CubeBoard(n, std::move(cells));
}

}  // namespace windrose
