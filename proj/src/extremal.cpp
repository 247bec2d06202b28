#include "windrose/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <omp.h>

#include "json.hpp"

#include "windrose/graph.hpp"
#include "windrose/stats.hpp"

namespace windrose {

std::vector<Pos> spiral_waypoints(int n) {
    if (n < 5 || n % 2 == 0) throw Error("spiral boards need an odd size >= 5");
    std::vector<Pos> w;
    w.push_back({1, 1});
    const int rings = (n - 1) / 2;
    for (int k = 0; k < rings; ++k) {
        w.push_back({k + 1, n - k});  // east along row k+1
        w.push_back({n - k, n - k});  // south along column n-k
        w.push_back({n - k, k + 1});  // west along row n-k
        w.push_back({k + 2, k + 1});  // north along column k+1
    }
    w.push_back({(n + 1) / 2, (n + 1) / 2});  // final east hop into the center
    return w;
}

namespace {

Dir dir_between(Pos from, Pos to) {
    const int di = (to.i > from.i) - (to.i < from.i);
    const int dj = (to.j > from.j) - (to.j < from.j);
    for (Dir d : all_dirs) {
        const auto dd = delta(d);
        if (dd.di == di && dd.dj == dj) {
            const int steps = di != 0 ? (to.i - from.i) * di : (to.j - from.j) * dj;
            if ((to.i - from.i) == di * steps && (to.j - from.j) == dj * steps) return d;
        }
    }
    throw Error("positions " + pos_str(from) + " and " + pos_str(to) + " share no ray");
}

// Filler cells point at the nearest board edge along their dominant axis;
// on the rim that ray is empty and the cell is dead, further in it lands
// only on outward filler.
Dir outward_dir(Pos p, int n) {
    const int c = (n + 1) / 2;
    const int a = p.i - c, b = p.j - c;
    if (std::abs(a) >= std::abs(b)) return a < 0 ? Dir::N : Dir::S;
    return b < 0 ? Dir::W : Dir::E;
}

bool ray_empty(Pos p, Dir d, int n) {
    const auto [di, dj] = delta(d);
    const int i = p.i + di, j = p.j + dj;
    return i < 1 || i > n || j < 1 || j > n;
}

}  // namespace

Board spiral_board(int n, int repair_budget) {
    const std::vector<Pos> waypoints = spiral_waypoints(n);
    std::vector<Dir> cells(static_cast<std::size_t>(n) * n);
    std::vector<char> skeleton(cells.size(), 0);
    for (std::size_t t = 0; t + 1 < waypoints.size(); ++t) {
        const int f = (waypoints[t].i - 1) * n + (waypoints[t].j - 1);
        cells[f] = dir_between(waypoints[t], waypoints[t + 1]);
        skeleton[f] = 1;
    }
    const int center_flat = ((n + 1) / 2 - 1) * n + ((n + 1) / 2 - 1);
    skeleton[center_flat] = 1;  // wind there is irrelevant, but never re-aim it
    for (std::size_t f = 0; f < cells.size(); ++f)
        if (!skeleton[f])
            cells[f] = outward_dir({static_cast<int>(f) / n + 1, static_cast<int>(f) % n + 1}, n);

    Board board(n, std::move(cells));
    const int target = 2 * n - 1;
    for (int iter = 0; iter <= repair_budget; ++iter) {
        const SolveResult res = solve(board);
        if (!res.solvable || *res.length > target)
            throw Error("spiral construction broke its own skeleton game");
        if (*res.length == target) return board;

        // A shortcut exists; some visited cell is filler. Re-aim the first
        // such cell with the wind that pushes the BFS length up the most,
        // preferring dead (empty-ray) winds on ties.
        bool changed = false;
        for (const Pos p : res.witness->moves) {
            if (skeleton[board.flat(p)]) continue;
            Dir best_dir = board.at(p);
            int best_len = *res.length;
            bool best_dead = ray_empty(p, best_dir, n);
            for (Dir d : all_dirs) {
                if (d == board.at(p)) continue;
                const Board cand = board.with_cell(p, d);
                const SolveResult r2 = solve(cand);
                const int len = r2.solvable ? *r2.length : -1;
                const bool dead = ray_empty(p, d, n);
                if (len > best_len || (len == best_len && dead && !best_dead)) {
                    best_len = len;
                    best_dir = d;
                    best_dead = dead;
                }
            }
            if (best_dir != board.at(p)) {
                board = board.with_cell(p, best_dir);
                changed = true;
                break;
            }
        }
        if (!changed)
            throw Error("spiral repair stalled below length " + std::to_string(target));
    }
    throw Error("spiral repair budget exhausted at n = " + std::to_string(n));
}

Board extremal_degree_board(int n, ExtremalMode mode) {
    if (n < 3 || n % 2 == 0) throw Error("size must be an odd integer >= 3");
    std::vector<Dir> cells(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int best_count = mode == ExtremalMode::max ? -1 : n;
            Dir best = Dir::N;
            for (Dir d : all_dirs) {
                const auto [di, dj] = delta(d);
                int count = 0;
                for (int ii = i + di, jj = j + dj; ii >= 1 && ii <= n && jj >= 1 && jj <= n;
                     ii += di, jj += dj)
                    ++count;
                const bool better =
                    mode == ExtremalMode::max ? count > best_count : count < best_count;
                if (better) {
                    best_count = count;
                    best = d;
                }
            }
            cells[(i - 1) * n + (j - 1)] = best;
        }
    }
    return Board(n, std::move(cells));
}

Board duplicate_expand(const Board& b, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() != cols.size())
        throw Error("row and column duplication lists must have equal length");
    if (rows.size() % 2 != 0)
        throw Error("duplication lists must have even length to keep the size odd");
    const int n = b.n();
    for (int r : rows)
        if (r < 1 || r > n) throw Error("row index " + std::to_string(r) + " out of range");
    for (int c : cols)
        if (c < 1 || c > n) throw Error("column index " + std::to_string(c) + " out of range");

    std::vector<int> rmul(n + 1, 1), cmul(n + 1, 1);
    for (int r : rows) ++rmul[r];
    for (int c : cols) ++cmul[c];
    const int m = n + static_cast<int>(rows.size());
    std::vector<Dir> cells;
    cells.reserve(static_cast<std::size_t>(m) * m);
    for (int i = 1; i <= n; ++i) {
        for (int rep_i = 0; rep_i < rmul[i]; ++rep_i) {
            for (int j = 1; j <= n; ++j)
                for (int rep_j = 0; rep_j < cmul[j]; ++rep_j) cells.push_back(b.at(i, j));
        }
    }
    return Board(m, std::move(cells));
}

MlExact ml_exact(int n, int workers) {
    if (n != 3) throw Error("the exact maximum length is only enumerable at n = 3");
    const CensusResult census = exact_census(n, workers, 0.0, 0);
    return {census.max_length, census.ml_witness};
}

// --- annealing search -------------------------------------------------------

namespace {

struct RestartOutcome {
    Board best;
    int best_length;
    std::int64_t accepted;
    std::int64_t improved;
};

int objective(const Board& b) {
    const SolveResult r = solve(b);
    return r.solvable ? *r.length : -1;  // unsolvable states are penalized, not banned
}

RestartOutcome run_restart(const SearchParams& p, int restart_index, const Board* resume) {
    rng::SplitMix gen(rng::at(p.seed, static_cast<std::uint64_t>(restart_index)));
    Board cur = [&]() -> Board {
        if (restart_index == 0 && resume) return *resume;
        if (restart_index == 0 && p.seed_spiral && p.n >= 5) return spiral_board(p.n);
        return Board::random(p.n, rng::at(p.seed, 0x100000 + restart_index));
    }();
    int cur_obj = objective(cur);
    Board best = cur;
    int best_obj = cur_obj;
    std::int64_t accepted = 0, improved = 0;
    double temperature = p.initial_temperature;
    const int n2 = p.n * p.n;
    for (std::int64_t it = 0; it < p.budget; ++it) {
        const int cell = static_cast<int>(gen.next_below(static_cast<std::uint32_t>(n2)));
        const Dir d = static_cast<Dir>(gen.next_below(8));
        const Pos pos{cell / p.n + 1, cell % p.n + 1};
        const Board cand = cur.with_cell(pos, d);
        const int cand_obj = objective(cand);
        const int dv = cand_obj - cur_obj;
        if (dv >= 0 || gen.next_unit() < std::exp(dv / temperature)) {
            cur = cand;
            cur_obj = cand_obj;
            ++accepted;
            if (cur_obj > best_obj) {
                best = cur;
                best_obj = cur_obj;
                ++improved;
            }
        }
        temperature *= p.cooling;
    }
    return {std::move(best), best_obj, accepted, improved};
}

}  // namespace

SearchReport long_board_search(const SearchParams& params, int workers) {
    if (params.n < 5 || params.n % 2 == 0)
        throw Error("long-board search needs an odd size >= 5");
    if (params.restarts < 1) throw Error("restarts must be >= 1");

    Board resume_board = Board::filled(3, Dir::N);
    bool have_resume = false;
    if (!params.resume_path.empty()) {
        resume_board = load_checkpoint(params.resume_path);
        if (resume_board.n() != params.n)
            throw Error("checkpoint size does not match the requested size");
        have_resume = true;
    }

    std::vector<RestartOutcome> outcomes;
    outcomes.reserve(params.restarts);
    for (int r = 0; r < params.restarts; ++r)
        outcomes.push_back({Board::filled(3, Dir::N), -2, 0, 0});

    const int nthreads = resolve_workers(workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (int r = 0; r < params.restarts; ++r)
        outcomes[r] = run_restart(params, r, have_resume ? &resume_board : nullptr);

    int best_restart = 0;
    for (int r = 1; r < params.restarts; ++r)
        if (outcomes[r].best_length > outcomes[best_restart].best_length) best_restart = r;

    SearchReport rep{.n = params.n,
                     .best = outcomes[best_restart].best,
                     .best_length = outcomes[best_restart].best_length,
                     .ratio = static_cast<double>(outcomes[best_restart].best_length) / params.n,
                     .iterations = params.budget * params.restarts,
                     .restarts = params.restarts,
                     .seed = params.seed,
                     .accepted = 0,
                     .improved = 0};
    for (const auto& o : outcomes) {
        rep.accepted += o.accepted;
        rep.improved += o.improved;
    }
    if (rep.best_length >= 0) {
        const SolveResult check = solve(rep.best);
        if (!check.solvable || *check.length != rep.best_length)
            throw Error("search result failed re-solving");
    }
    if (!params.checkpoint_path.empty())
        save_checkpoint(params.checkpoint_path, rep.best, rep.best_length, rep.iterations,
                        params.seed);
    return rep;
}

void save_checkpoint(const std::string& path, const Board& best, int length,
                     std::int64_t iter, std::uint64_t seed) {
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write checkpoint " + path);
        out << serialize_board(best);
    }
    nlohmann::json side;
    side["length"] = length;
    side["iter"] = iter;
    side["seed"] = seed;
    std::ofstream sout(path + ".json", std::ios::binary);
    if (!sout) throw Error("cannot write checkpoint sidecar " + path + ".json");
    sout << side.dump(2) << "\n";
}

Board load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read checkpoint " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_board(ss.str());
}

}  // namespace windrose
