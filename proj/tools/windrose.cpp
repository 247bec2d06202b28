// windrose: board-game toolkit CLI. Every randomized subcommand prints its
// seed, and identical invocations produce identical bytes on stdout (the
// elapsed/worker fields vary between runs unless --no-timing drops them).

#include <fstream>
#include <iostream>
#include <optional>
#include <functional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "windrose/cube.hpp"
#include "windrose/extremal.hpp"
#include "windrose/f9.hpp"
#include "windrose/graph.hpp"
#include "windrose/report.hpp"
#include "windrose/solver.hpp"
#include "windrose/stats.hpp"
#include "windrose/torus.hpp"

using namespace windrose;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

struct Options {
    int n = 3;
    std::uint64_t seed = 1;
    std::int64_t samples = 10000;
    int workers = 0;
    std::string input, input2, output;
    std::string format = "json";
    std::int64_t budget = 20000;
    int restarts = 1;
    int cap = 0;
    bool no_timing = false;
    bool wilson = false;
    bool loose_tail = false;
    double oracle_fraction = 0.01;
    std::string checkpoint, resume;
    std::string moves_path;
};

void emit(const json& j) { std::cout << dump_json(j); }

void emit_estimate(const Options& opt, const EstimateReport& rep) {
    if (opt.format == "csv") {
        std::cout << histogram_csv(rep.histogram);
        return;
    }
    emit(estimate_json(rep, !opt.no_timing));
}

std::vector<Pos> read_moves(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<Pos> moves;
    int i, j;
    while (in >> i >> j) moves.push_back({i, j});
    if (moves.empty()) throw Error("no moves in " + path);
    return moves;
}

void emit_board(const Options& opt, const std::string& text, const char* op, int n,
                std::optional<std::uint64_t> seed) {
    if (!opt.output.empty()) {
        write_file(opt.output, text);
        json j;
        j["op"] = op;
        j["n"] = n;
        if (seed) j["seed"] = *seed;
        j["output"] = opt.output;
        emit(j);
    } else {
        std::cout << text;
        if (seed) std::cerr << "seed " << *seed << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"windrose: solvers, censuses and statistics for arrow boards"};
    app.require_subcommand(1);
    Options opt;

    app.add_flag("--no-timing", opt.no_timing,
                 "omit fields that vary between runs (elapsed_ms, workers)");

    auto add_common = [&](CLI::App* cmd, bool with_n = true) {
        if (with_n) cmd->add_option("--n", opt.n, "board size (odd, >= 3)");
        cmd->add_option("--seed", opt.seed, "random seed");
        cmd->add_option("--samples", opt.samples, "sample count");
        cmd->add_option("--workers", opt.workers,
                        "worker threads (0: WINDROSE_WORKERS or all cores)");
        cmd->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--output", opt.output, "output file");
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "shortest game of a plain board");
    solve_cmd->add_option("--input", opt.input, "board file")->required();
    solve_cmd->add_option("--cap", opt.cap,
                          "also list every achievable winning length up to this cap");

    CLI::App* validate_cmd =
        app.add_subcommand("validate-game", "check a move sequence against a board");
    validate_cmd->add_option("--input", opt.input, "board file")->required();
    validate_cmd->add_option("--moves", opt.moves_path, "file of 'i j' lines")->required();

    CLI::App* random_cmd = app.add_subcommand("random", "draw a uniform random board");
    add_common(random_cmd);

    CLI::App* census_cmd =
        app.add_subcommand("census", "exhaustive length census of all boards");
    add_common(census_cmd);
    census_cmd->add_option("--oracle-fraction", opt.oracle_fraction,
                           "fraction re-checked by the independent oracle");

    CLI::App* stats_cmd = app.add_subcommand("stats", "randomized estimators and bounds");
    stats_cmd->require_subcommand(1);
    CLI::App* sp = stats_cmd->add_subcommand("solvable-prob", "P(random board is solvable)");
    add_common(sp);
    sp->add_flag("--wilson", opt.wilson, "Wilson 95% interval instead of normal");
    CLI::App* el =
        stats_cmd->add_subcommand("expected-length", "mean length over solvable boards");
    add_common(el);
    CLI::App* bounds_cmd = stats_cmd->add_subcommand("bounds", "closed-form bounds");
    bounds_cmd->add_option("--n", opt.n, "board size");
    bounds_cmd->add_flag("--loose-tail", opt.loose_tail,
                         "use the looser 49/64 tail constant");

    CLI::App* construct_cmd = app.add_subcommand("construct", "named board constructions");
    construct_cmd->require_subcommand(1);
    CLI::App* cs = construct_cmd->add_subcommand("spiral", "plain board of length 2n-1");
    add_common(cs);
    cs->add_option("--budget", opt.budget, "repair budget");
    CLI::App* cmax = construct_cmd->add_subcommand("extremal-max", "maximal edge total");
    add_common(cmax);
    CLI::App* cmin = construct_cmd->add_subcommand("extremal-min", "minimal edge total");
    add_common(cmin);
    CLI::App* cts = construct_cmd->add_subcommand("torus-spiral", "torus board of length 2n-1");
    add_common(cts);

    CLI::App* search_cmd = app.add_subcommand("search", "stochastic extremal search");
    search_cmd->require_subcommand(1);
    CLI::App* lb = search_cmd->add_subcommand("long-board", "anneal toward long boards");
    add_common(lb);
    lb->add_option("--budget", opt.budget, "mutation steps per restart");
    lb->add_option("--restarts", opt.restarts, "parallel restarts");
    lb->add_option("--checkpoint", opt.checkpoint, "write best board + sidecar here");
    lb->add_option("--resume", opt.resume, "seed restart 0 from this checkpoint");

    CLI::App* graph_cmd = app.add_subcommand("graph", "board-graph analytics");
    graph_cmd->require_subcommand(1);
    CLI::App* gdot = graph_cmd->add_subcommand("export-dot", "DOT digraph of a board");
    gdot->add_option("--input", opt.input, "board file")->required();
    gdot->add_option("--output", opt.output, "output file");
    CLI::App* gdeg = graph_cmd->add_subcommand("degrees", "degree report and bounds");
    gdeg->add_option("--input", opt.input, "board file")->required();
    CLI::App* giso = graph_cmd->add_subcommand("iso", "double-rooted isomorphism test");
    giso->add_option("--input", opt.input, "first board")->required();
    giso->add_option("--input2", opt.input2, "second board")->required();
    giso->add_option("--budget", opt.budget, "search budget");
    CLI::App* gscan = graph_cmd->add_subcommand("symmetry-scan",
                                                "falsification scan of symmetry candidates");
    add_common(gscan);
    CLI::App* gtriv = graph_cmd->add_subcommand("trivial-changes",
                                                "per-cell wind classes with equal rays");
    gtriv->add_option("--input", opt.input, "board file")->required();

    CLI::App* torus_cmd = app.add_subcommand("torus", "wraparound boards");
    torus_cmd->require_subcommand(1);
    CLI::App* tsolve = torus_cmd->add_subcommand("solve", "shortest game on a torus board");
    tsolve->add_option("--input", opt.input, "torus board file")->required();
    CLI::App* tbound = torus_cmd->add_subcommand("bound-check",
                                                 "sampled 4n length-bound check");
    add_common(tbound);

    CLI::App* f9_cmd = app.add_subcommand("f9", "boards as matrices over GF(9)");
    f9_cmd->require_subcommand(1);
    CLI::App* fadd = f9_cmd->add_subcommand("add", "entrywise sum");
    fadd->add_option("--input", opt.input, "first matrix");
    fadd->add_option("--input2", opt.input2, "second matrix");
    add_common(fadd);
    CLI::App* fmul = f9_cmd->add_subcommand("mul", "matrix product");
    fmul->add_option("--input", opt.input, "first matrix");
    fmul->add_option("--input2", opt.input2, "second matrix");
    add_common(fmul);
    CLI::App* fsolve = f9_cmd->add_subcommand("solve", "solve a generalized board");
    fsolve->add_option("--input", opt.input, "matrix file")->required();

    CLI::App* cube_cmd = app.add_subcommand("cube", "three-dimensional boards");
    cube_cmd->require_subcommand(1);
    CLI::App* crandom = cube_cmd->add_subcommand("random", "draw a uniform random cube");
    add_common(crandom);
    CLI::App* csolve = cube_cmd->add_subcommand("solve", "shortest game of a cube");
    csolve->add_option("--input", opt.input, "cube file")->required();
    CLI::App* cstats = cube_cmd->add_subcommand("stats", "cube solvability estimate");
    add_common(cstats);

    // let parent options (--no-timing) appear after any subcommand
    const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* s : a->get_subcommands([](const CLI::App*) { return true; }))
            enable_fallthrough(s);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve_cmd) {
            const Board b = parse_board(read_file(opt.input));
            json j = solve_json(solve(b), b.n(), &b);
            if (opt.cap > 0) j["winning_lengths"] = winning_lengths(b, opt.cap);
            emit(j);
        } else if (*validate_cmd) {
            const Board b = parse_board(read_file(opt.input));
            const Game g = validate_game(b, read_moves(opt.moves_path));
            json j;
            j["op"] = "validate-game";
            j["n"] = b.n();
            j["outcome"] = outcome_name(g.outcome);
            j["turns"] = g.turns();
            emit(j);
        } else if (*random_cmd) {
            const Board b = Board::random(opt.n, opt.seed);
            emit_board(opt, serialize_board(b), "random", opt.n, opt.seed);
        } else if (*census_cmd) {
            const CensusResult c = exact_census(opt.n, opt.workers, opt.oracle_fraction,
                                                opt.seed);
            if (opt.format == "csv") {
                std::cout << histogram_csv(c.dist.counts, c.dist.unsolvable);
            } else {
                emit(census_json(c, opt.n, opt.seed, resolve_workers(opt.workers),
                                 !opt.no_timing));
            }
        } else if (*sp) {
            emit_estimate(opt, estimate_solvable_probability(opt.n, opt.samples, opt.seed,
                                                             opt.workers, opt.wilson));
        } else if (*el) {
            emit_estimate(opt,
                          estimate_expected_length(opt.n, opt.samples, opt.seed, opt.workers)
                              .report);
        } else if (*bounds_cmd) {
            emit(bounds_json(opt.n, opt.loose_tail));
        } else if (*cs) {
            emit_board(opt, serialize_board(spiral_board(opt.n, static_cast<int>(opt.budget))),
                       "construct-spiral", opt.n, std::nullopt);
        } else if (*cmax) {
            emit_board(opt, serialize_board(extremal_degree_board(opt.n, ExtremalMode::max)),
                       "construct-extremal-max", opt.n, std::nullopt);
        } else if (*cmin) {
            emit_board(opt, serialize_board(extremal_degree_board(opt.n, ExtremalMode::min)),
                       "construct-extremal-min", opt.n, std::nullopt);
        } else if (*cts) {
            emit_board(opt, serialize_torus(torus_spiral(opt.n)), "construct-torus-spiral",
                       opt.n, std::nullopt);
        } else if (*lb) {
            SearchParams p;
            p.n = opt.n;
            p.budget = opt.budget;
            p.restarts = opt.restarts;
            p.seed = opt.seed;
            p.checkpoint_path = opt.checkpoint;
            p.resume_path = opt.resume;
            const SearchReport rep = long_board_search(p, opt.workers);
            if (!opt.output.empty()) write_file(opt.output, serialize_board(rep.best));
            emit(search_json(rep, !opt.no_timing));
        } else if (*gdot) {
            const std::string dot = export_dot(build_graph(parse_board(read_file(opt.input))));
            if (!opt.output.empty()) write_file(opt.output, dot);
            else std::cout << dot;
        } else if (*gdeg) {
            const Board b = parse_board(read_file(opt.input));
            const DegreeReport r = degree_report(b);
            const InDegreeReport ir = in_degree_constraint_check(b);
            const EdgeTotals t = extremal_edge_totals(b.n());
            json j;
            j["op"] = "degrees";
            j["n"] = b.n();
            j["total_edges"] = r.total_edges;
            j["edge_total_bounds"] = json::array({t.min_total, t.max_total});
            j["out_center"] = r.out_deg[b.flat(b.center())];
            j["out_corner"] = r.out_deg[0];
            j["max_in"] = ir.max_in;
            j["in_bound"] = ir.bound;
            j["bound_violations"] = r.bound_violations.size();
            j["in_degree_ok"] = ir.ok;
            emit(j);
        } else if (*giso) {
            const Board a = parse_board(read_file(opt.input));
            const Board b = parse_board(read_file(opt.input2));
            const IsoResult r = is_isomorphic(a, b, opt.budget);
            json j;
            j["op"] = "iso";
            j["n"] = a.n();
            j["verdict"] = r.verdict == IsoVerdict::isomorphic       ? "isomorphic"
                           : r.verdict == IsoVerdict::not_isomorphic ? "not-isomorphic"
                                                                     : "budget-exhausted";
            if (r.verdict == IsoVerdict::isomorphic) j["mapping"] = r.mapping;
            j["nodes_expanded"] = r.nodes_expanded;
            emit(j);
        } else if (*gscan) {
            const ScanResult r = symmetry_scan(opt.n, static_cast<int>(opt.samples), opt.seed,
                                               opt.workers);
            emit(scan_json(r, opt.n, opt.samples, opt.seed, resolve_workers(opt.workers),
                           !opt.no_timing));
        } else if (*gtriv) {
            const Board b = parse_board(read_file(opt.input));
            json j;
            j["op"] = "trivial-changes";
            j["n"] = b.n();
            j["classes"] = trivial_change_classes(b);
            emit(j);
        } else if (*tsolve) {
            const TorusBoard tb = parse_torus(read_file(opt.input));
            json j = solve_json(solve_torus(tb), tb.n(), nullptr);
            j["variant"] = "torus";
            emit(j);
        } else if (*tbound) {
            const TorusBoundCheck r =
                torus_bound_check(opt.n, opt.samples, opt.seed, opt.workers);
            json j = torus_bound_check_json(r, !opt.no_timing);
            j["variant"] = "torus";
            emit(j);
        } else if (*fadd || *fmul) {
            const bool mul = static_cast<bool>(*fmul);
            if (!opt.input.empty() && !opt.input2.empty()) {
                const GeneralizedBoard a = parse_generalized(read_file(opt.input));
                const GeneralizedBoard b = parse_generalized(read_file(opt.input2));
                const GeneralizedBoard c = mul ? gb_mul(a, b) : gb_add(a, b);
                const std::string text = serialize_generalized(c);
                if (!opt.output.empty()) {
                    write_file(opt.output, text);
                    json j;
                    j["op"] = mul ? "f9-mul" : "f9-add";
                    j["n"] = c.n();
                    j["output"] = opt.output;
                    emit(j);
                } else {
                    std::cout << text;
                }
            } else {
                // batch experiment: lengths of A, B and A op B over random pairs
                std::cout << "length_a,length_b,length_c\n";
                for (std::int64_t k = 0; k < opt.samples; ++k) {
                    const GeneralizedBoard a = GeneralizedBoard::from_board(
                        Board::random(opt.n, rng::at(opt.seed, 2 * k)));
                    const GeneralizedBoard b = GeneralizedBoard::from_board(
                        Board::random(opt.n, rng::at(opt.seed, 2 * k + 1)));
                    const GeneralizedBoard c = mul ? gb_mul(a, b) : gb_add(a, b);
                    auto len = [](const GeneralizedBoard& g) {
                        const SolveResult r = solve_generalized(g);
                        return r.solvable ? *r.length : -1;
                    };
                    std::cout << len(a) << "," << len(b) << "," << len(c) << "\n";
                }
            }
        } else if (*fsolve) {
            const GeneralizedBoard gb = parse_generalized(read_file(opt.input));
            json j = solve_json(solve_generalized(gb), gb.n(), nullptr);
            j["variant"] = "f9";
            emit(j);
        } else if (*crandom) {
            const CubeBoard cb = CubeBoard::random(opt.n, opt.seed);
            emit_board(opt, serialize_cube(cb), "cube-random", opt.n, opt.seed);
        } else if (*csolve) {
            const CubeBoard cb = parse_cube(read_file(opt.input));
            const CubeSolveResult r = solve_cube(cb);
            json j;
            j["op"] = "solve";
            j["variant"] = "cube";
            j["n"] = cb.n();
            j["solvable"] = r.solvable;
            if (r.solvable) {
                j["length"] = *r.length;
                json moves = json::array();
                for (const Pos3 p : r.witness) moves.push_back(json::array({p.i, p.j, p.k}));
                j["witness"] = moves;
            }
            j["visited"] = r.visited_count;
            emit(j);
        } else if (*cstats) {
            EstimateReport rep = estimate_cube_stats(opt.n, opt.samples, opt.seed, opt.workers);
            if (opt.format == "csv") {
                std::cout << histogram_csv(rep.histogram);
            } else {
                json j = estimate_json(rep, !opt.no_timing);
                j["variant"] = "cube";
                emit(j);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
