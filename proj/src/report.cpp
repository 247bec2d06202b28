#include "windrose/report.hpp"

#include <chrono>

namespace windrose {

using nlohmann::json;

namespace {

json histogram_json(const std::map<int, std::int64_t>& hist) {
    json h = json::object();
    for (const auto& [len, count] : hist) h[std::to_string(len)] = count;
    return h;
}

}  // namespace

json estimate_json(const EstimateReport& r, bool with_volatile) {
    json j;
    j["op"] = r.op;
    j["n"] = r.n;
    j["samples"] = r.samples;
    j["solvable_samples"] = r.solvable_samples;
    j["estimate"] = r.estimate;
    j["stderr"] = r.stderr_;
    j["ci95"] = json::array({r.ci_lo, r.ci_hi});
    j["seed"] = r.seed;
    j["histogram"] = histogram_json(r.histogram);
    if (r.wilson) j["interval"] = "wilson";
    if (with_volatile) {
        j["workers"] = r.workers;
        j["elapsed_ms"] = r.elapsed_ms;
    }
    return j;
}

json census_json(const CensusResult& c, int n, std::uint64_t oracle_seed, int workers,
                 bool with_volatile) {
    json j;
    j["op"] = "census";
    j["n"] = n;
    j["total"] = c.dist.total;
    j["solvable"] = c.solvable;
    j["unsolvable"] = c.dist.unsolvable;
    j["histogram"] = histogram_json(c.dist.counts);
    j["mean_length"] = rational_str(c.mean_length);
    j["mean_length_double"] = rational_double(c.mean_length);
    j["max_length"] = c.max_length;
    j["max_length_witness"] = serialize_board(c.ml_witness);
    json corner = json::object();
    for (int d = 0; d < 8; ++d)
        if (c.solvable_by_corner[d] > 0)
            corner[dir_name(static_cast<Dir>(d))] = c.solvable_by_corner[d];
    j["solvable_by_corner"] = corner;
    j["oracle_checked"] = c.oracle_checked;
    j["oracle_mismatches"] = c.oracle_mismatches;
    j["seed"] = oracle_seed;
    if (with_volatile) {
        j["workers"] = workers;
        j["elapsed_ms"] = c.elapsed_ms;
    }
    return j;
}

json solve_json(const SolveResult& r, int n, const Board* witness_board_of) {
    json j;
    j["op"] = "solve";
    j["n"] = n;
    j["solvable"] = r.solvable;
    if (r.solvable) {
        j["length"] = *r.length;
        json moves = json::array();
        for (const Pos p : r.witness->moves) moves.push_back(json::array({p.i, p.j}));
        j["witness"] = moves;
    }
    j["visited"] = r.visited_count;
    (void)witness_board_of;
    return j;
}

json search_json(const SearchReport& r, bool with_volatile) {
    json j;
    j["op"] = "long-board-search";
    j["n"] = r.n;
    j["best_length"] = r.best_length;
    j["ratio"] = r.ratio;
    j["board"] = serialize_board(r.best);
    j["iterations"] = r.iterations;
    j["restarts"] = r.restarts;
    j["seed"] = r.seed;
    j["accepted"] = r.accepted;
    j["improved"] = r.improved;
    (void)with_volatile;
    return j;
}

json scan_json(const ScanResult& r, int n, std::int64_t samples, std::uint64_t seed,
               int workers, bool with_volatile) {
    json j;
    j["op"] = "symmetry-scan";
    j["n"] = n;
    j["samples"] = samples;
    j["candidates"] = r.candidates;
    j["falsified_cheap"] = r.falsified_cheap;
    j["falsified_iso"] = r.falsified_iso;
    j["survivors"] = r.survivors;
    j["seed"] = seed;
    if (with_volatile) j["workers"] = workers;
    return j;
}

TorusBoundCheck torus_bound_check(int n, std::int64_t samples, std::uint64_t seed,
                                  int workers) {
    if (samples < 1) throw Error("samples must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const int chunks = resolve_workers(workers);

    struct Accum {
        std::int64_t solvable = 0;
        int max_length = 0;
        std::int64_t violations = 0;
        std::int64_t line_revisits = 0;
    };
    std::vector<Accum> acc(chunks);

#pragma omp parallel for schedule(static) num_threads(chunks)
    for (int c = 0; c < chunks; ++c) {
        const std::int64_t lo = samples * c / chunks, hi = samples * (c + 1) / chunks;
        for (std::int64_t k = lo; k < hi; ++k) {
            const TorusBoard tb = TorusBoard::random(n, rng::at(seed, static_cast<std::uint64_t>(k)));
            const SolveResult r = solve_torus(tb);
            if (!r.solvable) continue;
            ++acc[c].solvable;
            acc[c].max_length = std::max(acc[c].max_length, *r.length);
            if (*r.length > 4 * n) ++acc[c].violations;
            if (!line_trace(tb, *r.witness).ok) ++acc[c].line_revisits;
        }
    }

    TorusBoundCheck out;
    out.n = n;
    out.samples = samples;
    out.bound = 4 * n;
    out.seed = seed;
    out.workers = chunks;
    for (const auto& a : acc) {
        out.solvable_samples += a.solvable;
        out.max_length = std::max(out.max_length, a.max_length);
        out.violations += a.violations;
        out.line_revisit_violations += a.line_revisits;
    }
    out.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return out;
}

json torus_bound_check_json(const TorusBoundCheck& r, bool with_volatile) {
    json j;
    j["op"] = "torus-bound-check";
    j["n"] = r.n;
    j["samples"] = r.samples;
    j["solvable_samples"] = r.solvable_samples;
    j["max_length"] = r.max_length;
    j["bound"] = r.bound;
    j["violations"] = r.violations;
    j["line_revisit_violations"] = r.line_revisit_violations;
    j["seed"] = r.seed;
    if (with_volatile) {
        j["workers"] = r.workers;
        j["elapsed_ms"] = r.elapsed_ms;
    }
    return j;
}

json bounds_json(int n, bool loose_tail) {
    const Rational lb = solvable_probability_lower_bound(n);
    const LengthClassBounds cls = length_class_bounds(n);
    const LengthBracket br = expected_length_bracket(n, loose_tail);
    json j;
    j["op"] = "bounds";
    j["n"] = n;
    j["solvable_lower_bound"] = rational_str(lb);
    j["solvable_lower_bound_double"] = rational_double(lb);
    j["solvable_upper_bound"] = "3/8";
    j["length_class_lower_bounds"] = {rational_str(cls.len1_lb), rational_str(cls.len2_lb),
                                      rational_str(cls.len3_lb)};
    j["length_tail_upper_bound"] = rational_str(cls.tail_ub);
    j["expected_length_lower"] = rational_str(br.lower);
    j["expected_length_lower_double"] = rational_double(br.lower);
    j["expected_length_upper"] = rational_str(br.upper);
    j["expected_length_upper_double"] = rational_double(br.upper);
    j["expected_length_limit"] = "209/96";
    j["tail_constant"] = loose_tail ? "49/64" : "49/96";
    return j;
}

std::string histogram_csv(const std::map<int, std::int64_t>& hist, std::int64_t unsolvable) {
    std::string out = "length,count\n";
    for (const auto& [len, count] : hist)
        out += std::to_string(len) + "," + std::to_string(count) + "\n";
    if (unsolvable >= 0) out += "-1," + std::to_string(unsolvable) + "\n";
    return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace windrose
