#include "windrose/stats.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "windrose/solver.hpp"

namespace windrose {

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    if (const char* env = std::getenv("WINDROSE_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return omp_get_max_threads();
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void fill_interval(EstimateReport& r) {
    const double z = 1.96;
    if (r.wilson) {
        const double nn = static_cast<double>(r.samples);
        const double p = r.estimate;
        const double denom = 1.0 + z * z / nn;
        const double center = (p + z * z / (2 * nn)) / denom;
        const double half = z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn)) / denom;
        r.ci_lo = center - half;
        r.ci_hi = center + half;
    } else {
        r.ci_lo = r.estimate - z * r.stderr_;
        r.ci_hi = r.estimate + z * r.stderr_;
    }
}

struct BernoulliAccum {
    std::int64_t solvable = 0;
    std::vector<std::int64_t> hist;  // length -> count, index up to n^2

    explicit BernoulliAccum(int n) : hist(static_cast<std::size_t>(n) * n, 0) {}

    void merge(const BernoulliAccum& o) {
        solvable += o.solvable;
        for (std::size_t k = 0; k < hist.size(); ++k) hist[k] += o.hist[k];
    }
};

// Number of index shards for a run; oversharding lets the dynamic
// schedule balance uneven per-sample costs. Results are shard-count
// independent: every accumulator is a plain merge of per-sample values.
int shard_count(std::int64_t total, int nthreads, bool parallel) {
    if (!parallel) return 1;
    const std::int64_t s = std::min<std::int64_t>(total, static_cast<std::int64_t>(nthreads) * 8);
    return static_cast<int>(std::max<std::int64_t>(s, 1));
}

void run_chunks(std::int64_t total, int shards, int nthreads, bool parallel,
                const std::function<void(int, std::int64_t, std::int64_t)>& body) {
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
        for (int c = 0; c < shards; ++c)
            body(c, total * c / shards, total * (c + 1) / shards);
    } else {
        for (int c = 0; c < shards; ++c)
            body(c, total * c / shards, total * (c + 1) / shards);
    }
}

EstimateReport solvable_probability_impl(int n, std::int64_t samples, std::uint64_t seed,
                                         int workers, bool wilson, bool parallel) {
    if (samples < 1) throw Error("samples must be >= 1");
    const auto t0 = Clock::now();
    const int nthreads = parallel ? resolve_workers(workers) : 1;
    const int shards = shard_count(samples, nthreads, parallel);
    std::vector<BernoulliAccum> acc(shards, BernoulliAccum(n));
    run_chunks(samples, shards, nthreads, parallel, [&](int c, std::int64_t lo, std::int64_t hi) {
        BernoulliAccum& a = acc[c];
        for (std::int64_t k = lo; k < hi; ++k) {
            const Board b = Board::random(n, rng::at(seed, static_cast<std::uint64_t>(k)));
            const SolveResult r = solve(b);
            if (r.solvable) {
                ++a.solvable;
                ++a.hist[static_cast<std::size_t>(*r.length)];
            }
        }
    });
    for (std::size_t c = 1; c < acc.size(); ++c) acc[0].merge(acc[c]);

    EstimateReport rep;
    rep.op = "solvable-prob";
    rep.n = n;
    rep.samples = samples;
    rep.solvable_samples = acc[0].solvable;
    rep.seed = seed;
    rep.workers = nthreads;
    rep.wilson = wilson;
    const double p = static_cast<double>(acc[0].solvable) / static_cast<double>(samples);
    rep.estimate = p;
    rep.stderr_ = std::sqrt(p * (1 - p) / static_cast<double>(samples));
    fill_interval(rep);
    for (std::size_t k = 0; k < acc[0].hist.size(); ++k)
        if (acc[0].hist[k] > 0) rep.histogram[static_cast<int>(k)] = acc[0].hist[k];
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

struct SolvedSample {
    Board board;
    int length;
    std::int64_t draws;  // boards generated, including the accepted one
};

SolvedSample draw_solvable(int n, std::uint64_t sample_seed, std::int64_t budget) {
    for (std::int64_t a = 0; budget < 0 || a <= budget; ++a) {
        Board b = Board::random(n, rng::at(sample_seed, static_cast<std::uint64_t>(a)));
        const SolveResult r = solve(b);
        if (r.solvable) return {std::move(b), *r.length, a + 1};
    }
    throw Error("rejection budget exhausted while sampling a solvable board");
}

struct LengthAccum {
    std::int64_t sum = 0;
    std::int64_t sum_sq = 0;
    std::int64_t draws = 0;
    std::vector<std::int64_t> hist;

    explicit LengthAccum(int n) : hist(static_cast<std::size_t>(n) * n, 0) {}

    void merge(const LengthAccum& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
        draws += o.draws;
        for (std::size_t k = 0; k < hist.size(); ++k) hist[k] += o.hist[k];
    }
};

ExpectedLengthResult expected_length_impl(int n, std::int64_t solvable_samples,
                                          std::uint64_t seed, int workers, bool parallel) {
    if (solvable_samples < 1) throw Error("solvable_samples must be >= 1");
    const auto t0 = Clock::now();
    const int nthreads = parallel ? resolve_workers(workers) : 1;
    const int shards = shard_count(solvable_samples, nthreads, parallel);
    std::vector<LengthAccum> acc(shards, LengthAccum(n));
    run_chunks(solvable_samples, shards, nthreads, parallel, [&](int c, std::int64_t lo, std::int64_t hi) {
        LengthAccum& a = acc[c];
        for (std::int64_t k = lo; k < hi; ++k) {
            const SolvedSample s = draw_solvable(n, rng::at(seed, static_cast<std::uint64_t>(k)), -1);
            a.sum += s.length;
            a.sum_sq += static_cast<std::int64_t>(s.length) * s.length;
            a.draws += s.draws;
            ++a.hist[static_cast<std::size_t>(s.length)];
        }
    });
    for (std::size_t c = 1; c < acc.size(); ++c) acc[0].merge(acc[c]);

    ExpectedLengthResult out;
    EstimateReport& rep = out.report;
    rep.op = "expected-length";
    rep.n = n;
    rep.samples = acc[0].draws;
    rep.solvable_samples = solvable_samples;
    rep.seed = seed;
    rep.workers = nthreads;
    const double s_count = static_cast<double>(solvable_samples);
    const double mean = static_cast<double>(acc[0].sum) / s_count;
    rep.estimate = mean;
    if (solvable_samples > 1) {
        const double var =
            (static_cast<double>(acc[0].sum_sq) - s_count * mean * mean) / (s_count - 1);
        rep.stderr_ = std::sqrt(std::max(var, 0.0) / s_count);
    }
    rep.ci_lo = rep.estimate - 1.96 * rep.stderr_;
    rep.ci_hi = rep.estimate + 1.96 * rep.stderr_;
    out.dist.n = n;
    out.dist.total = solvable_samples;
    for (std::size_t k = 0; k < acc[0].hist.size(); ++k) {
        if (acc[0].hist[k] > 0) {
            rep.histogram[static_cast<int>(k)] = acc[0].hist[k];
            out.dist.counts[static_cast<int>(k)] = acc[0].hist[k];
        }
    }
    rep.elapsed_ms = ms_since(t0);
    return out;
}

}  // namespace

EstimateReport estimate_solvable_probability(int n, std::int64_t samples,
                                             std::uint64_t seed, int workers, bool wilson) {
    return solvable_probability_impl(n, samples, seed, workers, wilson, true);
}

EstimateReport estimate_solvable_probability_serial(int n, std::int64_t samples,
                                                    std::uint64_t seed, bool wilson) {
    return solvable_probability_impl(n, samples, seed, 1, wilson, false);
}

SolvableSample sample_solvable_board(int n, std::uint64_t seed, std::int64_t budget) {
    SolvedSample s = draw_solvable(n, seed, budget);
    return {std::move(s.board), s.draws - 1};
}

ExpectedLengthResult estimate_expected_length(int n, std::int64_t solvable_samples,
                                              std::uint64_t seed, int workers) {
    return expected_length_impl(n, solvable_samples, seed, workers, true);
}

ExpectedLengthResult estimate_expected_length_serial(int n, std::int64_t solvable_samples,
                                                     std::uint64_t seed) {
    return expected_length_impl(n, solvable_samples, seed, 1, false);
}

// --- closed-form bounds ----------------------------------------------------

Rational solvable_probability_lower_bound(int n) {
    if (n < 3 || n % 2 == 0) throw Error("size must be an odd integer >= 3");
    const Rational q = rational_pow(Rational(63, 64), n - 2);
    return Rational(1, 8) * (1 + 2 * (1 - Rational(7, 8) * q));
}

LengthClassBounds length_class_bounds(int n) {
    if (n < 3 || n % 2 == 0) throw Error("size must be an odd integer >= 3");
    const Rational q = rational_pow(Rational(63, 64), n - 2);
    LengthClassBounds b;
    b.len1_lb = Rational(1, 3);
    b.len2_lb = Rational(5, 32);
    b.len3_lb = (1 - q) * Rational(49, 96);
    b.tail_ub = q * Rational(49, 96);
    return b;
}

LengthBracket expected_length_bracket(int n, bool loose_tail) {
    if (n < 3 || n % 2 == 0) throw Error("size must be an odd integer >= 3");
    const Rational q = rational_pow(Rational(63, 64), n - 2);
    const Rational c96(49, 96);
    const Rational tail = loose_tail ? Rational(49, 64) : c96;
    const Rational n4 = Rational(BigInt(n) * n * n * n);
    LengthBracket br;
    br.lower = Rational(1, 3) + 2 * Rational(5, 32) + 3 * (1 - q) * c96;
    br.upper = (Rational(1, 3) + q * c96) + 2 * (Rational(5, 32) + q * c96) + 3 * tail +
               n4 * q * tail;
    return br;
}

// --- exact census (n = 3) ----------------------------------------------------

namespace {

// flat cells 0..8 on the 3x3 grid; the center is 4. Config digit m covers
// flat cell m for m < 4 and m+1 for m >= 4 (the center's wind cannot
// affect length, so it is factored out as a multiplicity of 8).
constexpr int config_cell(int m) { return m < 4 ? m : m + 1; }

std::array<std::array<std::uint16_t, 8>, 9> build_target_masks() {
    std::array<std::array<std::uint16_t, 8>, 9> t{};
    for (int f = 0; f < 9; ++f) {
        const int pi = f / 3 + 1, pj = f % 3 + 1;
        for (int d = 0; d < 8; ++d) {
            const auto [di, dj] = delta(static_cast<Dir>(d));
            std::uint16_t mask = 0;
            for (int i = pi + di, j = pj + dj; i >= 1 && i <= 3 && j >= 1 && j <= 3;
                 i += di, j += dj)
                mask |= static_cast<std::uint16_t>(1u << ((i - 1) * 3 + (j - 1)));
            t[f][d] = mask;
        }
    }
    return t;
}

// Shortest 0 -> 4 distance by bitmask BFS; -1 when unreachable. The
// center is detected before expansion, so its wind is never read.
inline int census_length(const std::array<std::array<std::uint16_t, 8>, 9>& tmask,
                         const std::array<std::uint8_t, 9>& dig) {
    std::uint16_t visited = 1, frontier = 1;
    int len = 0;
    while (frontier) {
        std::uint16_t next = 0;
        for (std::uint16_t fr = frontier; fr; fr &= static_cast<std::uint16_t>(fr - 1)) {
            const int cell = std::countr_zero(fr);
            next |= tmask[cell][dig[cell]];
        }
        next &= static_cast<std::uint16_t>(~visited);
        if (!next) return -1;
        ++len;
        if (next & (1u << 4)) return len;
        visited |= next;
        frontier = next;
    }
    return -1;
}

// Independent route for the subsample check: the eight directing-to
// clauses written as arithmetic conditions, plus a Warshall-style
// min-plus closure.
bool clause_directing(Dir d, int i, int j, int ii, int jj) {
    switch (d) {
        case Dir::N: return j == jj && i > ii;
        case Dir::NE: return i - ii == jj - j && i > ii;
        case Dir::E: return i == ii && j < jj;
        case Dir::SE: return ii - i == jj - j && ii > i;
        case Dir::S: return j == jj && ii > i;
        case Dir::SW: return ii - i == j - jj && ii > i;
        case Dir::W: return i == ii && jj < j;
        case Dir::NW: return i - ii == j - jj && i > ii;
    }
    return false;
}

int oracle_length_3x3(const std::array<Dir, 9>& cells) {
    constexpr int inf = 99;
    std::array<std::array<int, 9>, 9> dist;
    for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v) dist[u][v] = u == v ? 0 : inf;
    for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v) {
            if (u == v) continue;
            if (clause_directing(cells[u], u / 3 + 1, u % 3 + 1, v / 3 + 1, v % 3 + 1))
                dist[u][v] = 1;
        }
    for (int k = 0; k < 9; ++k)
        for (int u = 0; u < 9; ++u)
            for (int v = 0; v < 9; ++v)
                dist[u][v] = std::min(dist[u][v], dist[u][k] + dist[k][v]);
    return dist[0][4] >= inf ? -1 : dist[0][4];
}

struct CensusAccum {
    std::array<std::int64_t, 9> counts{};  // lengths 1..8
    std::int64_t unsolvable = 0;
    std::array<std::int64_t, 8> by_corner{};
    int max_len = -1;
    std::uint32_t max_idx = 0;
    std::int64_t oracle_checked = 0;
    std::int64_t oracle_mismatches = 0;

    void merge(const CensusAccum& o) {
        for (int k = 0; k < 9; ++k) counts[k] += o.counts[k];
        unsolvable += o.unsolvable;
        for (int k = 0; k < 8; ++k) by_corner[k] += o.by_corner[k];
        if (o.max_len > max_len || (o.max_len == max_len && o.max_idx < max_idx)) {
            max_len = o.max_len;
            max_idx = o.max_idx;
        }
        oracle_checked += o.oracle_checked;
        oracle_mismatches += o.oracle_mismatches;
    }
};

CensusResult census_impl(int n, int workers, double oracle_fraction,
                         std::uint64_t oracle_seed, bool parallel) {
    if (n != 3) throw Error("the exhaustive census is only feasible at n = 3");
    const auto t0 = Clock::now();
    const auto tmask = build_target_masks();
    const std::int64_t total_configs = std::int64_t{1} << 24;  // 8^8
    const bool oracle_all = oracle_fraction >= 1.0;
    const bool oracle_none = oracle_fraction <= 0.0;
    const std::uint64_t oracle_thresh =
        oracle_none ? 0
                    : static_cast<std::uint64_t>(oracle_fraction * 18446744073709551616.0);

    const int nthreads = parallel ? resolve_workers(workers) : 1;
    const int shards = shard_count(total_configs, nthreads, parallel);
    std::vector<CensusAccum> acc(shards);
    run_chunks(total_configs, shards, nthreads, parallel, [&](int c, std::int64_t lo, std::int64_t hi) {
        CensusAccum& a = acc[c];
        std::array<std::uint8_t, 9> dig{};
        for (std::int64_t cfg = lo; cfg < hi; ++cfg) {
            for (int m = 0; m < 8; ++m)
                dig[config_cell(m)] = static_cast<std::uint8_t>((cfg >> (3 * m)) & 7);
            const int len = census_length(tmask, dig);
            if (len < 0) {
                a.unsolvable += 8;
            } else {
                a.counts[len] += 8;
                a.by_corner[dig[0]] += 8;
                if (len > a.max_len ||
                    (len == a.max_len && static_cast<std::uint32_t>(cfg) < a.max_idx)) {
                    a.max_len = len;
                    a.max_idx = static_cast<std::uint32_t>(cfg);
                }
            }
            if (!oracle_none) {
                const std::uint64_t sel = rng::at(oracle_seed, static_cast<std::uint64_t>(cfg));
                if (oracle_all || sel < oracle_thresh) {
                    std::array<Dir, 9> cells;
                    for (int f = 0; f < 9; ++f) cells[f] = static_cast<Dir>(dig[f]);
                    cells[4] = static_cast<Dir>(sel & 7);  // center wind must not matter
                    ++a.oracle_checked;
                    if (oracle_length_3x3(cells) != len) ++a.oracle_mismatches;
                }
            }
        }
    });
    for (std::size_t c = 1; c < acc.size(); ++c) acc[0].merge(acc[c]);
    const CensusAccum& a = acc[0];

    CensusResult res{.dist = {}, .solvable = 0, .mean_length = 0, .max_length = 0,
                     .ml_witness = Board::filled(3, Dir::N), .solvable_by_corner = {},
                     .oracle_checked = a.oracle_checked,
                     .oracle_mismatches = a.oracle_mismatches, .elapsed_ms = 0};
    res.dist.n = 3;
    res.dist.unsolvable = a.unsolvable;
    res.dist.total = total_configs * 8;
    std::int64_t weighted = 0;
    for (int k = 1; k < 9; ++k) {
        if (a.counts[k] > 0) res.dist.counts[k] = a.counts[k];
        res.solvable += a.counts[k];
        weighted += k * a.counts[k];
    }
    res.mean_length = Rational(weighted, res.solvable);
    res.max_length = a.max_len;
    res.solvable_by_corner = a.by_corner;
    {
        std::vector<Dir> cells(9, Dir::N);
        for (int m = 0; m < 8; ++m)
            cells[config_cell(m)] = static_cast<Dir>((a.max_idx >> (3 * m)) & 7);
        cells[4] = Dir::N;
        res.ml_witness = Board(3, std::move(cells));
    }
    res.elapsed_ms = ms_since(t0);
    return res;
}

}  // namespace

CensusResult exact_census(int n, int workers, double oracle_fraction,
                          std::uint64_t oracle_seed) {
    return census_impl(n, workers, oracle_fraction, oracle_seed, true);
}

CensusResult exact_census_serial(int n, double oracle_fraction, std::uint64_t oracle_seed) {
    return census_impl(n, 1, oracle_fraction, oracle_seed, false);
}

// --- exact short-length counts ----------------------------------------------

namespace {

// First step index t >= 1 with from + t*delta(d) == to, or 0 if none.
int ray_step(Dir d, Pos from, Pos to) {
    const auto [di, dj] = delta(d);
    int t;
    if (di != 0) {
        t = (to.i - from.i) * di;
        if (t < 1) return 0;
        if (to.j - from.j != dj * t) return 0;
    } else {
        if (to.i != from.i) return 0;
        t = (to.j - from.j) * dj;
        if (t < 1) return 0;
    }
    return t;
}

}  // namespace

BigInt count_short_boards(int n, int k) {
    if (n < 3 || n % 2 == 0) throw Error("size must be an odd integer >= 3");
    if (k != 1 && k != 2) throw Error("closed-form counts exist for lengths 1 and 2 only");
    if (k == 1) return bigint_pow(8, n * n - 1);

    // Only five cells can matter for a length-2 game: the corner and the
    // four cells its E/S rays meet that can point at the center.
    const int c = (n + 1) / 2;
    const Pos corner{1, 1};
    const Pos center{c, c};
    const std::array<Pos, 4> mids = {Pos{1, c}, Pos{1, n}, Pos{c, 1}, Pos{n, 1}};
    std::int64_t hits = 0;
    for (int assign = 0; assign < 8 * 8 * 8 * 8 * 8; ++assign) {
        const Dir corner_dir = static_cast<Dir>(assign & 7);
        if (corner_dir == Dir::SE) continue;  // already a win in one
        bool win2 = false;
        for (int m = 0; m < 4 && !win2; ++m) {
            const Dir mid_dir = static_cast<Dir>((assign >> (3 * (m + 1))) & 7);
            win2 = ray_step(corner_dir, corner, mids[m]) > 0 &&
                   ray_step(mid_dir, mids[m], center) > 0;
        }
        if (win2) ++hits;
    }
    return BigInt(hits) * bigint_pow(8, n * n - 5);
}

}  // namespace windrose
