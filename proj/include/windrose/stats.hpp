#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "windrose/board.hpp"
#include "windrose/rational.hpp"

namespace windrose {

// Seeded Monte Carlo estimate with a normal-approximation 95% interval.
// Identical (n, samples, seed) give identical reports for any worker
// count: per-sample substreams are keyed by (seed, sample index) and all
// accumulators are integers.
struct EstimateReport {
    std::string op;
    int n = 0;
    std::int64_t samples = 0;           // boards drawn (including rejections)
    std::int64_t solvable_samples = 0;  // solvable boards among them
    double estimate = 0.0;
    double stderr_ = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::uint64_t seed = 0;
    int workers = 0;
    std::map<int, std::int64_t> histogram;  // length -> count over solvable draws
    double elapsed_ms = 0.0;
    bool wilson = false;
};

struct LengthDistribution {
    int n = 0;
    std::map<int, std::int64_t> counts;  // length -> boards
    std::int64_t unsolvable = 0;
    std::int64_t total = 0;
};

// P(random board is solvable), as a Bernoulli estimate.
EstimateReport estimate_solvable_probability(int n, std::int64_t samples,
                                             std::uint64_t seed, int workers,
                                             bool wilson = false);
// Plain-loop reference for the OpenMP kernel above; must agree field by field.
EstimateReport estimate_solvable_probability_serial(int n, std::int64_t samples,
                                                    std::uint64_t seed,
                                                    bool wilson = false);

// (1/8) * (1 + 2 * (1 - (7/8)(63/64)^(n-2))): an exact lower bound on the
// solvable probability, increasing in n with limit 3/8.
Rational solvable_probability_lower_bound(int n);

struct SolvableSample {
    Board board;
    std::int64_t rejections = 0;
};

// Uniform over solvable boards of size n, by rejection from the uniform
// board measure. budget < 0 means unbounded.
SolvableSample sample_solvable_board(int n, std::uint64_t seed,
                                     std::int64_t budget = -1);

struct ExpectedLengthResult {
    EstimateReport report;  // estimate = mean length over solvable samples
    LengthDistribution dist;
};

ExpectedLengthResult estimate_expected_length(int n, std::int64_t solvable_samples,
                                              std::uint64_t seed, int workers);
ExpectedLengthResult estimate_expected_length_serial(int n,
                                                     std::int64_t solvable_samples,
                                                     std::uint64_t seed);

struct LengthClassBounds {
    Rational len1_lb;   // 1/3
    Rational len2_lb;   // 5/32
    Rational len3_lb;   // (1 - (63/64)^(n-2)) * 49/96
    Rational tail_ub;   // (63/64)^(n-2) * 49/96, per class k >= 4
};

LengthClassBounds length_class_bounds(int n);

struct LengthBracket {
    Rational lower;
    Rational upper;
};

// Bracket on the expected length of a random solvable board; both ends
// converge to 209/96. The default upper end uses the 49/96 tail constant
// throughout; loose_tail = true swaps in the looser 49/64 variant for
// comparison (it does not converge to 209/96).
LengthBracket expected_length_bracket(int n, bool loose_tail = false);

struct CensusResult {
    LengthDistribution dist;             // exact counts over all 8^(n^2) boards
    std::int64_t solvable = 0;
    Rational mean_length;                // exact mean over solvable boards
    int max_length = 0;
    Board ml_witness;                    // lowest-index board attaining max_length
    std::array<std::int64_t, 8> solvable_by_corner{};  // per corner wind
    std::int64_t oracle_checked = 0;
    std::int64_t oracle_mismatches = 0;
    double elapsed_ms = 0.0;
};

// Exhaustive census of all boards of size 3 (134,217,728 of them).
// A fraction of boards, selected by (oracle_seed, board index), is
// re-solved with an independent Warshall-style distance oracle;
// mismatches are counted (and must be zero).
CensusResult exact_census(int n, int workers, double oracle_fraction = 0.01,
                          std::uint64_t oracle_seed = 1);
CensusResult exact_census_serial(int n, double oracle_fraction = 0.01,
                                 std::uint64_t oracle_seed = 1);

// Exact number of solvable boards of length k (k in {1,2}): 8^(n^2-1) and
// 30*8^(n^2-3), computed by enumerating the five relevant cells times the
// free-cell multiplicity.
BigInt count_short_boards(int n, int k);

// Effective worker count: workers > 0 as requested, otherwise the
// WINDROSE_WORKERS environment variable, otherwise the OpenMP default.
int resolve_workers(int workers);

}  // namespace windrose
