#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "windrose/board.hpp"
#include "windrose/solver.hpp"

namespace windrose {

// Double-rooted directed graph of a board: vertices are positions,
// edges follow the directing-to relation, roots are (1,1) and the center.
struct BoardGraph {
    int n = 0;
    int beginning = 0;                  // flat id of (1,1)
    int end_root = 0;                   // flat id of the center
    std::vector<std::vector<int>> adj;  // per-vertex targets, ray order
    std::int64_t edge_count = 0;
};

BoardGraph build_graph(const Board& b);

// Chebyshev distance of a position to the center cell.
int center_distance(Pos p, int n);

struct DegreeReport {
    int n = 0;
    std::vector<int> out_deg;
    std::vector<int> in_deg;
    std::vector<int> dist;              // center_distance per vertex
    std::int64_t total_edges = 0;
    // vertices breaking (n-1)/2 - d(v) <= Out(v) <= (n-1)/2 + d(v)
    std::vector<int> bound_violations;
};

DegreeReport degree_report(const Board& b);

struct EdgeTotals {
    std::int64_t min_total = 0;  // (n-1)/2 + (n^2-1)(n-3)/6, verified by construction
    std::int64_t max_total = 0;  // (n-1)/2 + (n^2-1)(5n-3)/6, verified by construction
    std::int64_t printed_min = 0;  // n^3/6 - n^2/2 + 5n/6 - 1/2
    std::int64_t printed_max = 0;  // 5n^3/6 - n^2/2 + n/6 - 1/2
};

// Attainable extremal edge totals for size n. The printed_* closed forms
// are a commonly quoted variant that exceeds the attainable totals by
// (n-1)/2; both are reported, only min/max are achievable by boards.
EdgeTotals extremal_edge_totals(int n);

struct InDegreeReport {
    int bound = 0;    // 4(n-1)
    int max_in = 0;
    bool ok = true;
    std::vector<int> over_bound;  // flat ids with In(v) > 4(n-1); always empty
    struct Saturated {
        int v;
        int dist;
        int out;
    };
    std::vector<Saturated> saturated;  // vertices with In(v) == 4(n-1)
};

// Checks In(v) <= 4(n-1) and that saturating vertices are the center
// (d(v) = 0, Out(v) = (n-1)/2).
InDegreeReport in_degree_constraint_check(const Board& b);

// DOT digraph; vertex ids "i_j", the two roots styled distinctly.
std::string export_dot(const BoardGraph& g);

// Mirror through the main diagonal: result(i,j) = transpose_dir(a(j,i)).
// An involution; the reflected board's graph is isomorphic to the
// original via (i,j) -> (j,i), so solvability and length are preserved.
Board reflect(const Board& b);

// A position permutation paired with a wind permutation, acting by
// result(p) = tau(a(sigma(p))).
struct SymmetryCandidate {
    std::string name;
    std::vector<int> sigma;    // flat target -> flat source, size n^2
    std::array<Dir, 8> tau;
};

SymmetryCandidate identity_candidate(int n);
SymmetryCandidate reflect_candidate(int n);  // equals reflect()
SymmetryCandidate inverse(const SymmetryCandidate& c);

Board apply_symmetry(const SymmetryCandidate& c, const Board& b);

enum class IsoVerdict { isomorphic, not_isomorphic, budget_exhausted };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::not_isomorphic;
    std::vector<int> mapping;        // flat id in a -> flat id in b, when isomorphic
    std::int64_t nodes_expanded = 0;
};

// Root-preserving digraph isomorphism by backtracking with degree-profile
// pruning. Exact for n = 3; practical up to n = 5. Budget exhaustion is
// reported distinctly from a definite "no".
IsoResult is_isomorphic(const Board& a, const Board& b,
                        std::int64_t budget = 10'000'000);

// Per-cell grouping of winds by identical target sets; classes[f][d] is
// the smallest wind index whose ray from cell f matches wind d's ray.
// Swapping a cell's wind within its class leaves the edge set unchanged.
std::vector<std::array<int, 8>> trivial_change_classes(const Board& b);

struct ScanResult {
    std::int64_t candidates = 0;
    std::int64_t falsified_cheap = 0;  // killed by solvability/length/degrees
    std::int64_t falsified_iso = 0;    // killed by the full isomorphism test
    std::vector<std::string> survivors;
};

// Falsification scan over the eight dihedral grid maps (paired with their
// induced wind maps) plus every wind permutation paired with the identity
// and transpose grid maps. A candidate survives if S(A) is isomorphic to A
// for every sampled board; per-candidate sample streams are keyed by
// (seed, candidate index), so the scan parallelizes deterministically.
ScanResult symmetry_scan(int n, int sample_size, std::uint64_t seed, int workers);

}  // namespace windrose
