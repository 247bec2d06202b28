#pragma once

#include <string>

#include "json.hpp"

#include "windrose/cube.hpp"
#include "windrose/extremal.hpp"
#include "windrose/graph.hpp"
#include "windrose/solver.hpp"
#include "windrose/stats.hpp"
#include "windrose/torus.hpp"

namespace windrose {

// All builders take with_volatile: when false, fields that may vary
// between otherwise-identical runs (elapsed_ms, workers) are dropped, so
// equal seeds give byte-identical dumps for any worker count.

nlohmann::json estimate_json(const EstimateReport& r, bool with_volatile);
nlohmann::json census_json(const CensusResult& c, int n, std::uint64_t oracle_seed,
                           int workers, bool with_volatile);
nlohmann::json solve_json(const SolveResult& r, int n, const Board* witness_board_of);
nlohmann::json search_json(const SearchReport& r, bool with_volatile);
nlohmann::json scan_json(const ScanResult& r, int n, std::int64_t samples,
                         std::uint64_t seed, int workers, bool with_volatile);

struct TorusBoundCheck {
    int n = 0;
    std::int64_t samples = 0;
    std::int64_t solvable_samples = 0;
    int max_length = 0;
    int bound = 0;  // 4n
    std::int64_t violations = 0;
    std::int64_t line_revisit_violations = 0;
    std::uint64_t seed = 0;
    int workers = 0;
    double elapsed_ms = 0.0;
};

// Solves `samples` random torus boards; counts lengths above 4n and
// line revisits on the BFS witnesses (both stay zero).
TorusBoundCheck torus_bound_check(int n, std::int64_t samples, std::uint64_t seed,
                                  int workers);
nlohmann::json torus_bound_check_json(const TorusBoundCheck& r, bool with_volatile);

nlohmann::json bounds_json(int n, bool loose_tail);

std::string histogram_csv(const std::map<int, std::int64_t>& hist,
                          std::int64_t unsolvable = -1);

std::string dump_json(const nlohmann::json& j);

}  // namespace windrose
