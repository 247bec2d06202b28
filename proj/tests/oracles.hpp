#pragma once

// Test-only reference implementations. Each takes a deliberately different
// route from the library code it checks: adjacency is built from the eight
// directing clauses written as arithmetic conditions (no ray walking), and
// the graph algorithms are dense-matrix textbook versions.

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "windrose/board.hpp"
#include "windrose/f9.hpp"

namespace oracles {

using windrose::Board;
using windrose::Dir;
using windrose::Pos;

inline bool clause_directing(Dir d, int i, int j, int ii, int jj) {
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

inline std::vector<std::vector<bool>> adjacency(const Board& b) {
    const int n = b.n(), n2 = n * n;
    std::vector<std::vector<bool>> adj(n2, std::vector<bool>(n2, false));
    for (int u = 0; u < n2; ++u)
        for (int v = 0; v < n2; ++v) {
            if (u == v) continue;
            adj[u][v] = clause_directing(b.at(u / n + 1, u % n + 1), u / n + 1, u % n + 1,
                                         v / n + 1, v % n + 1);
        }
    return adj;
}

// Reflexive-transitive closure by Warshall's triple loop.
inline std::vector<std::vector<bool>> warshall_closure(const Board& b) {
    auto m = adjacency(b);
    const int n2 = static_cast<int>(m.size());
    for (int v = 0; v < n2; ++v) m[v][v] = true;
    for (int k = 0; k < n2; ++k)
        for (int u = 0; u < n2; ++u) {
            if (!m[u][k]) continue;
            for (int v = 0; v < n2; ++v)
                if (m[k][v]) m[u][v] = true;
        }
    return m;
}

// Shortest corner-to-center distance by min-plus Floyd-Warshall.
inline std::optional<int> shortest_length(const Board& b) {
    const auto adj = adjacency(b);
    const int n2 = static_cast<int>(adj.size());
    const int inf = n2 + 1;
    std::vector<std::vector<int>> dist(n2, std::vector<int>(n2, inf));
    for (int u = 0; u < n2; ++u) {
        dist[u][u] = 0;
        for (int v = 0; v < n2; ++v)
            if (adj[u][v]) dist[u][v] = 1;
    }
    for (int k = 0; k < n2; ++k)
        for (int u = 0; u < n2; ++u)
            for (int v = 0; v < n2; ++v)
                dist[u][v] = std::min(dist[u][v], dist[u][k] + dist[k][v]);
    const int center = b.flat(b.center());
    if (dist[0][center] >= inf) return std::nullopt;
    return dist[0][center];
}

// Exact-k walk lengths by boolean vector-matrix powers, with the center's
// row zeroed so walks stop on first arrival.
inline std::set<int> walk_lengths(const Board& b, int cap) {
    auto adj = adjacency(b);
    const int n2 = static_cast<int>(adj.size());
    const int center = b.flat(b.center());
    for (int v = 0; v < n2; ++v) adj[center][v] = false;
    std::vector<bool> layer(n2, false);
    layer[0] = true;
    std::set<int> out;
    for (int k = 1; k <= cap; ++k) {
        std::vector<bool> next(n2, false);
        bool any = false;
        for (int u = 0; u < n2; ++u) {
            if (!layer[u]) continue;
            for (int v = 0; v < n2; ++v)
                if (adj[u][v]) {
                    next[v] = true;
                    any = true;
                }
        }
        if (!any) break;
        if (next[center]) out.insert(k);
        layer = next;
    }
    return out;
}

// GF(9) product along the polynomial route: multiply in (Z/3)[x], then
// reduce the x^2 coefficient with x^2 = -1.
inline windrose::F9 poly_mul(windrose::F9 l, windrose::F9 r) {
    const int c0 = l.a * r.a, c1 = l.a * r.b + l.b * r.a, c2 = l.b * r.b;
    const int a = ((c0 - c2) % 3 + 3) % 3;
    const int b = (c1 % 3 + 3) % 3;
    return {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
}

inline windrose::F9 poly_add(windrose::F9 l, windrose::F9 r) {
    return {static_cast<std::uint8_t>((l.a + r.a) % 3),
            static_cast<std::uint8_t>((l.b + r.b) % 3)};
}

inline windrose::GeneralizedBoard schoolbook_gb_mul(const windrose::GeneralizedBoard& a,
                                                    const windrose::GeneralizedBoard& b) {
    const int n = a.n();
    std::vector<windrose::F9> cells(static_cast<std::size_t>(n) * n, windrose::F9::zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            windrose::F9 acc = windrose::F9::zero();
            for (int k = 0; k < n; ++k)
                acc = poly_add(acc, poly_mul(a.cells()[i * n + k], b.cells()[k * n + j]));
            cells[i * n + j] = acc;
        }
    return windrose::GeneralizedBoard(n, std::move(cells));
}

// Pearson chi-square statistic for observed counts against expected
// probabilities.
inline double chi2(const std::vector<long long>& observed,
                   const std::vector<double>& expected_prob) {
    long long total = 0;
    for (long long o : observed) total += o;
    double stat = 0;
    for (std::size_t k = 0; k < observed.size(); ++k) {
        const double e = expected_prob[k] * static_cast<double>(total);
        const double d = static_cast<double>(observed[k]) - e;
        stat += d * d / e;
    }
    return stat;
}

}  // namespace oracles
