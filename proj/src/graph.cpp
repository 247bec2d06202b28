#include "windrose/graph.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "windrose/stats.hpp"

namespace windrose {

BoardGraph build_graph(const Board& b) {
    BoardGraph g;
    g.n = b.n();
    const int n2 = g.n * g.n;
    g.beginning = 0;
    g.end_root = b.flat(b.center());
    g.adj.resize(n2);
    for (int v = 0; v < n2; ++v) {
        for_each_target(b, b.unflat(v), [&](Pos q) {
            g.adj[v].push_back(b.flat(q));
            return true;
        });
        g.edge_count += static_cast<std::int64_t>(g.adj[v].size());
    }
    return g;
}

int center_distance(Pos p, int n) {
    const int c = (n + 1) / 2;
    return std::max(std::abs(p.i - c), std::abs(p.j - c));
}

DegreeReport degree_report(const Board& b) {
    DegreeReport r;
    r.n = b.n();
    const int n2 = r.n * r.n;
    r.out_deg.assign(n2, 0);
    r.in_deg.assign(n2, 0);
    r.dist.assign(n2, 0);
    for (int v = 0; v < n2; ++v) {
        const Pos p = b.unflat(v);
        r.dist[v] = center_distance(p, r.n);
        for_each_target(b, p, [&](Pos q) {
            ++r.out_deg[v];
            ++r.in_deg[b.flat(q)];
            return true;
        });
        r.total_edges += r.out_deg[v];
    }
    const int half = (r.n - 1) / 2;
    for (int v = 0; v < n2; ++v)
        if (std::abs(r.out_deg[v] - half) > r.dist[v]) r.bound_violations.push_back(v);
    return r;
}

EdgeTotals extremal_edge_totals(int n) {
    if (n < 3 || n % 2 == 0) throw Error("size must be an odd integer >= 3");
    const std::int64_t nn = n;
    const std::int64_t half = (nn - 1) / 2;
    EdgeTotals t;
    t.min_total = half + (nn * nn - 1) * (nn - 3) / 6;
    t.max_total = half + (nn * nn - 1) * (5 * nn - 3) / 6;
    t.printed_min = t.min_total + half;
    t.printed_max = t.max_total + half;
    return t;
}

InDegreeReport in_degree_constraint_check(const Board& b) {
    const DegreeReport d = degree_report(b);
    InDegreeReport r;
    r.bound = 4 * (b.n() - 1);
    const int half = (b.n() - 1) / 2;
    for (int v = 0; v < b.n() * b.n(); ++v) {
        r.max_in = std::max(r.max_in, d.in_deg[v]);
        if (d.in_deg[v] > r.bound) r.over_bound.push_back(v);
        if (d.in_deg[v] == r.bound) {
            r.saturated.push_back({v, d.dist[v], d.out_deg[v]});
            if (d.dist[v] != 0 || d.out_deg[v] != half) r.ok = false;
        }
    }
    if (!r.over_bound.empty()) r.ok = false;
    return r;
}

std::string export_dot(const BoardGraph& g) {
    auto id = [&](int v) {
        return "\"" + std::to_string(v / g.n + 1) + "_" + std::to_string(v % g.n + 1) + "\"";
    };
    std::string out = "digraph board {\n";
    for (int v = 0; v < g.n * g.n; ++v) {
        out += "  " + id(v);
        if (v == g.beginning) out += " [shape=box, style=bold]";
        else if (v == g.end_root) out += " [shape=doublecircle]";
        out += ";\n";
    }
    for (int v = 0; v < g.n * g.n; ++v)
        for (int u : g.adj[v]) out += "  " + id(v) + " -> " + id(u) + ";\n";
    out += "}\n";
    return out;
}

Board reflect(const Board& b) {
    const int n = b.n();
    std::vector<Dir> cells(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            cells[(i - 1) * n + (j - 1)] = transpose_dir(b.at(j, i));
    return Board(n, std::move(cells));
}

SymmetryCandidate identity_candidate(int n) {
    SymmetryCandidate c;
    c.name = "identity";
    c.sigma.resize(static_cast<std::size_t>(n) * n);
    std::iota(c.sigma.begin(), c.sigma.end(), 0);
    for (int d = 0; d < 8; ++d) c.tau[d] = static_cast<Dir>(d);
    return c;
}

SymmetryCandidate reflect_candidate(int n) {
    SymmetryCandidate c;
    c.name = "reflect-main";
    c.sigma.resize(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            c.sigma[(i - 1) * n + (j - 1)] = (j - 1) * n + (i - 1);
    for (int d = 0; d < 8; ++d) c.tau[d] = transpose_dir(static_cast<Dir>(d));
    return c;
}

SymmetryCandidate inverse(const SymmetryCandidate& c) {
    SymmetryCandidate inv;
    inv.name = c.name + "-inverse";
    inv.sigma.resize(c.sigma.size());
    for (std::size_t p = 0; p < c.sigma.size(); ++p) inv.sigma[c.sigma[p]] = static_cast<int>(p);
    for (int d = 0; d < 8; ++d) inv.tau[static_cast<int>(c.tau[d])] = static_cast<Dir>(d);
    return inv;
}

Board apply_symmetry(const SymmetryCandidate& c, const Board& b) {
    const int n = b.n();
    if (c.sigma.size() != static_cast<std::size_t>(n) * n)
        throw Error("symmetry candidate size does not match the board");
    std::vector<Dir> cells(c.sigma.size());
    for (std::size_t p = 0; p < cells.size(); ++p)
        cells[p] = c.tau[static_cast<int>(b.cells()[c.sigma[p]])];
    return Board(n, std::move(cells));
}

// --- isomorphism ---------------------------------------------------------

namespace {

struct GraphView {
    int n2;
    BitMatrix adj;
    std::vector<int> out_deg, in_deg;

    explicit GraphView(const Board& b) : n2(b.n() * b.n()), adj(n2), out_deg(n2), in_deg(n2) {
        for (int v = 0; v < n2; ++v) {
            for_each_target(b, b.unflat(v), [&](Pos q) {
                const int u = b.flat(q);
                adj.set(v, u);
                ++out_deg[v];
                ++in_deg[u];
                return true;
            });
        }
    }

    std::pair<int, int> profile(int v) const { return {out_deg[v], in_deg[v]}; }
};

bool verify_mapping(const GraphView& ga, const GraphView& gb, const std::vector<int>& map) {
    for (int u = 0; u < ga.n2; ++u)
        for (int v = 0; v < ga.n2; ++v)
            if (u != v && ga.adj.get(u, v) != gb.adj.get(map[u], map[v])) return false;
    return true;
}

}  // namespace

IsoResult is_isomorphic(const Board& a, const Board& b, std::int64_t budget) {
    if (a.n() != b.n()) throw Error("isomorphism requires boards of equal size");
    const int n2 = a.n() * a.n();
    const int center = a.flat(a.center());
    GraphView ga(a), gb(b);
    IsoResult res;

    const auto profile_multiset = [&](const GraphView& g) {
        std::vector<std::pair<int, int>> ps;
        ps.reserve(n2);
        for (int v = 0; v < n2; ++v) ps.push_back(g.profile(v));
        std::sort(ps.begin(), ps.end());
        return ps;
    };
    if (profile_multiset(ga) != profile_multiset(gb)) return res;
    if (ga.profile(0) != gb.profile(0) || ga.profile(center) != gb.profile(center)) return res;

    // Candidate sets by (Out, In) profile; roots are pinned. The center
    // distance is not a graph invariant, so it is not used to prune.
    std::vector<std::vector<int>> cands(n2);
    for (int va = 0; va < n2; ++va) {
        if (va == 0 || va == center) continue;
        for (int vb = 0; vb < n2; ++vb) {
            if (vb == 0 || vb == center) continue;
            if (ga.profile(va) == gb.profile(vb)) cands[va].push_back(vb);
        }
        if (cands[va].empty()) return res;
    }

    std::vector<int> order;
    for (int v = 0; v < n2; ++v)
        if (v != 0 && v != center) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (cands[x].size() != cands[y].size()) return cands[x].size() < cands[y].size();
        return x < y;
    });

    std::vector<int> map(n2, -1);
    std::vector<char> used(n2, 0);
    map[0] = 0;
    map[center] = center;
    used[0] = 1;
    used[center] = 1;
    std::vector<int> assigned = {0, center};

    std::int64_t expanded = 0;
    bool exhausted = false;

    auto consistent = [&](int va, int vb) {
        for (int ua : assigned) {
            const int ub = map[ua];
            if (ga.adj.get(va, ua) != gb.adj.get(vb, ub)) return false;
            if (ga.adj.get(ua, va) != gb.adj.get(ub, vb)) return false;
        }
        return true;
    };

    // Depth-first assignment in the fixed order.
    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        const int va = order[depth];
        for (int vb : cands[va]) {
            if (used[vb]) continue;
            if (++expanded > budget) {
                exhausted = true;
                return false;
            }
            if (!consistent(va, vb)) continue;
            map[va] = vb;
            used[vb] = 1;
            assigned.push_back(va);
            if (self(self, depth + 1)) return true;
            assigned.pop_back();
            used[vb] = 0;
            map[va] = -1;
            if (exhausted) return false;
        }
        return false;
    };

    const bool found = search(search, 0);
    res.nodes_expanded = expanded;
    if (found) {
        if (!verify_mapping(ga, gb, map)) throw Error("isomorphism witness failed verification");
        res.verdict = IsoVerdict::isomorphic;
        res.mapping = std::move(map);
    } else if (exhausted) {
        res.verdict = IsoVerdict::budget_exhausted;
    }
    return res;
}

std::vector<std::array<int, 8>> trivial_change_classes(const Board& b) {
    const int n = b.n();
    const int n2 = n * n;
    std::vector<std::array<int, 8>> classes(n2);
    for (int v = 0; v < n2; ++v) {
        const Pos p = b.unflat(v);
        std::array<std::vector<int>, 8> rays;  // ray depends on position only
        for (int d = 0; d < 8; ++d) {
            const auto [di, dj] = delta(static_cast<Dir>(d));
            for (int i = p.i + di, j = p.j + dj; i >= 1 && i <= n && j >= 1 && j <= n;
                 i += di, j += dj)
                rays[d].push_back((i - 1) * n + (j - 1));
            std::sort(rays[d].begin(), rays[d].end());
        }
        for (int d = 0; d < 8; ++d) {
            int rep = d;
            for (int e = 0; e < d; ++e) {
                if (rays[e] == rays[d]) {
                    rep = e;
                    break;
                }
            }
            classes[v][d] = rep;
        }
    }
    return classes;
}

// --- symmetry scan --------------------------------------------------------

namespace {

Pos dihedral_map(int kind, Pos p, int n) {
    const int i = p.i, j = p.j, m = n + 1;
    switch (kind) {
        case 0: return {i, j};          // identity
        case 1: return {j, m - i};      // rot90 cw
        case 2: return {m - i, m - j};  // rot180
        case 3: return {m - j, i};      // rot270 cw
        case 4: return {j, i};          // reflect-main
        case 5: return {m - j, m - i};  // reflect-anti
        case 6: return {m - i, j};      // reflect-rows
        case 7: return {i, m - j};      // reflect-cols
    }
    throw Error("bad dihedral kind");
}

std::array<Dir, 8> dihedral_tau(int kind) {
    std::array<Dir, 8> t{};
    auto rot = [&](int shift) {
        for (int d = 0; d < 8; ++d) t[d] = static_cast<Dir>((d + shift) % 8);
    };
    switch (kind) {
        case 0: rot(0); break;
        case 1: rot(2); break;
        case 2: rot(4); break;
        case 3: rot(6); break;
        case 4:
            for (int d = 0; d < 8; ++d) t[d] = transpose_dir(static_cast<Dir>(d));
            break;
        case 5: t = {Dir::E, Dir::NE, Dir::N, Dir::NW, Dir::W, Dir::SW, Dir::S, Dir::SE}; break;
        case 6: t = {Dir::S, Dir::SE, Dir::E, Dir::NE, Dir::N, Dir::NW, Dir::W, Dir::SW}; break;
        case 7: t = {Dir::N, Dir::NW, Dir::W, Dir::SW, Dir::S, Dir::SE, Dir::E, Dir::NE}; break;
    }
    return t;
}

const char* dihedral_name(int kind) {
    static constexpr const char* names[8] = {"identity",     "rot90",        "rot180",
                                             "rot270",       "reflect-main", "reflect-anti",
                                             "reflect-rows", "reflect-cols"};
    return names[kind];
}

// S(A)_q = tau_g(a at g^{-1}(q)); sigma stores flat(g^{-1}(q)) per q.
SymmetryCandidate dihedral_candidate(int kind, int n) {
    static constexpr int inverse_kind[8] = {0, 3, 2, 1, 4, 5, 6, 7};
    SymmetryCandidate c;
    c.name = dihedral_name(kind);
    c.sigma.resize(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Pos src = dihedral_map(inverse_kind[kind], {i, j}, n);
            c.sigma[(i - 1) * n + (j - 1)] = (src.i - 1) * n + (src.j - 1);
        }
    c.tau = dihedral_tau(kind);
    return c;
}

struct DegreePair {
    int out, in;
    friend bool operator<(const DegreePair& a, const DegreePair& b) {
        return a.out != b.out ? a.out < b.out : a.in < b.in;
    }
    friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

std::vector<DegreePair> degree_multiset(const Board& b) {
    const DegreeReport d = degree_report(b);
    std::vector<DegreePair> ps(d.out_deg.size());
    for (std::size_t v = 0; v < ps.size(); ++v) ps[v] = {d.out_deg[v], d.in_deg[v]};
    std::sort(ps.begin(), ps.end());
    return ps;
}

}  // namespace

ScanResult symmetry_scan(int n, int sample_size, std::uint64_t seed, int workers) {
    if (n != 3) throw Error("the symmetry scan runs at n = 3");
    if (sample_size < 1) throw Error("sample_size must be >= 1");

    std::vector<SymmetryCandidate> family;
    for (int k = 0; k < 8; ++k) family.push_back(dihedral_candidate(k, n));
    // All wind permutations, paired with the identity and transpose grid maps.
    std::array<int, 8> perm;
    std::iota(perm.begin(), perm.end(), 0);
    const SymmetryCandidate id_c = identity_candidate(n);
    const SymmetryCandidate tr_c = reflect_candidate(n);
    int perm_index = 0;
    do {
        std::array<Dir, 8> tau;
        for (int d = 0; d < 8; ++d) tau[d] = static_cast<Dir>(perm[d]);
        for (int s = 0; s < 2; ++s) {
            const SymmetryCandidate& base = s == 0 ? id_c : tr_c;
            if (tau == base.tau) continue;  // already present as a dihedral candidate
            SymmetryCandidate c;
            c.name = (s == 0 ? std::string("id-tau") : std::string("transpose-tau")) +
                     std::to_string(perm_index);
            c.sigma = base.sigma;
            c.tau = tau;
            family.push_back(std::move(c));
        }
        ++perm_index;
    } while (std::next_permutation(perm.begin(), perm.end()));

    ScanResult out;
    out.candidates = static_cast<std::int64_t>(family.size());
    std::vector<int> verdicts(family.size(), 0);  // 0 survive, 1 cheap kill, 2 iso kill

    const int nthreads = resolve_workers(workers);
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
    for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(family.size()); ++ci) {
        const SymmetryCandidate& cand = family[ci];
        const std::uint64_t stream = rng::at(seed, static_cast<std::uint64_t>(ci));
        int verdict = 0;
        for (int s = 0; s < sample_size; ++s) {
            const Board a = Board::random(n, rng::at(stream, static_cast<std::uint64_t>(s)));
            const Board b = apply_symmetry(cand, a);
            const SolveResult ra = solve(a), rb = solve(b);
            if (ra.solvable != rb.solvable || ra.length != rb.length) {
                verdict = 1;
                break;
            }
            if (degree_multiset(a) != degree_multiset(b)) {
                verdict = 1;
                break;
            }
            if (is_isomorphic(a, b).verdict != IsoVerdict::isomorphic) {
                verdict = 2;
                break;
            }
        }
        verdicts[ci] = verdict;
    }

    for (std::size_t ci = 0; ci < family.size(); ++ci) {
        if (verdicts[ci] == 0) out.survivors.push_back(family[ci].name);
        else if (verdicts[ci] == 1) ++out.falsified_cheap;
        else ++out.falsified_iso;
    }
    return out;
}

}  // namespace windrose
