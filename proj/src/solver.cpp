#include "windrose/solver.hpp"

#include <algorithm>

namespace windrose {

namespace {

Game witness_from_parents(const Board& b, const std::vector<std::int32_t>& parent,
                          int goal) {
    std::vector<Pos> path;
    for (int v = goal; v != -1; v = parent[v]) path.push_back(b.unflat(v));
    // parent[start] is -1, so the loop above ends right after pushing it
    std::reverse(path.begin(), path.end());
    Game g;
    g.moves = std::move(path);
    g.outcome = Outcome::won;
    return g;
}

}  // namespace

SolveResult solve(const Board& b) {
    const int n2 = b.n() * b.n();
    const int goal = b.flat(b.center());
    auto succ = [&](int v, auto&& visit) {
        for_each_target(b, b.unflat(v), [&](Pos q) { return visit(b.flat(q)); });
    };
    auto r = detail::bfs(n2, 0, goal, succ);
    SolveResult out;
    out.visited_count = r.dequeued;
    if (r.found) {
        out.solvable = true;
        out.length = r.dist;
        out.witness = witness_from_parents(b, r.parent, goal);
    }
    return out;
}

BitMatrix reachability_closure(const Board& b) {
    const int n2 = b.n() * b.n();
    BitMatrix m(n2);
    std::vector<std::int32_t> queue;
    std::vector<char> seen(n2);
    for (int s = 0; s < n2; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.clear();
        queue.push_back(s);
        seen[s] = 1;
        m.set(s, s);
        std::size_t head = 0;
        while (head < queue.size()) {
            const int v = queue[head++];
            for_each_target(b, b.unflat(v), [&](Pos q) {
                const int u = b.flat(q);
                if (!seen[u]) {
                    seen[u] = 1;
                    m.set(s, u);
                    queue.push_back(u);
                }
                return true;
            });
        }
    }
    return m;
}

namespace {

// Iterative Tarjan over the ray graph.
struct TarjanState {
    const Board& b;
    std::vector<int> index, low, comp;
    std::vector<char> on_stack;
    std::vector<int> stack;
    int next_index = 0;
    int components = 0;

    explicit TarjanState(const Board& board)
        : b(board),
          index(board.n() * board.n(), -1),
          low(board.n() * board.n(), 0),
          comp(board.n() * board.n(), -1),
          on_stack(board.n() * board.n(), 0) {}

    void run(int root) {
        struct Frame {
            int v;
            std::vector<int> succ;
            std::size_t next = 0;
        };
        std::vector<Frame> frames;
        frames.push_back({root, successors(root)});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < f.succ.size()) {
                const int u = f.succ[f.next++];
                if (index[u] == -1) {
                    index[u] = low[u] = next_index++;
                    stack.push_back(u);
                    on_stack[u] = 1;
                    frames.push_back({u, successors(u)});
                } else if (on_stack[u]) {
                    low[f.v] = std::min(low[f.v], index[u]);
                }
            } else {
                const int v = f.v;
                if (low[v] == index[v]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = components;
                        if (w == v) break;
                    }
                    ++components;
                }
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }

    std::vector<int> successors(int v) const {
        std::vector<int> out;
        for_each_target(b, b.unflat(v), [&](Pos q) {
            out.push_back(b.flat(q));
            return true;
        });
        return out;
    }
};

}  // namespace

Condensation condensation(const Board& b) {
    const int n2 = b.n() * b.n();
    TarjanState t(b);
    for (int v = 0; v < n2; ++v)
        if (t.index[v] == -1) t.run(v);
    Condensation c;
    c.component = std::move(t.comp);
    c.component_count = t.components;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n2; ++v) {
        for_each_target(b, b.unflat(v), [&](Pos q) {
            const int cu = c.component[v], cv = c.component[b.flat(q)];
            if (cu != cv) edges.emplace_back(cu, cv);
            return true;
        });
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    c.dag_edges = std::move(edges);
    return c;
}

bool is_all_to_all(const Board& b) { return condensation(b).component_count == 1; }

std::set<int> winning_lengths(const Board& b, int cap) {
    if (cap < 1) throw Error("cap must be >= 1");
    const int n2 = b.n() * b.n();
    const int center = b.flat(b.center());
    std::set<int> out;
    std::vector<char> layer(n2, 0), next(n2, 0);
    layer[0] = 1;
    for (int k = 1; k <= cap; ++k) {
        std::fill(next.begin(), next.end(), 0);
        bool any = false;
        for (int v = 0; v < n2; ++v) {
            if (!layer[v] || v == center) continue;  // the center has no out-edges here
            for_each_target(b, b.unflat(v), [&](Pos q) {
                next[b.flat(q)] = 1;
                any = true;
                return true;
            });
        }
        if (!any) break;
        if (next[center]) out.insert(k);
        layer.swap(next);
    }
    return out;
}

}  // namespace windrose
