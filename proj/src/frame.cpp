#include "frame.hpp"

#include <algorithm>
#include <deque>

namespace skewmat {

IdealGraph build_graph(const SkewSet& c) {
    unsigned n = c.n();
    IdealGraph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n) * n, {});
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned k = 1; k <= n; ++k) {
                if (c.zero_at(i, j, k)) continue;
                unsigned target = pos_vertex(n, i, k);
                unsigned left = pos_vertex(n, i, j);
                unsigned right = pos_vertex(n, j, k);
                if (left != target) g.adj[left].push_back(target);
                if (right != target) g.adj[right].push_back(target);
            }
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

PosSet closure(const SkewSet& c, const PosSet& start) {
    IdealGraph g = build_graph(c);
    unsigned n = c.n();
    std::vector<bool> in(static_cast<std::size_t>(n) * n, false);
    std::deque<unsigned> queue;
    for (const auto& [i, j] : start) {
        if (i < 1 || i > n || j < 1 || j > n) fail(errc::bad_input, "position out of range");
        unsigned v = pos_vertex(n, i, j);
        if (!in[v]) {
            in[v] = true;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        unsigned v = queue.front();
        queue.pop_front();
        for (unsigned w : g.adj[v]) {
            if (!in[w]) {
                in[w] = true;
                queue.push_back(w);
            }
        }
    }
    PosSet out;
    for (unsigned v = 0; v < in.size(); ++v) {
        if (in[v]) out.push_back(vertex_pos(n, v));
    }
    sort_pos_set(out);
    return out;
}

bool is_closed(const SkewSet& c, const PosSet& s) {
    IdealGraph g = build_graph(c);
    unsigned n = c.n();
    std::vector<bool> in(static_cast<std::size_t>(n) * n, false);
    for (const auto& [i, j] : s) in[pos_vertex(n, i, j)] = true;
    for (unsigned v = 0; v < in.size(); ++v) {
        if (!in[v]) continue;
        for (unsigned w : g.adj[v]) {
            if (!in[w]) return false;
        }
    }
    return true;
}

namespace {

struct SccResult {
    std::vector<unsigned> comp;   // vertex -> component id
    unsigned count = 0;
};

// Iterative Tarjan strongly connected components.
SccResult tarjan(const IdealGraph& g) {
    std::size_t n = g.adj.size();
    SccResult res;
    res.comp.assign(n, 0);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<unsigned> stack;
    int next_index = 0;

    struct Frame {
        unsigned v;
        std::size_t child;
    };
    for (unsigned root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < g.adj[f.v].size()) {
                unsigned w = g.adj[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    while (true) {
                        unsigned w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        res.comp[w] = res.count;
                        if (w == f.v) break;
                    }
                    ++res.count;
                }
                unsigned v = f.v;
                call.pop_back();
                if (!call.empty()) {
                    low[call.back().v] = std::min(low[call.back().v], low[v]);
                }
            }
        }
    }
    return res;
}

}  // namespace

SimplicityReport is_simple(const SkewSet& c) {
    IdealGraph g = build_graph(c);
    SccResult scc = tarjan(g);
    SimplicityReport rep;
    rep.scc_count = scc.count;
    rep.simple = scc.count == 1;
    if (rep.simple) return rep;
    // witness: a sink component is closed; pick the one holding the smallest vertex
    std::vector<bool> has_out(scc.count, false);
    for (unsigned v = 0; v < g.adj.size(); ++v) {
        for (unsigned w : g.adj[v]) {
            if (scc.comp[v] != scc.comp[w]) has_out[scc.comp[v]] = true;
        }
    }
    unsigned chosen = scc.count;
    for (unsigned v = 0; v < g.adj.size(); ++v) {
        if (!has_out[scc.comp[v]]) {
            chosen = scc.comp[v];
            break;
        }
    }
    for (unsigned v = 0; v < g.adj.size(); ++v) {
        if (scc.comp[v] == chosen) rep.witness.push_back(vertex_pos(g.n, v));
    }
    sort_pos_set(rep.witness);
    return rep;
}

IdealEnumeration enumerate_ideals(const SkewSet& c, std::size_t cap) {
    if (cap == 0 && c.n() > 6) {
        fail(errc::cap_exceeded,
             "unbounded ideal enumeration is refused for degree > 6; pass a cap");
    }
    IdealGraph g = build_graph(c);
    SccResult scc = tarjan(g);
    unsigned m = scc.count;
    // condensation successors
    std::vector<std::vector<unsigned>> succ(m);
    for (unsigned v = 0; v < g.adj.size(); ++v) {
        for (unsigned w : g.adj[v]) {
            if (scc.comp[v] != scc.comp[w]) succ[scc.comp[v]].push_back(scc.comp[w]);
        }
    }
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    // Tarjan emits components in reverse topological order: successors of a
    // component always carry smaller ids, so processing ids 0,1,...,m-1 sees
    // every successor before its predecessors.
    IdealEnumeration res;
    std::vector<bool> chosen(m, false);
    std::vector<unsigned> comp_size(m, 0);
    for (unsigned v = 0; v < g.adj.size(); ++v) ++comp_size[scc.comp[v]];

    std::vector<PosSet> comp_positions(m);
    for (unsigned v = 0; v < g.adj.size(); ++v) {
        comp_positions[scc.comp[v]].push_back(vertex_pos(g.n, v));
    }

    bool stop = false;
    auto emit = [&]() {
        if (cap > 0 && res.ideals.size() >= cap) {
            res.truncated = true;
            stop = true;
            return;
        }
        PosSet s;
        for (unsigned t = 0; t < m; ++t) {
            if (chosen[t]) s.insert(s.end(), comp_positions[t].begin(), comp_positions[t].end());
        }
        sort_pos_set(s);
        res.ideals.push_back(std::move(s));
    };

    // decide membership component by component, successors first
    auto rec = [&](auto&& self, unsigned t) -> void {
        if (stop) return;
        if (t == m) {
            emit();
            return;
        }
        chosen[t] = false;
        self(self, t + 1);
        if (stop) return;
        bool allowed = true;
        for (unsigned s : succ[t]) {
            if (!chosen[s]) {
                allowed = false;
                break;
            }
        }
        if (allowed) {
            chosen[t] = true;
            self(self, t + 1);
            chosen[t] = false;
        }
    };
    rec(rec, 0);

    std::sort(res.ideals.begin(), res.ideals.end(), [](const PosSet& a, const PosSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return res;
}

SquareReport ideal_square(const SkewSet& c, const PosSet& ideal) {
    if (!is_closed(c, ideal)) {
        fail(errc::bad_input, "ideal_square expects a closed position set");
    }
    unsigned n = c.n();
    std::vector<bool> in(static_cast<std::size_t>(n) * n, false);
    for (const auto& [i, j] : ideal) in[pos_vertex(n, i, j)] = true;
    SquareReport rep;
    std::vector<bool> sq(static_cast<std::size_t>(n) * n, false);
    for (const auto& [i, j] : ideal) {
        for (unsigned k = 1; k <= n; ++k) {
            if (!in[pos_vertex(n, j, k)]) continue;
            if (c.zero_at(i, j, k)) continue;
            sq[pos_vertex(n, i, k)] = true;
        }
    }
    for (unsigned v = 0; v < sq.size(); ++v) {
        if (sq[v]) rep.square_support.push_back(vertex_pos(n, v));
    }
    sort_pos_set(rep.square_support);
    rep.closed = is_closed(c, rep.square_support);
    return rep;
}

}  // namespace skewmat
