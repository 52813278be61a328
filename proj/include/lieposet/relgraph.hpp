#pragma once

// Condensed relation graph of a height-one signed poset: one vertex per pair
// {-i, i}, a solid edge {i,j} for the mirror pair -i < j / -j < i, a dashed
// edge for -max < -min / min < max, and a solid self-loop for -i < i.
//
// Also houses the structural analyses used by the index machinery: the
// component census (odd cycles, trees, eta), the forbidden adjacency
// patterns of height-one posets, and the rank-preserving rewrites that
// remove dashed edges or break even cycles.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lieposet/errors.hpp"
#include "lieposet/poset.hpp"

namespace lieposet {

enum class EdgeKind { Solid, Dashed };

class RelationGraph {
public:
    using Pair = std::pair<int, int>;  // normalized a <= b

    void add_vertex(int v) { vertices_.insert(v); }

    void add_edge(int a, int b, EdgeKind kind) {
        Pair p = normalize(a, b);
        if (p.first == p.second && kind == EdgeKind::Dashed)
            throw std::invalid_argument("dashed self-loop at " + std::to_string(p.first));
        if (edges_.count(p))
            throw std::invalid_argument("pair {" + std::to_string(p.first) + "," +
                                        std::to_string(p.second) + "} already has an edge");
        vertices_.insert(p.first);
        vertices_.insert(p.second);
        edges_[p] = kind;
    }

    void remove_edge(int a, int b) { edges_.erase(normalize(a, b)); }

    void set_kind(int a, int b, EdgeKind kind) {
        Pair p = normalize(a, b);
        if (p.first == p.second && kind == EdgeKind::Dashed)
            throw std::invalid_argument("dashed self-loop at " + std::to_string(p.first));
        edges_.at(p) = kind;
    }

    bool has_edge(int a, int b) const { return edges_.count(normalize(a, b)) != 0; }

    std::optional<EdgeKind> edge_kind(int a, int b) const {
        auto it = edges_.find(normalize(a, b));
        if (it == edges_.end()) return std::nullopt;
        return it->second;
    }

    std::vector<int> vertices() const { return {vertices_.begin(), vertices_.end()}; }
    const std::map<Pair, EdgeKind>& edges() const { return edges_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int dashed_count() const {
        int c = 0;
        for (const auto& [p, k] : edges_) c += (k == EdgeKind::Dashed);
        return c;
    }
    int loop_count() const {
        int c = 0;
        for (const auto& [p, k] : edges_) c += (p.first == p.second);
        return c;
    }
    int solid_count() const {  // solid non-loop edges
        int c = 0;
        for (const auto& [p, k] : edges_)
            c += (k == EdgeKind::Solid && p.first != p.second);
        return c;
    }

    // Neighbours through non-loop edges, in sorted order.
    std::vector<std::pair<int, EdgeKind>> incident(int v) const {
        std::vector<std::pair<int, EdgeKind>> out;
        for (const auto& [p, k] : edges_) {
            if (p.first == p.second) continue;
            if (p.first == v) out.emplace_back(p.second, k);
            else if (p.second == v) out.emplace_back(p.first, k);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    int degree(int v) const { return static_cast<int>(incident(v).size()); }

    friend bool operator==(const RelationGraph& a, const RelationGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    static Pair normalize(int a, int b) { return a <= b ? Pair{a, b} : Pair{b, a}; }

    std::set<int> vertices_;
    std::map<Pair, EdgeKind> edges_;
};

inline RelationGraph build_relation_graph(const SignedPoset& p) {
    if (p.height() > 1)
        throw HeightError("relation graph requires height <= 1, got height " +
                          std::to_string(p.height()));
    RelationGraph g;
    for (int i = 1; i <= p.n(); ++i) g.add_vertex(i);
    for (const auto& [x, y] : p.relations()) {
        // Height-one type-B posets cannot relate 0.
        EdgeKind kind;
        int a, b;
        if (x == -y) {
            kind = EdgeKind::Solid;
            a = b = y;
        } else if (x < 0 && y > 0) {
            kind = EdgeKind::Solid;
            a = -x;
            b = y;
        } else if (x < 0) {
            kind = EdgeKind::Dashed;
            a = -y;
            b = -x;
        } else {
            kind = EdgeKind::Dashed;
            a = x;
            b = y;
        }
        if (auto existing = g.edge_kind(a, b)) {
            // Mirror relation reaches the same edge with the same kind.
            (void)existing;
        } else {
            g.add_edge(a, b, kind);
        }
    }
    return g;
}

struct ComponentInfo {
    std::vector<int> vertices;
    int edge_count = 0;
    bool has_odd_cycle = false;
    bool is_tree = false;
    bool is_single_odd_cycle = false;
};

struct ComponentCensus {
    std::vector<ComponentInfo> components;
    int eta = 0;  // components containing no odd cycle

    int component_count() const { return static_cast<int>(components.size()); }

    const ComponentInfo& component_of(int v) const {
        for (const auto& c : components)
            if (std::binary_search(c.vertices.begin(), c.vertices.end(), v)) return c;
        throw std::out_of_range("vertex " + std::to_string(v) + " not in census");
    }
};

// Connected components with 2-coloring. Every edge, dashed or solid, counts
// one step for cycle parity; a self-loop is an odd cycle.
inline ComponentCensus census(const RelationGraph& g) {
    ComponentCensus out;
    std::map<int, int> color;  // -1 unvisited handled by absence
    for (int root : g.vertices()) {
        if (color.count(root)) continue;
        ComponentInfo info;
        bool bipartite = true;
        std::vector<int> queue{root};
        color[root] = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            info.vertices.push_back(v);
            for (const auto& [w, kind] : g.incident(v)) {
                (void)kind;
                if (!color.count(w)) {
                    color[w] = color[v] ^ 1;
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    bipartite = false;
                }
            }
        }
        std::sort(info.vertices.begin(), info.vertices.end());
        bool loop = false;
        for (const auto& [p, k] : g.edges()) {
            if (!std::binary_search(info.vertices.begin(), info.vertices.end(), p.first)) continue;
            ++info.edge_count;
            if (p.first == p.second) loop = true;
        }
        info.has_odd_cycle = !bipartite || loop;
        const int nv = static_cast<int>(info.vertices.size());
        info.is_tree = info.edge_count == nv - 1;
        info.is_single_odd_cycle = info.edge_count == nv && info.has_odd_cycle;
        out.eta += info.has_odd_cycle ? 0 : 1;
        out.components.push_back(std::move(info));
    }
    return out;
}

// One occurrence of a forbidden adjacency pattern.
struct PatternViolation {
    char pattern;             // 'a', 'c' or 'd'
    std::vector<int> labels;  // (i,j) for 'a'; (i,j,k) for 'c'/'d'

    std::string text() const {
        std::string s = "pattern (";
        s += pattern;
        s += ") at";
        for (int v : labels) s += " " + std::to_string(v);
        return s;
    }
};

// Scans for the adjacency patterns impossible in relation graphs of
// height-one posets:
//   (a) dashed {i,j} with a loop at j and i > j,
//   (c) dashed {i,j} and solid {j,k} with i > j,
//   (d) dashed {i,j} and dashed {j,k} with j strictly between i and k.
// A dashed and a solid edge on the same pair (pattern (b)) cannot be
// represented at all: the graph keeps at most one edge per vertex pair.
inline std::vector<PatternViolation> forbidden_patterns(const RelationGraph& g) {
    std::vector<PatternViolation> out;
    std::vector<std::pair<int, int>> dashed;
    for (const auto& [p, k] : g.edges())
        if (k == EdgeKind::Dashed) dashed.push_back(p);

    for (const auto& [a, b] : dashed) {
        for (int shared : {a, b}) {
            const int other = shared == a ? b : a;
            if (other <= shared) continue;
            // loop at the smaller endpoint: pattern (a)
            if (g.edge_kind(shared, shared))
                out.push_back({'a', {other, shared}});
            // solid edge out of the smaller endpoint: pattern (c)
            for (const auto& [w, kind] : g.incident(shared))
                if (kind == EdgeKind::Solid && w != other)
                    out.push_back({'c', {other, shared, w}});
        }
    }
    for (std::size_t s = 0; s < dashed.size(); ++s)
        for (std::size_t t = s + 1; t < dashed.size(); ++t) {
            auto [a1, b1] = dashed[s];
            auto [a2, b2] = dashed[t];
            int shared = -1;
            if (a1 == a2 || a1 == b2) shared = a1;
            else if (b1 == a2 || b1 == b2) shared = b1;
            if (shared < 0) continue;
            int o1 = a1 == shared ? b1 : a1;
            int o2 = a2 == shared ? b2 : a2;
            if ((o1 < shared) != (o2 < shared)) {
                int lo = std::min(o1, o2), hi = std::max(o1, o2);
                out.push_back({'d', {lo, shared, hi}});
            }
        }
    return out;
}

namespace detail {

// Simple cycles as sorted edge lists; each cycle reported once. Self-loops
// are not included (callers treat them separately).
inline std::vector<std::vector<RelationGraph::Pair>> simple_cycles(const RelationGraph& g) {
    std::vector<std::vector<RelationGraph::Pair>> cycles;
    const auto vs = g.vertices();
    std::vector<int> path;
    std::set<int> onPath;

    auto emit = [&](const std::vector<int>& cyc) {
        std::vector<RelationGraph::Pair> edges;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end());
        cycles.push_back(std::move(edges));
    };

    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (const auto& [w, kind] : g.incident(v)) {
            (void)kind;
            if (w == start && path.size() >= 3) {
                // canonical orientation: second vertex smaller than last
                if (path[1] < path.back()) emit(path);
            } else if (w > start && !onPath.count(w)) {
                path.push_back(w);
                onPath.insert(w);
                dfs(start, w);
                onPath.erase(w);
                path.pop_back();
            }
        }
    };

    for (int s : vs) {
        path = {s};
        onPath = {s};
        dfs(s, s);
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

inline int solid_count_on(const RelationGraph& g, const std::vector<RelationGraph::Pair>& cyc) {
    int c = 0;
    for (const auto& e : cyc)
        if (g.edge_kind(e.first, e.second) == EdgeKind::Solid) ++c;
    return c;
}

// Vertices reachable from `seeds` through solid non-loop edges.
inline std::set<int> solid_reachable(const RelationGraph& g, std::vector<int> seeds) {
    std::set<int> reach(seeds.begin(), seeds.end());
    while (!seeds.empty()) {
        int v = seeds.back();
        seeds.pop_back();
        for (const auto& [w, kind] : g.incident(v))
            if (kind == EdgeKind::Solid && reach.insert(w).second) seeds.push_back(w);
    }
    return reach;
}

}  // namespace detail

// Removes every dashed edge by iterating the rank-preserving rewrites:
//   - a dashed edge at the end of a solid path from a self-loop (or from an
//     all-solid odd cycle, which combines to the same -2x anchor row) turns
//     solid in place,
//   - a dashed edge on an odd cycle carrying an odd number of solid edges
//     is traded for a self-loop at its smaller endpoint,
//   - otherwise a dashed edge adjacent to a solid edge is transferred to the
//     far endpoint of that solid edge.
// Vertex and edge counts are preserved; rank(M(G)) is preserved at every
// step. Intermediate graphs need not correspond to posets.
//
// Graphs whose cycles are all even cannot be freed of dashed edges at
// constant edge count; they raise EvenCycleObstruction and are handled by
// delete_even_cycle_edge first.
inline std::vector<RelationGraph> eliminate_dashed_trace(const RelationGraph& g) {
    {
        auto c = census(g);
        if (c.component_count() > 1)
            throw NotConnected("eliminate_dashed requires a connected graph, got " +
                               std::to_string(c.component_count()) + " components");
    }
    if (g.solid_count() + g.loop_count() == 0)
        throw SeparableInput("eliminate_dashed requires a solid edge or self-loop");

    std::vector<RelationGraph> trace{g};
    RelationGraph cur = g;
    while (cur.dashed_count() > 0) {
        bool applied = false;

        // Self-loop present: convert the first dashed edge solid-reachable
        // from the smallest loop vertex, in place.
        std::optional<int> loopVertex;
        for (const auto& [p, k] : cur.edges())
            if (p.first == p.second && !loopVertex) loopVertex = p.first;
        if (loopVertex) {
            auto reach = detail::solid_reachable(cur, {*loopVertex});
            for (const auto& [p, k] : cur.edges()) {
                if (k != EdgeKind::Dashed) continue;
                if (reach.count(p.first) || reach.count(p.second)) {
                    cur.set_kind(p.first, p.second, EdgeKind::Solid);
                    applied = true;
                    break;
                }
            }
        }

        // No loop: odd cycles with an odd number of solid edges combine to a
        // -2x row. A dashed edge on such a cycle becomes a loop; otherwise
        // an all-solid odd cycle anchors in-place conversions like a loop.
        if (!applied) {
            auto cycles = detail::simple_cycles(cur);
            const std::vector<RelationGraph::Pair>* anchor = nullptr;
            for (const auto& cyc : cycles) {
                if (cyc.size() % 2 == 0 || detail::solid_count_on(cur, cyc) % 2 == 0) continue;
                bool dashedOn = false;
                RelationGraph::Pair target{};
                for (const auto& e : cyc)
                    if (cur.edge_kind(e.first, e.second) == EdgeKind::Dashed && !dashedOn) {
                        dashedOn = true;
                        target = e;
                    }
                if (dashedOn) {
                    cur.remove_edge(target.first, target.second);
                    cur.add_edge(target.first, target.first, EdgeKind::Solid);
                    applied = true;
                    break;
                }
                if (!anchor) anchor = &cyc;  // all-solid odd cycle
            }
            if (!applied && anchor) {
                std::vector<int> seeds;
                for (const auto& e : *anchor) {
                    seeds.push_back(e.first);
                    seeds.push_back(e.second);
                }
                auto reach = detail::solid_reachable(cur, seeds);
                for (const auto& [p, k] : cur.edges()) {
                    if (k != EdgeKind::Dashed) continue;
                    if (reach.count(p.first) || reach.count(p.second)) {
                        cur.set_kind(p.first, p.second, EdgeKind::Solid);
                        applied = true;
                        break;
                    }
                }
            }
        }

        // No usable cycle: transfer along an adjacent solid edge. The target
        // pair must be free; a collision would close a cycle this branch
        // cannot use.
        if (!applied) {
            for (const auto& [p, k] : cur.edges()) {
                if (k != EdgeKind::Dashed) continue;
                for (int shared : {p.first, p.second}) {
                    const int other = shared == p.first ? p.second : p.first;
                    for (const auto& [far, kind] : cur.incident(shared)) {
                        if (kind != EdgeKind::Solid || far == other) continue;
                        if (cur.has_edge(other, far)) continue;
                        cur.remove_edge(p.first, p.second);
                        cur.add_edge(other, far, EdgeKind::Solid);
                        applied = true;
                        break;
                    }
                    if (applied) break;
                }
                if (applied) break;
            }
        }

        if (!applied)
            throw EvenCycleObstruction(
                "dashed edges are locked behind even cycles; remove an even-cycle edge first");
        trace.push_back(cur);
    }
    return trace;
}

inline RelationGraph eliminate_dashed(const RelationGraph& g) {
    return eliminate_dashed_trace(g).back();
}

// Removes one edge of an even cycle, keeping at least one solid edge or
// loop in the graph whenever one exists. rank(M) is unchanged and the edge
// count drops by one.
inline RelationGraph delete_even_cycle_edge(const RelationGraph& g) {
    auto cycles = detail::simple_cycles(g);
    for (const auto& cyc : cycles) {
        if (cyc.size() % 2 != 0) continue;
        const bool hasNonDashed = g.solid_count() + g.loop_count() > 0;
        for (const auto& e : cyc) {
            if (hasNonDashed) {
                bool removesLastSolid = g.edge_kind(e.first, e.second) == EdgeKind::Solid &&
                                        g.solid_count() + g.loop_count() == 1;
                if (removesLastSolid) continue;
            }
            RelationGraph r = g;
            r.remove_edge(e.first, e.second);
            return r;
        }
    }
    throw NoEvenCycle("graph contains no even cycle with a removable edge");
}

}  // namespace lieposet
