#ifndef PG_GRAPH_HPP
#define PG_GRAPH_HPP

#include <string>
#include <vector>

#include "pg/bitset.hpp"
#include "pg/group.hpp"

namespace pg {

// Simple undirected graph on vertices 0..n-1 with one adjacency bit row per
// vertex. Loop-free by construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(static_cast<std::size_t>(n), Bitset(n)) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    void add_edge(int u, int v) {
        check(u, v);
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }

    const Bitset& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return adj_[v].count(); }

    long long edge_count() const {
        long long twice = 0;
        for (const Bitset& row : adj_) twice += row.count();
        return twice / 2;
    }

    bool operator==(const Graph&) const = default;

private:
    void check(int u, int v) const {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
            throw Error(ErrorCode::GraphInvariant, "vertex out of range: " + std::to_string(u) +
                                                       ", " + std::to_string(v));
        if (u == v)
            throw Error(ErrorCode::GraphInvariant, "loop rejected at vertex " + std::to_string(u));
    }

    std::vector<Bitset> adj_;
};

// Simple directed graph, loop-free, stored as out-arc bit rows.
class DiGraph {
public:
    DiGraph() = default;

    explicit DiGraph(int n) : out_(static_cast<std::size_t>(n), Bitset(n)) {}

    int vertex_count() const { return static_cast<int>(out_.size()); }

    void add_arc(int u, int v) {
        check(u, v);
        out_[u].set(v);
    }

    bool has_arc(int u, int v) const { return out_[u].test(v); }

    const Bitset& out(int v) const { return out_[v]; }

    Bitset in(int v) const {
        Bitset b(vertex_count());
        for (int u = 0; u < vertex_count(); ++u)
            if (out_[u].test(v)) b.set(u);
        return b;
    }

    int out_degree(int v) const { return out_[v].count(); }

    int in_degree(int v) const { return in(v).count(); }

    long long arc_count() const {
        long long c = 0;
        for (const Bitset& row : out_) c += row.count();
        return c;
    }

    bool operator==(const DiGraph&) const = default;

private:
    void check(int u, int v) const {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
            throw Error(ErrorCode::GraphInvariant, "vertex out of range: " + std::to_string(u) +
                                                       ", " + std::to_string(v));
        if (u == v)
            throw Error(ErrorCode::GraphInvariant, "loop rejected at vertex " + std::to_string(u));
    }

    std::vector<Bitset> out_;
};

// Symmetrization: edge {u, v} iff u->v or v->u.
inline Graph underlying(const DiGraph& d) {
    Graph g(d.vertex_count());
    for (int u = 0; u < d.vertex_count(); ++u)
        d.out(u).for_each([&](int v) { g.add_edge(u, v); });
    return g;
}

// relabel[old] = new vertex index; relabel must be a permutation.
inline Graph permuted(const Graph& g, const std::vector<int>& relabel) {
    Graph out(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) out.add_edge(relabel[u], relabel[v]);
        });
    return out;
}

inline DiGraph permuted(const DiGraph& d, const std::vector<int>& relabel) {
    DiGraph out(d.vertex_count());
    for (int u = 0; u < d.vertex_count(); ++u)
        d.out(u).for_each([&](int v) { out.add_arc(relabel[u], relabel[v]); });
    return out;
}

}  // namespace pg

#endif
