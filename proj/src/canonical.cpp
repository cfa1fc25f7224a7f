#include "pg/canonical.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace pg {

namespace {

// Quotient of the input graph under repeated twin-class contraction. Each
// kernel vertex carries a structural code describing the contracted subtree
// and the list of original vertices in nested grouping order. Kernel
// adjacency between two vertices always means complete adjacency between
// their member sets in the original graph, and non-adjacency means no edges
// at all, so the kernel plus the codes determine the original graph exactly.
struct Kernel {
    bool directed = false;
    std::vector<Bitset> out;
    std::vector<Bitset> in;  // directed only
    std::vector<std::string> code;
    std::vector<std::vector<int>> members;

    int size() const { return static_cast<int>(out.size()); }
};

// One contraction pass. closed = true merges classes with equal closed
// neighborhoods (members are mutually adjacent), closed = false merges
// classes with equal open neighborhoods (members are never adjacent). Only
// vertices with equal codes merge, which keeps codes sufficient to rebuild
// the contracted structure. Returns true when something was contracted.
bool merge_round(Kernel& k, bool closed) {
    const int n = k.size();
    using Key = std::tuple<std::string, Bitset, Bitset>;
    std::map<Key, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        Bitset a = k.out[v];
        Bitset b = k.directed ? k.in[v] : Bitset();
        if (closed) {
            a.set(v);
            if (k.directed) b.set(v);
        }
        groups[Key(k.code[v], std::move(a), std::move(b))].push_back(v);
    }
    bool any = false;
    for (const auto& [key, vs] : groups)
        if (vs.size() > 1) any = true;
    if (!any) return false;

    std::vector<std::vector<int>> classes;
    classes.reserve(groups.size());
    for (auto& [key, vs] : groups) classes.push_back(std::move(vs));
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });

    const char type = k.directed ? (closed ? 'M' : 'N') : (closed ? 'K' : 'I');
    const int m = static_cast<int>(classes.size());
    std::vector<int> cls_of(n);
    for (int c = 0; c < m; ++c)
        for (int v : classes[c]) cls_of[v] = c;

    Kernel next;
    next.directed = k.directed;
    next.out.assign(m, Bitset(m));
    if (k.directed) next.in.assign(m, Bitset(m));
    next.code.resize(m);
    next.members.resize(m);
    for (int c = 0; c < m; ++c) {
        const std::vector<int>& vs = classes[c];
        next.code[c] = vs.size() == 1 ? k.code[vs[0]]
                                      : type + std::to_string(vs.size()) + "[" +
                                            k.code[vs[0]] + "]";
        for (int v : vs)
            next.members[c].insert(next.members[c].end(), k.members[v].begin(),
                                   k.members[v].end());
        // Adjacency toward other classes is uniform over a twin class; read
        // it off the first member.
        k.out[vs[0]].for_each([&](int w) {
            if (cls_of[w] != c) next.out[c].set(cls_of[w]);
        });
        if (k.directed)
            k.in[vs[0]].for_each([&](int w) {
                if (cls_of[w] != c) next.in[c].set(cls_of[w]);
            });
    }
    k = std::move(next);
    return true;
}

void collapse(Kernel& k) {
    while (true) {
        const bool a = merge_round(k, true);
        const bool b = merge_round(k, false);
        if (!a && !b) break;
    }
}

Kernel collapse_graph(const Graph& g) {
    Kernel k;
    k.directed = false;
    const int n = g.vertex_count();
    k.out.reserve(n);
    for (int v = 0; v < n; ++v) k.out.push_back(g.neighbors(v));
    k.code.assign(n, "v");
    k.members.resize(n);
    for (int v = 0; v < n; ++v) k.members[v] = {v};
    collapse(k);
    return k;
}

Kernel collapse_digraph(const DiGraph& d) {
    Kernel k;
    k.directed = true;
    const int n = d.vertex_count();
    k.out.reserve(n);
    k.in.reserve(n);
    for (int v = 0; v < n; ++v) k.out.push_back(d.out(v));
    for (int v = 0; v < n; ++v) k.in.push_back(d.in(v));
    k.code.assign(n, "v");
    k.members.resize(n);
    for (int v = 0; v < n; ++v) k.members[v] = {v};
    collapse(k);
    return k;
}

// Individualization-refinement over ordered partitions of the kernel. Cells
// only ever split in place, so the cell order (initially sorted by code) is
// isomorphism-invariant, and leaves can be compared by their serialized
// code sequence plus adjacency matrix alone. Two leaves with equal
// serializations differ by an automorphism; those automorphisms prune
// branches whose subtrees are images of ones already searched, which keeps
// highly symmetric kernels from costing a factorial number of leaves.
struct IRSearch {
    const Kernel& k;
    std::string best;
    std::vector<int> best_order;  // canonical position -> kernel vertex
    bool have_best = false;
    std::vector<std::vector<int>> gens;  // discovered automorphisms
    std::vector<int> path;               // vertices individualized so far

    explicit IRSearch(const Kernel& kernel) : k(kernel) {}

    void run() {
        std::vector<std::vector<int>> cells;
        std::map<std::string, std::vector<int>> by_code;
        for (int v = 0; v < k.size(); ++v) by_code[k.code[v]].push_back(v);
        cells.reserve(by_code.size());
        for (auto& [code, vs] : by_code) cells.push_back(std::move(vs));
        search(std::move(cells));
    }

    void refine(std::vector<std::vector<int>>& cells) const {
        const int width = k.directed ? 2 : 1;
        std::vector<int> cell_of(k.size());
        while (true) {
            for (std::size_t ci = 0; ci < cells.size(); ++ci)
                for (int v : cells[ci]) cell_of[v] = static_cast<int>(ci);
            bool split = false;
            for (std::size_t ci = 0; ci < cells.size() && !split; ++ci) {
                if (cells[ci].size() <= 1) continue;
                std::vector<std::pair<std::vector<int>, int>> sigs;
                sigs.reserve(cells[ci].size());
                for (int v : cells[ci]) {
                    std::vector<int> s(cells.size() * width, 0);
                    k.out[v].for_each([&](int w) { ++s[cell_of[w] * width]; });
                    if (k.directed)
                        k.in[v].for_each([&](int w) { ++s[cell_of[w] * width + 1]; });
                    sigs.emplace_back(std::move(s), v);
                }
                bool uniform = true;
                for (std::size_t i = 1; i < sigs.size(); ++i)
                    if (sigs[i].first != sigs[0].first) {
                        uniform = false;
                        break;
                    }
                if (uniform) continue;
                std::stable_sort(sigs.begin(), sigs.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                std::vector<std::vector<int>> runs;
                for (std::size_t i = 0; i < sigs.size(); ++i) {
                    if (i == 0 || sigs[i].first != sigs[i - 1].first) runs.emplace_back();
                    runs.back().push_back(sigs[i].second);
                }
                const auto at = cells.begin() + static_cast<std::ptrdiff_t>(ci);
                cells.erase(at);
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci),
                             runs.begin(), runs.end());
                split = true;
            }
            if (!split) return;
        }
    }

    void search(std::vector<std::vector<int>> cells) {
        refine(cells);
        std::size_t branch = cells.size();
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            if (cells[ci].size() > 1) {
                branch = ci;
                break;
            }
        if (branch == cells.size()) {
            std::vector<int> order;
            order.reserve(k.size());
            for (const auto& c : cells) order.push_back(c[0]);
            std::string cand = serialize(order);
            if (!have_best || cand < best) {
                best = std::move(cand);
                best_order = std::move(order);
                have_best = true;
            } else if (cand == best && order != best_order) {
                // Equal serializations make position-wise vertex matching an
                // automorphism.
                std::vector<int> g(k.size());
                for (std::size_t i = 0; i < order.size(); ++i)
                    g[order[i]] = best_order[i];
                add_generator(std::move(g));
            }
            return;
        }
        std::vector<int> tried;
        for (int v : cells[branch]) {
            if (in_tried_orbit(v, tried)) continue;
            tried.push_back(v);
            std::vector<std::vector<int>> child = cells;
            std::vector<int> rest;
            rest.reserve(cells[branch].size() - 1);
            for (int w : cells[branch])
                if (w != v) rest.push_back(w);
            child[branch] = {v};
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(branch) + 1,
                         std::move(rest));
            path.push_back(v);
            search(std::move(child));
            path.pop_back();
        }
    }

    void add_generator(std::vector<int> g) {
        if (gens.size() >= 256) return;
        for (const auto& h : gens)
            if (h == g) return;
        gens.push_back(std::move(g));
    }

    // True when some product of discovered automorphisms that all fix the
    // individualized path pointwise maps an already-searched sibling to v.
    // Such a branch repeats an explored subtree up to relabeling, so the
    // best serialization is unaffected by skipping it.
    bool in_tried_orbit(int v, const std::vector<int>& tried) const {
        if (tried.empty() || gens.empty()) return false;
        std::vector<const std::vector<int>*> fixing;
        for (const auto& g : gens) {
            bool fixes = true;
            for (int p : path)
                if (g[p] != p) {
                    fixes = false;
                    break;
                }
            if (fixes) fixing.push_back(&g);
        }
        if (fixing.empty()) return false;
        std::vector<char> seen(k.size(), 0);
        std::vector<int> queue = tried;
        for (int u : queue) seen[u] = 1;
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            for (const auto* g : fixing) {
                const int w = (*g)[u];
                if (w == v) return true;
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        return false;
    }

    std::string serialize(const std::vector<int>& order) const {
        std::string s;
        for (int v : order) {
            s += k.code[v];
            s += ';';
        }
        s += '|';
        for (int i : order)
            for (int j : order) s += k.out[i].test(j) ? '1' : '0';
        return s;
    }
};

template <class Adjacency>
CanonicalForm assemble(int n, char tag, const Kernel& k, const IRSearch& ir, Adjacency row) {
    std::vector<int> order;
    order.reserve(n);
    for (int kv : ir.best_order)
        for (int orig : k.members[kv]) order.push_back(orig);
    CanonicalForm cf;
    cf.labeling.assign(n, 0);
    for (int p = 0; p < n; ++p) cf.labeling[order[p]] = p;
    cf.bytes = tag + std::to_string(n) + ":";
    cf.bytes.reserve(cf.bytes.size() + static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const Bitset& r = row(order[i]);
        for (int j = 0; j < n; ++j) cf.bytes += r.test(order[j]) ? '1' : '0';
    }
    return cf;
}

void check_size(int n, int max_vertices) {
    if (n > max_vertices)
        throw Error(ErrorCode::SizeBound, "graph has " + std::to_string(n) +
                                              " vertices, canonical form bound is " +
                                              std::to_string(max_vertices));
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, int max_vertices) {
    check_size(g.vertex_count(), max_vertices);
    Kernel k = collapse_graph(g);
    IRSearch ir(k);
    ir.run();
    return assemble(g.vertex_count(), 'U', k, ir, [&](int v) -> const Bitset& {
        return g.neighbors(v);
    });
}

CanonicalForm canonical_form(const DiGraph& d, int max_vertices) {
    check_size(d.vertex_count(), max_vertices);
    Kernel k = collapse_digraph(d);
    IRSearch ir(k);
    ir.run();
    return assemble(d.vertex_count(), 'D', k, ir, [&](int v) -> const Bitset& {
        return d.out(v);
    });
}

std::optional<std::vector<int>> are_isomorphic(const Graph& a, const Graph& b,
                                               int max_vertices) {
    if (a.vertex_count() != b.vertex_count()) return std::nullopt;
    const CanonicalForm ca = canonical_form(a, max_vertices);
    const CanonicalForm cb = canonical_form(b, max_vertices);
    if (ca.bytes != cb.bytes) return std::nullopt;
    const int n = a.vertex_count();
    std::vector<int> from_position(n), witness(n);
    for (int v = 0; v < n; ++v) from_position[cb.labeling[v]] = v;
    for (int v = 0; v < n; ++v) witness[v] = from_position[ca.labeling[v]];
    return witness;
}

bool are_digraph_isomorphic(const DiGraph& a, const DiGraph& b, int max_vertices) {
    if (a.vertex_count() != b.vertex_count()) return false;
    return canonical_form(a, max_vertices).bytes == canonical_form(b, max_vertices).bytes;
}

}  // namespace pg
