#include "pg/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pg/numbers.hpp"

namespace pg {

Bitset closed_neighborhood(const Graph& g, int v) {
    Bitset b = g.neighbors(v);
    b.set(v);
    return b;
}

EquivPartition equivalence_classes(const Graph& g) {
    const int n = g.vertex_count();
    std::map<Bitset, std::vector<int>> by_nbhd;
    for (int v = 0; v < n; ++v) by_nbhd[closed_neighborhood(g, v)].push_back(v);
    EquivPartition p;
    p.blocks.reserve(by_nbhd.size());
    for (auto& [nbhd, members] : by_nbhd) p.blocks.push_back(std::move(members));
    // Members were inserted in ascending vertex order, so front() is the
    // smallest member of each block.
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    p.block_of.assign(n, -1);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (int v : p.blocks[b]) p.block_of[v] = static_cast<int>(b);
    return p;
}

DiGraph quotient_digraph(const DiGraph& d, const EquivPartition& p) {
    const int n = d.vertex_count();
    if (static_cast<int>(p.block_of.size()) != n)
        throw Error(ErrorCode::PartitionMismatch,
                    "partition covers " + std::to_string(p.block_of.size()) +
                        " vertices, digraph has " + std::to_string(n));
    std::vector<char> seen(n, 0);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (int v : p.blocks[b]) {
            if (v < 0 || v >= n || seen[v] || p.block_of[v] != static_cast<int>(b))
                throw Error(ErrorCode::PartitionMismatch,
                            "partition blocks do not partition the vertex set");
            seen[v] = 1;
        }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw Error(ErrorCode::PartitionMismatch,
                        "vertex " + std::to_string(v) + " is not covered by any block");

    DiGraph q(static_cast<int>(p.blocks.size()));
    for (int u = 0; u < n; ++u)
        d.out(u).for_each([&](int v) {
            if (p.block_of[u] != p.block_of[v]) q.add_arc(p.block_of[u], p.block_of[v]);
        });
    return q;
}

Bitset dominating_vertices(const Graph& g) {
    const int n = g.vertex_count();
    Bitset out(n);
    for (int v = 0; v < n; ++v)
        if (closed_neighborhood(g, v).count() == n) out.set(v);
    return out;
}

Bitset o_set(const FiniteGroup& g, int x) {
    const int d = element_order(g, x);
    Bitset out(g.order());
    int cur = g.mul(x, x);
    out.set(cur);  // n = 2
    for (int n = 3; n <= d; ++n) {
        cur = g.mul(cur, x);
        out.set(cur);
    }
    return out;
}

Bitset nth_roots(const FiniteGroup& g, int u, long long n) {
    Bitset out(g.order());
    for (int x = 0; x < g.order(); ++x)
        if (g.power(x, n) == u) out.set(x);
    return out;
}

Bitset prime_roots(const FiniteGroup& g, int u) {
    Bitset out(g.order());
    for (int x = 0; x < g.order(); ++x) {
        // Find the unique residue r in [0, order(x)) with x^r = u, if any.
        int r = -1;
        int cur = FiniteGroup::identity;
        int d = 0;
        do {
            if (cur == u) r = d;
            cur = g.mul(cur, x);
            ++d;
        } while (cur != FiniteGroup::identity);
        if (r < 0) continue;
        // The progression r + k*d contains a prime iff one of these holds
        // (Dirichlet for the coprime case; otherwise every member shares a
        // factor with d, leaving only r itself or d when r = 0).
        if (std::gcd(r, d) == 1 || is_prime(r) || (r == 0 && is_prime(d))) out.set(x);
    }
    return out;
}

std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const FiniteGroup& g) {
    std::map<Bitset, int> generator_of;  // element set -> smallest generator
    for (int x = 0; x < g.order(); ++x) {
        Bitset s = cyclic_subgroup(g, x);
        auto [it, inserted] = generator_of.try_emplace(std::move(s), x);
        (void)it;
        (void)inserted;
    }
    std::vector<CyclicSubgroup> all;
    all.reserve(generator_of.size());
    for (const auto& [elements, gen] : generator_of) all.push_back({gen, elements});
    std::vector<CyclicSubgroup> maximal;
    for (const CyclicSubgroup& c : all) {
        bool contained = false;
        for (const CyclicSubgroup& other : all)
            if (c.elements.is_proper_subset_of(other.elements)) {
                contained = true;
                break;
            }
        if (!contained) maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
                  return a.generator < b.generator;
              });
    return maximal;
}

namespace {

struct CoverSearch {
    const std::vector<CyclicSubgroup>& family;
    Bitset target;
    int best_count;
    std::vector<int> best;     // indices into family
    std::vector<int> current;

    // Number of family sets covering each target element, for branch ordering.
    void run() {
        Bitset uncovered = target;
        descend(uncovered);
    }

    void descend(const Bitset& uncovered) {
        if (!uncovered.any()) {
            std::vector<int> gens_cur, gens_best;
            for (int i : current) gens_cur.push_back(family[i].generator);
            for (int i : best) gens_best.push_back(family[i].generator);
            if (static_cast<int>(current.size()) < best_count ||
                (static_cast<int>(current.size()) == best_count && gens_cur < gens_best)) {
                best_count = static_cast<int>(current.size());
                best = current;
            }
            return;
        }
        if (static_cast<int>(current.size()) + 1 > best_count) return;
        // Branch on the uncovered element with the fewest covering sets.
        int pivot = -1, fewest = -1;
        uncovered.for_each([&](int e) {
            int c = 0;
            for (const CyclicSubgroup& s : family)
                if (s.elements.test(e)) ++c;
            if (pivot < 0 || c < fewest) {
                pivot = e;
                fewest = c;
            }
        });
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (!family[i].elements.test(pivot)) continue;
            current.push_back(static_cast<int>(i));
            Bitset next = uncovered;
            family[i].elements.for_each([&](int e) {
                if (next.test(e)) next.reset(e);
            });
            descend(next);
            current.pop_back();
        }
    }
};

}  // namespace

CyclicCover min_cyclic_cover_of_prime_roots(const FiniteGroup& g, int u) {
    Bitset target = prime_roots(g, u);
    CyclicCover out;
    if (!target.any()) return out;
    std::vector<CyclicSubgroup> family = maximal_cyclic_subgroups(g);
    CoverSearch search{family, target, static_cast<int>(family.size()) + 1, {}, {}};
    search.run();
    out.count = search.best_count;
    for (int i : search.best) out.cover.push_back(family[i]);
    return out;
}

}  // namespace pg
