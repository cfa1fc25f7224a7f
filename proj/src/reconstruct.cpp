#include "pg/reconstruct.hpp"

#include <algorithm>

#include "pg/canonical.hpp"
#include "pg/catalog.hpp"
#include "pg/numbers.hpp"
#include "pg/power_graph.hpp"

namespace pg {

namespace {

// Pulls the arcs of truth back through the vertex bijection witness
// (witness[v] = vertex of truth's graph matched to v).
DiGraph pull_back(const DiGraph& truth, const std::vector<int>& witness) {
    const int n = truth.vertex_count();
    std::vector<int> inverse(n);
    for (int v = 0; v < n; ++v) inverse[witness[v]] = v;
    DiGraph out(n);
    for (int u = 0; u < n; ++u)
        truth.out(u).for_each([&](int w) { out.add_arc(inverse[u], inverse[w]); });
    return out;
}

bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != n - 1) return false;
    return true;
}

// Case C machinery. Orientation in the power graph of a p-group: for
// adjacent x, y with different closed neighborhoods, x -> y iff
// N[x] is strictly contained in N[y]. Each class splits into generator-set
// levels of sizes phi(p^a), ..., phi(p^b) where p^b is the total size of the
// class and everything it points to, and the interval [a, b] is the unique
// suffix whose phi sum equals the class size.
struct ContainmentCase {
    const Graph& g;
    long long p;
    EquivPartition classes;
    std::vector<Bitset> class_nbhd;
    ReconstructionReport report;
    bool ok = true;
    std::string why;

    ContainmentCase(const Graph& graph, long long prime) : g(graph), p(prime) {}

    void run() {
        const int n = g.vertex_count();
        classes = equivalence_classes(g);
        const int m = static_cast<int>(classes.blocks.size());
        class_nbhd.reserve(m);
        for (int b = 0; b < m; ++b)
            class_nbhd.push_back(closed_neighborhood(g, classes.blocks[b].front()));

        // Every adjacent pair of distinct classes must be strictly ordered by
        // neighborhood containment.
        for (int a = 0; a < m && ok; ++a)
            for (int b = a + 1; b < m && ok; ++b) {
                const bool adjacent = g.has_edge(classes.blocks[a].front(),
                                                 classes.blocks[b].front());
                if (!adjacent) continue;
                const bool ab = class_nbhd[a].is_proper_subset_of(class_nbhd[b]);
                const bool ba = class_nbhd[b].is_proper_subset_of(class_nbhd[a]);
                if (ab == ba) {
                    ok = false;
                    why = "adjacent classes " + std::to_string(a) + " and " +
                          std::to_string(b) + " are not ordered by containment";
                }
            }
        if (!ok) return;

        // The identity is adjacent to everything, so some class must dominate.
        bool dominated = false;
        for (int b = 0; b < m; ++b) dominated |= class_nbhd[b].count() == n;
        if (!dominated) {
            ok = false;
            why = "no class has a full closed neighborhood";
            return;
        }

        DiGraph d(n);
        for (int b = 0; b < m && ok; ++b) emit_class(d, b);
        if (!ok) return;

        report.digraph = std::move(d);
        report.case_used = ReconstructionCase::p_group_containment;
        for (int b = 0; b < m; ++b)
            if (class_nbhd[b].count() == n) report.identity_class = classes.blocks[b];
    }

    void emit_class(DiGraph& d, int b) {
        const int m = static_cast<int>(classes.blocks.size());
        const std::vector<int>& block = classes.blocks[b];
        const long long s = static_cast<long long>(block.size());

        // Arcs to every class with strictly larger closed neighborhood, and
        // the subgroup generated inside this class is the union of those
        // classes with this one.
        long long closure = s;
        for (int c = 0; c < m; ++c) {
            if (c == b || !class_nbhd[b].is_proper_subset_of(class_nbhd[c])) continue;
            closure += static_cast<long long>(classes.blocks[c].size());
            for (int x : block)
                for (int y : classes.blocks[c]) d.add_arc(x, y);
        }

        // closure must be p^bexp; the level interval [aexp, bexp] satisfies
        // sum phi(p^i) = s, i.e. s = p^bexp - p^(aexp-1), or aexp = 0 when
        // s = p^bexp.
        const auto pp = prime_power(closure);
        if (closure != 1 && (!pp || pp->first != p)) {
            ok = false;
            why = "class closure size " + std::to_string(closure) + " is not a power of " +
                  std::to_string(p);
            return;
        }
        const int bexp = closure == 1 ? 0 : pp->second;
        int aexp;
        if (s == closure) {
            aexp = 0;
        } else if (closure - s == 1) {
            aexp = 1;
        } else {
            const auto gap = prime_power(closure - s);
            if (!gap || gap->first != p) {
                ok = false;
                why = "class size " + std::to_string(s) + " does not fit a level suffix of " +
                      std::to_string(closure);
                return;
            }
            aexp = gap->second + 1;
            if (aexp > bexp) {
                ok = false;
                why = "level interval is empty";
                return;
            }
        }

        ClassProfile profile;
        profile.prime = p;
        for (int i = aexp; i <= bexp; ++i) {
            const long long size = i == 0 ? 1 : ipow(p, i) - ipow(p, i - 1);
            profile.levels.push_back({i, size});
        }
        report.class_profiles[b] = profile;

        // Slice the block into levels, lowest exponent first; higher levels
        // point at all lower ones, and members of one level at each other.
        std::vector<std::pair<std::size_t, std::size_t>> spans;
        std::size_t at = 0;
        for (const auto& lv : profile.levels) {
            spans.emplace_back(at, at + static_cast<std::size_t>(lv.size));
            at += static_cast<std::size_t>(lv.size);
        }
        if (at != block.size()) {
            ok = false;
            why = "level sizes do not add up to the class size";
            return;
        }
        for (std::size_t li = 0; li < spans.size(); ++li) {
            for (std::size_t i = spans[li].first; i < spans[li].second; ++i) {
                for (std::size_t j = spans[li].first; j < spans[li].second; ++j)
                    if (i != j) d.add_arc(block[i], block[j]);
                for (std::size_t lo = 0; lo < li; ++lo)
                    for (std::size_t j = spans[lo].first; j < spans[lo].second; ++j)
                        d.add_arc(block[i], block[j]);
            }
        }
    }
};

}  // namespace

const char* to_string(ReconstructionCase c) {
    switch (c) {
        case ReconstructionCase::complete_prime_power:
            return "complete_prime_power";
        case ReconstructionCase::cyclic_match:
            return "cyclic_match";
        case ReconstructionCase::p_group_containment:
            return "p_group_containment";
        case ReconstructionCase::catalog_fallback:
            return "catalog_fallback";
    }
    return "unknown";
}

ReconstructionReport reconstruct_digraph(const Graph& g, const ReconstructOptions& opts) {
    const int n = g.vertex_count();
    if (n == 0)
        throw Error(ErrorCode::NotPowerGraph, "empty graph has no power graph preimage");
    if (n > opts.max_order)
        throw Error(ErrorCode::OrderBound, "graph has " + std::to_string(n) +
                                               " vertices, reconstruction bound is " +
                                               std::to_string(opts.max_order));

    ReconstructionReport report;

    // Case A: complete graphs come only from cyclic p-groups.
    if (is_complete(g)) {
        if (n == 1) {
            report.digraph = DiGraph(1);
            report.case_used = ReconstructionCase::complete_prime_power;
            report.identity_class = {0};
            report.notes = "single vertex, trivial group";
            return report;
        }
        if (!prime_power(n))
            throw Error(ErrorCode::NotPowerGraph,
                        "complete graph on " + std::to_string(n) +
                            " vertices, which is not a prime power");
        const FiniteGroup c =
            realize(parse_group_spec("C" + std::to_string(n)), std::max(n, kMaxGroupOrder));
        report.digraph = directed_power_graph(c);
        report.case_used = ReconstructionCase::complete_prime_power;
        report.identity_class.resize(n);
        for (int v = 0; v < n; ++v) report.identity_class[v] = v;
        report.notes = "complete graph realized as C" + std::to_string(n);
        return report;
    }

    // Case B: power graph of the cyclic group of order n.
    {
        const FiniteGroup c = realize(parse_group_spec("C" + std::to_string(n)),
                                      std::max(n, kMaxGroupOrder));
        const Graph pc = power_graph(c);
        if (const auto witness = are_isomorphic(g, pc, std::max(n, kMaxCanonicalVertices))) {
            report.digraph = pull_back(directed_power_graph(c), *witness);
            report.case_used = ReconstructionCase::cyclic_match;
            const EquivPartition classes = equivalence_classes(g);
            for (const auto& block : classes.blocks)
                if (closed_neighborhood(g, block.front()).count() == n)
                    report.identity_class = block;
            report.notes = "matched the power graph of C" + std::to_string(n);
            return report;
        }
    }

    // Case C: p-group, oriented by closed-neighborhood containment.
    if (const auto pp = prime_power(n)) {
        ContainmentCase cc(g, pp->first);
        cc.run();
        if (cc.ok) {
            cc.report.notes = "oriented by containment for prime " + std::to_string(pp->first);
            return std::move(cc.report);
        }
        report.notes = "containment case rejected: " + cc.why + "; ";
    }

    // Case D: compare against every catalog group of this order.
    for (const GroupSpec& spec : enumerate_specs_of_order(n)) {
        const FiniteGroup h = realize(spec, std::max(n, kMaxGroupOrder));
        const Graph ph = power_graph(h);
        if (const auto witness = are_isomorphic(g, ph, std::max(n, kMaxCanonicalVertices))) {
            report.digraph = pull_back(directed_power_graph(h), *witness);
            report.case_used = ReconstructionCase::catalog_fallback;
            const EquivPartition classes = equivalence_classes(g);
            for (const auto& block : classes.blocks)
                if (closed_neighborhood(g, block.front()).count() == n)
                    report.identity_class = block;
            report.notes += "matched the power graph of " + spec.text();
            return report;
        }
    }

    throw Error(ErrorCode::NotPowerGraph,
                "graph matches no nilpotent power graph of order " + std::to_string(n));
}

bool verify_reconstruction(const DiGraph& truth, const DiGraph& reconstructed) {
    return are_digraph_isomorphic(truth, reconstructed,
                                  std::max(truth.vertex_count(), kMaxCanonicalVertices));
}

}  // namespace pg
