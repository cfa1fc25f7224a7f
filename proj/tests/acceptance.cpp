// Acceptance gate: eight checks, one PASS/FAIL line each. Exit status is the
// number of failed checks.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pg/analysis.hpp"
#include "pg/canonical.hpp"
#include "pg/catalog.hpp"
#include "pg/numbers.hpp"
#include "pg/power_graph.hpp"
#include "pg/reconstruct.hpp"

using pg::Bitset;
using pg::CatalogEntry;
using pg::DiGraph;
using pg::Graph;

namespace {

int failures = 0;

void report(bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << ": " << what << "\n";
    if (!ok) ++failures;
}

bool is_cyclic_spec(const pg::GroupSpec& spec) {
    return spec.terms.size() == 1 && spec.terms[0].kind == pg::Atom::Kind::Cyclic;
}

bool round_trips(const Graph& p, const DiGraph& truth) {
    try {
        const pg::ReconstructionReport rep = pg::reconstruct_digraph(p);
        return underlying(rep.digraph) == p && pg::verify_reconstruction(truth, rep.digraph);
    } catch (const pg::Error&) {
        return false;
    }
}

}  // namespace

int main() {
    const auto sweep_start = std::chrono::steady_clock::now();
    const std::vector<CatalogEntry> catalog = pg::build_catalog(32);
    const pg::VerificationReport sweep = pg::run_theorem_suite(catalog);
    const double sweep_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_start)
            .count();
    {
        std::ostringstream line;
        line << "sweep order <= 32: every power-graph-isomorphic pair is directed-"
                "isomorphic ("
             << sweep.pairs_tested << " pairs, " << sweep.violations.size()
             << " violations, " << sweep_seconds << "s < 60s)";
        report(sweep.violations.empty() && sweep_seconds < 60.0, line.str());
    }

    {
        std::mt19937 rng(12345);
        int groups = 0;
        bool ok = true;
        for (const CatalogEntry& entry : catalog) {
            const int n = entry.group.order();
            if (!(n == 1 || pg::prime_power(n) || is_cyclic_spec(entry.spec))) continue;
            ++groups;
            if (!round_trips(entry.power_graph, entry.directed)) ok = false;
            for (int round = 0; round < 10; ++round) {
                const Graph shuffled =
                    permuted(entry.power_graph, oracle::random_permutation(n, rng));
                if (!round_trips(shuffled, entry.directed)) ok = false;
            }
        }
        std::ostringstream line;
        line << "reconstruction round trip for " << groups
             << " p-groups and cyclic groups (order <= 32), 10 relabelings each";
        report(ok, line.str());
    }

    {
        bool ok = true;
        long long pairs = 0;
        int groups = 0;
        for (const CatalogEntry& entry : catalog) {
            if (!pg::prime_power(entry.group.order())) continue;
            ++groups;
            const Graph& p = entry.power_graph;
            const DiGraph& d = entry.directed;
            std::vector<Bitset> nb;
            nb.reserve(static_cast<std::size_t>(p.vertex_count()));
            for (int v = 0; v < p.vertex_count(); ++v)
                nb.push_back(pg::closed_neighborhood(p, v));
            for (int x = 0; x < p.vertex_count(); ++x)
                for (int y = x + 1; y < p.vertex_count(); ++y) {
                    if (!p.has_edge(x, y) || nb[x] == nb[y]) continue;
                    ++pairs;
                    const bool xy = nb[x].is_proper_subset_of(nb[y]);
                    const bool yx = nb[y].is_proper_subset_of(nb[x]);
                    if (xy == yx) ok = false;
                    if (d.has_arc(x, y) != xy || d.has_arc(y, x) != yx) ok = false;
                }
        }
        std::ostringstream line;
        line << "closed-neighborhood containment orients every adjacent "
                "non-equivalent pair in "
             << groups << " p-groups (" << pairs << " pairs)";
        report(ok, line.str());
    }

    {
        bool ok = true;
        int checked = 0;
        for (const auto& [p, kmax] :
             std::vector<std::pair<int, int>>{{2, 5}, {3, 3}, {5, 2}})
            for (int k = 1; k <= kmax; ++k) {
                const long long m = pg::ipow(p, k);
                const Graph graph = pg::power_graph(pg::realize(
                    pg::parse_group_spec("C" + std::to_string(m))));
                ++checked;
                if (graph.edge_count() != m * (m - 1) / 2) ok = false;
            }
        std::ostringstream line;
        line << "power graphs of " << checked
             << " cyclic prime-power groups are complete with exact edge counts";
        report(ok, line.str());
    }

    {
        bool ok = true;
        int groups = 0;
        for (const CatalogEntry& entry : catalog) {
            const auto pp = pg::prime_power(entry.group.order());
            if (!pp || !is_cyclic_spec(entry.spec)) continue;
            ++groups;
            for (int q : {2, 3, 5, 7, 11, 13}) {
                if (q == pp->first) continue;
                for (int u = 0; u < entry.group.order(); ++u)
                    if (pg::nth_roots(entry.group, u, q).count() != 1) ok = false;
            }
        }
        std::ostringstream line;
        line << "q-th power map is a bijection in " << groups
             << " cyclic p-groups for every prime q <= 13, q != p";
        report(ok, line.str());
    }

    {
        const pg::FiniteGroup abelian = pg::realize(pg::parse_group_spec("C3xC3xC3"));
        const pg::FiniteGroup heisenberg = pg::realize(pg::parse_group_spec("H3"));
        const Graph pa = pg::power_graph(abelian);
        const Graph ph = pg::power_graph(heisenberg);
        bool ok = pa.edge_count() == 39 && ph.edge_count() == 39;
        for (const Graph* g : {&pa, &ph}) {
            int universal = 0;
            int matched = 0;
            for (int v = 0; v < 27; ++v) {
                if (g->degree(v) == 26) ++universal;
                if (g->degree(v) == 2) ++matched;
            }
            if (universal != 1 || matched != 26) ok = false;
        }
        const auto witness = pg::are_isomorphic(pa, ph);
        if (!witness || permuted(pa, *witness) != ph) ok = false;
        if (!pg::are_digraph_isomorphic(pg::directed_power_graph(abelian),
                                        pg::directed_power_graph(heisenberg)))
            ok = false;
        bool commute_everywhere = true;
        for (int a = 0; a < 27; ++a)
            for (int b = 0; b < 27; ++b)
                if (abelian.mul(a, b) != abelian.mul(b, a)) commute_everywhere = false;
        bool found_noncommuting = false;
        for (int a = 0; a < 27 && !found_noncommuting; ++a)
            for (int b = 0; b < 27 && !found_noncommuting; ++b)
                if (heisenberg.mul(a, b) != heisenberg.mul(b, a))
                    found_noncommuting = true;
        if (!commute_everywhere || !found_noncommuting) ok = false;
        report(ok,
               "C3xC3xC3 and H3: isomorphic power graphs (39 edges, universal "
               "vertex plus 13 disjoint edges), isomorphic directed power graphs, "
               "commutativity separates the groups");
    }

    {
        bool roots_ok = true;
        for (const CatalogEntry& entry : catalog)
            for (int u = 0; u < entry.group.order(); ++u)
                if (pg::prime_roots(entry.group, u) !=
                    oracle::brute_prime_roots(entry.group, u))
                    roots_ok = false;

        bool cover_ok = true;
        int cover_groups = 0;
        for (const CatalogEntry& entry : catalog) {
            const auto maximal = pg::maximal_cyclic_subgroups(entry.group);
            if (maximal.size() > 20) continue;
            ++cover_groups;
            std::vector<Bitset> family;
            family.reserve(maximal.size());
            for (const auto& m : maximal) family.push_back(m.elements);
            for (int u = 0; u < entry.group.order(); ++u) {
                const pg::CyclicCover cover =
                    pg::min_cyclic_cover_of_prime_roots(entry.group, u);
                const Bitset target = pg::prime_roots(entry.group, u);
                if (cover.count != oracle::brute_min_cover_count(target, family))
                    cover_ok = false;
                Bitset covered(entry.group.order());
                for (const auto& sub : cover.cover) covered |= sub.elements;
                if (!target.is_subset_of(covered)) cover_ok = false;
            }
        }

        bool iso_ok = true;
        const std::vector<Graph> corpus = oracle::small_corpus();
        for (std::size_t i = 0; i < corpus.size(); ++i)
            for (std::size_t j = i; j < corpus.size(); ++j) {
                const auto witness = pg::are_isomorphic(corpus[i], corpus[j]);
                if (witness.has_value() !=
                    oracle::perm_graph_isomorphic(corpus[i], corpus[j]))
                    iso_ok = false;
                if (witness && permuted(corpus[i], *witness) != corpus[j]) iso_ok = false;
            }

        std::ostringstream line;
        line << "oracle agreement: prime roots on " << catalog.size()
             << " groups, exact covers on " << cover_groups
             << " groups, isomorphism vs permutation search on " << corpus.size()
             << " small graphs";
        report(roots_ok && cover_ok && iso_ok, line.str());
    }

    {
        std::mt19937 rng(777);
        bool ok = true;
        const std::vector<Graph> corpus = oracle::full_corpus();
        for (const Graph& g : corpus) {
            const std::string bytes = pg::canonical_form(g).bytes;
            if (pg::canonical_form(g).bytes != bytes) ok = false;
            for (int round = 0; round < 100; ++round) {
                const Graph h =
                    permuted(g, oracle::random_permutation(g.vertex_count(), rng));
                if (pg::canonical_form(h).bytes != bytes) ok = false;
            }
        }
        const std::vector<DiGraph> dcorpus = oracle::full_digraph_corpus();
        for (const DiGraph& d : dcorpus) {
            const std::string bytes = pg::canonical_form(d).bytes;
            for (int round = 0; round < 100; ++round) {
                const DiGraph h =
                    permuted(d, oracle::random_permutation(d.vertex_count(), rng));
                if (pg::canonical_form(h).bytes != bytes) ok = false;
            }
        }
        std::ostringstream line;
        line << "canonical bytes stable across 100 relabelings of "
             << corpus.size() + dcorpus.size() << " corpus graphs and repeated runs";
        report(ok, line.str());
    }

    return failures;
}
