#include "pg/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "pg/numbers.hpp"

namespace pg {

namespace {

// Atoms whose order divides n, in a fixed order so multiset enumeration can
// walk them with a non-decreasing index.
std::vector<Atom> atoms_dividing(long long n) {
    std::vector<Atom> out;
    for (long long k = 2; k <= n; ++k)
        if (n % k == 0) out.push_back({Atom::Kind::Cyclic, k});
    for (long long m = 4; m <= n; m *= 2)
        if (n % m == 0) out.push_back({Atom::Kind::Dihedral, m});
    for (long long m = 8; m <= n; m *= 2)
        if (n % m == 0) out.push_back({Atom::Kind::Quaternion, m});
    for (long long p = 3; p * p * p <= n; p += 2)
        if (is_prime(p) && n % (p * p * p) == 0)
            out.push_back({Atom::Kind::Heisenberg, p});
    return out;
}

void extend_multiset(const std::vector<Atom>& atoms, std::size_t from, long long remaining,
                     std::vector<Atom>& current, std::set<std::string>& seen,
                     std::vector<GroupSpec>& out) {
    if (remaining == 1) {
        const GroupSpec normal = normalize_spec(GroupSpec{current});
        if (seen.insert(normal.text()).second) out.push_back(normal);
        return;
    }
    for (std::size_t i = from; i < atoms.size(); ++i) {
        if (remaining % atoms[i].order() != 0) continue;
        current.push_back(atoms[i]);
        extend_multiset(atoms, i, remaining / atoms[i].order(), current, seen, out);
        current.pop_back();
    }
}

std::map<long long, int> order_census(const FiniteGroup& g) {
    std::map<long long, int> census;
    for (int x = 0; x < g.order(); ++x) ++census[element_order(g, x)];
    return census;
}

bool is_abelian(const FiniteGroup& g) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

std::string census_text(const std::map<long long, int>& census) {
    std::string out = "{";
    for (const auto& [ord, cnt] : census) {
        if (out.size() > 1) out += ", ";
        out += std::to_string(ord) + ":" + std::to_string(cnt);
    }
    return out + "}";
}

// Proof that the two groups are not isomorphic, or "" when neither
// certificate applies.
std::string non_isomorphism_certificate(const CatalogEntry& a, const CatalogEntry& b) {
    const auto ca = order_census(a.group);
    const auto cb = order_census(b.group);
    if (ca != cb)
        return "element order multisets differ: " + a.spec.text() + " has " + census_text(ca) +
               ", " + b.spec.text() + " has " + census_text(cb);
    const bool aa = is_abelian(a.group);
    const bool ab = is_abelian(b.group);
    if (aa != ab)
        return (aa ? a.spec : b.spec).text() + " is abelian, " +
               (aa ? b.spec : a.spec).text() + " is not";
    return "";
}

}  // namespace

std::vector<GroupSpec> enumerate_specs_of_order(int n) {
    if (n < 1)
        throw Error(ErrorCode::SpecRange, "group order must be positive, got " + std::to_string(n));
    if (n > kCatalogMaxOrder)
        throw Error(ErrorCode::OrderBound, "order " + std::to_string(n) +
                                               " exceeds the catalog ceiling " +
                                               std::to_string(kCatalogMaxOrder));
    const std::vector<Atom> atoms = atoms_dividing(n);
    std::vector<Atom> current;
    std::set<std::string> seen;
    std::vector<GroupSpec> out;
    extend_multiset(atoms, 0, n, current, seen, out);
    std::sort(out.begin(), out.end(),
              [](const GroupSpec& a, const GroupSpec& b) { return a.text() < b.text(); });
    return out;
}

std::vector<CatalogEntry> build_catalog(int max_order) {
    if (max_order < 1 || max_order > kCatalogMaxOrder)
        throw Error(ErrorCode::OrderBound,
                    "catalog bound must be in [1, " + std::to_string(kCatalogMaxOrder) +
                        "], got " + std::to_string(max_order));
    std::vector<CatalogEntry> catalog;
    for (int n = 1; n <= max_order; ++n) {
        for (const GroupSpec& spec : enumerate_specs_of_order(n)) {
            FiniteGroup group = realize(spec, std::max(max_order, kMaxGroupOrder));
            Graph pg = power_graph(group);
            DiGraph dpg = directed_power_graph(group);
            CanonicalForm canon = canonical_form(pg, std::max(n, kMaxCanonicalVertices));
            catalog.push_back({spec, std::move(group), std::move(pg), std::move(dpg),
                               std::move(canon)});
        }
    }
    return catalog;
}

VerificationReport run_theorem_suite(const std::vector<CatalogEntry>& catalog) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        for (std::size_t j = i + 1; j < catalog.size(); ++j) {
            ++report.pairs_tested;
            const CatalogEntry& a = catalog[i];
            const CatalogEntry& b = catalog[j];
            if (a.canonical.bytes != b.canonical.bytes) continue;
            report.pg_isomorphic_pairs.emplace_back(a.spec.text(), b.spec.text());
            const int limit = std::max(a.group.order(), kMaxCanonicalVertices);
            if (!are_digraph_isomorphic(a.directed, b.directed, limit))
                report.violations.emplace_back(a.spec.text(), b.spec.text());
            if (std::string cert = non_isomorphism_certificate(a, b); !cert.empty())
                report.twins.push_back({a.spec.text(), b.spec.text(), std::move(cert)});
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<TwinPair> find_powergraph_twins(const std::vector<CatalogEntry>& catalog) {
    std::vector<TwinPair> twins;
    for (std::size_t i = 0; i < catalog.size(); ++i)
        for (std::size_t j = i + 1; j < catalog.size(); ++j) {
            if (catalog[i].canonical.bytes != catalog[j].canonical.bytes) continue;
            if (std::string cert = non_isomorphism_certificate(catalog[i], catalog[j]);
                !cert.empty())
                twins.push_back(
                    {catalog[i].spec.text(), catalog[j].spec.text(), std::move(cert)});
        }
    return twins;
}

}  // namespace pg
