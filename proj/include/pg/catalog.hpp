#ifndef PG_CATALOG_HPP
#define PG_CATALOG_HPP

#include <string>
#include <utility>
#include <vector>

#include "pg/canonical.hpp"
#include "pg/graph.hpp"
#include "pg/group.hpp"
#include "pg/group_spec.hpp"
#include "pg/power_graph.hpp"

namespace pg {

// Library-side ceiling for catalog enumeration; the CLI enforces a much
// smaller default.
inline constexpr int kCatalogMaxOrder = 4096;

struct CatalogEntry {
    GroupSpec spec;          // normal form
    FiniteGroup group;
    Graph power_graph;
    DiGraph directed;
    CanonicalForm canonical; // of power_graph
};

// All distinct nilpotent groups expressible in the spec grammar with order
// <= max_order, deduplicated by spec normal form and sorted by (order,
// normal-form text). Deterministic: a rebuild yields identical entries.
std::vector<CatalogEntry> build_catalog(int max_order);

// Normal forms of all grammar-expressible groups of order exactly n, sorted.
// Low-level enumeration hook shared with the reconstruction fallback.
std::vector<GroupSpec> enumerate_specs_of_order(int n);

struct TwinPair {
    std::string a, b;          // normal-form names, a < b
    std::string certificate;   // why the groups are not isomorphic
};

struct VerificationReport {
    long long pairs_tested = 0;
    std::vector<std::pair<std::string, std::string>> pg_isomorphic_pairs;
    std::vector<std::pair<std::string, std::string>> violations;  // expected empty
    std::vector<TwinPair> twins;
    double elapsed_seconds = 0.0;
};

// For every unordered pair of catalog entries with isomorphic power graphs,
// checks that the directed power graphs are isomorphic as well; pairs where
// the check fails land in violations. Pairs whose groups are provably
// non-isomorphic (element-order multiset or abelianness differs) are
// reported as twins.
VerificationReport run_theorem_suite(const std::vector<CatalogEntry>& catalog);

std::vector<TwinPair> find_powergraph_twins(const std::vector<CatalogEntry>& catalog);

}  // namespace pg

#endif
