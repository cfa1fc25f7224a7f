#ifndef PG_RECONSTRUCT_HPP
#define PG_RECONSTRUCT_HPP

#include <map>
#include <string>
#include <vector>

#include "pg/analysis.hpp"
#include "pg/graph.hpp"

namespace pg {

enum class ReconstructionCase {
    complete_prime_power,  // complete input, realized as a cyclic p-group
    cyclic_match,          // isomorphic to the power graph of Cyclic(n)
    p_group_containment,   // oriented by closed-neighborhood containment
    catalog_fallback,      // matched against catalog power graphs of order n
};

const char* to_string(ReconstructionCase c);

struct ReconstructionReport {
    DiGraph digraph;
    ReconstructionCase case_used = ReconstructionCase::complete_prime_power;
    std::vector<int> identity_class;            // the class with full closed neighborhood
    std::map<int, ClassProfile> class_profiles; // block index -> profile (containment case)
    std::string notes;
};

struct ReconstructOptions {
    int max_order = 512;
};

// Rebuilds a directed power graph whose underlying graph is exactly g. The
// input is promised to be the power graph of some finite nilpotent group of
// order at most max_order; throws Error(NotPowerGraph) when no case accepts
// and Error(OrderBound) when the vertex count exceeds max_order.
ReconstructionReport reconstruct_digraph(const Graph& g, const ReconstructOptions& opts = {});

// True iff the two digraphs are isomorphic.
bool verify_reconstruction(const DiGraph& truth, const DiGraph& reconstructed);

}  // namespace pg

#endif
