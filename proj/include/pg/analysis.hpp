#ifndef PG_ANALYSIS_HPP
#define PG_ANALYSIS_HPP

#include <vector>

#include "pg/graph.hpp"
#include "pg/group.hpp"

namespace pg {

// Partition of the vertex set into classes of equal closed neighborhood.
// Blocks are listed in order of their smallest member; block_of[v] is the
// index of the block containing v.
struct EquivPartition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;
};

// Level structure of one equivalence class in the power graph of a p-group:
// the class is a union of generator sets of cyclic subgroups C_{p^i} for i in
// one integer interval, and the level for exponent i has phi(p^i) members.
struct ClassProfile {
    struct Level {
        int exponent;
        long long size;
        bool operator==(const Level&) const = default;
    };

    long long prime = 0;
    std::vector<Level> levels;

    bool operator==(const ClassProfile&) const = default;
};

// N(v) together with v itself.
Bitset closed_neighborhood(const Graph& g, int v);

// Classes of the relation "equal closed neighborhoods".
EquivPartition equivalence_classes(const Graph& g);

// Quotient of d by the partition: arc B -> C (B != C) iff some member of B
// has an arc to some member of C. Throws Error(PartitionMismatch) if p does
// not partition the vertex set of d exactly.
DiGraph quotient_digraph(const DiGraph& d, const EquivPartition& p);

// Vertices whose closed neighborhood is the whole vertex set.
Bitset dominating_vertices(const Graph& g);

// The power set O(x) = {x^n : n in Z \ {-1, 0, 1}} computed over exponent
// residues: powers x^n for n = 2 .. max(order(x), 2). The exponent set
// constrains exponents, not values, so x^-1 appears whenever some allowed
// exponent reaches it (for order 5, n = 4 does).
Bitset o_set(const FiniteGroup& g, int x);

// {x : x^n = u}.
Bitset nth_roots(const FiniteGroup& g, int u, long long n);

// {x : x^q = u for some prime q}. An element x qualifies iff the unique
// residue r with x^r = u (if any) has a prime in its arithmetic progression
// r + k*order(x): gcd(r, order(x)) = 1, or r itself prime, or r = 0 with
// order(x) prime.
Bitset prime_roots(const FiniteGroup& g, int u);

struct CyclicSubgroup {
    int generator;  // smallest generating element
    Bitset elements;

    bool operator==(const CyclicSubgroup&) const = default;
};

// All maximal cyclic subgroups, sorted by generator.
std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const FiniteGroup& g);

struct CyclicCover {
    int count = 0;
    std::vector<CyclicSubgroup> cover;
};

// Minimum-cardinality subfamily of the maximal cyclic subgroups covering
// prime_roots(g, u), found by exact branch and bound; ties broken by the
// lexicographically least generator sequence. Returns (0, empty) when the
// target set is empty.
CyclicCover min_cyclic_cover_of_prime_roots(const FiniteGroup& g, int u);

}  // namespace pg

#endif
