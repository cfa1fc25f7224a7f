#ifndef PG_GROUP_SPEC_HPP
#define PG_GROUP_SPEC_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pg/group.hpp"

namespace pg {

// One factor of a direct-product description.
//   Cyclic n      (n >= 1)            spelled Cn
//   Quaternion m  (m = 2^k, k >= 3)   spelled Qm, generalized quaternion
//   Dihedral m    (m = 2^k, k >= 2)   spelled Dm, m is the group order
//   Heisenberg p  (p an odd prime)    spelled Hp, order p^3, exponent p
struct Atom {
    enum class Kind { Cyclic, Quaternion, Dihedral, Heisenberg };

    Kind kind;
    long long param;

    long long order() const;
    std::string text() const;

    bool operator==(const Atom&) const = default;
};

struct GroupSpec {
    std::vector<Atom> terms;

    long long order() const;
    std::string text() const;  // terms joined with 'x', e.g. "C2xC4"

    bool operator==(const GroupSpec&) const = default;
};

// Parses the grammar  spec := term ('x' term)*  with case-insensitive atom
// letters. Throws Error(SpecSyntax) with the offending position, or
// Error(SpecRange) naming the atom whose parameter is out of range.
GroupSpec parse_group_spec(std::string_view text);

// Isomorphism-normal form used for catalog deduplication: the abelian part is
// rewritten into invariant factors (ascending divisibility chain), Dihedral 4
// becomes C2xC2, C1 factors are dropped, and atoms are sorted. The trivial
// group normalizes to the single atom C1.
GroupSpec normalize_spec(const GroupSpec& spec);

// Builds the Cayley table realization of the spec. Atom groups are combined
// with direct_product left to right; the running order is capped by max_order.
FiniteGroup realize(const GroupSpec& spec, int max_order = kMaxGroupOrder);

}  // namespace pg

#endif
