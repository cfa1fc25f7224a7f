#ifndef PG_GROUP_HPP
#define PG_GROUP_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "pg/bitset.hpp"

namespace pg {

// Hard ceiling on group orders the library will materialize.
inline constexpr int kMaxGroupOrder = 4096;

enum class ErrorCode {
    SpecSyntax,         // group spec string does not match the grammar
    SpecRange,          // atom parameter outside its admissible range
    TableShape,         // Cayley table is not square
    TableEntry,         // table entry outside [0, n)
    IdentityLaw,        // row or column 0 is not the identity map
    Associativity,      // (i*j)*k != i*(j*k) for some triple
    MissingInverse,     // some row does not contain the identity exactly once
    OrderBound,         // requested order exceeds the configured maximum
    GraphInvariant,     // loop or out-of-range vertex in a graph operation
    PartitionMismatch,  // partition does not cover the vertex set exactly
    FileFormat,         // malformed input file
    NotPowerGraph,      // input graph admits no accepted reconstruction
    SizeBound,          // vertex count exceeds the configured maximum
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Finite group given by its Cayley table. Elements are indices 0..n-1 and
// index 0 is always the identity.
class FiniteGroup {
public:
    // Validates the table completely: shape, entry range, identity law,
    // inverses, associativity. Throws Error with a specific code on the first
    // violation found.
    static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                         std::string name = "G");

    // Checks only shape, entry range and the identity law; associativity and
    // inverse checks are skipped. For tables from a trusted source.
    static FiniteGroup trusted(const std::vector<std::vector<int>>& table,
                               std::string name = "G");

    int order() const { return order_; }

    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }

    // x^n for n >= 0 by binary exponentiation.
    int power(int x, long long n) const;

    static constexpr int identity = 0;

    const std::string& name() const { return name_; }

    const std::string& element_name(int i) const { return element_names_[i]; }

    std::vector<std::string> element_names() const { return element_names_; }

    void set_element_names(std::vector<std::string> names);

    // Re-runs the full validation suite on the stored table.
    void validate() const;

private:
    FiniteGroup(int order, std::vector<int> flat, std::string name);

    int order_ = 1;
    std::vector<int> table_;  // row-major, order_ x order_
    std::string name_;
    std::vector<std::string> element_names_;
};

// Multiplicative order of x.
int element_order(const FiniteGroup& g, int x);

// Element set of <x> = {x^n : n >= 0}.
Bitset cyclic_subgroup(const FiniteGroup& g, int x);

// True iff every pair of elements with coprime orders commutes.
bool is_nilpotent(const FiniteGroup& g);

// Direct product with lexicographic element indexing: (a, b) -> a*|H| + b.
// Throws Error(OrderBound) if |G|*|H| exceeds max_order.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           int max_order = kMaxGroupOrder);

}  // namespace pg

#endif
