#include "pg/group.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace pg {

namespace {

std::vector<int> flatten_checked(const std::vector<std::vector<int>>& table) {
    const std::size_t n = table.size();
    if (n == 0)
        throw Error(ErrorCode::TableShape, "Cayley table is empty");
    std::vector<int> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n)
            throw Error(ErrorCode::TableShape,
                        "Cayley table is not square: row " + std::to_string(i) + " has " +
                            std::to_string(table[i].size()) + " entries, expected " +
                            std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            const int v = table[i][j];
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw Error(ErrorCode::TableEntry,
                            "table entry out of range at (" + std::to_string(i) + ", " +
                                std::to_string(j) + "): " + std::to_string(v));
            flat.push_back(v);
        }
    }
    return flat;
}

void check_identity(const std::vector<int>& flat, int n) {
    for (int i = 0; i < n; ++i) {
        if (flat[i] != i)
            throw Error(ErrorCode::IdentityLaw,
                        "identity law violated: 0 * " + std::to_string(i) + " = " +
                            std::to_string(flat[i]));
        if (flat[static_cast<std::size_t>(i) * n] != i)
            throw Error(ErrorCode::IdentityLaw,
                        "identity law violated: " + std::to_string(i) + " * 0 = " +
                            std::to_string(flat[static_cast<std::size_t>(i) * n]));
    }
}

void check_inverses(const std::vector<int>& flat, int n) {
    for (int i = 0; i < n; ++i) {
        int hits = 0;
        for (int j = 0; j < n; ++j)
            if (flat[static_cast<std::size_t>(i) * n + j] == FiniteGroup::identity) ++hits;
        if (hits != 1)
            throw Error(ErrorCode::MissingInverse,
                        "row " + std::to_string(i) + " contains the identity " +
                            std::to_string(hits) + " times, expected once");
    }
}

void check_associativity(const std::vector<int>& flat, int n) {
    auto mul = [&](int a, int b) { return flat[static_cast<std::size_t>(a) * n + b]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int ij = mul(i, j);
            for (int k = 0; k < n; ++k)
                if (mul(ij, k) != mul(i, mul(j, k)))
                    throw Error(ErrorCode::Associativity,
                                "associativity violated at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ", " + std::to_string(k) + ")");
        }
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> flat, std::string name)
    : order_(order), table_(std::move(flat)), name_(std::move(name)) {
    element_names_.reserve(order_);
    for (int i = 0; i < order_; ++i) element_names_.push_back(std::to_string(i));
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table,
                                           std::string name) {
    std::vector<int> flat = flatten_checked(table);
    const int n = static_cast<int>(table.size());
    check_identity(flat, n);
    check_inverses(flat, n);
    check_associativity(flat, n);
    return FiniteGroup(n, std::move(flat), std::move(name));
}

FiniteGroup FiniteGroup::trusted(const std::vector<std::vector<int>>& table, std::string name) {
    std::vector<int> flat = flatten_checked(table);
    const int n = static_cast<int>(table.size());
    check_identity(flat, n);
    return FiniteGroup(n, std::move(flat), std::move(name));
}

int FiniteGroup::power(int x, long long n) const {
    int acc = identity;
    int base = x;
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        base = mul(base, base);
        n >>= 1;
    }
    return acc;
}

void FiniteGroup::set_element_names(std::vector<std::string> names) {
    if (static_cast<int>(names.size()) != order_)
        throw Error(ErrorCode::TableShape, "element name list has wrong length");
    element_names_ = std::move(names);
}

void FiniteGroup::validate() const {
    check_identity(table_, order_);
    check_inverses(table_, order_);
    check_associativity(table_, order_);
}

int element_order(const FiniteGroup& g, int x) {
    int n = 1;
    int cur = x;
    while (cur != FiniteGroup::identity) {
        cur = g.mul(cur, x);
        ++n;
    }
    return n;
}

Bitset cyclic_subgroup(const FiniteGroup& g, int x) {
    Bitset out(g.order());
    int cur = FiniteGroup::identity;
    do {
        out.set(cur);
        cur = g.mul(cur, x);
    } while (cur != FiniteGroup::identity);
    return out;
}

bool is_nilpotent(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<int> ord(n);
    for (int i = 0; i < n; ++i) ord[i] = element_order(g, i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::gcd(ord[i], ord[j]) == 1 && g.mul(i, j) != g.mul(j, i)) return false;
    return true;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, int max_order) {
    const long long n = static_cast<long long>(g.order()) * h.order();
    if (n > max_order)
        throw Error(ErrorCode::OrderBound, "direct product order " + std::to_string(n) +
                                               " exceeds the maximum " +
                                               std::to_string(max_order));
    const int nh = h.order();
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < nh; ++b)
            for (int c = 0; c < g.order(); ++c)
                for (int d = 0; d < nh; ++d)
                    table[static_cast<std::size_t>(a) * nh + b]
                         [static_cast<std::size_t>(c) * nh + d] = g.mul(a, c) * nh + h.mul(b, d);
    FiniteGroup out = FiniteGroup::trusted(table, g.name() + "x" + h.name());
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < nh; ++b)
            names.push_back("(" + g.element_name(a) + "," + h.element_name(b) + ")");
    out.set_element_names(std::move(names));
    return out;
}

}  // namespace pg
