#include <functional>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pg/catalog.hpp"
#include "pg/group.hpp"
#include "pg/group_spec.hpp"

using pg::Atom;
using pg::ErrorCode;
using pg::FiniteGroup;
using pg::GroupSpec;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const pg::Error& e) {
        return e.code();
    }
    FAIL("expected pg::Error");
    return ErrorCode::SpecSyntax;
}

}  // namespace

TEST_CASE("parse_group_spec grammar") {
    const GroupSpec c12 = pg::parse_group_spec("C12");
    REQUIRE(c12.terms.size() == 1);
    CHECK(c12.terms[0].kind == Atom::Kind::Cyclic);
    CHECK(c12.terms[0].param == 12);
    CHECK(c12.order() == 12);
    CHECK(c12.text() == "C12");

    const GroupSpec triple = pg::parse_group_spec("C2xC2xC3");
    REQUIRE(triple.terms.size() == 3);
    CHECK(triple.order() == 12);
    CHECK(triple.text() == "C2xC2xC3");

    const GroupSpec mixed = pg::parse_group_spec("q8Xd4xh3");
    CHECK(mixed.text() == "Q8xD4xH3");
    CHECK(mixed.order() == 8 * 4 * 27);
}

TEST_CASE("parse_group_spec errors") {
    CHECK(code_of([] { pg::parse_group_spec("Q6"); }) == ErrorCode::SpecRange);
    CHECK(code_of([] { pg::parse_group_spec("Q4"); }) == ErrorCode::SpecRange);
    CHECK(code_of([] { pg::parse_group_spec("H2"); }) == ErrorCode::SpecRange);
    CHECK(code_of([] { pg::parse_group_spec("H9"); }) == ErrorCode::SpecRange);
    CHECK(code_of([] { pg::parse_group_spec("D3"); }) == ErrorCode::SpecRange);
    CHECK(code_of([] { pg::parse_group_spec("D6"); }) == ErrorCode::SpecRange);
    CHECK(code_of([] { pg::parse_group_spec("C0"); }) == ErrorCode::SpecRange);
    CHECK(code_of([] { pg::parse_group_spec(""); }) == ErrorCode::SpecSyntax);
    CHECK(code_of([] { pg::parse_group_spec("C"); }) == ErrorCode::SpecSyntax);
    CHECK(code_of([] { pg::parse_group_spec("X5"); }) == ErrorCode::SpecSyntax);
    CHECK(code_of([] { pg::parse_group_spec("C2x"); }) == ErrorCode::SpecSyntax);
    CHECK(code_of([] { pg::parse_group_spec("C2yC3"); }) == ErrorCode::SpecSyntax);
}

TEST_CASE("normalize_spec") {
    auto normal_text = [](const char* s) {
        return pg::normalize_spec(pg::parse_group_spec(s)).text();
    };
    CHECK(normal_text("D4") == "C2xC2");
    CHECK(normal_text("C2xC3") == "C6");
    CHECK(normal_text("C3xC2") == "C6");
    CHECK(normal_text("C2xC4xC3") == "C2xC12");
    CHECK(normal_text("Q8xC3xC2") == "C6xQ8");
    CHECK(normal_text("C1xC5") == "C5");
    CHECK(normal_text("C1xC1") == "C1");
    CHECK(normal_text("D4xC2") == "C2xC2xC2");
    CHECK(normal_text("H3xD8xQ8") == "D8xH3xQ8");
}

TEST_CASE("realize cyclic and small atoms") {
    const FiniteGroup c6 = pg::realize(pg::parse_group_spec("C6"));
    REQUIRE(c6.order() == 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(c6.mul(i, j) == (i + j) % 6);

    const FiniteGroup q8 = pg::realize(pg::parse_group_spec("Q8"));
    CHECK(oracle::order_census(q8) == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});

    const FiniteGroup h3 = pg::realize(pg::parse_group_spec("H3"));
    CHECK(oracle::order_census(h3) == std::map<int, int>{{1, 1}, {3, 26}});

    const FiniteGroup c1 = pg::realize(pg::parse_group_spec("C1"));
    CHECK(c1.order() == 1);
}

TEST_CASE("realize order bound") {
    CHECK(pg::realize(pg::parse_group_spec("C64xC64")).order() == 4096);
    CHECK(code_of([] { pg::realize(pg::parse_group_spec("C64xC64xC2")); }) ==
          ErrorCode::OrderBound);
    CHECK(code_of([] { pg::realize(pg::parse_group_spec("C100"), 64); }) ==
          ErrorCode::OrderBound);
}

TEST_CASE("from_cayley_table validation") {
    const FiniteGroup trivial = FiniteGroup::from_cayley_table({{0}});
    CHECK(trivial.order() == 1);

    const FiniteGroup s3 = FiniteGroup::from_cayley_table(oracle::s3_table(), "S3");
    CHECK(s3.order() == 6);
    CHECK_FALSE(pg::is_nilpotent(s3));
    CHECK(oracle::order_census(s3) == std::map<int, int>{{1, 1}, {2, 3}, {3, 2}});

    CHECK(code_of([] {
              pg::FiniteGroup::from_cayley_table({{0, 1}, {1, 0}, {0, 1}});
          }) == ErrorCode::TableShape);
    CHECK(code_of([] { pg::FiniteGroup::from_cayley_table({{0, 1}, {1}}); }) ==
          ErrorCode::TableShape);
    CHECK(code_of([] { pg::FiniteGroup::from_cayley_table({{0, 1}, {1, 2}}); }) ==
          ErrorCode::TableEntry);
    CHECK(code_of([] {
              pg::FiniteGroup::from_cayley_table(
                  {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
          }) == ErrorCode::IdentityLaw);
    CHECK(code_of([] {
              pg::FiniteGroup::from_cayley_table(oracle::missing_inverse_table());
          }) == ErrorCode::MissingInverse);
    CHECK(code_of([] {
              pg::FiniteGroup::from_cayley_table(oracle::non_associative_table());
          }) == ErrorCode::Associativity);
}

TEST_CASE("trusted skips associativity only") {
    const FiniteGroup loose = FiniteGroup::trusted(oracle::non_associative_table());
    CHECK(loose.order() == 5);
    CHECK(code_of([&] { loose.validate(); }) == ErrorCode::Associativity);
    CHECK(code_of([] { pg::FiniteGroup::trusted({{0, 1}, {1, 2}}); }) ==
          ErrorCode::TableEntry);
}

TEST_CASE("element arithmetic") {
    const FiniteGroup c6 = pg::realize(pg::parse_group_spec("C6"));
    CHECK(pg::element_order(c6, 2) == 3);
    CHECK(pg::element_order(c6, 0) == 1);
    CHECK(pg::cyclic_subgroup(c6, 2).to_vector() == std::vector<int>{0, 2, 4});
    CHECK(pg::cyclic_subgroup(c6, 1).count() == 6);
    CHECK(c6.power(5, 0) == 0);
    CHECK(c6.power(1, 1000000007) == 1000000007 % 6);

    const FiniteGroup q8 = pg::realize(pg::parse_group_spec("Q8"));
    int involution = -1;
    for (int x = 1; x < 8; ++x)
        if (pg::element_order(q8, x) == 2) involution = x;
    REQUIRE(involution != -1);
    CHECK(pg::element_order(q8, involution) == 2);

    const FiniteGroup h3 = pg::realize(pg::parse_group_spec("H3"));
    for (int x = 1; x < h3.order(); ++x)
        CHECK(pg::cyclic_subgroup(h3, x).count() == 3);
}

TEST_CASE("catalog-wide group laws") {
    for (const pg::CatalogEntry& entry : pg::build_catalog(16)) {
        const FiniteGroup& g = entry.group;
        CHECK_NOTHROW(g.validate());
        CHECK(pg::is_nilpotent(g));
        for (int x = 0; x < g.order(); ++x) {
            const int o = pg::element_order(g, x);
            CHECK(o == oracle::brute_element_order(g, x));
            CHECK(g.order() % o == 0);
            CHECK(pg::cyclic_subgroup(g, x).count() == o);
        }
    }
}

TEST_CASE("direct_product") {
    const FiniteGroup c5 = pg::realize(pg::parse_group_spec("C5"));
    const FiniteGroup trivial = pg::realize(pg::parse_group_spec("C1"));
    const FiniteGroup lifted = pg::direct_product(trivial, c5);
    REQUIRE(lifted.order() == 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(lifted.mul(i, j) == c5.mul(i, j));

    const FiniteGroup klein = pg::realize(pg::parse_group_spec("C2xC2"));
    CHECK(oracle::order_census(klein) == std::map<int, int>{{1, 1}, {2, 3}});

    CHECK(oracle::order_census(pg::realize(pg::parse_group_spec("C2xC4"))) ==
          std::map<int, int>{{1, 1}, {2, 3}, {4, 4}});

    const FiniteGroup c2 = pg::realize(pg::parse_group_spec("C2"));
    const FiniteGroup c3 = pg::realize(pg::parse_group_spec("C3"));
    const FiniteGroup c4 = pg::realize(pg::parse_group_spec("C4"));
    const FiniteGroup left = pg::direct_product(pg::direct_product(c2, c3), c4);
    const FiniteGroup right = pg::direct_product(c2, pg::direct_product(c3, c4));
    CHECK(oracle::order_census(left) == oracle::order_census(right));

    const FiniteGroup c64 = pg::realize(pg::parse_group_spec("C64"));
    CHECK(code_of([&] { pg::direct_product(c64, c64, 1024); }) ==
          ErrorCode::OrderBound);
}
