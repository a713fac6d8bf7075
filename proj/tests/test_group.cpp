#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numeric>

#include "autodel/errors.hpp"
#include "autodel/group.hpp"

using namespace autodel;

TEST_CASE("group families") {
    CHECK(FiniteGroup::trivial().order() == 1);
    CHECK(FiniteGroup::cyclic(1).order() == 1);
    CHECK(FiniteGroup::cyclic(5).order() == 5);
    CHECK(FiniteGroup::dihedral(4).order() == 8);
    CHECK(FiniteGroup::symmetric(3).order() == 6);
    CHECK(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)).order() == 6);
    CHECK_THROWS_AS(FiniteGroup::cyclic(0), input_error);
    CHECK_THROWS_AS(FiniteGroup::symmetric(8), resource_error); // 8! > 5040
}

TEST_CASE("element orders") {
    CHECK(FiniteGroup::cyclic(4).element_orders() == std::vector<int>{1, 2, 4, 4});
    CHECK(FiniteGroup::symmetric(3).element_orders() == std::vector<int>{1, 2, 2, 2, 3, 3});
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(v4.element_orders() == std::vector<int>{1, 2, 2, 2});
    CHECK(FiniteGroup::trivial().element_orders() == std::vector<int>{1});
}

TEST_CASE("identity is fixed at index 0") {
    for (const auto& g : {FiniteGroup::symmetric(4), FiniteGroup::dihedral(6), FiniteGroup::cyclic(9)}) {
        for (int x = 0; x < g.order(); ++x) {
            CHECK(g.mul(0, x) == x);
            CHECK(g.mul(x, 0) == x);
            CHECK(g.mul(x, g.inverse(x)) == 0);
        }
    }
}

TEST_CASE("parse_group_spec") {
    CHECK(is_isomorphic(parse_group_spec("Z2xZ3"), FiniteGroup::cyclic(6)).has_value());
    CHECK(parse_group_spec("I").order() == 1);
    CHECK(parse_group_spec("S3") == FiniteGroup::symmetric(3));
    CHECK(parse_group_spec("C4") == FiniteGroup::cyclic(4));
    CHECK(parse_group_spec(" Z2 x D4 ").order() == 16);
    CHECK(parse_group_spec("Z2xZ2xZ2").order() == 8);

    CHECK_THROWS_AS(parse_group_spec(""), parse_error);
    CHECK_THROWS_AS(parse_group_spec("Z"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("Q3"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("Z2x"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("Z0"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("Z2yZ3"), parse_error);
    try {
        parse_group_spec("Z2xx");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.byte_offset() == 3);
    }
}

TEST_CASE("table files") {
    auto write_table = [](const char* path, const std::string& content) {
        std::ofstream out(path);
        out << content;
    };
    SUBCASE("valid cyclic table") {
        write_table("table_z3.txt", "3\n0 1 2\n1 2 0\n2 0 1\n");
        FiniteGroup g = parse_group_spec("table:table_z3.txt");
        CHECK(g.order() == 3);
        CHECK(is_isomorphic(g, FiniteGroup::cyclic(3)).has_value());
        std::remove("table_z3.txt");
    }
    SUBCASE("product with a trailing table atom") {
        write_table("table_z2.txt", "2\n0 1\n1 0\n");
        CHECK(parse_group_spec("Z3xtable:table_z2.txt").order() == 6);
        std::remove("table_z2.txt");
    }
    SUBCASE("non-latin-square table") {
        write_table("table_bad1.txt", "2\n0 1\n1 1\n");
        CHECK_THROWS_WITH_AS(parse_group_spec("table:table_bad1.txt"),
                             doctest::Contains("Latin square"), validation_error);
        std::remove("table_bad1.txt");
    }
    SUBCASE("wrong identity") {
        write_table("table_bad2.txt", "2\n1 0\n0 1\n");
        CHECK_THROWS_WITH_AS(parse_group_spec("table:table_bad2.txt"),
                             doctest::Contains("identity"), validation_error);
        std::remove("table_bad2.txt");
    }
    SUBCASE("non-associative loop of order 5") {
        write_table("table_bad3.txt",
                    "5\n"
                    "0 1 2 3 4\n"
                    "1 0 3 4 2\n"
                    "2 4 0 1 3\n"
                    "3 2 4 0 1\n"
                    "4 3 1 2 0\n");
        CHECK_THROWS_WITH_AS(parse_group_spec("table:table_bad3.txt"),
                             doctest::Contains("associativity"), validation_error);
        std::remove("table_bad3.txt");
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(parse_group_spec("table:/nonexistent/nope.txt"), parse_error);
    }
}

TEST_CASE("is_isomorphic basics") {
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(!is_isomorphic(FiniteGroup::cyclic(4), v4).has_value());
    CHECK(is_isomorphic(FiniteGroup::symmetric(3), FiniteGroup::dihedral(3)).has_value());
    CHECK(is_isomorphic(FiniteGroup::cyclic(6),
                        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)))
              .has_value());
    CHECK(!is_isomorphic(FiniteGroup::cyclic(3), FiniteGroup::cyclic(4)).has_value());
    CHECK_THROWS_AS(is_isomorphic(FiniteGroup::cyclic(513), FiniteGroup::cyclic(513)),
                    resource_error);
}

TEST_CASE("is_isomorphic returns a verified homomorphism") {
    auto check_map = [](const FiniteGroup& a, const FiniteGroup& b) {
        auto phi = is_isomorphic(a, b);
        REQUIRE(phi.has_value());
        std::vector<char> hit(static_cast<std::size_t>(b.order()), 0);
        for (int x : *phi) hit[static_cast<std::size_t>(x)] = 1;
        for (char h : hit) CHECK(h == 1); // bijective
        for (int x = 0; x < a.order(); ++x)
            for (int y = 0; y < a.order(); ++y)
                CHECK((*phi)[static_cast<std::size_t>(a.mul(x, y))] ==
                      b.mul((*phi)[static_cast<std::size_t>(x)], (*phi)[static_cast<std::size_t>(y)]));
    };
    check_map(FiniteGroup::symmetric(3), FiniteGroup::dihedral(3));
    check_map(FiniteGroup::cyclic(6),
              FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(2)));
    check_map(FiniteGroup::dihedral(4), FiniteGroup::dihedral(4));
}

TEST_CASE("is_isomorphic is reflexive and symmetric on a pool") {
    std::vector<FiniteGroup> pool = {
        FiniteGroup::trivial(),
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
        FiniteGroup::cyclic(6),
        FiniteGroup::symmetric(3),
        FiniteGroup::dihedral(4),
        FiniteGroup::cyclic(8),
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)),
        FiniteGroup::dihedral(6),
        FiniteGroup::symmetric(4),
        FiniteGroup::direct_product(FiniteGroup::symmetric(3), FiniteGroup::cyclic(2)),
        FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                    FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                                FiniteGroup::cyclic(6))),
    };
    for (const auto& g : pool) CHECK(is_isomorphic(g, g).has_value());
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            bool ab = is_isomorphic(pool[i], pool[j]).has_value();
            bool ba = is_isomorphic(pool[j], pool[i]).has_value();
            CHECK(ab == ba);
            if (ab)
                CHECK(pool[i].element_orders() == pool[j].element_orders());
        }
}

TEST_CASE("cyclic product decomposition follows the gcd rule") {
    for (int k = 1; k <= 30; ++k) {
        for (int p = 1; p <= k; ++p) {
            if (k % p != 0) continue;
            int q = k / p;
            bool expected = std::gcd(p, q) == 1;
            bool got = is_isomorphic(FiniteGroup::cyclic(k),
                                     FiniteGroup::direct_product(FiniteGroup::cyclic(p),
                                                                 FiniteGroup::cyclic(q)))
                           .has_value();
            CHECK(got == expected);
        }
    }
}
