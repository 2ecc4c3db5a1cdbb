#include <doctest.h>

#include "common.hpp"
#include "crossact/errors.hpp"

#include <algorithm>

using namespace crossact;

TEST_CASE("tables") {
    FiniteGroup triv = group_from_table({{0}});
    CHECK(triv.order() == 1);
    FiniteGroup z2 = group_from_table({{0, 1}, {1, 0}});
    CHECK(z2.order() == 2);
    CHECK(z2.inv(1) == 1);
    try {
        group_from_table({{0, 1, 2}, {1, 0, 0}, {2, 0, 0}});
        FAIL("expected NotAGroup");
    } catch (const NotAGroup& err) {
        // (1*1)*2 = 2 but 1*(1*2) = 0
        CHECK(err.witness() == "non-associative triple (1,1,2)");
    }
    CHECK_THROWS_AS(group_from_table({{1, 0}, {0, 0}}), NotAGroup);
    CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 2}}), NotAGroup);
}

TEST_CASE("constructors") {
    FiniteGroup z3 = group_cyclic(3);
    for (Elem x = 1; x < 3; ++x) CHECK(z3.element_order(x) == 3);
    FiniteGroup s3 = group_symmetric(3);
    CHECK(s3.order() == 6);
    int involutions = 0;
    for (Elem x = 0; x < 6; ++x) involutions += s3.element_order(x) == 2;
    CHECK(involutions == 3);
    FiniteGroup v4 = group_product(group_cyclic(2), group_cyclic(2));
    CHECK(v4.order() == 4);
    CHECK(v4.exponent() == 2);
    CHECK_THROWS_AS(group_symmetric(8), SizeBound);
}

TEST_CASE("symmetric group conventions") {
    FiniteGroup s3 = group_symmetric(3);
    // lexicographic: 123, 132, 213, 231, 312, 321
    CHECK(s3.identity() == 0);
    CHECK(s3.label(1) == "(23)");
    CHECK(s3.label(2) == "(12)");
    CHECK(s3.label(3) == "(123)");
    Elem c = testing::perm(s3, 3, "(123)"), t = testing::perm(s3, 3, "(12)");
    // right-to-left: (123)(12) sends 1 -> 2 -> 3, 3 -> 1, 2 -> 2, i.e. (13)
    CHECK(s3.mul(c, t) == testing::perm(s3, 3, "(13)"));
    CHECK(s3.mul(t, testing::perm(s3, 3, "(132)")) == testing::perm(s3, 3, "(13)"));
    CHECK(parse_cycles(3, "(12)(23)") == std::vector<int>{2, 3, 1});
}

TEST_CASE("homomorphisms") {
    FiniteGroup s3 = group_symmetric(3), z2 = group_cyclic(2), z3 = group_cyclic(3);
    std::vector<Elem> id(6);
    for (int i = 0; i < 6; ++i) id[i] = i;
    CHECK_NOTHROW(hom_validate(s3, s3, id));
    CHECK_NOTHROW(hom_validate(z3, z2, {0, 0, 0}));
    CHECK_THROWS_AS(hom_validate(z2, z2, {1, 0}), NotAHom);
    CHECK(enumerate_homs(z2, z2).size() == 2);
    CHECK(enumerate_homs(z3, z2).size() == 1);
    CHECK(enumerate_homs(z2, s3).size() == 4);
}

TEST_CASE("enumerate_homs agrees with brute force over all maps") {
    std::vector<FiniteGroup> gs{group_cyclic(1), group_cyclic(2), group_cyclic(3), group_cyclic(4),
                                group_product(group_cyclic(2), group_cyclic(2)), group_symmetric(3)};
    for (const auto& D : gs)
        for (const auto& C : gs) {
            long total = 1;
            for (int i = 0; i < D.order(); ++i) total *= C.order();
            if (total > 1000000) continue;
            std::vector<std::vector<Elem>> brute;
            std::vector<Elem> map(D.order());
            for (long code = 0; code < total; ++code) {
                long c = code;
                for (int i = D.order() - 1; i >= 0; --i) {
                    map[i] = static_cast<Elem>(c % C.order());
                    c /= C.order();
                }
                try {
                    hom_validate(D, C, map);
                    brute.push_back(map);
                } catch (const NotAHom&) {
                }
            }
            std::vector<std::vector<Elem>> listed;
            for (const auto& h : enumerate_homs(D, C)) listed.push_back(h.map);
            CHECK(listed == brute);
        }
}

TEST_CASE("subgroups") {
    FiniteGroup s3 = group_symmetric(3);
    Subgroup c3 = subgroup_generated(s3, {testing::perm(s3, 3, "(123)")});
    CHECK(c3.order() == 3);
    CHECK(subgroup_generated(s3, {}).elements == std::vector<Elem>{0});
    CHECK(subgroup_generated(group_cyclic(4), {1}).order() == 4);
    CHECK(subgroup_generated(s3, c3.elements).elements == c3.elements);
    CHECK_THROWS_AS(subgroup_generated(s3, {7}), IndexOutOfRange);
    FiniteGroup s4 = group_symmetric(4);
    for (Elem a = 0; a < 24; a += 5)
        for (Elem b = 0; b < 24; b += 7) {
            Subgroup h = subgroup_generated(s4, {a, b});
            CHECK(24 % h.order() == 0);
            for (Elem x : h.elements)
                for (Elem y : h.elements) CHECK(h.contains(s4.mul(x, y)));
            CHECK(subgroup_generated(s4, h.elements).elements == h.elements);
        }
}

TEST_CASE("every constructed group is associative") {
    for (const auto& G : {group_symmetric(4), group_product(group_cyclic(4), group_cyclic(3)), group_cyclic(7)}) {
        bool assoc = true;
        for (Elem a = 0; a < G.order(); ++a)
            for (Elem b = 0; b < G.order(); ++b)
                for (Elem c = 0; c < G.order(); ++c)
                    assoc = assoc && G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c));
        CHECK(assoc);
    }
}

TEST_CASE("json") {
    FiniteGroup s3 = group_symmetric(3);
    CHECK(group_from_json(group_to_json(s3)) == s3);
    CHECK(group_from_json(nlohmann::json::parse(R"({"cyclic": 5})")).order() == 5);
}
