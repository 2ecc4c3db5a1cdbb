#include <doctest.h>

#include "common.hpp"
#include "crossact/errors.hpp"

using namespace crossact;

namespace {

bool lact_nontrivial(const MatchedPair& mp) {
    for (Elem s = 0; s < mp.nGamma(); ++s)
        for (Elem g = 0; g < mp.nG(); ++g)
            if (mp.lact(s, g) != s) return true;
    return false;
}

bool ract_nontrivial(const MatchedPair& mp) {
    for (Elem s = 0; s < mp.nGamma(); ++s)
        for (Elem g = 0; g < mp.nG(); ++g)
            if (mp.ract(s, g) != g) return true;
    return false;
}

void check_round_trip(const MatchedPair& mp) {
    FiniteGroup H = bicrossed_group(mp);
    CHECK(H.order() == mp.nG() * mp.nGamma());
    Subgroup Gs = bicrossed_G(mp, H), Ss = bicrossed_Gamma(mp, H);
    MatchedPair back = from_factorization(H, Gs, Ss);
    CHECK(back.G() == mp.G());
    CHECK(back.Gamma() == mp.Gamma());
    CHECK(back.lact_table() == mp.lact_table());
    CHECK(back.ract_table() == mp.ract_table());
}

}  // namespace

TEST_CASE("validation examples") {
    FiniteGroup z2 = group_cyclic(2), z3 = group_cyclic(3);
    CHECK_NOTHROW(trivial_pair(group_symmetric(3), z2));
    MatchedPair s3 = testing::s3_pair_tables();
    // a non-action: b sends a to a but a^2 to e
    CHECK_THROWS_AS(matched_pair_validate(z2, z3, {{0, 0}, {1, 1}, {2, 0}}, {{0, 1}, {0, 1}, {0, 1}}), NotAnAction);
    // a < b = a^2 and trivial >, but with a broken unit law in >
    CHECK_THROWS_AS(matched_pair_validate(z2, z3, {{0, 0}, {1, 2}, {2, 1}}, {{0, 1}, {1, 0}, {0, 1}}), Error);
    // nonabelian Gamma with a non-automorphism < is rejected by the compatibility equations
    FiniteGroup s3g = group_symmetric(3);
    std::vector<std::vector<Elem>> lact(6, std::vector<Elem>(2)), ract(6, std::vector<Elem>(2));
    for (Elem s = 0; s < 6; ++s) {
        lact[s] = {s, s3g.inv(s)};
        ract[s] = {0, 1};
    }
    CHECK_THROWS_AS(matched_pair_validate(z2, s3g, lact, ract), MatchedPairViolation);
}

TEST_CASE("S3 factorization") {
    MatchedPair mp = testing::s3_pair();
    FiniteGroup S3 = group_symmetric(3);
    CHECK(mp.nG() == 2);
    CHECK(mp.nGamma() == 3);
    CHECK_FALSE(ract_nontrivial(mp));
    // (123)(12) = (13) = (12)(132)
    Elem c = mp.Gamma().find_label("(123)"), c2 = mp.Gamma().find_label("(132)"), t = mp.G().find_label("(12)");
    REQUIRE(c >= 0);
    REQUIRE(t >= 0);
    CHECK(mp.lact(c, t) == c2);
    CHECK(mp.ract(c, t) == t);
    // same structure as the hand-written table
    MatchedPair tab = testing::s3_pair_tables();
    CHECK(tab.lact(1, 1) == 2);
}

TEST_CASE("S4 factorization: both actions nontrivial, order 24, round trip") {
    MatchedPair mp = testing::s4_pair();
    CHECK(mp.nG() == 4);
    CHECK(mp.nGamma() == 6);
    CHECK(lact_nontrivial(mp));
    CHECK(ract_nontrivial(mp));
    CHECK(bicrossed_group(mp).order() == 24);
    check_round_trip(mp);
    PairAnalysis a = analyze(mp);
    CHECK_FALSE(a.ract_trivial);
    CHECK_FALSE(a.lact_trivial);
}

TEST_CASE("direct product factorization gives trivial actions") {
    FiniteGroup z2 = group_cyclic(2), z3 = group_cyclic(3);
    FiniteGroup H = group_product(z2, z3);
    MatchedPair mp = from_factorization(H, subgroup_generated(H, {3}), subgroup_generated(H, {1}));
    CHECK_FALSE(lact_nontrivial(mp));
    CHECK_FALSE(ract_nontrivial(mp));
    CHECK_THROWS_AS(from_factorization(H, subgroup_generated(H, {3}), subgroup_generated(H, {3})),
                    NotExactFactorization);
}

TEST_CASE("bicrossed group of the S3 pair") {
    MatchedPair mp = testing::s3_pair_tables();
    FiniteGroup H = bicrossed_group(mp);
    CHECK(H.order() == 6);
    int involutions = 0;
    for (Elem x = 0; x < 6; ++x) involutions += H.element_order(x) == 2;
    CHECK(involutions == 3);
    CHECK_FALSE(H.is_abelian());
    check_round_trip(mp);
    // trivial actions give the direct product, with (g, s) at g*|Gamma| + s
    MatchedPair tr = trivial_pair(group_cyclic(2), group_cyclic(3));
    FiniteGroup P = bicrossed_group(tr);
    CHECK(P.table() == group_product(group_cyclic(2), group_cyclic(3)).table());
}

TEST_CASE("semidirect consistency when > is trivial") {
    MatchedPair mp = testing::s3_pair_tables();
    FiniteGroup semi = group_semidirect(mp.G(), mp.Gamma(), mp.lact_table());
    CHECK(bicrossed_group(mp).table() == semi.table());
    PairAnalysis a = analyze(mp);
    CHECK(a.ract_trivial);
    CHECK(a.lact_by_automorphisms);
    CHECK(a.gamma_bar.order() == 3);
    CHECK(a.gamma_under.elements == std::vector<Elem>{0});
}

TEST_CASE("analysis of the trivial pair") {
    MatchedPair mp = trivial_pair(group_cyclic(2), group_cyclic(3));
    PairAnalysis a = analyze(mp);
    CHECK(a.lact_trivial);
    CHECK(a.ract_trivial);
    CHECK(a.lact_by_automorphisms);
    CHECK(a.ract_by_automorphisms);
    CHECK(a.gamma_bar.order() == 3);
    CHECK(a.gamma_under.order() == 3);
}

TEST_CASE("triviality implies action by automorphisms, not conversely") {
    // > trivial, < nontrivial: > is still by automorphisms
    PairAnalysis a = analyze(testing::s3_pair_tables());
    CHECK(a.ract_by_automorphisms);
    CHECK_FALSE(a.lact_trivial);
    // < trivial, > the inversion of Z3 by Z2 (roles swapped): < is by automorphisms, > is not trivial
    std::vector<std::vector<Elem>> lact{{0, 0, 0}, {1, 1, 1}}, ract{{0, 1, 2}, {0, 2, 1}};
    MatchedPair swapped = matched_pair_validate(group_cyclic(3), group_cyclic(2), lact, ract);
    PairAnalysis b = analyze(swapped);
    CHECK(b.lact_trivial);
    CHECK(b.ract_by_automorphisms);
    CHECK(b.lact_by_automorphisms);
    CHECK_FALSE(b.ract_trivial);
    FiniteGroup H = bicrossed_group(swapped);
    CHECK(H.order() == 6);
    CHECK_FALSE(H.is_abelian());
}

TEST_CASE("restriction") {
    MatchedPair mp = testing::s4_pair();
    MatchedPair triv = restrict_pair(mp, subgroup_generated(mp.Gamma(), {}));
    CHECK(triv.nGamma() == 1);
    PairAnalysis a = analyze(mp);
    MatchedPair bar = restrict_pair(mp, a.gamma_bar);
    CHECK_FALSE(ract_nontrivial(bar));
    // find a subgroup of Gamma that is not stable under <
    bool found = false;
    for (Elem s = 1; s < mp.nGamma() && !found; ++s) {
        Subgroup sub = subgroup_generated(mp.Gamma(), {s});
        bool stable = true;
        for (Elem x : sub.elements)
            for (Elem g = 0; g < mp.nG(); ++g) stable = stable && sub.contains(mp.lact(x, g));
        if (!stable) {
            CHECK_THROWS_AS(restrict_pair(mp, sub), NotStable);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("structural properties on every fixture pair") {
    std::vector<MatchedPair> pairs{testing::s3_pair(), testing::s3_pair_tables(), testing::s4_pair(),
                                   testing::dim8_pair(), gcrossed_pair(group_symmetric(3)),
                                   gcrossed_pair(group_cyclic(3))};
    for (const auto& mp : pairs) {
        for (Elem s = 0; s < mp.nGamma(); ++s) CHECK(mp.ract(s, mp.G().identity()) == mp.G().identity());
        for (Elem g = 0; g < mp.nG(); ++g) CHECK(mp.lact(mp.Gamma().identity(), g) == mp.Gamma().identity());
        CHECK_NOTHROW(analyze(mp));
        check_round_trip(mp);
        PairAnalysis a = analyze(mp);
        if (a.lact_trivial) {
            // G x Gamma with (g,s)(h,t) = (g(s>h), st) built directly
            const int ns = mp.nGamma();
            bool same = true;
            FiniteGroup H = bicrossed_group(mp);
            for (int x = 0; x < H.order(); ++x)
                for (int y = 0; y < H.order(); ++y) {
                    Elem g = x / ns, s = x % ns, h = y / ns, t = y % ns;
                    same = same && H.mul(x, y) == mp.G().mul(g, mp.ract(s, h)) * ns + mp.Gamma().mul(s, t);
                }
            CHECK(same);
        }
    }
}

TEST_CASE("json round trip") {
    MatchedPair mp = testing::s4_pair();
    CHECK(pair_from_json(pair_to_json(mp)) == mp);
    auto j = nlohmann::json::parse(R"J({"factorization": {"H": {"symmetric": 3}, "G": ["(12)"], "Gamma": ["(123)"]}})J");
    CHECK(pair_from_json(j) == testing::s3_pair());
}
