#include "common.hpp"

#include "crossact/crossed_action.hpp"
#include "crossact/equivariant.hpp"
#include "crossact/errors.hpp"
#include "crossact/hopf.hpp"

#include <doctest.h>

#include <fstream>
#include <random>

using namespace crossact;
using namespace testing;

namespace {

std::vector<CocyclePair> s4_samples() {
    std::ifstream in(std::string(CROSSACT_FIXTURES) + "/s4_cocycle_samples.json");
    REQUIRE(in);
    nlohmann::json j = nlohmann::json::parse(in);
    MatchedPair mp = s4_pair();
    std::vector<CocyclePair> out;
    for (const auto& c : j) out.push_back(cocycles_from_json(mp, c));
    return out;
}

std::vector<CocyclePair> s3_all() {
    return enumerate_cocycle_pairs(s3_pair_tables(), 6, {0, 1, 2, 3, 4, 5});
}

bool same_object(const EquivariantObject& a, const EquivariantObject& b) { return a.X == b.X && a.r == b.r; }

bool K_strict_on_regular(const CrossedAction& ca) {
    HopfAlgebra H = build_bicrossed(ca.mp(), ca.cp());
    HModule R = module_regular(H);
    try {
        EquivariantObject KR = K_functor(ca, H, R);
        return same_object(K_functor(ca, H, module_tensor(H, R, R)), equivariant_tensor(ca, KR, KR));
    } catch (const Error&) {
        return false;
    }
}

// A random degree-preserving invertible matrix, block by block.
Matrix random_graded_invertible(const GradedSpace& X, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> v(-2, 2);
    for (;;) {
        Matrix P(X.dim(), X.dim());
        for (int i = 0; i < X.dim(); ++i)
            for (int j = 0; j < X.dim(); ++j)
                if (X.degrees[i] == X.degrees[j]) P.set(i, j, Cyclotomic(v(rng)));
        if (P.inverse()) return P;
    }
}

}  // namespace

TEST_CASE("exactly one twisting convention passes the diagrams and makes K strictly monoidal") {
    std::vector<CocyclePair> s3 = s3_all(), s4 = s4_samples();
    REQUIRE(s3.size() == 36);
    std::vector<Convention> survivors;
    for (const Convention& cv : Convention::candidates()) {
        bool ok = true;
        for (const auto& cp : s4)
            if (ok) ok = verify_crossed_action(CrossedAction(cp, cv)).all_pass();
        for (const auto& cp : s3)
            if (ok) ok = verify_crossed_action(CrossedAction(cp, cv)).all_pass();
        for (const auto& cp : s3)
            if (ok) ok = K_strict_on_regular(CrossedAction(cp, cv));
        if (ok) survivors.push_back(cv);
    }
    REQUIRE(survivors.size() == 1);
    CHECK(survivors[0] == Convention{});
    MESSAGE("surviving convention: " << survivors[0].name());
}

TEST_CASE("the diagrams alone do not fix the exponent of gamma") {
    Convention printed;
    printed.gamma_sign = 1;
    printed.rho2_sign = 1;
    bool diagrams = true, strict = true;
    for (const auto& cp : s3_all()) {
        diagrams &= verify_crossed_action(CrossedAction(cp, printed)).all_pass();
        strict &= K_strict_on_regular(CrossedAction(cp, printed));
    }
    CHECK(diagrams);
    CHECK_FALSE(strict);
}

TEST_CASE("a wrong exponent on gamma alone breaks gamma-rho2 compatibility") {
    Convention c;
    c.gamma_sign = 1;
    bool compat = true;
    for (const auto& cp : s3_all()) compat &= verify_crossed_action(CrossedAction(cp, c)).passed("gamma-rho2 compatibility");
    CHECK_FALSE(compat);
}

TEST_CASE("default convention passes on every cocycle pair of small instances") {
    for (const auto& cp : s4_samples()) CHECK(verify_crossed_action(CrossedAction(cp)).all_pass());
    for (const auto& cp : enumerate_cocycle_pairs(gcrossed_pair(group_cyclic(3)), 3, {0, 1, 2}))
        CHECK(verify_crossed_action(CrossedAction(cp)).all_pass());
    for (const auto& cp : enumerate_cocycle_pairs(dim8_pair(), 2, {0, 1}))
        CHECK(verify_crossed_action(CrossedAction(cp)).all_pass());
}

TEST_CASE("corrupted tau fails a gamma diagram with a witness") {
    CocyclePair cp = s4_samples()[0];
    MatchedPair mp = cp.mp();
    std::vector<Cyclotomic> tau = cp.tau_table();
    tau[tau_index(mp, 1, 1, 1)] = tau[tau_index(mp, 1, 1, 1)] * Cyclotomic(-1);
    CrossedAction bad(CocyclePair::unchecked(mp, 2, cp.sigma_table(), tau));
    Report r = verify_crossed_action(bad);
    CHECK_FALSE(r.all_pass());
    CHECK(r.passed("rho2 associativity"));
    const auto* f = r.find("gamma associativity");
    REQUIRE(f);
    CHECK_FALSE(f->pass);
    CHECK_FALSE(f->witness.empty());
}

TEST_CASE("rho moves degrees by the right action") {
    MatchedPair mp = s3_pair_tables();
    CrossedAction ca(trivial_cocycles(mp));
    CHECK(rho_apply(ca, 1, {1, 2, 0}) == std::vector<Elem>{2, 1, 0});
    CHECK(rho_apply(ca, 0, {1, 2, 0}) == std::vector<Elem>{1, 2, 0});
}

TEST_CASE("Hopf monad checks") {
    for (const MatchedPair& mp : {s3_pair(), s3_pair_tables(), s4_pair(), gcrossed_pair(group_symmetric(3)), dim8_pair()}) {
        Report r = hopf_monad_check(mp);
        INFO(r.to_text());
        CHECK(r.all_pass());
    }
    for (const auto& cp : s4_samples()) CHECK(hopf_monad_check(CrossedAction(cp)).all_pass());

    MatchedPair mp = s3_pair_tables();
    auto ract = mp.ract_table();
    for (Elem s = 1; s < 3; ++s) ract[s] = {0, 0};
    MatchedPair bad = MatchedPair::unchecked(mp.G(), mp.Gamma(), mp.lact_table(), ract);
    Report r = hopf_monad_check(bad);
    CHECK(r.passed("fusion H^r bijective"));
    CHECK_FALSE(r.passed("fusion H^l bijective"));
    CHECK_FALSE(r.find("fusion H^l bijective")->witness.empty());

    auto lact = mp.lact_table();
    lact[0] = {0, 1};
    CHECK_FALSE(hopf_monad_check(MatchedPair::unchecked(mp.G(), mp.Gamma(), lact, mp.ract_table())).passed("T(1) trivial"));
}

TEST_CASE("K on the regular module") {
    MatchedPair mp = s3_pair_tables();
    for (const auto& cp : s3_all()) {
        CrossedAction ca(cp);
        HopfAlgebra H = build_bicrossed(mp, cp);
        HModule R = module_regular(H);
        EquivariantObject KR = K_functor(ca, H, R);
        CHECK(KR.X.dims(3) == std::vector<int>{2, 2, 2});
        HModule back = K_inverse(ca, H, KR);
        CHECK(back.action == R.action);
        CHECK(same_object(K_functor(ca, H, module_trivial(H)), unit_object(ca)));
    }
}

TEST_CASE("K is strictly monoidal on mixed tensor products") {
    std::mt19937_64 rng(5);
    for (const auto& cp : s4_samples()) {
        CrossedAction ca(cp);
        HopfAlgebra H = build_bicrossed(cp.mp(), cp);
        HModule R = module_regular(H), T = module_trivial(H);
        EquivariantObject KR = K_functor(ca, H, R), KT = K_functor(ca, H, T);
        CHECK(same_object(K_functor(ca, H, module_tensor(H, T, R)), equivariant_tensor(ca, KT, KR)));
        CHECK(same_object(K_functor(ca, H, module_tensor(H, R, T)), equivariant_tensor(ca, KR, KT)));
        // A conjugate of K(regular) is again K of a module.
        EquivariantObject C = conjugate(ca, KR, random_graded_invertible(KR.X, rng));
        CHECK(same_object(K_functor(ca, H, K_inverse(ca, H, C)), C));
    }
}

TEST_CASE("tensor product is strictly associative and unital") {
    std::mt19937_64 rng(9);
    for (const auto& cp : s3_all()) {
        CrossedAction ca(cp);
        HopfAlgebra H = build_bicrossed(cp.mp(), cp);
        EquivariantObject X = K_functor(ca, H, module_regular(H));
        EquivariantObject Y = conjugate(ca, X, random_graded_invertible(X.X, rng));
        EquivariantObject U = unit_object(ca);
        EquivariantObject Z = equivariant_direct_sum(U, U);
        CHECK(same_object(equivariant_tensor(ca, equivariant_tensor(ca, X, Y), Z),
                          equivariant_tensor(ca, X, equivariant_tensor(ca, Y, Z))));
        CHECK(same_object(equivariant_tensor(ca, U, X), X));
        CHECK(same_object(equivariant_tensor(ca, X, U), X));
    }
}

TEST_CASE("conjugation gives an isomorphic object") {
    std::mt19937_64 rng(3);
    CocyclePair cp = s4_samples()[1];
    CrossedAction ca(cp);
    HopfAlgebra H = build_bicrossed(cp.mp(), cp);
    EquivariantObject X = K_functor(ca, H, module_regular(H));
    Matrix P = random_graded_invertible(X.X, rng);
    EquivariantObject Y = conjugate(ca, X, P);
    CHECK(is_equivariant_morphism(X, Y, P));
    CHECK_FALSE(is_equivariant_morphism(X, Y, Matrix::scalar(X.dim(), Cyclotomic(2)) + P));
}

TEST_CASE("validation errors") {
    MatchedPair mp = s3_pair_tables();
    CocyclePair cp = s3_all()[7];
    CrossedAction ca(cp);
    GradedSpace X{{1}};
    CHECK_THROWS_AS(equivariant_validate(ca, X, {Matrix::identity(1)}), ShapeMismatch);
    CHECK_THROWS_AS(equivariant_validate(ca, X, {Matrix::identity(1), Matrix::identity(1)}), NotEquivariant);
    GradedSpace Y{{1, 2}};
    Matrix swap(2, 2);
    swap.set(0, 1, Cyclotomic(1));
    swap.set(1, 0, Cyclotomic(1));
    Matrix half(2, 2);
    half.set(1, 0, Cyclotomic(1));
    CHECK_THROWS_AS(equivariant_validate(ca, Y, {Matrix::identity(2), half}), NotInvertible);
    CHECK_THROWS_AS(equivariant_validate(ca, Y, {Matrix::scalar(2, Cyclotomic(2)), swap}), NotEquivariant);
    // r^b r^b = diag(rho2(b,b,deg)) forces the entries, so the bare swap is right only if rho2 is trivial there.
    bool trivial = ca.rho2(1, 1, 1).is_one() && ca.rho2(1, 1, 2).is_one();
    if (trivial)
        CHECK_NOTHROW(equivariant_validate(ca, Y, {Matrix::identity(2), swap}));
    else
        CHECK_THROWS_AS(equivariant_validate(ca, Y, {Matrix::identity(2), swap}), NotEquivariant);

    HopfAlgebra H = build_bicrossed(mp, cp);
    HModule W = module_regular(H);
    Matrix P = Matrix::identity(6);
    P.set(0, 2, Cyclotomic(1));  // mixes degrees e and a
    auto Pinv = P.inverse();
    for (auto& a : W.action) a = P * a * *Pinv;
    CHECK_THROWS_AS(K_functor(ca, H, W), NotAModule);
}

TEST_CASE("json round trip sorts the basis by degree") {
    CocyclePair cp = s4_samples()[2];
    CrossedAction ca(cp);
    HopfAlgebra H = build_bicrossed(cp.mp(), cp);
    EquivariantObject X = K_functor(ca, H, module_regular(H));
    nlohmann::json j = equivariant_to_json(ca, X);
    EquivariantObject back = equivariant_from_json(ca, j);
    CHECK(same_object(back, sorted_by_degree(X)));
    CHECK(same_object(equivariant_from_json(ca, equivariant_to_json(ca, back)), back));
    nlohmann::json bad = j;
    bad["dims"]["nope"] = 1;
    CHECK_THROWS_AS(equivariant_from_json(ca, bad), ParseError);
}

TEST_CASE("gamma-rho2 compatibility holds exactly when the cocycle compatibility condition does") {
    std::mt19937_64 rng(17);
    std::vector<CocyclePair> base = s3_all();
    MatchedPair mp = s3_pair_tables();
    const Cyclotomic z = Cyclotomic::root_of_unity(6, 1);
    int flipped = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const CocyclePair& cp = base[rng() % base.size()];
        std::vector<Cyclotomic> sigma = cp.sigma_table(), tau = cp.tau_table();
        // Corrupt one non-normalized entry of sigma or tau.
        if (rng() % 2) {
            Elem s = rng() % 3;
            sigma[sigma_index(mp, s, 1, 1)] = sigma[sigma_index(mp, s, 1, 1)] * z;
        } else {
            Elem g = rng() % 2, s = 1 + rng() % 2, t = 1 + rng() % 2;
            tau[tau_index(mp, g, s, t)] = tau[tau_index(mp, g, s, t)] * z;
        }
        CocyclePair bad = CocyclePair::unchecked(mp, 6, sigma, tau);
        bool compat = cocycle_conditions(bad).passed("compatibility");
        CHECK(compat == verify_crossed_action(CrossedAction(bad)).passed("gamma-rho2 compatibility"));
        flipped += !compat;
    }
    CHECK(flipped > 0);
}
