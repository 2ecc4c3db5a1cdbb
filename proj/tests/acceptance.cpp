// One line per acceptance criterion; exit status 1 if any line fails.
#include "common.hpp"

#include "crossact/braided.hpp"
#include "crossact/cocycles.hpp"
#include "crossact/crossed_action.hpp"
#include "crossact/equivariant.hpp"
#include "crossact/errors.hpp"
#include "crossact/hopf.hpp"
#include "crossact/ybe.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>

using namespace crossact;
using namespace testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::vector<MatchedPair> fixture_pairs() {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(CROSSACT_FIXTURES))
        if (e.path().extension() == ".json" && e.path().stem().string().find("samples") == std::string::npos)
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<MatchedPair> out;
    for (const auto& f : files) {
        std::ifstream in(f);
        out.push_back(pair_from_json(nlohmann::json::parse(in).at("matched_pair")));
    }
    return out;
}

GroupHom identity_hom(const FiniteGroup& G) {
    std::vector<Elem> m(G.order());
    std::iota(m.begin(), m.end(), 0);
    return hom_validate(G, G, m);
}

bool same_object(const EquivariantObject& a, const EquivariantObject& b) { return a.X == b.X && a.r == b.r; }

Outcome matched_pair_round_trip() {
    Outcome o;
    MatchedPair mp = s4_pair();
    bool lact = false, ract = false;
    for (Elem s = 0; s < mp.nGamma(); ++s)
        for (Elem g = 0; g < mp.nG(); ++g) {
            lact |= mp.lact(s, g) != s;
            ract |= mp.ract(s, g) != g;
        }
    o.expect(lact && ract, "an action is trivial");
    FiniteGroup H = bicrossed_group(mp);
    o.expect(H.order() == 24, "bicrossed group order " + std::to_string(H.order()));
    MatchedPair back = from_factorization(H, bicrossed_G(mp, H), bicrossed_Gamma(mp, H));
    o.expect(back.lact_table() == mp.lact_table() && back.ract_table() == mp.ract_table(), "tables differ after refactorizing");
    return o;
}

Outcome semidirect_consistency() {
    Outcome o;
    MatchedPair mp = s3_pair();
    // Gamma = {e, (123), (132)} is Z3 with a^k at index k; G = Z2.
    const FiniteGroup& Gm = mp.Gamma();
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) o.expect(Gm.mul(x, y) == (x + y) % 3, "Gamma is not indexed as Z3");
    // Z3 x| Z2 by hand: (g,s)(h,t) = (g+h, s(-1)^h + t), index g*3 + s.
    std::vector<std::vector<Elem>> table(6, std::vector<Elem>(6));
    for (int g = 0; g < 2; ++g)
        for (int s = 0; s < 3; ++s)
            for (int h = 0; h < 2; ++h)
                for (int t = 0; t < 3; ++t) {
                    int sh = h ? (3 - s) % 3 : s;
                    table[g * 3 + s][h * 3 + t] = ((g + h) % 2) * 3 + (sh + t) % 3;
                }
    o.expect(bicrossed_group(mp).table() == table, "bicrossed table differs from the semidirect product");
    o.expect(analyze(mp).lact_by_automorphisms, "lact_by_automorphisms is false");
    return o;
}

Outcome hopf_dim6() {
    Outcome o;
    MatchedPair mp = s3_pair();
    HopfAlgebra H = build_bicrossed(mp, trivial_cocycles(mp));
    o.expect(H.dim == 6, "dim " + std::to_string(H.dim));
    Report b = verify_bialgebra(H);
    o.expect(b.all_pass(), b.to_text());
    Matrix S = solve_antipode(H);
    Report a = verify_antipode(H, S);
    o.expect(a.all_pass(), a.to_text());
    return o;
}

Outcome hopf_dim8() {
    Outcome o;
    MatchedPair mp = dim8_pair();
    auto all = enumerate_cocycle_pairs(mp, 4, {0, 1, 2, 3}, 1000000);
    const CocyclePair* pick = nullptr;
    for (const auto& cp : all)
        if (!cp.is_trivial()) {
            bool sig = false, ta = false;
            for (const auto& x : cp.sigma_table()) sig |= !x.is_one();
            for (const auto& x : cp.tau_table()) ta |= !x.is_one();
            if (sig && ta) {
                pick = &cp;
                break;
            }
        }
    o.expect(pick != nullptr, "no cocycle pair with nontrivial sigma and tau");
    if (!pick) return o;
    HopfAlgebra H = build_bicrossed(mp, *pick);
    Report r = verify_hopf(H);
    o.expect(H.dim == 8 && r.all_pass(), r.to_text());
    // Scale one tau entry by i; the compatibility condition and Delta multiplicativity must both fail.
    bool caught = false;
    for (Elem g = 0; g < mp.nG() && !caught; ++g)
        for (Elem s = 1; s < mp.nGamma() && !caught; ++s)
            for (Elem t = 1; t < mp.nGamma() && !caught; ++t) {
                std::vector<Cyclotomic> tau = pick->tau_table();
                tau[tau_index(mp, g, s, t)] = tau[tau_index(mp, g, s, t)] * Cyclotomic::root_of_unity(4, 1);
                CocyclePair bad = CocyclePair::unchecked(mp, 4, pick->sigma_table(), tau);
                if (cocycle_conditions(bad).passed("compatibility")) continue;
                Report rb = verify_bialgebra(build_bicrossed(mp, bad));
                caught = !rb.passed("Δ multiplicative") && rb.passed("associativity");
            }
    o.expect(caught, "corrupted compatibility entry not detected by Δ multiplicative");
    return o;
}

Outcome strict_equivalence() {
    Outcome o;
    MatchedPair mp = s3_pair();
    CrossedAction ca(trivial_cocycles(mp));
    HopfAlgebra H = build_bicrossed(mp, ca.cp());
    std::vector<HModule> W{module_regular(H), module_trivial(H)};
    for (const auto& a : W)
        for (const auto& b : W) {
            EquivariantObject lhs = K_functor(ca, H, module_tensor(H, a, b));
            EquivariantObject rhs = equivariant_tensor(ca, K_functor(ca, H, a), K_functor(ca, H, b));
            o.expect(same_object(lhs, rhs), "K(W (x) W') differs from K(W) (x) K(W')");
        }
    for (const auto& a : W) {
        EquivariantObject X = K_functor(ca, H, a);
        o.expect(K_inverse(ca, H, X).action == a.action, "K^-1 K is not the identity");
        o.expect(same_object(K_functor(ca, H, K_inverse(ca, H, X)), X), "K K^-1 is not the identity");
    }
    o.expect(K_functor(ca, H, W[0]).X.dims(3) == std::vector<int>{2, 2, 2}, "K(regular) dims");
    return o;
}

Outcome monad_checks() {
    Outcome o;
    for (const MatchedPair& mp : fixture_pairs()) {
        Report r = hopf_monad_check(mp);
        o.expect(r.all_pass(), r.to_text());
    }
    return o;
}

Outcome qybe() {
    Outcome o;
    std::size_t checked = 0;
    for (const MatchedPair& mp : fixture_pairs()) {
        if (mp.nG() > 6 || mp.nGamma() > 6) continue;
        auto homs = enumerate_homs(mp.Gamma(), mp.G());
        for (const auto& phi : homs)
            for (const auto& psi : homs) {
                try {
                    braiding_pair_validate(mp, phi, psi);
                } catch (const ReformulationMismatch& e) {
                    o.expect(false, e.what());
                } catch (const ConditionViolation&) {
                }
            }
        for (const auto& bp : enumerate_braiding_pairs(mp)) {
            o.expect(b_map(bp).is_bijective(), "b not bijective");
            o.expect(verify_qybe(r_map(bp)).all_pass(), "QYBE fails");
            ++checked;
        }
    }
    o.expect(checked > 0, "no braiding pairs found");
    return o;
}

Outcome gcrossed() {
    Outcome o;
    for (FiniteGroup G : {group_cyclic(3), group_symmetric(3)}) {
        MatchedPair mp = gcrossed_pair(G);
        BraidingPair bp = braiding_pair_validate(mp, trivial_hom(G, G), identity_hom(G));
        SetSolution b = b_map(bp);
        for (Elem s = 0; s < G.order(); ++s)
            for (Elem t = 0; t < G.order(); ++t)
                o.expect(b(s, t) == std::pair<Elem, Elem>{t, G.mul(G.inv(t), G.mul(s, t))}, "b(s,t) != (t, t^-1 s t)");
    }
    return o;
}

Outcome braiding_end_to_end() {
    Outcome o;
    std::ifstream in(std::string(CROSSACT_FIXTURES) + "/z2_split.json");
    nlohmann::json j = nlohmann::json::parse(in);
    MatchedPair mp = pair_from_json(j.at("matched_pair"));
    CrossedAction ca(trivial_cocycles(mp));
    BraidingPair bp = braiding_pair_from_json(mp, j.at("braiding"));
    auto found = scalar_braiding_search(ca, bp, 4, {0, 1, 2, 3});
    // Hexagon oracle for Z2-graded spaces with trivial associator: c(1,1) = i^k is a
    // braiding iff c(s+t,u) = c(s,u)c(t,u) and c(s,t+u) = c(s,t)c(s,u), exponents mod 4.
    std::set<int> oracle, got;
    for (int k = 0; k < 4; ++k) {
        auto c = [k](int s, int t) { return s && t ? k : 0; };
        bool ok = true;
        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t)
                for (int u = 0; u < 2; ++u)
                    ok = ok && c((s + t) % 2, u) == (c(s, u) + c(t, u)) % 4 && c(s, (t + u) % 2) == (c(s, t) + c(s, u)) % 4;
        if (ok) oracle.insert(k);
    }
    for (const auto& bd : found) got.insert(static_cast<int>(root_exponent(bd(1, 1), 4)));
    o.expect(found.size() == oracle.size() && got == oracle, "search set differs from the oracle set");
    HopfAlgebra H = with_antipode(build_bicrossed(mp, ca.cp()));
    for (const auto& bd : found) {
        Report v = verify_braiding(ca, bd, default_object_sample(ca));
        o.expect(v.all_pass(), v.to_text());
        Report q = verify_quasitriangular(H, rmatrix_from_braiding(H, braid_on_regular(ca, H, bd)));
        o.expect(q.all_pass(), q.to_text());
    }
    return o;
}

Outcome scalars() {
    Outcome o;
    std::mt19937_64 rng(2024);
    for (int N = 1; N <= 12; ++N)
        for (int trial = 0; trial < 1000; ++trial) {
            Cyclotomic a = random_cyclotomic(rng, N), b = random_cyclotomic(rng, N), c = random_cyclotomic(rng, N);
            bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
                      a * (b + c) == a * b + a * c && (a - a).is_zero() && (a * Cyclotomic(1)) == a;
            if (!a.is_zero()) ok = ok && (a * a.inverse()).is_one() && (b / a) * a == b;
            o.expect(ok, "field axiom fails at N=" + std::to_string(N));
        }
    for (int N = 1; N <= 12; ++N) {
        std::vector<mpz_class> prod{1};
        for (int d = 1; d <= N; ++d) {
            if (N % d) continue;
            const IntPoly& p = cyclotomic_polynomial(d);
            std::vector<mpz_class> next(prod.size() + p.size() - 1, 0);
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t k = 0; k < p.size(); ++k) next[i + k] += prod[i] * p[k];
            prod = next;
        }
        std::vector<mpz_class> expect(N + 1, 0);
        expect[0] = -1;
        expect[N] = 1;
        o.expect(prod == expect, "product of Phi_d differs from x^N - 1 at N=" + std::to_string(N));
    }
    for (int N = 1; N <= 12; ++N)
        for (int M = N; M <= 24; M += N)
            for (int trial = 0; trial < 20; ++trial) {
                Cyclotomic a = random_cyclotomic(rng, N), b = random_cyclotomic(rng, N);
                bool ok = (a * b).embed(M) == a.embed(M) * b.embed(M) && (a + b).embed(M) == a.embed(M) + b.embed(M);
                for (int L = M; L <= 24 && ok; L += M) ok = a.embed(M).embed(L) == a.embed(L);
                o.expect(ok, "embed is not coherent from " + std::to_string(N) + " to " + std::to_string(M));
            }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"matched-pair round trip on S4", 1, matched_pair_round_trip},
        {"semidirect consistency for the S3 pair", 1, semidirect_consistency},
        {"Hopf axioms in dimension 6", 1, hopf_dim6},
        {"Hopf axioms in dimension 8 with nontrivial cocycles", 60, hopf_dim8},
        {"strict equivalence K", 5, strict_equivalence},
        {"Hopf monad checks on every fixture", 1, monad_checks},
        {"QYBE on every fixture braiding pair", 10, qybe},
        {"G-crossed specialization", 1, gcrossed},
        {"braiding end to end on Z2-graded spaces", 30, braiding_end_to_end},
        {"cyclotomic arithmetic properties", 5, scalars},
    };
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto& c = criteria[k];
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_s) o.expect(false, "over the time limit");
        all &= o.pass;
        std::printf("%s  %2zu %s (%.2f s, limit %.0f s)%s%s\n", o.pass ? "PASS" : "FAIL", k + 1, c.name, secs, c.limit_s,
                    o.pass ? "" : ": ", o.pass ? "" : o.detail.c_str());
    }
    return all ? 0 : 1;
}
