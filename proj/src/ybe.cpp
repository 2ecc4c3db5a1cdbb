#include "crossact/ybe.hpp"

#include "crossact/errors.hpp"

#include <array>
#include <string>

namespace crossact {

namespace {

std::string lbl(const FiniteGroup& X, Elem x) { return X.label(x); }

}  // namespace

Elem BraidingPair::twist(Elem s, Elem t) const {
    const FiniteGroup& Gm = mp.Gamma();
    return mp.ract(Gm.inv(t), phi(Gm.inv(s)));
}

FactorizationActions factorization_actions(const MatchedPair& mp) {
    const int nG = mp.nG(), nS = mp.nGamma();
    FactorizationActions a;
    a.g_on_s.assign(nG, std::vector<Elem>(nS, -1));
    a.s_on_g.assign(nS, std::vector<Elem>(nG, -1));
    FiniteGroup H = bicrossed_group(mp);
    auto gel = [nS](Elem g) { return g * nS; };            // (g, e)
    auto sel = [nS, &mp](Elem s) { return mp.G().identity() * nS + s; };  // (e, s)
    // g s as a product (Gamma element)(G element): enumerate all such products.
    for (Elem x = 0; x < nS; ++x)
        for (Elem y = 0; y < nG; ++y) {
            Elem p = H.mul(sel(x), gel(y));
            Elem g = p / nS, s = p % nS;
            if (a.g_on_s[g][s] != -1) throw InternalError("factorization is not exact");
            a.g_on_s[g][s] = x;
            a.s_on_g[s][g] = y;
        }
    return a;
}

Report braiding_pair_conditions(const MatchedPair& mp, const GroupHom& phi, const GroupHom& psi) {
    const FiniteGroup& G = mp.G();
    const FiniteGroup& Gm = mp.Gamma();
    const int nG = mp.nG(), nS = mp.nGamma();
    auto w2 = [&](Elem s, Elem t) { return "(s=" + lbl(Gm, s) + ", t=" + lbl(Gm, t) + ")"; };
    auto w3 = [&](Elem s, Elem g) { return "(s=" + lbl(Gm, s) + ", g=" + lbl(G, g) + ")"; };

    CheckBuilder c1("grading"), c2("psi twist"), c3("phi twist"), c4("psi intertwines"), c5("phi intertwines");
    for (Elem s = 0; s < nS; ++s)
        for (Elem t = 0; t < nS; ++t) {
            Elem si = Gm.inv(s), ti = Gm.inv(t);
            c1.expect(Gm.mul(Gm.mul(mp.lact(ti, phi(si)), s), t) == mp.lact(s, psi(t)), w2(s, t));
            c2.expect(G.inv(mp.ract(t, psi(s))) == psi(mp.lact(si, phi(ti))), w2(s, t));
            c3.expect(G.inv(mp.ract(ti, phi(si))) == phi(mp.lact(s, psi(t))), w2(s, t));
        }
    for (Elem t = 0; t < nS; ++t)
        for (Elem g = 0; g < nG; ++g) {
            c4.expect(G.mul(psi(t), g) == G.mul(mp.ract(t, g), psi(mp.lact(t, g))), w3(t, g));
            c5.expect(G.mul(g, G.inv(phi(mp.lact(t, g)))) == G.mul(phi(Gm.inv(t)), mp.ract(t, g)), w3(t, g));
        }
    Report rep;
    for (auto* c : {&c1, &c2, &c3, &c4, &c5}) c->into(rep);

    // Rewritten forms. ^s g = s > g and s^g = s < g; ^g s and g^s come from the table.
    FactorizationActions fa = factorization_actions(mp);
    CheckBuilder formula("factorization action formulas");
    for (Elem g = 0; g < nG; ++g)
        for (Elem s = 0; s < nS; ++s) {
            formula.expect(fa.g_on_s[g][s] == Gm.inv(mp.lact(Gm.inv(s), G.inv(g))), w3(s, g));
            formula.expect(fa.s_on_g[s][g] == G.inv(mp.ract(Gm.inv(s), G.inv(g))), w3(s, g));
        }
    formula.into(rep);
    auto gs = [&](Elem g, Elem s) { return fa.g_on_s[g][s]; };  // ^g s
    auto gpow = [&](Elem g, Elem s) { return fa.s_on_g[s][g]; };  // g^s
    CheckBuilder r1("grading, factorized"), r2("psi twist, factorized"), r3("phi twist, factorized"),
        r4("psi intertwines, factorized"), r5("phi intertwines, factorized");
    for (Elem s = 0; s < nS; ++s)
        for (Elem t = 0; t < nS; ++t) {
            r1.expect(Gm.mul(s, t) == Gm.mul(gs(phi(s), t), mp.lact(s, psi(t))), w2(s, t));
            // evaluated at (s^-1, t^-1) so that it lines up with the direct form at (s, t)
            Elem si = Gm.inv(s), ti = Gm.inv(t);
            r2.expect(gpow(psi(si), ti) == psi(mp.lact(si, phi(ti))), w2(s, t));
            r3.expect(gpow(phi(s), t) == phi(mp.lact(s, psi(t))), w2(s, t));
        }
    for (Elem t = 0; t < nS; ++t)
        for (Elem g = 0; g < nG; ++g) {
            r4.expect(G.mul(psi(t), g) == G.mul(mp.ract(t, g), psi(mp.lact(t, g))), w3(t, g));
            r5.expect(G.mul(phi(t), g) == G.mul(mp.ract(t, g), phi(mp.lact(t, g))), w3(t, g));
        }
    for (auto* c : {&r1, &r2, &r3, &r4, &r5}) c->into(rep);
    return rep;
}

BraidingPair braiding_pair_validate(const MatchedPair& mp, const GroupHom& phi, const GroupHom& psi) {
    for (const GroupHom* h : {&phi, &psi})
        if (h->domain != mp.Gamma() || h->codomain != mp.G())
            throw ConditionViolation("homomorphisms must map Gamma to G");
    hom_validate(mp.Gamma(), mp.G(), phi.map);
    hom_validate(mp.Gamma(), mp.G(), psi.map);
    Report rep = braiding_pair_conditions(mp, phi, psi);
    if (!rep.passed("factorization action formulas"))
        throw ReformulationMismatch("factorization action formulas: " + rep.find("factorization action formulas")->witness);
    static const char* names[] = {"grading", "psi twist", "phi twist", "psi intertwines", "phi intertwines"};
    for (const char* n : names)
        if (rep.passed(n) != rep.passed(std::string(n) + ", factorized"))
            throw ReformulationMismatch(std::string(n) + " disagrees with its factorized form");
    for (const char* n : names)
        if (!rep.passed(n)) throw ConditionViolation(std::string(n) + " at " + rep.find(n)->witness);
    return BraidingPair{mp, phi, psi};
}

bool SetSolution::is_bijective() const {
    std::vector<char> seen(perm.size(), 0);
    for (int k : perm) {
        if (k < 0 || k >= static_cast<int>(perm.size()) || seen[k]) return false;
        seen[k] = 1;
    }
    return true;
}

SetSolution SetSolution::inverse() const {
    if (!is_bijective()) throw NotBijective("map on Gamma x Gamma is not bijective");
    SetSolution r{n, std::vector<int>(perm.size())};
    for (std::size_t i = 0; i < perm.size(); ++i) r.perm[perm[i]] = static_cast<int>(i);
    return r;
}

SetSolution b_map(const BraidingPair& bp) {
    const FiniteGroup& Gm = bp.mp.Gamma();
    const int n = Gm.order();
    SetSolution b{n, std::vector<int>(static_cast<std::size_t>(n) * n)};
    for (Elem s = 0; s < n; ++s)
        for (Elem t = 0; t < n; ++t) {
            Elem x = Gm.inv(bp.mp.lact(Gm.inv(t), bp.phi(Gm.inv(s))));
            Elem y = bp.mp.lact(s, bp.psi(t));
            b.perm[s * n + t] = x * n + y;
        }
    if (!b.is_bijective()) throw NotBijective("b is not bijective");
    return b;
}

SetSolution flip_solution(int n) {
    SetSolution f{n, std::vector<int>(static_cast<std::size_t>(n) * n)};
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) f.perm[s * n + t] = t * n + s;
    return f;
}

SetSolution r_map(const BraidingPair& bp) {
    SetSolution binv = b_map(bp).inverse();
    const int n = binv.n;
    SetSolution r{n, std::vector<int>(binv.perm.size())};
    for (int k = 0; k < n * n; ++k) {
        int img = binv.perm[k];
        r.perm[k] = (img % n) * n + img / n;
    }
    if (!r.is_bijective()) throw NotBijective("R is not bijective");
    return r;
}

Report verify_qybe(const SetSolution& r) {
    const int n = r.n;
    using Triple = std::array<Elem, 3>;
    auto apply = [&r](Triple x, int i, int j) {
        auto [a, b] = r(x[i], x[j]);
        x[i] = a;
        x[j] = b;
        return x;
    };
    CheckBuilder c("qybe");
    for (Elem x = 0; x < n && c.ok(); ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z) {
                Triple v{x, y, z};
                Triple lhs = apply(apply(apply(v, 1, 2), 0, 2), 0, 1);
                Triple rhs = apply(apply(apply(v, 0, 1), 0, 2), 1, 2);
                if (lhs != rhs) {
                    c.fail("(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
                    break;
                }
            }
    Report rep;
    rep.add("bijective", r.is_bijective(), "not a permutation");
    c.into(rep);
    return rep;
}

std::vector<BraidingPair> enumerate_braiding_pairs(const MatchedPair& mp, long bound) {
    std::vector<GroupHom> homs = enumerate_homs(mp.Gamma(), mp.G(), bound);
    if (static_cast<long>(homs.size()) * static_cast<long>(homs.size()) > bound)
        throw SizeBound("too many homomorphism pairs: " + std::to_string(homs.size()) + "^2");
    std::vector<BraidingPair> out;
    for (const auto& phi : homs)
        for (const auto& psi : homs) {
            try {
                out.push_back(braiding_pair_validate(mp, phi, psi));
            } catch (const ConditionViolation&) {
            }
        }
    return out;
}

nlohmann::json braiding_pair_to_json(const BraidingPair& bp) {
    return {{"phi", bp.phi.map}, {"psi", bp.psi.map}};
}

BraidingPair braiding_pair_from_json(const MatchedPair& mp, const nlohmann::json& j) {
    auto read = [&mp](const nlohmann::json& v, const char* what) {
        if (!v.is_array() || static_cast<int>(v.size()) != mp.nGamma())
            throw ParseError(std::string(what) + " must list one image per element of Gamma");
        std::vector<Elem> m;
        for (const auto& x : v) {
            Elem e = -1;
            if (x.is_number_integer()) e = x.get<int>();
            else if (x.is_string()) e = mp.G().find_label(x.get<std::string>());
            if (e < 0 || e >= mp.nG()) throw ParseError(std::string(what) + " has an image outside G");
            m.push_back(e);
        }
        try {
            return hom_validate(mp.Gamma(), mp.G(), m);
        } catch (const NotAHom& e) {
            throw ParseError(std::string(what) + ": " + e.what());
        }
    };
    if (!j.contains("phi") || !j.contains("psi")) throw ParseError("braiding pair needs phi and psi");
    GroupHom phi = read(j.at("phi"), "phi"), psi = read(j.at("psi"), "psi");
    return braiding_pair_validate(mp, phi, psi);
}

}  // namespace crossact
