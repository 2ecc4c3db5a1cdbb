#include "crossact/crossed_action.hpp"

#include "crossact/errors.hpp"

namespace crossact {

std::string Convention::name() const {
    static const char* rd[] = {"d", "d<h", "d<hg", "d<(hg)^-1"};
    static const char* gd[] = {"a", "a<(t>g)", "a<(t>g)^-1"};
    std::string r = std::string("rho2 = sigma_{") + rd[static_cast<int>(rho2_degree)] + "}" +
                    (rho2_swapped ? "(g,h)" : "(h,g)") + (rho2_sign < 0 ? "^-1" : "");
    std::string g = std::string("gamma = tau_g(") + gd[static_cast<int>(gamma_u)] + ", " +
                    (gamma_t_acted ? "t<g" : "t") + ")" + (gamma_sign < 0 ? "^-1" : "");
    return r + "; " + g;
}

std::vector<Convention> Convention::candidates() {
    std::vector<Convention> out;
    for (int rd = 0; rd < 4; ++rd)
        for (bool sw : {false, true})
            for (int rs : {-1, 1})
                for (int gd = 0; gd < 3; ++gd)
                    for (bool ta : {false, true})
                        for (int gs : {-1, 1}) {
                            Convention c;
                            c.rho2_degree = static_cast<Rho2Degree>(rd);
                            c.rho2_swapped = sw;
                            c.rho2_sign = rs;
                            c.gamma_u = static_cast<GammaDegree>(gd);
                            c.gamma_t_acted = ta;
                            c.gamma_sign = gs;
                            out.push_back(c);
                        }
    return out;
}

Cyclotomic CrossedAction::rho2(Elem g, Elem h, Elem d) const {
    const MatchedPair& m = mp();
    const FiniteGroup& G = m.G();
    Elem hg = G.mul(h, g);
    Elem dd = d;
    switch (conv_.rho2_degree) {
        case Convention::Rho2Degree::argument: break;
        case Convention::Rho2Degree::after_h: dd = m.lact(d, h); break;
        case Convention::Rho2Degree::after_hg: dd = m.lact(d, hg); break;
        case Convention::Rho2Degree::before_hg: dd = m.lact(d, G.inv(hg)); break;
    }
    Cyclotomic v = conv_.rho2_swapped ? cp_.sigma(dd, g, h) : cp_.sigma(dd, h, g);
    return conv_.rho2_sign < 0 ? v.inverse() : v;
}

Cyclotomic CrossedAction::gamma(Elem g, Elem a, Elem t) const {
    const MatchedPair& m = mp();
    Elem k = m.ract(t, g);
    Elem aa = a;
    switch (conv_.gamma_u) {
        case Convention::GammaDegree::argument: break;
        case Convention::GammaDegree::acted: aa = m.lact(a, k); break;
        case Convention::GammaDegree::unacted: aa = m.lact(a, m.G().inv(k)); break;
    }
    Elem tt = conv_.gamma_t_acted ? m.lact(t, g) : t;
    Cyclotomic v = cp_.tau(g, aa, tt);
    return conv_.gamma_sign < 0 ? v.inverse() : v;
}

std::vector<Elem> rho_apply(const CrossedAction& ca, Elem g, const std::vector<Elem>& degrees) {
    std::vector<Elem> out;
    out.reserve(degrees.size());
    for (Elem s : degrees) out.push_back(ca.mp().lact(s, g));
    return out;
}

Report verify_crossed_action(const CrossedAction& ca, const std::vector<Elem>& degree_sample) {
    const MatchedPair& mp = ca.mp();
    const FiniteGroup& G = mp.G();
    const FiniteGroup& Gm = mp.Gamma();
    const int nG = mp.nG();
    std::vector<Elem> D = degree_sample;
    if (D.empty())
        for (Elem s = 0; s < mp.nGamma(); ++s) D.push_back(s);
    const Elem e = Gm.identity(), eG = G.identity();
    auto P = [&ca](Elem g, Elem h, Elem d) { return ca.rho2(g, h, d); };
    auto Gs = [&ca](Elem g, Elem a, Elem t) { return ca.gamma(g, a, t); };
    auto L = [&](Elem x) { return Gm.label(x); };
    auto Lg = [&](Elem x) { return G.label(x); };

    Report rep;
    CheckBuilder a("gamma associativity");
    for (Elem g = 0; g < nG && a.ok(); ++g)
        for (Elem x : D)
            for (Elem s : D)
                for (Elem t : D)
                    a.expect(Gs(g, Gm.mul(x, s), t) * Gs(mp.ract(t, g), x, s) == Gs(g, x, Gm.mul(s, t)) * Gs(g, s, t),
                             "g=" + Lg(g) + " degrees " + L(x) + "," + L(s) + "," + L(t));
    a.into(rep);

    CheckBuilder b("gamma unit");
    for (Elem g = 0; g < nG; ++g)
        for (Elem x : D) b.expect(Gs(g, x, e).is_one() && Gs(g, e, x).is_one(), "g=" + Lg(g) + " degree " + L(x));
    b.into(rep);

    CheckBuilder c("gamma-rho2 compatibility");
    for (Elem g = 0; g < nG && c.ok(); ++g)
        for (Elem h = 0; h < nG; ++h)
            for (Elem x : D)
                for (Elem s : D) {
                    Elem sh = mp.ract(s, h), sl = mp.lact(s, h);
                    Cyclotomic lhs = P(g, h, Gm.mul(x, s)) * Gs(G.mul(h, g), x, s);
                    Cyclotomic rhs = Gs(h, x, s) * Gs(g, mp.lact(x, sh), sl) * P(mp.ract(sl, g), sh, x) * P(g, h, s);
                    c.expect(lhs == rhs, "g=" + Lg(g) + " h=" + Lg(h) + " degrees " + L(x) + "," + L(s));
                }
    c.into(rep);

    CheckBuilder d("gamma0-rho2");
    for (Elem g = 0; g < nG; ++g)
        for (Elem h = 0; h < nG; ++h) d.expect(P(g, h, e).is_one(), "g=" + Lg(g) + " h=" + Lg(h));
    d.into(rep);

    CheckBuilder r0("rho0 monoidal");
    for (Elem x : D)
        for (Elem s : D) r0.expect(Gs(eG, x, s).is_one(), "degrees " + L(x) + "," + L(s));
    r0.into(rep);

    CheckBuilder r2("rho2 associativity");
    for (Elem x = 0; x < nG && r2.ok(); ++x)
        for (Elem y = 0; y < nG; ++y)
            for (Elem z = 0; z < nG; ++z)
                for (Elem dg : D)
                    r2.expect(P(G.mul(y, x), z, dg) * P(x, y, mp.lact(dg, z)) == P(x, G.mul(z, y), dg) * P(y, z, dg),
                              "(" + Lg(x) + "," + Lg(y) + "," + Lg(z) + ") degree " + L(dg));
    r2.into(rep);

    CheckBuilder r3("rho2 unit");
    for (Elem x = 0; x < nG; ++x)
        for (Elem dg : D) r3.expect(P(x, eG, dg).is_one() && P(eG, x, dg).is_one(), Lg(x) + " degree " + L(dg));
    r3.into(rep);
    return rep;
}

Report hopf_monad_check(const MatchedPair& mp) {
    const FiniteGroup& G = mp.G();
    const FiniteGroup& Gm = mp.Gamma();
    const int n = mp.nG();
    CheckBuilder hr("fusion H^r bijective"), hl("fusion H^l bijective"), inv("fusion inverse formulas");
    for (Elem s = 0; s < mp.nGamma(); ++s) {
        std::vector<char> seen_r(static_cast<std::size_t>(n) * n, 0), seen_l(seen_r.size(), 0);
        for (Elem g = 0; g < n; ++g)
            for (Elem h = 0; h < n; ++h) {
                Elem u1 = G.mul(h, mp.ract(s, g)), v1 = g;
                Elem u2 = mp.ract(mp.lact(s, h), g), v2 = G.mul(h, g);
                std::string w = "s=" + Gm.label(s) + " (g,h)=(" + G.label(g) + "," + G.label(h) + ")";
                hr.expect(!seen_r[u1 * n + v1]++, w);
                hl.expect(!seen_l[u2 * n + v2]++, w);
                // (u,v) = (h(s>g), g): g = v, h = u (s>v)^-1
                bool ok1 = v1 == g && G.mul(u1, G.inv(mp.ract(s, v1))) == h;
                // (u,v) = ((s<h)>g, hg): h = s^-1 > ((s>v) u^-1), g = h^-1 v
                Elem hh = mp.ract(Gm.inv(s), G.mul(mp.ract(s, v2), G.inv(u2)));
                bool ok2 = hh == h && G.mul(G.inv(hh), v2) == g;
                inv.expect(ok1 && ok2, w);
            }
    }
    Report rep;
    hr.into(rep);
    hl.into(rep);
    inv.into(rep);
    CheckBuilder t("T(1) trivial");
    for (Elem g = 0; g < n; ++g) t.expect(mp.lact(Gm.identity(), g) == Gm.identity(), "e<" + G.label(g));
    t.into(rep);
    return rep;
}

Report hopf_monad_check(const CrossedAction& ca) {
    Report rep = hopf_monad_check(ca.mp());
    const Elem e = ca.mp().Gamma().identity();
    CheckBuilder t("T(1) scalars trivial");
    for (Elem g = 0; g < ca.nG(); ++g) {
        t.expect(ca.gamma(g, e, e).is_one(), "gamma^" + ca.mp().G().label(g));
        for (Elem h = 0; h < ca.nG(); ++h)
            t.expect(ca.rho2(g, h, e).is_one(), "rho2^{" + ca.mp().G().label(g) + "," + ca.mp().G().label(h) + "}");
    }
    t.into(rep);
    return rep;
}

}  // namespace crossact
