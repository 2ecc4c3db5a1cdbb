#include "crossact/matched_pair.hpp"

#include "crossact/errors.hpp"

#include <map>
#include <sstream>

namespace crossact {

namespace {

std::string tup(std::initializer_list<std::pair<const char*, Elem>> xs) {
    std::ostringstream os;
    bool first = true;
    os << "(";
    for (auto& [k, v] : xs) {
        if (!first) os << ",";
        first = false;
        os << k << "=" << v;
    }
    os << ")";
    return os.str();
}

void check_shape(const char* name, const std::vector<std::vector<Elem>>& t, int rows, int cols, int range) {
    if (static_cast<int>(t.size()) != rows) throw NotAnAction(std::string(name) + ": table has wrong number of rows");
    for (int s = 0; s < rows; ++s) {
        if (static_cast<int>(t[s].size()) != cols) throw NotAnAction(std::string(name) + ": row " + std::to_string(s) + " has wrong length");
        for (int g = 0; g < cols; ++g)
            if (t[s][g] < 0 || t[s][g] >= range)
                throw NotAnAction(std::string(name) + ": entry out of range " + tup({{"s", s}, {"g", g}}));
    }
}

}  // namespace

MatchedPair MatchedPair::unchecked(FiniteGroup G, FiniteGroup Gamma, std::vector<std::vector<Elem>> lact,
                                   std::vector<std::vector<Elem>> ract) {
    MatchedPair mp;
    mp.G_ = std::move(G);
    mp.Gamma_ = std::move(Gamma);
    mp.lact_ = std::move(lact);
    mp.ract_ = std::move(ract);
    return mp;
}

MatchedPair matched_pair_validate(const FiniteGroup& G, const FiniteGroup& Gamma,
                                  const std::vector<std::vector<Elem>>& lact,
                                  const std::vector<std::vector<Elem>>& ract) {
    const int ng = G.order(), ns = Gamma.order();
    check_shape("lact", lact, ns, ng, ns);
    check_shape("ract", ract, ns, ng, ng);
    const Elem e = G.identity(), eg = Gamma.identity();

    for (Elem s = 0; s < ns; ++s) {
        if (lact[s][e] != s) throw NotAnAction("lact: s < e != s at " + tup({{"s", s}}));
        for (Elem g = 0; g < ng; ++g)
            for (Elem h = 0; h < ng; ++h)
                if (lact[lact[s][g]][h] != lact[s][G.mul(g, h)])
                    throw NotAnAction("lact: (s<g)<h != s<gh at " + tup({{"s", s}, {"g", g}, {"h", h}}));
    }
    for (Elem g = 0; g < ng; ++g)
        if (ract[eg][g] != g) throw NotAnAction("ract: e > g != g at " + tup({{"g", g}}));
    for (Elem s = 0; s < ns; ++s)
        for (Elem t = 0; t < ns; ++t)
            for (Elem g = 0; g < ng; ++g)
                if (ract[Gamma.mul(s, t)][g] != ract[s][ract[t][g]])
                    throw NotAnAction("ract: st>g != s>(t>g) at " + tup({{"s", s}, {"t", t}, {"g", g}}));

    for (Elem s = 0; s < ns; ++s)
        if (ract[s][e] != e) throw MatchedPairViolation("unit law s>e=e at " + tup({{"s", s}}));
    for (Elem g = 0; g < ng; ++g)
        if (lact[eg][g] != eg) throw MatchedPairViolation("unit law e<g=e at " + tup({{"g", g}}));

    for (Elem s = 0; s < ns; ++s)
        for (Elem g = 0; g < ng; ++g)
            for (Elem h = 0; h < ng; ++h)
                if (ract[s][G.mul(g, h)] != G.mul(ract[s][g], ract[lact[s][g]][h]))
                    throw MatchedPairViolation("s>gh = (s>g)((s<g)>h) at " + tup({{"s", s}, {"g", g}, {"h", h}}));
    for (Elem s = 0; s < ns; ++s)
        for (Elem t = 0; t < ns; ++t)
            for (Elem g = 0; g < ng; ++g)
                if (lact[Gamma.mul(s, t)][g] != Gamma.mul(lact[s][ract[t][g]], lact[t][g]))
                    throw MatchedPairViolation("st<g = (s<(t>g))(t<g) at " + tup({{"s", s}, {"t", t}, {"g", g}}));
    return MatchedPair::unchecked(G, Gamma, lact, ract);
}

MatchedPair trivial_pair(const FiniteGroup& G, const FiniteGroup& Gamma) {
    std::vector<std::vector<Elem>> lact(Gamma.order(), std::vector<Elem>(G.order()));
    std::vector<std::vector<Elem>> ract(Gamma.order(), std::vector<Elem>(G.order()));
    for (Elem s = 0; s < Gamma.order(); ++s)
        for (Elem g = 0; g < G.order(); ++g) {
            lact[s][g] = s;
            ract[s][g] = g;
        }
    return matched_pair_validate(G, Gamma, lact, ract);
}

MatchedPair gcrossed_pair(const FiniteGroup& G) {
    const int n = G.order();
    std::vector<std::vector<Elem>> lact(n, std::vector<Elem>(n));
    std::vector<std::vector<Elem>> ract(n, std::vector<Elem>(n));
    for (Elem s = 0; s < n; ++s)
        for (Elem g = 0; g < n; ++g) {
            lact[s][g] = G.mul(G.inv(g), G.mul(s, g));
            ract[s][g] = g;
        }
    return matched_pair_validate(G, G, lact, ract);
}

FiniteGroup bicrossed_group(const MatchedPair& mp) {
    const int ng = mp.nG(), ns = mp.nGamma();
    const int n = ng * ns;
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x) {
        Elem g = x / ns, s = x % ns;
        labels.push_back("(" + mp.G().label(g) + "," + mp.Gamma().label(s) + ")");
        for (int y = 0; y < n; ++y) {
            Elem h = y / ns, u = y % ns;
            t[x][y] = mp.G().mul(g, mp.ract(s, h)) * ns + mp.Gamma().mul(mp.lact(s, h), u);
        }
    }
    try {
        return group_from_table(t, labels);
    } catch (const NotAGroup& err) {
        throw InternalError(std::string("bicrossed product is not a group: ") + err.witness());
    }
}

Subgroup bicrossed_G(const MatchedPair& mp, const FiniteGroup& H) {
    std::vector<Elem> els;
    for (Elem g = 0; g < mp.nG(); ++g) els.push_back(g * mp.nGamma() + mp.Gamma().identity());
    return subgroup_from_elements(H, els);
}

Subgroup bicrossed_Gamma(const MatchedPair& mp, const FiniteGroup& H) {
    std::vector<Elem> els;
    for (Elem s = 0; s < mp.nGamma(); ++s) els.push_back(mp.G().identity() * mp.nGamma() + s);
    return subgroup_from_elements(H, els);
}

MatchedPair from_factorization(const FiniteGroup& H, const Subgroup& Gsub, const Subgroup& GammaSub) {
    for (Elem x : Gsub.elements)
        if (x != H.identity() && GammaSub.contains(x))
            throw NotExactFactorization("intersection contains " + H.label(x));
    if (static_cast<long>(Gsub.order()) * GammaSub.order() != H.order())
        throw NotExactFactorization("orders " + std::to_string(Gsub.order()) + "*" + std::to_string(GammaSub.order()) +
                                    " != " + std::to_string(H.order()));
    // product g's' -> (g', s') as subgroup positions
    std::vector<std::pair<Elem, Elem>> split(H.order(), {-1, -1});
    for (int i = 0; i < Gsub.order(); ++i)
        for (int j = 0; j < GammaSub.order(); ++j) {
            Elem p = H.mul(Gsub.elements[i], GammaSub.elements[j]);
            if (split[p].first >= 0) throw NotExactFactorization("non-unique factorization of " + H.label(p));
            split[p] = {i, j};
        }
    const int ng = Gsub.order(), ns = GammaSub.order();
    std::vector<std::vector<Elem>> lact(ns, std::vector<Elem>(ng)), ract(ns, std::vector<Elem>(ng));
    for (int s = 0; s < ns; ++s)
        for (int g = 0; g < ng; ++g) {
            Elem p = H.mul(GammaSub.elements[s], Gsub.elements[g]);
            if (split[p].first < 0) throw FactorizationFailure("no factorization of " + H.label(p));
            ract[s][g] = split[p].first;
            lact[s][g] = split[p].second;
        }
    return matched_pair_validate(Gsub.as_group(), GammaSub.as_group(), lact, ract);
}

PairAnalysis analyze(const MatchedPair& mp) {
    const FiniteGroup& G = mp.G();
    const FiniteGroup& Gm = mp.Gamma();
    PairAnalysis a;
    a.lact_trivial = a.ract_trivial = a.ract_by_automorphisms = a.lact_by_automorphisms = true;
    std::vector<Elem> bar, under;
    for (Elem s = 0; s < mp.nGamma(); ++s) {
        bool fixes_all = true, fixed = true;
        for (Elem g = 0; g < mp.nG(); ++g) {
            if (mp.ract(s, g) != g) fixes_all = false;
            if (mp.lact(s, g) != s) fixed = false;
        }
        if (fixes_all) bar.push_back(s);
        if (fixed) under.push_back(s);
        a.lact_trivial = a.lact_trivial && fixed;
        a.ract_trivial = a.ract_trivial && fixes_all;
        for (Elem g = 0; g < mp.nG(); ++g)
            for (Elem h = 0; h < mp.nG(); ++h)
                if (mp.ract(s, G.mul(g, h)) != G.mul(mp.ract(s, g), mp.ract(s, h))) a.ract_by_automorphisms = false;
        for (Elem t = 0; t < mp.nGamma(); ++t)
            for (Elem g = 0; g < mp.nG(); ++g)
                if (mp.lact(Gm.mul(s, t), g) != Gm.mul(mp.lact(s, g), mp.lact(t, g))) a.lact_by_automorphisms = false;
    }
    a.gamma_bar = subgroup_from_elements(Gm, bar);
    a.gamma_under = subgroup_from_elements(Gm, under);
    // Only these directions hold in general; the S3 pair has trivial > and nontrivial <.
    if (a.lact_trivial && !a.ract_by_automorphisms)
        throw InternalError("< is trivial but > is not by automorphisms");
    if (a.ract_trivial && !a.lact_by_automorphisms)
        throw InternalError("> is trivial but < is not by automorphisms");
    for (const Subgroup* sub : {&a.gamma_bar, &a.gamma_under})
        for (Elem s : sub->elements)
            for (Elem g = 0; g < mp.nG(); ++g)
                if (!sub->contains(mp.lact(s, g))) throw InternalError("distinguished subgroup is not stable");
    return a;
}

MatchedPair restrict_pair(const MatchedPair& mp, const Subgroup& sub) {
    for (Elem s : sub.elements)
        for (Elem g = 0; g < mp.nG(); ++g)
            if (!sub.contains(mp.lact(s, g)))
                throw NotStable(tup({{"s", s}, {"g", g}}));
    const int k = sub.order();
    std::vector<std::vector<Elem>> lact(k, std::vector<Elem>(mp.nG())), ract(k, std::vector<Elem>(mp.nG()));
    for (int i = 0; i < k; ++i)
        for (Elem g = 0; g < mp.nG(); ++g) {
            lact[i][g] = sub.index_of(mp.lact(sub.elements[i], g));
            ract[i][g] = mp.ract(sub.elements[i], g);
        }
    return matched_pair_validate(mp.G(), sub.as_group(), lact, ract);
}

nlohmann::json pair_to_json(const MatchedPair& mp) {
    return {{"G", group_to_json(mp.G())},
            {"Gamma", group_to_json(mp.Gamma())},
            {"lact", mp.lact_table()},
            {"ract", mp.ract_table()}};
}

namespace {

Elem element_ref(const FiniteGroup& H, const nlohmann::json& x) {
    if (x.is_number_integer()) {
        Elem v = x.get<Elem>();
        if (v < 0 || v >= H.order()) throw ParseError("element index out of range");
        return v;
    }
    if (!x.is_string()) throw ParseError("element must be an index or label");
    Elem v = H.find_label(x.get<std::string>());
    if (v < 0) throw ParseError("unknown element label " + x.get<std::string>());
    return v;
}

}  // namespace

MatchedPair pair_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("matched pair must be an object");
    if (j.contains("gcrossed")) return gcrossed_pair(group_from_json(j.at("gcrossed")));
    if (j.contains("factorization") && !j.contains("lact")) {
        const auto& f = j.at("factorization");
        FiniteGroup H = group_from_json(f.at("H"));
        std::vector<Elem> gg, gs;
        for (const auto& x : f.at("G")) gg.push_back(element_ref(H, x));
        for (const auto& x : f.at("Gamma")) gs.push_back(element_ref(H, x));
        return from_factorization(H, subgroup_generated(H, gg), subgroup_generated(H, gs));
    }
    if (!j.contains("G") || !j.contains("Gamma")) throw ParseError("matched pair needs G and Gamma");
    FiniteGroup G = group_from_json(j.at("G"));
    FiniteGroup Gamma = group_from_json(j.at("Gamma"));
    if (!j.contains("lact") && !j.contains("ract")) return trivial_pair(G, Gamma);
    auto lact = j.at("lact").get<std::vector<std::vector<Elem>>>();
    auto ract = j.at("ract").get<std::vector<std::vector<Elem>>>();
    return matched_pair_validate(G, Gamma, lact, ract);
}

}  // namespace crossact
