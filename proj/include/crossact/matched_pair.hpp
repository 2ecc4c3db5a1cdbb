#pragma once

#include "crossact/groups.hpp"

#include <vector>

namespace crossact {

// (G, Gamma, <, >): s < g is a right action of G on Gamma, s > g a left action of Gamma on G.
class MatchedPair {
public:
    MatchedPair() = default;

    // Skips every axiom check; used to build deliberately broken instances.
    static MatchedPair unchecked(FiniteGroup G, FiniteGroup Gamma, std::vector<std::vector<Elem>> lact,
                                 std::vector<std::vector<Elem>> ract);

    const FiniteGroup& G() const { return G_; }
    const FiniteGroup& Gamma() const { return Gamma_; }
    int nG() const { return G_.order(); }
    int nGamma() const { return Gamma_.order(); }
    Elem lact(Elem s, Elem g) const { return lact_[s][g]; }  // s < g
    Elem ract(Elem s, Elem g) const { return ract_[s][g]; }  // s > g
    const std::vector<std::vector<Elem>>& lact_table() const { return lact_; }
    const std::vector<std::vector<Elem>>& ract_table() const { return ract_; }

    friend bool operator==(const MatchedPair& a, const MatchedPair& b) {
        return a.G_ == b.G_ && a.Gamma_ == b.Gamma_ && a.lact_ == b.lact_ && a.ract_ == b.ract_;
    }

private:
    FiniteGroup G_;
    FiniteGroup Gamma_;
    std::vector<std::vector<Elem>> lact_{{0}};
    std::vector<std::vector<Elem>> ract_{{0}};
};

struct PairAnalysis {
    bool lact_trivial = false;
    bool ract_trivial = false;
    bool ract_by_automorphisms = false;
    bool lact_by_automorphisms = false;
    // lact_trivial implies ract_by_automorphisms and ract_trivial implies
    // lact_by_automorphisms; the converses fail in general.
    Subgroup gamma_bar;    // s > g = g for all g
    Subgroup gamma_under;  // s < g = s for all g
};

MatchedPair matched_pair_validate(const FiniteGroup& G, const FiniteGroup& Gamma,
                                  const std::vector<std::vector<Elem>>& lact,
                                  const std::vector<std::vector<Elem>>& ract);
MatchedPair trivial_pair(const FiniteGroup& G, const FiniteGroup& Gamma);
// Gamma = G, s < g = g^-1 s g, s > g = g.
MatchedPair gcrossed_pair(const FiniteGroup& G);

// Elements (g, s) indexed g*|Gamma| + s, product (g,s)(h,t) = (g(s>h), (s<h)t).
FiniteGroup bicrossed_group(const MatchedPair& mp);
Subgroup bicrossed_G(const MatchedPair& mp, const FiniteGroup& H);
Subgroup bicrossed_Gamma(const MatchedPair& mp, const FiniteGroup& H);

MatchedPair from_factorization(const FiniteGroup& H, const Subgroup& Gsub, const Subgroup& GammaSub);
PairAnalysis analyze(const MatchedPair& mp);
MatchedPair restrict_pair(const MatchedPair& mp, const Subgroup& GammaSub);

nlohmann::json pair_to_json(const MatchedPair& mp);
MatchedPair pair_from_json(const nlohmann::json& j);

}  // namespace crossact
