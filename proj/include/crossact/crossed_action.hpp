#pragma once

#include "crossact/cocycles.hpp"
#include "crossact/report.hpp"

#include <string>
#include <vector>

namespace crossact {

// Which degree and which exponent the twisting scalars use. The default is the
// convention under which the diagram checker passes and K is strictly monoidal;
// the other members exist so tests can show that they fail.
struct Convention {
    // rho2^{g,h} on a vector of degree d in the argument object X uses
    // sigma_{d'}(h,g)^{sign} (or sigma_{d'}(g,h) if swapped) where d' is
    enum class Rho2Degree { argument, after_h, after_hg, before_hg };  // d, d<h, d<hg, d<(hg)^-1
    Rho2Degree rho2_degree = Rho2Degree::argument;
    bool rho2_swapped = false;
    int rho2_sign = -1;
    // gamma^g_{U,V} on u (x) v, |u| = a, V of degree t, uses tau_g(a', t')^{sign} where
    enum class GammaDegree { argument, acted, unacted };  // a, a<(t>g), a<(t>g)^-1
    GammaDegree gamma_u = GammaDegree::argument;
    bool gamma_t_acted = false;  // t' = t<g instead of t
    int gamma_sign = -1;

    std::string name() const;
    static std::vector<Convention> candidates();
    friend bool operator==(const Convention&, const Convention&) = default;
};

class CrossedAction {
public:
    CrossedAction() = default;
    CrossedAction(CocyclePair cp, Convention conv = {}) : cp_(std::move(cp)), conv_(conv) {}

    const MatchedPair& mp() const { return cp_.mp(); }
    const CocyclePair& cp() const { return cp_; }
    const Convention& convention() const { return conv_; }
    int nG() const { return cp_.mp().nG(); }
    int nGamma() const { return cp_.mp().nGamma(); }

    // Scalar of rho2^{g,h}: rho^g rho^h -> rho^{hg} on the part of the argument of degree d.
    Cyclotomic rho2(Elem g, Elem h, Elem d) const;
    // Scalar of gamma^g_{U,V} on U_a (x) V, V of degree t.
    Cyclotomic gamma(Elem g, Elem a, Elem t) const;

private:
    CocyclePair cp_;
    Convention conv_;
};

// rho^g(X)_t = X_{t<g^-1}: a vector of degree s moves to degree s<g.
std::vector<Elem> rho_apply(const CrossedAction& ca, Elem g, const std::vector<Elem>& degrees);

// Structure diagrams of the crossed action on one-dimensional homogeneous objects:
// "gamma associativity", "gamma unit", "gamma-rho2 compatibility", "gamma0-rho2",
// "rho0 monoidal", "rho2 associativity", "rho2 unit".
// degree_sample restricts the Gamma-degrees used (empty = all).
Report verify_crossed_action(const CrossedAction& ca, const std::vector<Elem>& degree_sample = {});

// Fusion-operator index maps are bijections for every s; T(1) is trivial.
Report hopf_monad_check(const MatchedPair& mp);
Report hopf_monad_check(const CrossedAction& ca);

}  // namespace crossact
