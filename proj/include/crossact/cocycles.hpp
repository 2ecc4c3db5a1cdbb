#pragma once

#include "crossact/matched_pair.hpp"
#include "crossact/report.hpp"
#include "crossact/scalars.hpp"

#include <vector>

namespace crossact {

// sigma(s,g,h) = sigma_s(g,h), tau(g,s,t) = tau_g(s,t); all values live in Q(zeta_N).
class CocyclePair {
public:
    CocyclePair() = default;
    static CocyclePair unchecked(MatchedPair mp, int N, std::vector<Cyclotomic> sigma, std::vector<Cyclotomic> tau);

    const MatchedPair& mp() const { return mp_; }
    int conductor() const { return N_; }
    const Cyclotomic& sigma(Elem s, Elem g, Elem h) const {
        return sigma_[(static_cast<std::size_t>(s) * mp_.nG() + g) * mp_.nG() + h];
    }
    const Cyclotomic& tau(Elem g, Elem s, Elem t) const {
        return tau_[(static_cast<std::size_t>(g) * mp_.nGamma() + s) * mp_.nGamma() + t];
    }
    const std::vector<Cyclotomic>& sigma_table() const { return sigma_; }
    const std::vector<Cyclotomic>& tau_table() const { return tau_; }
    bool is_trivial() const;

    friend bool operator==(const CocyclePair& a, const CocyclePair& b) {
        return a.mp_ == b.mp_ && a.sigma_ == b.sigma_ && a.tau_ == b.tau_;
    }

private:
    MatchedPair mp_;
    int N_ = 1;
    std::vector<Cyclotomic> sigma_{Cyclotomic(1)};
    std::vector<Cyclotomic> tau_{Cyclotomic(1)};
};

std::size_t sigma_index(const MatchedPair& mp, Elem s, Elem g, Elem h);
std::size_t tau_index(const MatchedPair& mp, Elem g, Elem s, Elem t);

// The seven condition families, each checked on its full grid; order is the grid order
// unless a shuffle seed is given.
Report cocycle_conditions(const CocyclePair& cp, long shuffle_seed = -1);

CocyclePair cocycle_pair_validate(const MatchedPair& mp, const std::vector<Cyclotomic>& sigma,
                                  const std::vector<Cyclotomic>& tau, int N);
CocyclePair trivial_cocycles(const MatchedPair& mp);
std::vector<CocyclePair> enumerate_cocycle_pairs(const MatchedPair& mp, int N, const std::vector<int>& exponents,
                                                 long budget = 1000000);
// Pointwise product, validated.
CocyclePair cocycle_product(const CocyclePair& a, const CocyclePair& b);

nlohmann::json cocycles_to_json(const CocyclePair& cp);
CocyclePair cocycles_from_json(const MatchedPair& mp, const nlohmann::json& j);

}  // namespace crossact
