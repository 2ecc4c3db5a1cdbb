#pragma once

#include "crossact/matched_pair.hpp"
#include "crossact/report.hpp"

#include <utility>
#include <vector>

namespace crossact {

// phi, psi: Gamma -> G.
struct BraidingPair {
    MatchedPair mp;
    GroupHom phi;
    GroupHom psi;

    // t^-1 > phi(s^-1), the G-label on the Y-side of the braiding of X_s (x) Y_t.
    Elem twist(Elem s, Elem t) const;
};

// The five defining conditions, each checked on the full grid, followed by the
// same five conditions rewritten through the factorization actions of G >< Gamma.
Report braiding_pair_conditions(const MatchedPair& mp, const GroupHom& phi, const GroupHom& psi);
// Throws ConditionViolation naming the failed condition; ReformulationMismatch if
// a condition and its rewritten form disagree.
BraidingPair braiding_pair_validate(const MatchedPair& mp, const GroupHom& phi, const GroupHom& psi);

// Actions induced by the factorization G >< Gamma:
// s g = (^s g)(s^g) and g s = (^g s)(g^s), read off from the product table.
struct FactorizationActions {
    std::vector<std::vector<Elem>> g_on_s;  // [g][s] = ^g s
    std::vector<std::vector<Elem>> s_on_g;  // [s][g] = g^s
};
FactorizationActions factorization_actions(const MatchedPair& mp);

// A map Gamma x Gamma -> Gamma x Gamma, pair (s, t) stored at s*n + t.
struct SetSolution {
    int n = 1;
    std::vector<int> perm{0};
    std::pair<Elem, Elem> operator()(Elem s, Elem t) const {
        int k = perm[static_cast<std::size_t>(s) * n + t];
        return {k / n, k % n};
    }
    bool is_bijective() const;
    SetSolution inverse() const;
};

// b(s,t) = ((t^-1 < phi(s^-1))^-1, s < psi(t)).
SetSolution b_map(const BraidingPair& bp);
// R with R^-1(t, s) = b(s, t), i.e. R = flip o b^-1.
SetSolution r_map(const BraidingPair& bp);
SetSolution flip_solution(int n);
// r12 r13 r23 = r23 r13 r12 on all triples; maps compose right to left.
Report verify_qybe(const SetSolution& r);

std::vector<BraidingPair> enumerate_braiding_pairs(const MatchedPair& mp, long bound = 1000000);

nlohmann::json braiding_pair_to_json(const BraidingPair& bp);
BraidingPair braiding_pair_from_json(const MatchedPair& mp, const nlohmann::json& j);

}  // namespace crossact
