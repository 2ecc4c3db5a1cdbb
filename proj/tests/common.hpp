#pragma once

#include "crossact/groups.hpp"
#include "crossact/matched_pair.hpp"
#include "crossact/scalars.hpp"

#include <random>

namespace testing {

using namespace crossact;

inline Cyclotomic random_cyclotomic(std::mt19937_64& rng, int N) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), zero(0, 3);
    std::vector<Rational> c(euler_phi(N));
    for (auto& q : c) q = zero(rng) == 0 ? Rational(0) : Rational(num(rng), den(rng));
    for (auto& q : c) q.canonicalize();
    return Cyclotomic(N, c);
}

inline Elem perm(const FiniteGroup& Sn, int n, const std::string& cycles) {
    return permutation_index(parse_cycles(n, cycles));
}

// G = <(12)>, Gamma = <(123)> inside S3.
inline MatchedPair s3_pair() {
    FiniteGroup S3 = group_symmetric(3);
    return from_factorization(S3, subgroup_generated(S3, {perm(S3, 3, "(12)")}),
                              subgroup_generated(S3, {perm(S3, 3, "(123)")}));
}

// G = Z2, Gamma = Z3 = {e, a, a^2}, trivial >, a < b = a^2.
inline MatchedPair s3_pair_tables() {
    FiniteGroup G = group_cyclic(2), Gamma = group_cyclic(3);
    std::vector<std::vector<Elem>> lact{{0, 0}, {1, 2}, {2, 1}}, ract{{0, 1}, {0, 1}, {0, 1}};
    return matched_pair_validate(G, Gamma, lact, ract);
}

// G = <(1234)>, Gamma = Stab(4) inside S4.
inline MatchedPair s4_pair() {
    FiniteGroup S4 = group_symmetric(4);
    return from_factorization(S4, subgroup_generated(S4, {perm(S4, 4, "(1234)")}),
                              subgroup_generated(S4, {perm(S4, 4, "(12)"), perm(S4, 4, "(123)")}));
}

inline MatchedPair dim8_pair() { return trivial_pair(group_cyclic(2), group_product(group_cyclic(2), group_cyclic(2))); }

}  // namespace testing
