#pragma once

#include "crossact/crossed_action.hpp"
#include "crossact/equivariant.hpp"
#include "crossact/hopf.hpp"
#include "crossact/ybe.hpp"

#include <vector>

namespace crossact {

// c(s,t) is the scalar on the line X_s (x) Y_t.
struct BraidingData {
    BraidingPair bp;
    std::vector<Cyclotomic> c;  // s * |Gamma| + t

    const Cyclotomic& operator()(Elem s, Elem t) const { return c[static_cast<std::size_t>(s) * bp.mp.nGamma() + t]; }
};

// The braiding diagrams evaluated on one-dimensional homogeneous objects:
// "c normalized", "c nonzero", "braiding equivariance on lines",
// "hexagon splitting the first factor", "hexagon splitting the second factor".
Report scalar_braiding_check(const CrossedAction& ca, const BraidingPair& bp, const std::vector<Cyclotomic>& c);
// Throws HexagonViolation (or NotAMorphism for the equivariance equation).
BraidingData braiding_data_validate(const CrossedAction& ca, const BraidingPair& bp, std::vector<Cyclotomic> c);
// All tables with c(s,t) = zeta_N^k, k in exponents, and c(e,-) = c(-,e) = 1.
// Throws SearchBudgetExceeded after more than budget node visits.
std::vector<BraidingData> scalar_braiding_search(const CrossedAction& ca, const BraidingPair& bp, int N,
                                                 const std::vector<int>& exponents, long budget = 1000000);

// X (x) Y -> Y (x) X. On X_s (x) Y_t it is c(s,t) times the flip followed by
// l^{t^-1 > phi(s^-1)} (x) r^{psi(t)}.
GradedMap braiding_morphism(const CrossedAction& ca, const BraidingData& bd, const EquivariantObject& X,
                            const EquivariantObject& Y);

struct SampleMorphism {
    int source;
    int target;
    Matrix f;
};

struct ObjectSample {
    std::vector<EquivariantObject> objects;
    std::vector<SampleMorphism> morphisms;
};

// Unit object, one-dimensional objects with trivial r where these exist, K(regular),
// K(H e_s) for each s with its inclusion into K(regular), right multiplications on
// K(regular), and a seeded random conjugate of the smallest K(H e_s).
ObjectSample default_object_sample(const CrossedAction& ca, unsigned long seed = 0);

struct BraidingOptions {
    // Hexagons are checked on triples whose tensor product has at most this dimension.
    int hexagon_dim_limit = 512;
};

// "braiding equivariance", "braiding invertible", "hexagon X(YZ)", "hexagon (XY)Z",
// "naturality", and the Hopf monad R-matrix conditions "R-matrix compatible with T",
// "R-matrix splits the first factor", "R-matrix splits the second factor", which are
// evaluated symbolically on all triples of homogeneous lines.
Report verify_braiding(const CrossedAction& ca, const BraidingData& bd, const ObjectSample& sample,
                       const BraidingOptions& opt = {});
// Throws NotAMorphism, HexagonViolation or NaturalityViolation for the first failed check.
void require_braiding(const CrossedAction& ca, const BraidingData& bd, const ObjectSample& sample);

// The braiding of K(regular) with itself as a matrix on H (x) H.
Matrix braid_on_regular(const CrossedAction& ca, const HopfAlgebra& H, const BraidingData& bd);

// {"phi", "psi", "c": {"s,t": value}}; missing entries of c default to 1.
nlohmann::json braiding_data_to_json(const BraidingData& bd);
BraidingData braiding_data_from_json(const CrossedAction& ca, const nlohmann::json& j);

}  // namespace crossact
