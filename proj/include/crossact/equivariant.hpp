#pragma once

#include "crossact/crossed_action.hpp"
#include "crossact/hopf.hpp"
#include "crossact/linalg.hpp"

#include <vector>

namespace crossact {

// A Gamma-graded space with a homogeneous basis; degrees[i] is the degree of basis vector i.
struct GradedSpace {
    std::vector<Elem> degrees;

    int dim() const { return static_cast<int>(degrees.size()); }
    std::vector<int> dims(int nGamma) const;
    // Basis ordered by degree.
    static GradedSpace from_dims(const std::vector<int>& dims);
    friend bool operator==(const GradedSpace&, const GradedSpace&) = default;
};

// Basis (i, j) at i*dim(Y) + j with degree deg_i deg_j.
GradedSpace graded_tensor(const FiniteGroup& Gamma, const GradedSpace& X, const GradedSpace& Y);

struct GradedMap {
    GradedSpace source;
    GradedSpace target;
    Matrix m;  // target.dim x source.dim
};
bool is_degree_preserving(const GradedMap& f);

// r[g] is the full matrix of r^g; it maps X_s into X_{s<g}.
struct EquivariantObject {
    GradedSpace X;
    std::vector<Matrix> r;
    int dim() const { return X.dim(); }
};

// Throws ShapeMismatch, NotInvertible, NotEquivariant.
EquivariantObject equivariant_validate(const CrossedAction& ca, GradedSpace X, std::vector<Matrix> r);
EquivariantObject unit_object(const CrossedAction& ca);
EquivariantObject equivariant_tensor(const CrossedAction& ca, const EquivariantObject& X, const EquivariantObject& Y);
EquivariantObject equivariant_direct_sum(const EquivariantObject& X, const EquivariantObject& Y);
// (X, P r P^-1) for a degree-preserving invertible P.
EquivariantObject conjugate(const CrossedAction& ca, const EquivariantObject& X, const Matrix& P);
// f r_X^g = r_Y^g f for all g, and f preserves degrees.
bool is_equivariant_morphism(const EquivariantObject& X, const EquivariantObject& Y, const Matrix& f);

// K(W): grading from the idempotents e_s#e (which must act diagonally on the basis
// of W), r^g the inverse of the action of sum_s e_s#g.
EquivariantObject K_functor(const CrossedAction& ca, const HopfAlgebra& H, const HModule& W);
// (e_s#g) acts as the projection onto degree s composed with (r^g)^-1.
HModule K_inverse(const CrossedAction& ca, const HopfAlgebra& H, const EquivariantObject& X);

// {"dims": {s: n}, "r": {g: {s: block}}} with the basis sorted by degree.
nlohmann::json equivariant_to_json(const CrossedAction& ca, const EquivariantObject& X);
EquivariantObject equivariant_from_json(const CrossedAction& ca, const nlohmann::json& j);
// The same object with its basis stably sorted by degree.
EquivariantObject sorted_by_degree(const EquivariantObject& X);

}  // namespace crossact
