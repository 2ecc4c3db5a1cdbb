#pragma once

#include "crossact/cocycles.hpp"
#include "crossact/linalg.hpp"
#include "crossact/report.hpp"

#include <string>
#include <vector>

namespace crossact {

struct Term {
    int k;
    Cyclotomic c;
};

struct CoTerm {
    int j;
    int k;
    Cyclotomic c;
};

// Structure constants on a basis b_0..b_{dim-1}. For the bicrossed product the
// basis vector e_s#g has index s*|G| + g.
struct HopfAlgebra {
    int dim = 1;
    int nG = 1;
    int nGamma = 1;
    std::vector<std::string> basis{"e_e#e"};
    std::vector<std::vector<Term>> mult{{{0, Cyclotomic(1)}}};  // index i*dim + j
    std::vector<std::vector<CoTerm>> comult{{{0, 0, Cyclotomic(1)}}};
    std::vector<Cyclotomic> unit{Cyclotomic(1)};
    std::vector<Cyclotomic> counit{Cyclotomic(1)};
    Matrix antipode;  // column b holds S(b_b); empty until solved
    bool has_antipode = false;

    int index(Elem s, Elem g) const { return s * nG + g; }
    const std::vector<Term>& product(int i, int j) const { return mult[static_cast<std::size_t>(i) * dim + j]; }
};

HopfAlgebra build_bicrossed(const MatchedPair& mp, const CocyclePair& cp);

// Checks "associativity", "unit", "coassociativity", "counit", "Δ multiplicative",
// "Δ unital", "ε multiplicative", "ε unital".
Report verify_bialgebra(const HopfAlgebra& H);

// Throws NoAntipode or NotUnique.
Matrix solve_antipode(const HopfAlgebra& H);
// Solves (if needed) and stores the antipode.
HopfAlgebra with_antipode(HopfAlgebra H);
// "antipode left", "antipode right", "antipode anti-multiplicative", "antipode bijective".
Report verify_antipode(const HopfAlgebra& H, const Matrix& S);
// Bialgebra checks plus antipode checks; solves for S if H has none.
Report verify_hopf(const HopfAlgebra& H);

// k^Gamma (basis e_s) and kG (basis g) as bicrossed products over a trivial group.
HopfAlgebra function_algebra(const FiniteGroup& Gamma);
HopfAlgebra group_algebra(const FiniteGroup& G);

struct SeqMaps {
    Matrix i;  // dim H x |Gamma|
    Matrix p;  // |G| x dim H
};
SeqMaps seq_maps(const HopfAlgebra& H, const MatchedPair& mp);
// f: A -> B as a B.dim x A.dim matrix; checks "algebra map" and "coalgebra map".
Report verify_hopf_map(const HopfAlgebra& A, const HopfAlgebra& B, const Matrix& f);
Report verify_seq_maps(const HopfAlgebra& H, const MatchedPair& mp);

// Left module: action[i] is the matrix of b_i.
struct HModule {
    int dim = 0;
    std::vector<Matrix> action;
};

HModule module_validate(const HopfAlgebra& H, std::vector<Matrix> action);
HModule module_regular(const HopfAlgebra& H);
HModule module_trivial(const HopfAlgebra& H);
HModule module_tensor(const HopfAlgebra& H, const HModule& M, const HModule& N);
// Matrix of an arbitrary element given by coefficients.
Matrix module_act(const HModule& M, const std::vector<Cyclotomic>& x);

// R[i][j] is the coefficient of b_i (x) b_j.
struct RMatrix {
    Matrix R;
};

// braid: the braiding regular (x) regular -> regular (x) regular, dim^2 square,
// indices a*dim + b. R = flip(braid(1 (x) 1)).
RMatrix rmatrix_from_braiding(const HopfAlgebra& H, const Matrix& braid);
// "R invertible", "Δop R = R Δ", "(Δ⊗id)R = R13 R23", "(id⊗Δ)R = R13 R12".
Report verify_quasitriangular(const HopfAlgebra& H, const RMatrix& R);

nlohmann::json hopf_to_json(const HopfAlgebra& H);
HopfAlgebra hopf_from_json(const nlohmann::json& j);

}  // namespace crossact
