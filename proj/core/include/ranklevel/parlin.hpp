#pragma once

#include <cstdint>
#include <vector>

#include "ranklevel/diagram.hpp"
#include "ranklevel/matrix.hpp"

namespace ranklevel {

/*
 * A finite-dimensional rational vector space with a decreasing filtration
 * whose dimensions are the parts of type^T.  Subspaces are kept in canonical
 * column-span form, so equality of structures is matrix equality.  Entries
 * with equal dimension must be equal subspaces.
 */
struct ParabolicSpace {
    int dim;                         // ambient dimension
    YoungDiagram type;               // filtration dims are transpose(type)'s parts
    std::vector<QMatrix> filtration; // decreasing, one entry per level of type

    // The filtration member of the given dimension; dimensions realized by
    // the type are exactly the parts of type^T (and 0, the zero subspace).
    QMatrix subspace_of_dim(int k) const;

    void validate() const;  // ranks, nesting, canonical form
};

// Coordinate filtration by the first transpose(lambda) coordinates.
ParabolicSpace standard_space(int rank, const YoungDiagram& lambda);

// General-position filtration, deterministic in the seed: a random
// change of basis (small integer entries, redrawn until invertible) applied
// to the standard space.
ParabolicSpace random_space(int rank, const YoungDiagram& lambda, std::uint64_t seed);

// Dual space with the annihilator filtration (E_{l+1-i})^perp, of conjugate
// type; applying it twice recovers the original subspaces exactly.
ParabolicSpace dual_space(const ParabolicSpace& E);

// The distinguished subspace G = sum over corners of E_i (x) F_j inside
// E (x) F, for E of type lambda and F of type lambda^T.  dim G = |lambda|
// for standard and general-position flags.
QMatrix tensor_subspace(const ParabolicSpace& E, const ParabolicSpace& F);

// The space of filtered maps E -> F for E of type lambda and F of type
// lambda^{T*}: at every corner (row alpha, column beta) of lambda, the
// dimension-alpha subspace of E must land in the dimension-(l - beta)
// subspace of F.  Returned as a canonical subspace of Hom(E, F) with maps
// vectorized column-major (entry (beta, alpha) at index (alpha-1) dim_F +
// beta - 1).  dim = |lambda^*| in general position.
QMatrix parabolic_hom(const ParabolicSpace& E, const ParabolicSpace& F);

// Verifies parabolic_hom(E, F) is exactly the annihilator in Hom(E, F) of
// tensor_subspace(E, dual_space(F)) in E (x) F^dual.
bool annihilator_check(const ParabolicSpace& E, const ParabolicSpace& F);

/*
 * The string filtration G_k = Hom(F/F_low, E_high) of Hom(F, E) for full
 * increasing flags E (dim r) and F (dim l), k = 0..r+l, where with the
 * string x of lambda:  k_R(k) = #{ i > k : x_i = R } counts the E-side and
 * k_L(k) = #{ j >= k : x_j = L } the F-side, so dim G_k = k_L(k) * k_R(k),
 * decreasing from rl to 0.  Flags are given as invertible matrices whose
 * first i columns span the i-th member.
 */
struct StringFiltration {
    std::vector<QMatrix> spaces;  // index k = 0..r+l, canonical
    std::vector<int> dims;
    std::vector<int> k_L;
    std::vector<int> k_R;
};
StringFiltration string_filtration(const QMatrix& E_flag, const QMatrix& F_flag,
                                   const YoungDiagram& lambda);

// Dimension of the tangent space to the Schubert cell at its torus-fixed
// point, computed as dim parabolic_hom of the fixed-point data; equals
// rl - |lambda|.
int schubert_tangent_dim(const YoungDiagram& lambda);

}  // namespace ranklevel
