#pragma once

#include <map>
#include <vector>

#include "ranklevel/cyclo.hpp"
#include "ranklevel/diagram.hpp"

namespace ranklevel {

/*
 * An evaluation tuple (zeta_N^s)_{s in S}.  Exponents must be pairwise
 * distinct mod N for bialternant evaluation (the Vandermonde vanishes
 * otherwise).
 */
struct EvalPoint {
    int order;
    std::vector<int> exponents;

    int count() const { return static_cast<int>(exponents.size()); }
    // Evaluation at zeta^(a*s) instead of zeta^s, for Galois checks.
    EvalPoint galois(int a) const;
};

// Determinant over Q(zeta_N) by Gaussian elimination with exact division.
CycloNum determinant(std::vector<std::vector<CycloNum>> m, int order);

// det( zeta^(s_i * (a_j + r - j)) ), the antisymmetrized power sum Q_lambda.
// Requires |pts| = rows(lambda).
CycloNum q_eval(const YoungDiagram& d, const EvalPoint& pts);

// Q_0, the Vandermonde determinant of the tuple.
CycloNum vandermonde(const EvalPoint& pts);

// Exact quotient Q_lambda / Vdm; requires pairwise distinct exponents and
// |pts| = rows(lambda).  Symmetric in the enumeration order of the points.
CycloNum schur_eval(const YoungDiagram& d, const EvalPoint& pts);

// Elementary symmetric values (e_0 = 1, e_1, ..., e_m) of the point tuple,
// read off the coefficients of prod (X + zeta^s).
std::vector<CycloNum> elementary_values(const EvalPoint& pts);

// Dual Jacobi-Trudi determinant det( e_{lambda^T_i - i + j} ), with e_k = 0
// outside the supplied range.  Equals schur_eval on an actual alphabet of
// size rows(lambda), and more generally evaluates s_lambda on the alphabet
// behind the e-values (vanishing when the alphabet is shorter than the
// diagram).
CycloNum jacobi_trudi_eval(const YoungDiagram& d, const std::vector<CycloNum>& e_values);

/*
 * The rank-level reciprocity identity at complementary subsets:
 *     S_lambda(zeta^S) = (-1)^|lambda| S_{lambda^T}(zeta^T).
 * Both exact values are reported for diagnosis on failure.
 */
struct ReciprocityReport {
    bool holds;
    CycloNum lhs;
    CycloNum rhs;  // already multiplied by the sign
};
ReciprocityReport reciprocity_check(const YoungDiagram& d, const std::vector<int>& subset);

/*
 * Memo for Schur values within one Verlinde/VI sum, keyed by (diagram parts,
 * subset, Galois twist).  The same subset recurs across the product over
 * marked points, and the same diagrams recur across subsets.
 */
class SchurCache {
  public:
    const CycloNum& value(const YoungDiagram& d, const EvalPoint& pts);

  private:
    std::map<std::tuple<std::vector<int>, std::vector<int>, int>, CycloNum> memo_;
};

}  // namespace ranklevel
