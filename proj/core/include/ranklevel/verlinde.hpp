#pragma once

#include <stdexcept>
#include <string>

#include "ranklevel/bigfloat.hpp"
#include "ranklevel/diagram.hpp"
#include "ranklevel/rational.hpp"
#include "ranklevel/schur.hpp"

namespace ranklevel {

/*
 * One Verlinde computation: rank r, level l, genus g, and a weight system of
 * diagrams in the l x r rectangle.  The total weight must be divisible by rl.
 */
struct VerlindeInstance {
    int r;
    int l;
    int g;
    WeightSystem weights;

    VerlindeInstance(int r_, int l_, int g_, WeightSystem w);
};

// Thrown when a sum that the theory guarantees to be a nonnegative integer
// fails to be one; carries a per-subset summand dump.
class IntegralityError : public std::runtime_error {
  public:
    explicit IntegralityError(const std::string& what) : std::runtime_error(what) {}
};

/*
 * The prefactor-free sum over r-subsets S of Z/(r+l)Z:
 *
 *   sum_S  cross(S)^(g-1) (prod_{s in S} zeta^s)^(-|w|/r) prod_p S_{w_p}(zeta^S)
 *
 * where cross(S) = prod_{s in S, t not in S} |2 sin pi (s-t)/(r+l)| is
 * computed exactly as (r+l)^r / (Vdm * conj Vdm), never through radicals.
 * This is the theta-twisted Verlinde number.  galois_a recomputes with
 * zeta -> zeta^a (a coprime to r+l); the result is the same rational.
 */
Rat verlinde_raw_sum(const VerlindeInstance& inst, int galois_a = 1);

// r^g/(r+l)^g prefactor: conformal blocks for fixed determinant.
Int verlinde_sl(const VerlindeInstance& inst);
// l^g/(r+l)^g prefactor: sections over the degree-zero moduli of varying
// determinant.
Int verlinde_gl(const VerlindeInstance& inst);
// No prefactor: the theta-twisted variant.
Int verlinde_twisted(const VerlindeInstance& inst);

/*
 * The two rank-level equalities at transposed weights:
 *   verlinde_sl(r, l, w)      = verlinde_gl(l, r, w^T)
 *   verlinde_twisted(r, l, w) = verlinde_twisted(l, r, w^T)
 * (the SL number pairs with the varying-determinant number on the other
 * side; the prefactors r^g/(r+l)^g then agree).
 */
struct RankLevelReport {
    Int sl_r_side;
    Int gl_l_side;
    Int twisted_r_side;
    Int twisted_l_side;
    bool untwisted_equal;
    bool twisted_equal;
    bool all_equal() const { return untwisted_equal && twisted_equal; }
};
RankLevelReport check_rank_level(const VerlindeInstance& inst);

// Independent 50-digit floating evaluation of the same sum (sines and
// complex exponentials, no cyclotomic arithmetic).  Used by --oracle and to
// derive frozen expected values.
BigFloat verlinde_oracle_raw_sum(const VerlindeInstance& inst);

enum class VerlindeVariant { sl, gl, twisted };
Int verlinde_value(const VerlindeInstance& inst, VerlindeVariant v);
BigFloat verlinde_oracle_value(const VerlindeInstance& inst, VerlindeVariant v);

namespace detail {
// Process-wide exact-value memo tables shared by the subset sums.  The
// returned references point into node-stable maps and stay valid.
const CycloNum& cached_schur(const YoungDiagram& d, const EvalPoint& pts);
const CycloNum& cached_cross(int order, const std::vector<int>& points);
const CycloNum& cached_cross_pow(int order, const std::vector<int>& points, long long e);
}  // namespace detail

}  // namespace ranklevel
