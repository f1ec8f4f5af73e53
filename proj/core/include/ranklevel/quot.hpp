#pragma once

#include "ranklevel/bigfloat.hpp"
#include "ranklevel/diagram.hpp"
#include "ranklevel/rational.hpp"
#include "ranklevel/verlinde.hpp"

namespace ranklevel {

// ld + rl(n + 1 - g), the dimension of the Quot scheme of rank-r,
// twisted-degree-d quotients with n marked points on a genus-g curve.
long long quot_dimension(int r, int l, int g, int n, long long d);

/*
 * A top intersection of point classes a_{mu_p} on the Quot scheme.  The
 * mu_p live in the l x r rectangle and must satisfy
 * sum |mu_p| = quot_dimension(r, l, g, n, d).
 */
struct IntersectionInstance {
    int r;
    int l;
    int g;
    int n;
    long long d;
    WeightSystem mu;

    IntersectionInstance(int r_, int l_, int g_, int n_, long long d_, WeightSystem mu_);
};

/*
 * The Vafa-Intriligator sum over l-subsets T of Z/(r+l)Z:
 *
 *   (r+l)^(l(g-1)) sum_T prod_p a_{mu_p}(zeta^T)
 *                        (prod_{t in T} zeta^t prod_{t != u in T}(zeta^t - zeta^u))^(1-g)
 *
 * where a_mu(zeta^T) = R_{mu^T}(1, e_1, ..., e_l) is the Schur polynomial of
 * mu^T in the l points, via the dual Jacobi-Trudi determinant in the
 * elementary symmetric values of the tuple.  The (1-g) power is taken on the
 * whole product as one field element, by exact inversion when g > 1.
 */
Int intersection_number(const IntersectionInstance& inst, int galois_a = 1);

// Independent floating evaluation of the same sum.
BigFloat intersection_oracle(const IntersectionInstance& inst);

/*
 * The Quot-side/Verlinde-side equality: for an instance with r-side weights
 * lambda (|lambda| = 0 mod rl) and degree data satisfying the normalization
 * divisibilities, the intersection number against mu = lambda^* equals the
 * twisted Verlinde number of (rank l, level r, weights lambda^T).
 */
struct ViVerlindeReport {
    Int quot_side;
    Int verlinde_side;
    bool equal;
};
ViVerlindeReport vi_equals_verlinde(int r, int l, int g, int n, long long d,
                                    const WeightSystem& lambda);

// Littlewood-Richardson coefficient c_{lambda,mu}^{target} by the dual of
// iterated horizontal-strip (Pieri) expansion: s_mu is expanded through its
// Jacobi-Trudi determinant and each h-factor adds horizontal strips.
// Deliberately shares no code with the cyclotomic path.
Int lr_coefficient(const YoungDiagram& lambda, const YoungDiagram& mu,
                   const YoungDiagram& target);

// The genus-0 degree-0 three-point number <a_lambda a_mu a_nu> as an LR
// coefficient: lr_coefficient(lambda, mu, nu^*).  Requires
// |lambda|+|mu|+|nu| = rl.
Int lr_oracle_three_point(const YoungDiagram& lambda, const YoungDiagram& mu,
                          const YoungDiagram& nu);

// The same three-point number through the Vafa-Intriligator formula, by
// building the (g = 0, n = 3, d = -3r) instance of top degree zero.
Int vi_three_point(const YoungDiagram& lambda, const YoungDiagram& mu,
                   const YoungDiagram& nu);

}  // namespace ranklevel
