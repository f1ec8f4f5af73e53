#include "ranklevel/duality.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "ranklevel/verlinde.hpp"

namespace ranklevel {

namespace {

long long mod_rl(const DualityInstance& inst, long long total_size) {
    const long long rl = static_cast<long long>(inst.r) * inst.l;
    long long v = (total_size + inst.l * inst.d + inst.r * inst.dd) % rl;
    return v < 0 ? v + rl : v;
}

}  // namespace

AdmissibilityReport admissible(const DualityInstance& inst) {
    const long long rl = static_cast<long long>(inst.r) * inst.l;
    const long long w = inst.weights.total_size();
    AdmissibilityReport rep;
    rep.residue = mod_rl(inst, w);
    rep.admissible = rep.residue == 0;
    rep.delta = Rat(w, rl);
    if (rep.admissible)
        rep.l_degree = inst.g - 1 - (inst.l * inst.d + inst.r * inst.dd + w) / rl;
    return rep;
}

Rat parabolic_degree(long long deg, const WeightSystem& weights, int level) {
    return Rat(deg) + Rat(weights.total_size(), level);
}

Rat parabolic_slope(long long deg, const WeightSystem& weights, int rank, int level) {
    return parabolic_degree(deg, weights, level) / rank;
}

DualityInstance apply_duality(const DualityInstance& inst) {
    return {inst.r, inst.l, inst.g, -inst.d, -inst.dd, inst.weights.conjugated()};
}

DualityInstance apply_rotation(const DualityInstance& inst, int point, RotationSide side,
                               bool inverse) {
    DualityInstance out = inst;
    const YoungDiagram& cur = inst.weights.at(point);
    if (side == RotationSide::r_side) {
        out.weights.replace(point, inverse ? rotated_inverse(cur) : rotated(cur));
        out.d += inverse ? 1 : -1;
        return out;
    }
    // l-side: rotate the transpose, i.e. add or remove a full column.
    std::vector<int> p = cur.parts();
    if (!inverse) {
        if (cur.part(1) >= inst.l)
            throw std::invalid_argument("l-side rotation requires a non-full first row");
        for (int& a : p) ++a;
        out.dd -= 1;
    } else {
        if (cur.part(cur.rows()) < 1)
            throw std::invalid_argument("inverse l-side rotation requires all parts positive");
        for (int& a : p) --a;
        out.dd += 1;
    }
    out.weights.replace(point, YoungDiagram(std::move(p), inst.r, inst.l));
    return out;
}

DualityInstance replay(const NormalizationPlan& plan, DualityInstance inst) {
    if (inst.points() != plan.original_points)
        throw std::invalid_argument("plan was recorded for a different instance");
    for (int i = 0; i < plan.added_points; ++i) {
        inst.weights.push_back(YoungDiagram::empty(inst.r, inst.l));
        const int p = plan.original_points + i;
        const long long rr = plan.r_rotations[static_cast<size_t>(i)];
        for (long long k = 0; k < std::abs(rr); ++k)
            inst = apply_rotation(inst, p, RotationSide::r_side, rr < 0);
        const long long lr = plan.l_rotations[static_cast<size_t>(i)];
        for (long long k = 0; k < std::abs(lr); ++k)
            inst = apply_rotation(inst, p, RotationSide::l_side, lr < 0);
    }
    inst.d += static_cast<long long>(inst.r) * plan.twist;
    return inst;
}

std::pair<DualityInstance, NormalizationPlan> normalize(const DualityInstance& inst,
                                                        const NormalizeOptions& opts) {
    if (!admissible(inst).admissible)
        throw std::invalid_argument("normalize requires an admissible instance");

    const int r = inst.r, l = inst.l;
    const long long rl = static_cast<long long>(r) * l;
    NormalizationPlan plan;
    plan.original_points = inst.points();
    DualityInstance cur = inst;

    auto add_point = [&](long long r_rot, long long l_rot) {
        cur.weights.push_back(YoungDiagram::empty(r, l));
        const int p = cur.points() - 1;
        for (long long k = 0; k < std::abs(r_rot); ++k)
            cur = apply_rotation(cur, p, RotationSide::r_side, r_rot < 0);
        for (long long k = 0; k < std::abs(l_rot); ++k)
            cur = apply_rotation(cur, p, RotationSide::l_side, l_rot < 0);
        ++plan.added_points;
        plan.r_rotations.push_back(r_rot);
        plan.l_rotations.push_back(l_rot);
    };

    // Zero the l-side degree.  Forward column rotations drop dd by one each,
    // up to l per fresh point; for dd < 0 a fresh point does r row rotations
    // to the full rectangle and l inverse column rotations back to empty,
    // raising dd by l at the cost of r on d.
    while (cur.dd < 0) add_point(r, -l);
    while (cur.dd > 0) add_point(0, std::min<long long>(cur.dd, l));

    // d' = 0 mod r by row rotations on one fresh point.
    const long long rho = ((cur.d % r) + r) % r;
    if (rho != 0) add_point(rho, 0);

    // Tensor twist pinning |nu^*| = n' rl + l d' + rl(1 - g), i.e.
    // F := |nu| + l d' + rl(1 - g) = 0.  F is divisible by rl here.
    const long long F = cur.weights.total_size() + l * cur.d + rl * (1 - inst.g);
    plan.twist = -F / rl;
    cur.d += r * plan.twist;

    // Inert empty points: each adds r to d' + r n' and rl to the Quot
    // dimension, leaving every other postcondition alone.
    auto satisfied = [&]() {
        const long long v = cur.d + static_cast<long long>(r) * cur.points();
        if (v <= 0 || v < opts.min_drn) return false;
        if (opts.vi_divisibility && v % (r + l) != 0) return false;
        const long long dim = l * cur.d + rl * (cur.points() + 1 - inst.g);
        return dim >= 0;
    };
    while (!satisfied()) add_point(0, 0);

    // Postconditions (the three normalization bullets).
    const long long v = cur.d + static_cast<long long>(r) * cur.points();
    const long long conj_size =
        static_cast<long long>(cur.points()) * rl - cur.weights.total_size();
    if (cur.dd != 0 || v <= 0 || v % r != 0 ||
        conj_size != static_cast<long long>(cur.points()) * rl + l * cur.d + rl * (1 - inst.g) ||
        cur.weights.total_size() % rl != 0)
        throw std::logic_error("normalization postconditions violated");

    return {cur, plan};
}

VerdictReport dimension_verdict(const DualityInstance& inst) {
    auto rep = admissible(inst);
    if (!rep.admissible)
        throw std::invalid_argument("dimension_verdict requires |w| + ld + r dd = 0 mod rl");
    auto [norm, plan] = normalize(inst);
    VerlindeInstance r_side(norm.r, norm.l, norm.g, norm.weights);
    VerlindeInstance l_side(norm.l, norm.r, norm.g, norm.weights.transposed());
    VerdictReport out{verlinde_twisted(r_side), verlinde_twisted(l_side), false,
                      std::move(norm), std::move(plan)};
    out.equal = out.r_side == out.l_side;
    return out;
}

DualityInstance random_admissible(std::mt19937_64& rng, int r, int l, int g_max, int n_max,
                                  long long deg_bound) {
    std::uniform_int_distribution<int> genus(0, g_max), npts(0, n_max);
    std::uniform_int_distribution<long long> deg(-deg_bound, deg_bound);
    std::uniform_int_distribution<int> part(0, l);
    while (true) {
        DualityInstance inst{r, l, genus(rng), deg(rng), deg(rng), WeightSystem(r, l)};
        const int n = npts(rng);
        for (int p = 0; p < n; ++p) {
            std::vector<int> parts(static_cast<size_t>(r));
            for (int& a : parts) a = part(rng);
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            inst.weights.push_back(YoungDiagram(std::move(parts), r, l));
        }
        if (admissible(inst).admissible) return inst;
    }
}

}  // namespace ranklevel
