#include "ranklevel/verlinde.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "ranklevel/subsets.hpp"

namespace ranklevel {

namespace detail {

// Process-wide memo tables.  Schur values recur across subsets within one
// sum and across sums in the exhaustive suites; cross products are shared
// between complementary subsets.  Exact values, so sharing is sound.
struct SumCaches {
    std::mutex mu;
    SchurCache schur;
    std::map<std::pair<int, std::vector<int>>, CycloNum> cross;
    std::map<std::tuple<int, std::vector<int>, long long>, CycloNum> cross_pow;

    static SumCaches& get() {
        static SumCaches c;
        return c;
    }
};

const CycloNum& cached_schur(const YoungDiagram& d, const EvalPoint& pts) {
    auto& c = SumCaches::get();
    std::lock_guard<std::mutex> lock(c.mu);
    return c.schur.value(d, pts);
}

// prod_{s in S, t not in S} |zeta^s - zeta^t| as N^|S| / (Vdm conj Vdm), an
// exact element of Q(zeta_N) shared by the complementary subset.
const CycloNum& cached_cross(int order, const std::vector<int>& points) {
    std::vector<int> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> key = std::min(sorted, complement_in(order, sorted));
    auto& c = SumCaches::get();
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.cross.find({order, key});
    if (it == c.cross.end()) {
        CycloNum vdm = vandermonde(EvalPoint{order, points});
        CycloNum value = CycloNum(order, rat_pow(Rat(order), static_cast<long long>(points.size()))) *
                         (vdm * vdm.conj()).inverse();
        it = c.cross.emplace(std::make_pair(order, std::move(key)), std::move(value)).first;
    }
    return it->second;
}

const CycloNum& cached_cross_pow(int order, const std::vector<int>& points, long long e) {
    std::vector<int> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> key = std::min(sorted, complement_in(order, sorted));
    auto& c = SumCaches::get();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.cross_pow.find({order, key, e});
        if (it != c.cross_pow.end()) return it->second;
    }
    CycloNum value = cached_cross(order, points).pow(e);
    std::lock_guard<std::mutex> lock(c.mu);
    return c.cross_pow.emplace(std::make_tuple(order, std::move(key), e), std::move(value))
        .first->second;
}

}  // namespace detail

VerlindeInstance::VerlindeInstance(int r_, int l_, int g_, WeightSystem w)
    : r(r_), l(l_), g(g_), weights(std::move(w)) {
    if (r < 1 || l < 1) throw std::invalid_argument("rank and level must be positive");
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    if (weights.rows() != r || weights.level() != l)
        throw std::invalid_argument("weight system rectangle does not match (r, l)");
    if (weights.total_size() % (static_cast<long long>(r) * l) != 0)
        throw std::invalid_argument("total weight must be divisible by rl");
}

namespace {

struct SummandTrace {
    std::vector<int> subset;
    std::string value;
};

// The shared kernel of the three variants.  Summands are accumulated exactly
// in Q(zeta_N).
CycloNum raw_sum_cyclo(const VerlindeInstance& inst, int galois_a,
                       std::vector<SummandTrace>* trace) {
    const int r = inst.r, l = inst.l, N = r + l, g = inst.g;
    const long long w_over_r = inst.weights.total_size() / r;
    // |w| = 0 mod rl implies r | |w|.
    CycloNum total = CycloNum::zero(N);

    for_each_subset(N, r, [&](const std::vector<int>& subset) {
        EvalPoint pts = EvalPoint{N, subset}.galois(galois_a);
        CycloNum summand = detail::cached_cross_pow(N, pts.exponents, g - 1);

        long long sigma = 0;
        for (int s : subset) sigma += s;
        summand *= zeta_pow(N, -static_cast<long long>(galois_a) * w_over_r * sigma);

        for (const auto& d : inst.weights.diagrams())
            summand *= detail::cached_schur(d, pts);

        total += summand;
        if (trace) trace->push_back({subset, summand.to_string()});
    });
    return total;
}

Int finish(const VerlindeInstance& inst, const Rat& prefactor, const char* name) {
    CycloNum sum = raw_sum_cyclo(inst, 1, nullptr);
    auto rational = sum.as_rational();
    Rat value = rational ? prefactor * *rational : Rat(0);
    if (!rational || !is_integer(value) || value < 0) {
        std::vector<SummandTrace> trace;
        raw_sum_cyclo(inst, 1, &trace);
        std::ostringstream os;
        os << name << " value failed integrality: sum = " << sum.to_string()
           << ", prefactor = " << prefactor.str() << "\nper-subset summands:\n";
        for (const auto& t : trace) {
            os << "  {";
            for (size_t i = 0; i < t.subset.size(); ++i)
                os << (i ? "," : "") << t.subset[i];
            os << "}: " << t.value << "\n";
        }
        throw IntegralityError(os.str());
    }
    return numerator(value);
}

}  // namespace

Rat verlinde_raw_sum(const VerlindeInstance& inst, int galois_a) {
    CycloNum sum = raw_sum_cyclo(inst, galois_a, nullptr);
    auto rational = sum.as_rational();
    if (!rational)
        throw IntegralityError("Verlinde sum is not rational: " + sum.to_string());
    return *rational;
}

Int verlinde_sl(const VerlindeInstance& inst) {
    return finish(inst, rat_pow(Rat(inst.r, inst.r + inst.l), inst.g), "sl");
}

Int verlinde_gl(const VerlindeInstance& inst) {
    return finish(inst, rat_pow(Rat(inst.l, inst.r + inst.l), inst.g), "gl");
}

Int verlinde_twisted(const VerlindeInstance& inst) {
    return finish(inst, Rat(1), "twisted");
}

Int verlinde_value(const VerlindeInstance& inst, VerlindeVariant v) {
    switch (v) {
        case VerlindeVariant::sl: return verlinde_sl(inst);
        case VerlindeVariant::gl: return verlinde_gl(inst);
        default: return verlinde_twisted(inst);
    }
}

RankLevelReport check_rank_level(const VerlindeInstance& inst) {
    VerlindeInstance other(inst.l, inst.r, inst.g, inst.weights.transposed());
    RankLevelReport rep{verlinde_sl(inst), verlinde_gl(other), verlinde_twisted(inst),
                        verlinde_twisted(other), false, false};
    rep.untwisted_equal = rep.sl_r_side == rep.gl_l_side;
    rep.twisted_equal = rep.twisted_r_side == rep.twisted_l_side;
    return rep;
}

namespace {

Complex100 schur_float(const YoungDiagram& d, int N, const std::vector<int>& subset) {
    const int r = d.rows();
    auto build = [&](bool with_parts) {
        std::vector<std::vector<Complex100>> m(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 1; j <= r; ++j) {
                long long e = static_cast<long long>(subset[static_cast<size_t>(i)]) *
                              ((with_parts ? d.part(j) : 0) + r - j);
                m[static_cast<size_t>(i)].push_back(unit_root(N, e));
            }
        return m;
    };
    auto det = [](std::vector<std::vector<Complex100>> m) {
        Complex100 out{BigFloat(1), BigFloat(0)};
        const size_t n = m.size();
        for (size_t c = 0; c < n; ++c) {
            size_t piv = c;
            for (size_t i = c + 1; i < n; ++i)
                if (m[i][c].abs() > m[piv][c].abs()) piv = i;
            if (piv != c) {
                std::swap(m[piv], m[c]);
                out = out * Complex100{BigFloat(-1), BigFloat(0)};
            }
            out = out * m[c][c];
            for (size_t i = c + 1; i < n; ++i) {
                Complex100 f = m[i][c] / m[c][c];
                for (size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
            }
        }
        return out;
    };
    return det(build(true)) / det(build(false));
}

}  // namespace

BigFloat verlinde_oracle_raw_sum(const VerlindeInstance& inst) {
    const int r = inst.r, l = inst.l, N = r + l, g = inst.g;
    const long long w_over_r = inst.weights.total_size() / r;
    const BigFloat pi = boost::math::constants::pi<BigFloat>();
    Complex100 total{BigFloat(0), BigFloat(0)};
    for_each_subset(N, r, [&](const std::vector<int>& subset) {
        BigFloat sines(1);
        std::vector<int> comp = complement_in(N, subset);
        for (int s : subset)
            for (int t : comp)
                sines *= boost::multiprecision::abs(2 * sin(pi * BigFloat(s - t) / N));
        Complex100 summand = complex_pow({sines, BigFloat(0)}, g - 1);
        long long sigma = 0;
        for (int s : subset) sigma += s;
        summand *= unit_root(N, -(w_over_r * sigma) % N);
        for (const auto& d : inst.weights.diagrams()) summand *= schur_float(d, N, subset);
        total += summand;
    });
    return total.re;  // imaginary part cancels; the caller compares magnitudes
}

BigFloat verlinde_oracle_value(const VerlindeInstance& inst, VerlindeVariant v) {
    BigFloat raw = verlinde_oracle_raw_sum(inst);
    const int N = inst.r + inst.l;
    switch (v) {
        case VerlindeVariant::sl:
            return raw * pow(BigFloat(inst.r) / N, inst.g);
        case VerlindeVariant::gl:
            return raw * pow(BigFloat(inst.l) / N, inst.g);
        default:
            return raw;
    }
}

}  // namespace ranklevel
