#include "ranklevel/quot.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <map>
#include <sstream>

#include "ranklevel/subsets.hpp"

namespace ranklevel {

long long quot_dimension(int r, int l, int g, int n, long long d) {
    return static_cast<long long>(l) * d +
           static_cast<long long>(r) * l * (n + 1 - g);
}

IntersectionInstance::IntersectionInstance(int r_, int l_, int g_, int n_, long long d_,
                                           WeightSystem mu_)
    : r(r_), l(l_), g(g_), n(n_), d(d_), mu(std::move(mu_)) {
    if (r < 1 || l < 1) throw std::invalid_argument("rank and level must be positive");
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    if (mu.points() != n) throw std::invalid_argument("weight count must equal n");
    if (mu.rows() != r || mu.level() != l)
        throw std::invalid_argument("mu system rectangle does not match (r, l)");
    if (mu.total_size() != quot_dimension(r, l, g, n, d))
        throw std::invalid_argument("sum |mu_p| must equal the Quot dimension");
}

namespace {

// a_mu evaluated at the points: the dual Jacobi-Trudi determinant of mu^T in
// the tuple's elementary symmetric values.  Memoized process-wide.
const CycloNum& cached_class(const YoungDiagram& mu, const EvalPoint& pts,
                      const std::vector<CycloNum>& e) {
    static std::mutex mu_lock;
    static std::map<std::tuple<int, std::vector<int>, std::vector<int>>, CycloNum> memo;
    auto key = std::make_tuple(pts.order, mu.parts(), pts.exponents);
    std::lock_guard<std::mutex> lock(mu_lock);
    auto it = memo.find(key);
    if (it == memo.end())
        it = memo.emplace(std::move(key), jacobi_trudi_eval(mu.transpose(), e)).first;
    return it->second;
}

CycloNum vi_sum_cyclo(const IntersectionInstance& inst, int galois_a) {
    const int r = inst.r, l = inst.l, N = r + l, g = inst.g;
    CycloNum total = CycloNum::zero(N);

    for_each_subset(N, l, [&](const std::vector<int>& subset) {
        EvalPoint pts = EvalPoint{N, subset}.galois(galois_a);
        std::vector<CycloNum> e = elementary_values(pts);

        // prod zeta^t * prod_{t != u} (zeta^t - zeta^u); ordered pairs, so the
        // square of the Vandermonde up to the sign (-1)^C(l,2).
        CycloNum vdm = vandermonde(pts);
        long long sigma = 0;
        for (int t : subset) sigma += t;
        CycloNum base = zeta_pow(N, galois_a * sigma) * vdm * vdm;
        if ((static_cast<long long>(l) * (l - 1) / 2) % 2 != 0) base = -base;

        CycloNum summand = base.pow(1 - g);
        for (const auto& mu_p : inst.mu.diagrams()) summand *= cached_class(mu_p, pts, e);
        total += summand;
    });
    return total;
}

}  // namespace

Int intersection_number(const IntersectionInstance& inst, int galois_a) {
    const int N = inst.r + inst.l;
    CycloNum sum = vi_sum_cyclo(inst, galois_a);
    Rat prefactor = rat_pow(Rat(N), static_cast<long long>(inst.l) * (inst.g - 1));
    auto rational = sum.as_rational();
    Rat value = rational ? prefactor * *rational : Rat(0);
    if (!rational || !is_integer(value) || value < 0) {
        std::ostringstream os;
        os << "Vafa-Intriligator value failed integrality: sum = "
           << (rational ? rational->str() : sum.to_string())
           << ", prefactor = " << prefactor.str();
        throw IntegralityError(os.str());
    }
    return numerator(value);
}

BigFloat intersection_oracle(const IntersectionInstance& inst) {
    const int r = inst.r, l = inst.l, N = r + l, g = inst.g;
    Complex100 total{BigFloat(0), BigFloat(0)};
    for_each_subset(N, l, [&](const std::vector<int>& subset) {
        // e-values of the point tuple
        std::vector<Complex100> e(static_cast<size_t>(l) + 1, Complex100{BigFloat(0), BigFloat(0)});
        e[0] = {BigFloat(1), BigFloat(0)};
        int used = 0;
        for (int t : subset) {
            Complex100 root = unit_root(N, t);
            ++used;
            for (int k = used; k >= 1; --k)
                e[static_cast<size_t>(k)] += e[static_cast<size_t>(k - 1)] * root;
        }
        Complex100 base{BigFloat(1), BigFloat(0)};
        for (int t : subset) base *= unit_root(N, t);
        for (int t : subset)
            for (int u : subset)
                if (t != u) base *= unit_root(N, t) - unit_root(N, u);
        Complex100 summand = complex_pow(base, 1 - g);
        for (const auto& mu_p : inst.mu.diagrams()) {
            // det( e_{mu_i - i + j} ), the class of mu_p^T in the points
            const int nrows = mu_p.rows();
            std::vector<std::vector<Complex100>> jt(static_cast<size_t>(nrows));
            for (int i = 1; i <= nrows; ++i)
                for (int j = 1; j <= nrows; ++j) {
                    long long k = mu_p.part(i) - i + j;
                    jt[static_cast<size_t>(i - 1)].push_back(
                        (k < 0 || k > l) ? Complex100{BigFloat(0), BigFloat(0)}
                                         : e[static_cast<size_t>(k)]);
                }
            Complex100 det{BigFloat(1), BigFloat(0)};
            const size_t nn = jt.size();
            for (size_t c = 0; c < nn; ++c) {
                size_t piv = c;
                for (size_t i2 = c + 1; i2 < nn; ++i2)
                    if (jt[i2][c].abs() > jt[piv][c].abs()) piv = i2;
                if (jt[piv][c].abs() == 0) {
                    det = {BigFloat(0), BigFloat(0)};
                    break;
                }
                if (piv != c) {
                    std::swap(jt[piv], jt[c]);
                    det = det * Complex100{BigFloat(-1), BigFloat(0)};
                }
                det = det * jt[c][c];
                for (size_t i2 = c + 1; i2 < nn; ++i2) {
                    Complex100 f = jt[i2][c] / jt[c][c];
                    for (size_t j2 = c; j2 < nn; ++j2) jt[i2][j2] = jt[i2][j2] - f * jt[c][j2];
                }
            }
            summand *= det;
        }
        total += summand;
    });
    BigFloat pref = pow(BigFloat(N), static_cast<int>(inst.l) * (inst.g - 1));
    return total.re * pref;
}

ViVerlindeReport vi_equals_verlinde(int r, int l, int g, int n, long long d,
                                    const WeightSystem& lambda) {
    IntersectionInstance inst(r, l, g, n, d, lambda.conjugated());
    Int quot_side = intersection_number(inst);
    VerlindeInstance ver(l, r, g, lambda.transposed());
    Int verlinde_side = verlinde_twisted(ver);
    return {quot_side, verlinde_side, quot_side == verlinde_side};
}

namespace {

// Partitions as plain nonincreasing part vectors (no rectangle bound); the
// Pieri intermediates may momentarily leave the box before pruning.
using Partition = std::vector<int>;

Partition trim(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool contained_in(const Partition& p, const Partition& box) {
    if (p.size() > box.size()) return false;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] > box[i]) return false;
    return true;
}

// All ways of adding a horizontal strip of size k to p, pruned to diagrams
// contained in the target.  Strip condition: p_{i-1} >= q_i >= p_i rowwise
// (no two added boxes share a column), which also keeps q nonincreasing.
void add_horizontal_strips(const Partition& p, int k, const Partition& target,
                           std::vector<Partition>& out) {
    const size_t nrows = target.size();
    Partition q(nrows, 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
        if (i == nrows) {
            if (remaining == 0) out.push_back(trim(q));
            return;
        }
        const int pi = i < p.size() ? p[i] : 0;
        int cap = target[i];
        if (i > 0) cap = std::min(cap, i - 1 < p.size() ? p[i - 1] : 0);
        cap = std::min(cap, pi + remaining);
        for (int qi = pi; qi <= cap; ++qi) {
            q[i] = qi;
            rec(i + 1, remaining - (qi - pi));
        }
        q[i] = 0;
    };
    rec(0, k);
}

}  // namespace

Int lr_coefficient(const YoungDiagram& lambda, const YoungDiagram& mu,
                   const YoungDiagram& target) {
    Partition lam = trim(lambda.parts());
    Partition m = trim(mu.parts());
    Partition tgt = trim(target.parts());
    if (lambda.size() + mu.size() != target.size()) return 0;
    if (!contained_in(lam, tgt)) return 0;

    const int nrows = static_cast<int>(m.size());
    if (nrows == 0) return lam == tgt ? 1 : 0;

    // s_mu = det( h_{mu_i - i + j} ); expand the determinant and apply each
    // h-factor as a horizontal-strip Pieri step, tracking multiplicities.
    std::vector<int> perm(static_cast<size_t>(nrows));
    for (int i = 0; i < nrows; ++i) perm[static_cast<size_t>(i)] = i;
    Int total = 0;
    do {
        int sign = 1;
        for (int i = 0; i < nrows; ++i)
            for (int j = i + 1; j < nrows; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
        std::vector<long long> strip;
        bool dead = false;
        for (int i = 0; i < nrows && !dead; ++i) {
            long long k = m[static_cast<size_t>(i)] - (i + 1) + (perm[static_cast<size_t>(i)] + 1);
            if (k < 0) dead = true;
            strip.push_back(k);
        }
        if (dead) continue;
        std::map<Partition, Int> state{{lam, Int(1)}};
        for (long long k : strip) {
            std::map<Partition, Int> next;
            for (const auto& [p, c] : state) {
                std::vector<Partition> outs;
                add_horizontal_strips(p, static_cast<int>(k), tgt, outs);
                for (auto& q : outs) next[q] += c;
            }
            state = std::move(next);
            if (state.empty()) break;
        }
        auto it = state.find(tgt);
        if (it != state.end()) total += sign * it->second;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Int lr_oracle_three_point(const YoungDiagram& lambda, const YoungDiagram& mu,
                          const YoungDiagram& nu) {
    return lr_coefficient(lambda, mu, nu.conjugate());
}

Int vi_three_point(const YoungDiagram& lambda, const YoungDiagram& mu,
                   const YoungDiagram& nu) {
    const int r = lambda.rows(), l = lambda.level();
    WeightSystem w(r, l, {lambda, mu, nu});
    if (w.total_size() != static_cast<long long>(r) * l)
        throw std::invalid_argument("three-point degree-zero numbers need total size rl");
    IntersectionInstance inst(r, l, /*g=*/0, /*n=*/3, /*d=*/-3LL * r, w);
    return intersection_number(inst);
}

}  // namespace ranklevel
