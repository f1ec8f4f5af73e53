#include "ranklevel/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace ranklevel {

EvalPoint EvalPoint::galois(int a) const {
    EvalPoint out{order, exponents};
    for (int& e : out.exponents) {
        long long m = (static_cast<long long>(e) * a) % order;
        if (m < 0) m += order;
        e = static_cast<int>(m);
    }
    return out;
}

CycloNum determinant(std::vector<std::vector<CycloNum>> m, int order) {
    const size_t n = m.size();
    CycloNum det = CycloNum::one(order);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return CycloNum::zero(order);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        CycloNum inv = m[col][col].inverse();
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            CycloNum f = m[row][col] * inv;
            for (size_t j = col; j < n; ++j) m[row][j] = m[row][j] - f * m[col][j];
        }
    }
    return det;
}

CycloNum q_eval(const YoungDiagram& d, const EvalPoint& pts) {
    const int r = d.rows();
    const int N = pts.order;
    if (pts.count() != r)
        throw std::invalid_argument("q_eval needs as many points as diagram rows");

    // Every entry is the single monomial zeta^(s_i (a_j + r - j)), so the
    // Leibniz expansion is a division-free walk over r! signed zeta powers;
    // far cheaper than elimination, whose pivots need cyclotomic inverses.
    // Elimination remains as the fallback for large r.
    if (r > 9) {
        std::vector<std::vector<CycloNum>> m(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 1; j <= r; ++j) {
                long long exp = static_cast<long long>(pts.exponents[static_cast<size_t>(i)]) *
                                (d.part(j) + r - j);
                m[static_cast<size_t>(i)].push_back(zeta_pow(N, exp));
            }
        return determinant(std::move(m), N);
    }

    auto field = CycloField::get(N);
    std::vector<int> emat(static_cast<size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 1; j <= r; ++j) {
            long long e = static_cast<long long>(pts.exponents[static_cast<size_t>(i)]) *
                          (d.part(j) + r - j) % N;
            emat[static_cast<size_t>(i) * r + j - 1] = static_cast<int>(e < 0 ? e + N : e);
        }

    std::vector<Rat> acc(static_cast<size_t>(field->degree()), Rat(0));
    std::vector<bool> used(static_cast<size_t>(r), false);
    std::function<void(int, int, int)> walk = [&](int row, int exp_sum, int sign) {
        if (row == r) {
            const auto& rep = field->zeta_power(exp_sum);
            for (size_t k = 0; k < acc.size(); ++k)
                acc[k] += sign > 0 ? rep[k] : -rep[k];
            return;
        }
        int parity = 1;
        for (int j = 0; j < r; ++j) {
            if (!used[static_cast<size_t>(j)]) {
                used[static_cast<size_t>(j)] = true;
                walk(row + 1, (exp_sum + emat[static_cast<size_t>(row) * r + j]) % N,
                     sign * parity);
                used[static_cast<size_t>(j)] = false;
                parity = -parity;
            }
        }
    };
    walk(0, 0, 1);
    return {field, std::move(acc)};
}

CycloNum vandermonde(const EvalPoint& pts) {
    return q_eval(YoungDiagram::empty(pts.count(), 1), pts);
}

namespace {

// Q and Vdm flip sign together under reordering, so the quotient can always
// be taken at the sorted tuple; the inverse Vandermonde is then shared
// across every diagram evaluated at the same subset.
const CycloNum& cached_vdm_inverse(const EvalPoint& sorted_pts) {
    static std::mutex mu;
    static std::map<std::pair<int, std::vector<int>>, CycloNum> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(sorted_pts.order, sorted_pts.exponents);
    auto it = memo.find(key);
    if (it == memo.end()) {
        CycloNum vdm = vandermonde(sorted_pts);
        if (vdm.is_zero())
            throw std::invalid_argument("schur_eval needs pairwise distinct points");
        it = memo.emplace(std::move(key), vdm.inverse()).first;
    }
    return it->second;
}

}  // namespace

CycloNum schur_eval(const YoungDiagram& d, const EvalPoint& pts) {
    EvalPoint sorted = pts;
    for (int& e : sorted.exponents) {
        e %= sorted.order;
        if (e < 0) e += sorted.order;
    }
    std::sort(sorted.exponents.begin(), sorted.exponents.end());
    if (std::adjacent_find(sorted.exponents.begin(), sorted.exponents.end()) !=
        sorted.exponents.end())
        throw std::invalid_argument("schur_eval needs pairwise distinct points");
    return q_eval(d, sorted) * cached_vdm_inverse(sorted);
}

std::vector<CycloNum> elementary_values(const EvalPoint& pts) {
    const int m = pts.count();
    std::vector<CycloNum> e(static_cast<size_t>(m) + 1, CycloNum::zero(pts.order));
    e[0] = CycloNum::one(pts.order);
    int used = 0;
    for (int s : pts.exponents) {
        CycloNum root = zeta_pow(pts.order, s);
        ++used;
        for (int k = used; k >= 1; --k)
            e[static_cast<size_t>(k)] = e[static_cast<size_t>(k)] +
                                        e[static_cast<size_t>(k - 1)] * root;
    }
    return e;
}

CycloNum jacobi_trudi_eval(const YoungDiagram& d, const std::vector<CycloNum>& e_values) {
    const int order = e_values.empty() ? 1 : e_values.front().order();
    const YoungDiagram t = d.transpose();
    const int n = t.rows();
    if (n == 0) return CycloNum::one(order);
    auto e_at = [&](long long k) {
        if (k < 0 || k >= static_cast<long long>(e_values.size()))
            return CycloNum::zero(order);
        return e_values[static_cast<size_t>(k)];
    };
    std::vector<std::vector<CycloNum>> m(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        m[static_cast<size_t>(i - 1)].reserve(static_cast<size_t>(n));
        for (int j = 1; j <= n; ++j)
            m[static_cast<size_t>(i - 1)].push_back(e_at(t.part(i) - i + j));
    }
    return determinant(std::move(m), order);
}

ReciprocityReport reciprocity_check(const YoungDiagram& d, const std::vector<int>& subset) {
    const int r = d.rows(), l = d.level();
    const int N = r + l;
    if (static_cast<int>(subset.size()) != r)
        throw std::invalid_argument("subset size must equal the diagram's rows");
    std::vector<bool> in(static_cast<size_t>(N), false);
    for (int s : subset) {
        int m = ((s % N) + N) % N;
        if (in[static_cast<size_t>(m)]) throw std::invalid_argument("subset has repeats");
        in[static_cast<size_t>(m)] = true;
    }
    std::vector<int> comp;
    for (int t = 0; t < N; ++t)
        if (!in[static_cast<size_t>(t)]) comp.push_back(t);

    CycloNum lhs = schur_eval(d, EvalPoint{N, subset});
    CycloNum rhs = schur_eval(d.transpose(), EvalPoint{N, comp});
    if (d.size() % 2 != 0) rhs = -rhs;
    return {lhs == rhs, lhs, rhs};
}

const CycloNum& SchurCache::value(const YoungDiagram& d, const EvalPoint& pts) {
    auto key = std::make_tuple(d.parts(), pts.exponents, pts.order);
    auto it = memo_.find(key);
    if (it == memo_.end())
        it = memo_.emplace(std::move(key), schur_eval(d, pts)).first;
    return it->second;
}

}  // namespace ranklevel
