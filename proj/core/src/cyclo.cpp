#include "ranklevel/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ranklevel {

namespace {

// Exact division of integer polynomials, used only where divisibility is
// guaranteed (X^N - 1 by products of cyclotomic factors).
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<Int> q(dn - dd + 1, Int(0));
    for (size_t k = dn - dd + 1; k-- > 0;) {
        Int c = num[k + dd] / den[dd];
        q[k] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    // X^order - 1
    std::vector<Int> p(static_cast<size_t>(order) + 1, Int(0));
    p.front() = -1;
    p.back() = 1;
    for (int d = 1; d < order; ++d)
        if (order % d == 0) p = poly_div_exact(std::move(p), cyclotomic_polynomial(d));
    return p;
}

CycloField::CycloField(int order) : order_(order) {
    phi_ = cyclotomic_polynomial(order);
    degree_ = static_cast<int>(phi_.size()) - 1;

    zeta_pow_.resize(static_cast<size_t>(order_));
    for (int e = 0; e < order_; ++e) {
        std::vector<Rat> v(static_cast<size_t>(e) + 1, Rat(0));
        v.back() = 1;
        reduce(v);
        zeta_pow_[static_cast<size_t>(e)] = std::move(v);
    }
}

void CycloField::reduce(std::vector<Rat>& coeffs) const {
    // Long division by the monic Phi_N.
    const size_t d = static_cast<size_t>(degree_);
    for (size_t m = coeffs.size(); m-- > d;) {
        Rat c = coeffs[m];
        if (c == 0) continue;
        coeffs[m] = 0;
        for (size_t j = 0; j < d; ++j) coeffs[m - d + j] -= c * Rat(phi_[j]);
    }
    coeffs.resize(d, Rat(0));
}

const std::vector<Rat>& CycloField::zeta_power(int e) const {
    int m = e % order_;
    if (m < 0) m += order_;
    return zeta_pow_[static_cast<size_t>(m)];
}

std::shared_ptr<const CycloField> CycloField::get(int order) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<const CycloField>(new CycloField(order));
    cache.emplace(order, f);
    return f;
}

CycloNum::CycloNum(int order, const Rat& rational_value)
    : field_(CycloField::get(order)),
      coeffs_(static_cast<size_t>(field_->degree()), Rat(0)) {
    coeffs_[0] = rational_value;
}

CycloNum::CycloNum(std::shared_ptr<const CycloField> field, std::vector<Rat> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    field_->reduce(coeffs_);
}

bool CycloNum::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNum::operator==(const CycloNum& o) const {
    return order() == o.order() && coeffs_ == o.coeffs_;
}

static void check_same_order(const CycloNum& a, const CycloNum& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("cyclotomic order mismatch");
}

CycloNum CycloNum::operator-() const {
    std::vector<Rat> c(coeffs_);
    for (Rat& x : c) x = -x;
    return {field_, std::move(c)};
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    check_same_order(*this, o);
    std::vector<Rat> c(coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return {field_, std::move(c)};
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
    check_same_order(*this, o);
    const size_t d = coeffs_.size();
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (o.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return {field_, std::move(prod)};
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    // Extended Euclid over Q[X]: u*a + v*Phi = gcd (a nonzero constant,
    // since Phi_N is irreducible over Q).
    using Poly = std::vector<Rat>;
    auto deg = [](const Poly& p) {
        for (size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<int>(i);
        return -1;
    };
    Poly r0(field_->phi_polynomial().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rat(field_->phi_polynomial()[i]);
    Poly r1 = coeffs_;
    Poly u0 = {Rat(0)}, u1 = {Rat(1)};  // coefficients of the input
    while (true) {
        int d1 = deg(r1);
        if (d1 <= 0) break;
        // r0 = q*r1 + rem
        Poly rem = r0, q(rem.size(), Rat(0));
        const Rat lead = r1[static_cast<size_t>(d1)];
        for (int k = deg(rem); k >= d1; k = deg(rem)) {
            Rat c = rem[static_cast<size_t>(k)] / lead;
            q[static_cast<size_t>(k - d1)] = c;
            for (int j = 0; j <= d1; ++j)
                rem[static_cast<size_t>(k - d1 + j)] -= c * r1[static_cast<size_t>(j)];
        }
        // (u0, u1) <- (u1, u0 - q*u1)
        Poly u2(std::max(u0.size(), q.size() + u1.size()), Rat(0));
        for (size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        }
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = std::move(u2);
    }
    int d1 = deg(r1);
    if (d1 != 0) throw std::domain_error("element not invertible mod Phi_N");
    const Rat g = r1[0];
    for (Rat& c : u1) c /= g;
    return {field_, std::move(u1)};
}

CycloNum CycloNum::conj() const { return galois(order() - 1 == 0 ? 1 : order() - 1); }

CycloNum CycloNum::galois(int a) const {
    const int N = order();
    if (std::gcd(((a % N) + N) % N, N) != 1)
        throw std::invalid_argument("galois exponent must be coprime to the order");
    std::vector<Rat> out(coeffs_.size(), Rat(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const auto& rep = field_->zeta_power(static_cast<int>((static_cast<long long>(a) * k) % N));
        for (size_t j = 0; j < out.size(); ++j) out[j] += coeffs_[k] * rep[j];
    }
    return {field_, std::move(out)};
}

CycloNum CycloNum::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum acc = CycloNum::one(order());
    CycloNum base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::optional<Rat> CycloNum::as_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

std::string CycloNum::to_string() const {
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += " + ";
        s += coeffs_[i].str();
        if (i == 1) s += "*z";
        if (i > 1) s += "*z^" + std::to_string(i);
    }
    s += " (mod Phi_" + std::to_string(order()) + ")";
    return s;
}

CycloNum zeta_pow(int order, long long e) {
    auto field = CycloField::get(order);
    long long m = e % order;
    if (m < 0) m += order;
    return {field, field->zeta_power(static_cast<int>(m))};
}

Complex100 complex_pow(Complex100 base, long long e) {
    bool inv = e < 0;
    if (inv) e = -e;
    Complex100 acc{BigFloat(1), BigFloat(0)};
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    if (inv) return Complex100{BigFloat(1), BigFloat(0)} / acc;
    return acc;
}

Complex100 embed_numeric(const CycloNum& a, int digits) {
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    Complex100 z = unit_root(a.order(), 1);
    Complex100 acc{BigFloat(0), BigFloat(0)};
    // Horner from the top coefficient.
    for (size_t i = a.coeffs().size(); i-- > 0;) {
        acc = acc * z;
        acc.re += to_bigfloat(a.coeffs()[i]);
    }
    return acc;
}

}  // namespace ranklevel
