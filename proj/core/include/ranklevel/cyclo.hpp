#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ranklevel/rational.hpp"

namespace ranklevel {

// Phi_N as a vector of integer coefficients, constant term first.
// Computed by dividing X^N - 1 by Phi_d for all proper divisors d of N.
std::vector<Int> cyclotomic_polynomial(int order);

/*
 * Shared per-order data for Q(zeta_N): Phi_N and the reduced representation
 * of every power of zeta.  Contexts are cached process-wide; lookups are
 * thread-safe.
 */
class CycloField {
  public:
    static std::shared_ptr<const CycloField> get(int order);

    int order() const { return order_; }
    int degree() const { return degree_; }  // phi(N)
    const std::vector<Int>& phi_polynomial() const { return phi_; }
    const std::vector<Rat>& zeta_power(int e) const;  // e mod N, reduced coeffs

    // Reduce a coefficient vector of arbitrary length mod Phi_N in place.
    void reduce(std::vector<Rat>& coeffs) const;

  private:
    explicit CycloField(int order);
    int order_;
    int degree_;
    std::vector<Int> phi_;
    std::vector<std::vector<Rat>> zeta_pow_;  // zeta^e, e in [0, N)
};

/*
 * An element of Q(zeta_N): phi(N) exact rational coefficients, reduced
 * mod Phi_N.  The representation is canonical, so equality is coefficient
 * equality and rationality is the vanishing of all higher coefficients.
 */
class CycloNum {
  public:
    CycloNum() : CycloNum(1, Rat(0)) {}                    // zero of Q(zeta_1)
    CycloNum(int order, const Rat& rational_value);        // constant element
    CycloNum(std::shared_ptr<const CycloField> field, std::vector<Rat> coeffs);

    static CycloNum zero(int order) { return {order, Rat(0)}; }
    static CycloNum one(int order) { return {order, Rat(1)}; }

    int order() const { return field_->order(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const std::shared_ptr<const CycloField>& field() const { return field_; }

    bool is_zero() const;
    bool operator==(const CycloNum& o) const;

    CycloNum operator-() const;
    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

    // Extended Euclid against Phi_N; throws std::domain_error on zero.
    CycloNum inverse() const;

    // Image under zeta -> zeta^(N-1); a ring involution fixing Q.
    CycloNum conj() const;

    // Galois substitution zeta -> zeta^a; a must be coprime to N.
    CycloNum galois(int a) const;

    // Repeated squaring; negative exponents go through inverse().
    CycloNum pow(long long e) const;

    // The constant coefficient iff all others vanish.
    std::optional<Rat> as_rational() const;

    std::string to_string() const;  // "c0 + c1*z + ... (mod Phi_N)"

  private:
    std::shared_ptr<const CycloField> field_;
    std::vector<Rat> coeffs_;
};

// zeta_N^e, e reduced mod N.
CycloNum zeta_pow(int order, long long e);

}  // namespace ranklevel

#include "ranklevel/bigfloat.hpp"

namespace ranklevel {

// Floating-point embedding at e^(2 pi i / N), evaluated in ~100-digit binary
// floats.  Exists only as an independent oracle; the exact path never sees a
// floating number.  Accurate to at least the requested digits for digits <= 80.
Complex100 embed_numeric(const CycloNum& a, int digits);

}  // namespace ranklevel
