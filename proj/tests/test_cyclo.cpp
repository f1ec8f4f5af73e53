#include <random>

#include "doctest.h"
#include "ranklevel/cyclo.hpp"

using namespace ranklevel;

namespace {

CycloNum random_element(int order, std::mt19937_64& rng) {
    auto field = CycloField::get(order);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rat> c(static_cast<size_t>(field->degree()));
    for (Rat& x : c) x = Rat(num(rng), den(rng));
    return {field, std::move(c)};
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(7).size() == 7);
}

TEST_CASE("zeta powers reduce") {
    CHECK(zeta_pow(3, 2) == -(CycloNum::one(3) + zeta_pow(3, 1)));
    CHECK(zeta_pow(5, 0) == CycloNum::one(5));
    CHECK(zeta_pow(4, 3) == -zeta_pow(4, 1));
    CHECK(zeta_pow(3, -1) == zeta_pow(3, 2));
}

TEST_CASE("ring operations") {
    CycloNum z = zeta_pow(3, 1);
    CHECK((CycloNum::one(3) + z + z * z).is_zero());
    CycloNum a = CycloNum(3, Rat(5, 7)) + z;
    CHECK(a * CycloNum::one(3) == a);
    CHECK((z - z * z) * (z * z - z) == CycloNum(3, Rat(3)));
    CHECK_THROWS(void(zeta_pow(3, 1) + zeta_pow(4, 1)));
}

TEST_CASE("inverse") {
    CHECK(zeta_pow(3, 1).inverse() == -(CycloNum::one(3) + zeta_pow(3, 1)));
    CHECK(CycloNum::one(5).inverse() == CycloNum::one(5));
    CHECK(CycloNum(5, Rat(2)).inverse() == CycloNum(5, Rat(1, 2)));
    CHECK_THROWS(CycloNum::zero(3).inverse());
}

TEST_CASE("conjugation") {
    CycloNum z = zeta_pow(5, 1);
    CHECK(z.conj() == zeta_pow(5, 4));
    CHECK(CycloNum(5, Rat(9, 2)).conj() == CycloNum(5, Rat(9, 2)));
    CHECK((CycloNum::one(3) + zeta_pow(3, 1)).conj() == -zeta_pow(3, 1));
}

TEST_CASE("powers") {
    for (int N : {2, 3, 5, 8}) CHECK(zeta_pow(N, 1).pow(N) == CycloNum::one(N));
    CHECK(zeta_pow(7, 3).pow(0) == CycloNum::one(7));
    CycloNum s = zeta_pow(3, 1) - zeta_pow(3, 2);
    CHECK(s.pow(2) == CycloNum(3, Rat(-3)));
    CHECK(s.pow(-2) == CycloNum(3, Rat(-1, 3)));
    CHECK_THROWS(CycloNum::zero(3).pow(-1));
}

TEST_CASE("rationality detection") {
    CycloNum z = zeta_pow(3, 1);
    CHECK(*(CycloNum::one(3) + z + z * z).as_rational() == 0);
    CHECK(!z.as_rational());
    CHECK(*CycloNum(3, Rat(7, 2)).as_rational() == Rat(7, 2));
}

TEST_CASE("field axioms on random elements, N <= 12") {
    std::mt19937_64 rng(7);
    for (int N = 1; N <= 12; ++N) {
        for (int t = 0; t < 8; ++t) {
            CycloNum a = random_element(N, rng), b = random_element(N, rng),
                     c = random_element(N, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == CycloNum::one(N));
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a + b).conj() == a.conj() + b.conj());
            // norm is fixed by conj
            CycloNum n = a * a.conj();
            CHECK(n.conj() == n);
        }
    }
}

TEST_CASE("|zeta^s - zeta^t|^2 matches 4 sin^2") {
    const BigFloat pi = boost::math::constants::pi<BigFloat>();
    for (int N : {3, 4, 5, 6, 8}) {
        for (int s = 0; s < N; ++s)
            for (int t = 0; t < s; ++t) {
                CycloNum diff = zeta_pow(N, s) - zeta_pow(N, t);
                CycloNum norm = diff * diff.conj();
                CHECK(norm.conj() == norm);  // real
                // rational exactly when the real subfield is Q
                auto rational = norm.as_rational();
                if (N <= 4 || N == 6) {
                    REQUIRE(rational);
                    CHECK(*rational > 0);
                }
                BigFloat expect = 4 * pow(sin(pi * (s - t) / N), 2);
                BigFloat got = embed_numeric(norm, 40).re;
                CHECK(abs(got - expect) < BigFloat("1e-40"));
                CHECK(abs(embed_numeric(norm, 40).im) < BigFloat("1e-40"));
            }
    }
}

TEST_CASE("numeric embedding") {
    Complex100 i4 = embed_numeric(zeta_pow(4, 1), 30);
    CHECK(abs(i4.re) < BigFloat("1e-60"));
    CHECK(abs(i4.im - 1) < BigFloat("1e-60"));

    Complex100 e43 = embed_numeric(-(CycloNum::one(3) + zeta_pow(3, 1)), 30);
    Complex100 expect = unit_root(3, 2);
    CHECK((e43 - expect).abs() < BigFloat("1e-60"));

    Complex100 three = embed_numeric(CycloNum(5, Rat(3)), 30);
    CHECK(abs(three.re - 3) < BigFloat("1e-60"));
    CHECK_THROWS(embed_numeric(CycloNum::one(3), 0));
}

TEST_CASE("embedding tracks exact arithmetic to 1e-30") {
    std::mt19937_64 rng(11);
    for (int N : {5, 7, 9, 12}) {
        CycloNum a = random_element(N, rng), b = random_element(N, rng);
        CycloNum exact = a * b + a.conj().pow(3);
        Complex100 via_exact = embed_numeric(exact, 50);
        Complex100 ea = embed_numeric(a, 50), eb = embed_numeric(b, 50);
        Complex100 conj_a{ea.re, -ea.im};
        Complex100 direct = ea * eb + complex_pow(conj_a, 3);
        BigFloat rel = (via_exact - direct).abs() / (direct.abs() + 1);
        CHECK(rel < BigFloat("1e-30"));
    }
}
