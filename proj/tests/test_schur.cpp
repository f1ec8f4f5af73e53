#include <algorithm>
#include <random>

#include "doctest.h"
#include "ranklevel/schur.hpp"
#include "ranklevel/subsets.hpp"

using namespace ranklevel;

TEST_CASE("q_eval basics") {
    // lambda = 0 gives the Vandermonde
    EvalPoint pts{5, {0, 2, 3}};
    CHECK(q_eval(YoungDiagram::empty(3, 2), pts) == vandermonde(pts));
    // 1x1 determinant
    CHECK(q_eval(YoungDiagram({2}, 1, 3), EvalPoint{5, {3}}) == zeta_pow(5, 6));
    // repeated points kill the determinant
    CHECK(q_eval(YoungDiagram::empty(2, 2), EvalPoint{4, {1, 1}}).is_zero());
    CHECK_THROWS(q_eval(YoungDiagram::empty(3, 2), EvalPoint{5, {0, 1}}));
}

TEST_CASE("schur_eval basics") {
    EvalPoint pts{3, {0, 1}};
    CHECK(schur_eval(YoungDiagram::empty(2, 1), pts) == CycloNum::one(3));
    // degree-1 Schur is e_1, top exterior is the product
    CHECK(schur_eval(YoungDiagram({1, 0}, 2, 1), pts) == CycloNum::one(3) + zeta_pow(3, 1));
    CHECK(schur_eval(YoungDiagram({1, 1}, 2, 1), pts) == zeta_pow(3, 1));
    CHECK_THROWS(schur_eval(YoungDiagram::empty(2, 1), EvalPoint{3, {1, 1}}));
}

TEST_CASE("schur_eval ignores enumeration order") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        std::uniform_int_distribution<int> pickN(3, 9);
        int N = pickN(rng);
        std::uniform_int_distribution<int> pickr(1, std::min(4, N - 1));
        int r = pickr(rng);
        std::vector<int> exps(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) exps[static_cast<size_t>(i)] = i;
        std::shuffle(exps.begin(), exps.end(), rng);
        exps.resize(static_cast<size_t>(r));
        auto all = all_diagrams(r, N - r);
        std::uniform_int_distribution<size_t> pickd(0, all.size() - 1);
        const YoungDiagram& d = all[pickd(rng)];

        CycloNum base = schur_eval(d, EvalPoint{N, exps});
        std::vector<int> shuffled = exps;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(schur_eval(d, EvalPoint{N, shuffled}) == base);
        CHECK(!vandermonde(EvalPoint{N, exps}).is_zero());
    }
}

TEST_CASE("jacobi_trudi special shapes") {
    EvalPoint pts{7, {1, 2, 4}};
    auto e = elementary_values(pts);
    CHECK(jacobi_trudi_eval(YoungDiagram::empty(3, 3), e) == CycloNum::one(7));
    // a single column of height k is e_k
    for (int k = 1; k <= 3; ++k) {
        std::vector<int> col(static_cast<size_t>(k), 1);
        CHECK(jacobi_trudi_eval(YoungDiagram(col, 3, 3), e) == e[static_cast<size_t>(k)]);
    }
}

TEST_CASE("jacobi_trudi agrees with the bialternant on 100 random pairs") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<int> pickN(2, 8);
        int N = pickN(rng);
        std::uniform_int_distribution<int> pickr(1, N - 1);
        int r = pickr(rng);
        std::vector<int> exps;
        for (int i = 0; i < N; ++i) exps.push_back(i);
        std::shuffle(exps.begin(), exps.end(), rng);
        exps.resize(static_cast<size_t>(r));
        auto all = all_diagrams(r, N - r);
        std::uniform_int_distribution<size_t> pickd(0, all.size() - 1);
        const YoungDiagram& d = all[pickd(rng)];
        EvalPoint pts{N, exps};
        CHECK(jacobi_trudi_eval(d, elementary_values(pts)) == schur_eval(d, pts));
    }
}

TEST_CASE("reciprocity at N = 3") {
    auto rep = reciprocity_check(YoungDiagram({1, 0}, 2, 1), {0, 1});
    CHECK(rep.holds);
    CHECK(rep.lhs == CycloNum::one(3) + zeta_pow(3, 1));
    auto zero = reciprocity_check(YoungDiagram::empty(2, 1), {0, 2});
    CHECK(zero.holds);
    CHECK(zero.lhs == CycloNum::one(3));
}

TEST_CASE("reciprocity exhaustive N <= 5") {
    for (int N = 2; N <= 5; ++N)
        for (int r = 1; r < N; ++r) {
            auto diagrams = all_diagrams(r, N - r);
            for_each_subset(N, r, [&](const std::vector<int>& S) {
                for (const auto& d : diagrams) CHECK(reciprocity_check(d, S).holds);
            });
        }
}

TEST_CASE("leibniz q_eval agrees with gaussian elimination") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 25; ++t) {
        std::uniform_int_distribution<int> pickN(2, 9);
        const int N = pickN(rng);
        std::uniform_int_distribution<int> pickr(1, N - 1);
        const int r = pickr(rng);
        std::uniform_int_distribution<int> exp(0, N - 1);
        std::vector<int> exps(static_cast<size_t>(r));
        for (int& e : exps) e = exp(rng);  // repeats allowed: both must be 0 then
        auto all = all_diagrams(r, N - r);
        std::uniform_int_distribution<size_t> pickd(0, all.size() - 1);
        const YoungDiagram& d = all[pickd(rng)];

        std::vector<std::vector<CycloNum>> m(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 1; j <= r; ++j)
                m[static_cast<size_t>(i)].push_back(zeta_pow(
                    N, static_cast<long long>(exps[static_cast<size_t>(i)]) *
                           (d.part(j) + r - j)));
        CHECK(determinant(std::move(m), N) == q_eval(d, EvalPoint{N, exps}));
    }
}

TEST_CASE("schur cache returns identical values") {
    SchurCache cache;
    YoungDiagram d({2, 1}, 2, 3);
    EvalPoint pts{5, {1, 3}};
    const CycloNum& v1 = cache.value(d, pts);
    CHECK(v1 == schur_eval(d, pts));
    CHECK(cache.value(d, pts) == v1);
}
