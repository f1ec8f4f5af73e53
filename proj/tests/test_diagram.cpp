#include <algorithm>
#include <set>

#include "doctest.h"
#include "ranklevel/diagram.hpp"
#include "ranklevel/subsets.hpp"

using namespace ranklevel;

TEST_CASE("diagram construction validates") {
    YoungDiagram d({2, 1}, 2, 3);
    CHECK(d.parts() == std::vector<int>{2, 1});
    CHECK(YoungDiagram({}, 3, 2).parts() == std::vector<int>{0, 0, 0});
    CHECK_THROWS(YoungDiagram({3, 1}, 2, 2));   // part exceeds level
    CHECK_THROWS(YoungDiagram({1, 2}, 2, 2));   // increasing
    CHECK_THROWS(YoungDiagram({-1}, 1, 2));     // negative
    CHECK_THROWS(YoungDiagram({1, 1, 1}, 2, 2));  // too many parts
}

TEST_CASE("transpose basics") {
    CHECK(YoungDiagram({2, 1}, 2, 3).transpose() == YoungDiagram({2, 1, 0}, 3, 2));
    CHECK(YoungDiagram::empty(3, 2).transpose() == YoungDiagram::empty(2, 3));
    CHECK(YoungDiagram::full(3, 2).transpose() == YoungDiagram::full(2, 3));
}

TEST_CASE("conjugate basics") {
    CHECK(YoungDiagram({2, 1}, 2, 3).conjugate() == YoungDiagram({2, 1}, 2, 3));
    CHECK(YoungDiagram::full(2, 3).conjugate() == YoungDiagram::empty(2, 3));
    CHECK(YoungDiagram::empty(2, 3).conjugate() == YoungDiagram::full(2, 3));
}

TEST_CASE("index sets") {
    auto [I, J] = index_sets(YoungDiagram({2, 1}, 2, 2));
    CHECK(I == std::vector<int>{1, 3});
    CHECK(J == std::vector<int>{2, 4});

    auto empty = index_sets(YoungDiagram::empty(3, 2));
    CHECK(empty.I == std::vector<int>{3, 4, 5});
    auto full = index_sets(YoungDiagram::full(3, 2));
    CHECK(full.I == std::vector<int>{1, 2, 3});
}

TEST_CASE("strings") {
    CHECK(string_of(YoungDiagram({1, 0}, 2, 1)).symbols == "RLR");
    CHECK(string_of(YoungDiagram::empty(2, 3)).symbols == "RRLLL");
    CHECK(string_of(YoungDiagram::full(2, 3)).symbols == "LLLRR");
}

TEST_CASE("rotation") {
    CHECK(rotated(YoungDiagram::empty(2, 3)) == YoungDiagram({3, 0}, 2, 3));
    CHECK(rotated(YoungDiagram({1, 0}, 2, 1)) == YoungDiagram({1, 1}, 2, 1));
    CHECK_THROWS(rotated(YoungDiagram({1, 1}, 2, 1)));

    // iterating from a single full row fills one column per step
    YoungDiagram d({3, 0, 0}, 3, 3);
    long long size = d.size();
    for (int k = 0; k < 2; ++k) {
        YoungDiagram next = rotated(d);
        CHECK(next.size() == size + 3);
        CHECK(rotated_inverse(next) == d);
        d = next;
        size = d.size();
    }
    CHECK(d == YoungDiagram::full(3, 3));
}

TEST_CASE("tilde block assembly") {
    CHECK(tilde(YoungDiagram({1}, 1, 1)) == YoungDiagram({1, 1}, 2, 2));
    // full rectangle: both blocks contribute constant-l rows
    CHECK(tilde(YoungDiagram::full(2, 3)) == YoungDiagram({3, 3, 3, 3}, 4, 6));
    // empty: bottom block is the ones-block next to the full conjugate
    CHECK(tilde(YoungDiagram::empty(2, 3)) == YoungDiagram({6, 6, 0, 0}, 4, 6));
    // size is 2rl for every diagram
    for (const auto& d : all_diagrams(2, 3)) CHECK(tilde(d).size() == 2 * 2 * 3);
}

TEST_CASE("involutions and sizes, exhaustive r,l <= 4") {
    for (int r = 1; r <= 4; ++r)
        for (int l = 1; l <= 4; ++l)
            for (const auto& d : all_diagrams(r, l)) {
                CHECK(d.transpose().transpose() == d);
                CHECK(d.conjugate().conjugate() == d);
                CHECK(d.size() + d.conjugate().size() == static_cast<long long>(r) * l);
            }
}

TEST_CASE("index sets are complements, r+l <= 8") {
    for (int N = 2; N <= 8; ++N)
        for (int r = 1; r < N; ++r) {
            const int l = N - r;
            std::set<std::vector<int>> images;
            for (const auto& d : all_diagrams(r, l)) {
                auto [I, J] = index_sets(d);
                std::vector<int> all(I);
                all.insert(all.end(), J.begin(), J.end());
                std::sort(all.begin(), all.end());
                std::vector<int> expect;
                for (int i = 1; i <= N; ++i) expect.push_back(i);
                CHECK(all == expect);
                images.insert(I);

                // R-positions are the reflection of I through (N+1)/2
                auto s = string_of(d);
                std::vector<int> rpos;
                for (int i = 1; i <= N; ++i)
                    if (s.symbols[static_cast<size_t>(i - 1)] == 'R') rpos.push_back(N + 1 - i);
                std::sort(rpos.begin(), rpos.end());
                CHECK(rpos == I);
            }
            // lambda -> I is a bijection onto r-subsets
            CHECK(images.size() == binomial(N, r));
        }
}

TEST_CASE("rotation grows size by l and preserves validity") {
    for (int r = 1; r <= 4; ++r)
        for (int l = 1; l <= 4; ++l)
            for (const auto& d : all_diagrams(r, l)) {
                if (d.part(r) != 0) continue;
                YoungDiagram rot = rotated(d);
                CHECK(rot.size() == d.size() + l);
                CHECK(rot.part(1) == l);
            }
}

TEST_CASE("weight systems") {
    WeightSystem w(2, 3);
    w.push_back(YoungDiagram({2, 1}, 2, 3));
    w.push_back(YoungDiagram({3, 0}, 2, 3));
    CHECK(w.total_size() == 6);
    CHECK(w.transposed().rows() == 3);
    CHECK(w.transposed().total_size() == 6);
    CHECK(w.conjugated().total_size() == 2 * 2 * 3 - 6);
    CHECK_THROWS(w.push_back(YoungDiagram({1}, 1, 3)));
}
