#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurkit/partitions.hpp"

using namespace schurkit;

static Partition P(std::initializer_list<int> xs) { return Partition(std::vector<int>(xs)); }

TEST_CASE("partition normal form and validation") {
    CHECK(P({3, 2, 1, 0, 0}).parts() == std::vector<int>{3, 2, 1});
    CHECK(P({}).length() == 0);
    CHECK(P({0, 0}).empty());
    CHECK(P({4, 2, 1}).size() == 7);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition::parse("3,2,1") == P({3, 2, 1}));
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("0") == Partition{});
    CHECK_THROWS(Partition::parse("1,2"));
    CHECK_THROWS(Partition::parse("a"));
}

TEST_CASE("conjugate") {
    CHECK(P({2, 2, 1}).conjugate() == P({3, 2}));
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(P({4, 2, 1}).conjugate() == P({3, 2, 1, 1}));
    // involution
    for (int n = 0; n <= 20; ++n)
        for (const auto& lam : partitions_of(n > 8 ? 8 : n))
            CHECK(lam.conjugate().conjugate() == lam);
    CHECK(P({5, 5, 4, 3, 2, 1}).conjugate().conjugate() == P({5, 5, 4, 3, 2, 1}));
}

TEST_CASE("containment") {
    CHECK(P({2, 2, 1}).contains(P({1, 1})));
    CHECK(P({2, 1}).contains(P({2, 1})));
    CHECK_FALSE(P({2, 1}).contains(P({3})));
    CHECK_FALSE(P({2, 1}).contains(P({1, 1, 1})));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);  // (1,2) rejected before any comparison
}

TEST_CASE("lexicographic order") {
    CHECK(lex_less(P({1, 1, 1}), P({2, 1})));
    CHECK(lex_less(P({2, 1}), P({3})));
    CHECK_FALSE(lex_less(P({3}), P({2, 1})));
    CHECK_FALSE(lex_less(P({2, 1}), P({2, 1})));
    auto ps = partitions_of(3);
    REQUIRE(ps.size() == 3);
    CHECK(ps[0] == P({1, 1, 1}));
    CHECK(ps[1] == P({2, 1}));
    CHECK(ps[2] == P({3}));
}

TEST_CASE("skew shape basics") {
    SkewShape s(P({2, 2, 1}), P({1, 1}));
    CHECK(s.cells() == 3);
    CHECK_THROWS_AS(SkewShape(P({1}), P({2})), std::invalid_argument);
    CHECK(SkewShape::parse("3,2,1/1").inner() == P({1}));
    CHECK(SkewShape::parse("2,1").inner() == Partition{});
}

TEST_CASE("ssyt counts") {
    CHECK(ssyt_count(SkewShape(P({2, 1})), 2) == 2);
    CHECK(ssyt_count(SkewShape(P({2, 1})), 3) == 8);
    // exterior power: single column
    for (int r = 0; r <= 5; ++r)
        for (int k = 1; k <= 4; ++k) {
            long long expect = 1;
            // C(r,k)
            long long c = 1;
            for (int i = 0; i < k; ++i) c = c * (r - i) / (i + 1);
            expect = (r >= k) ? c : 0;
            std::vector<int> col(k, 1);
            CHECK(ssyt_count(SkewShape(Partition(col)), r) == expect);
        }
    // symmetric power: single row, C(n+r-1, n)
    CHECK(ssyt_count(SkewShape(P({3})), 3) == 10);
    CHECK(ssyt_count(SkewShape(P({4})), 2) == 5);
    // r=0 on a nonempty shape
    CHECK(ssyt_count(SkewShape(P({1})), 0) == 0);
    // empty shape has exactly the empty filling
    CHECK(ssyt_count(SkewShape(P({2, 1}), P({2, 1})), 0) == 1);
    // skew example: (2,2,1)/(1,1) with r=2: one strict column pair times a free cell
    CHECK(ssyt_count(SkewShape(P({2, 2, 1}), P({1, 1})), 2) == 2);
    // enumeration agrees with the count and every tableau is column strict
    auto ts = enumerate_ssyt(SkewShape(P({2, 1})), 3);
    CHECK(ts.size() == 8);
    for (auto& t : ts) CHECK(t.is_column_strict());
}

TEST_CASE("littlewood-richardson coefficients") {
    CHECK(lr_coefficient(P({1, 1}), P({1, 1}), P({2, 2})) == 1);
    CHECK(lr_coefficient(P({2, 1}), P({2, 1}), P({3, 2, 1})) == 2);
    CHECK(lr_coefficient(Partition{}, P({3, 1}), P({3, 1})) == 1);
    CHECK(lr_coefficient(P({1}), P({1}), P({3})) == 0);   // size mismatch
    CHECK(lr_coefficient(P({2}), P({1}), P({2, 1})) == 1);
    CHECK(lr_coefficient(P({1}), P({1}), P({2})) == 1);
    CHECK(lr_coefficient(P({1}), P({1}), P({1, 1})) == 1);
}

TEST_CASE("lr symmetries") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 6; ++b)
            for (const auto& mu : partitions_of(a))
                for (const auto& tau : partitions_of(b))
                    for (const auto& lam : partitions_of(a + b)) {
                        long long c = lr_coefficient(mu, tau, lam);
                        CHECK(c == lr_coefficient(tau, mu, lam));
                        CHECK(c == lr_coefficient(mu.conjugate(), tau.conjugate(), lam.conjugate()));
                    }
}

TEST_CASE("rank form of lr rule") {
    for (int r = 1; r <= 3; ++r)
        for (int a = 1; a + a <= 6; ++a)
            for (const auto& lam : partitions_of(a))
                for (const auto& nu : partitions_of(a)) {
                    long long lhs = ssyt_count(SkewShape(lam), r) * ssyt_count(SkewShape(nu), r);
                    long long rhs = 0;
                    for (const auto& gamma : partitions_of(2 * a))
                        rhs += lr_coefficient(lam, nu, gamma) * ssyt_count(SkewShape(gamma), r);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("skew decomposition") {
    auto d1 = skew_decomposition(SkewShape(P({3, 2, 1}), P({1})));
    REQUIRE(d1.size() == 3);
    CHECK(d1[0] == P({2, 2, 1}));
    CHECK(d1[1] == P({3, 1, 1}));
    CHECK(d1[2] == P({3, 2}));

    auto d2 = skew_decomposition(SkewShape(P({2, 2, 1, 1}), P({1, 1})));
    REQUIRE(d2.size() == 3);
    CHECK(d2[0] == P({1, 1, 1, 1}));
    CHECK(d2[1] == P({2, 1, 1}));
    CHECK(d2[2] == P({2, 2}));

    auto d3 = skew_decomposition(SkewShape(P({3, 1})));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0] == P({3, 1}));

    // rank form of the decomposition: ssyt(lambda/mu, r) = sum_tau c * ssyt(tau, r)
    for (int r = 1; r <= 4; ++r) {
        SkewShape s(P({3, 2, 1}), P({1}));
        long long lhs = ssyt_count(s, r);
        long long rhs = 0;
        for (const auto& tau : skew_decomposition(s)) rhs += ssyt_count(SkewShape(tau), r);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("subpartitions") {
    auto subs = subpartitions(P({2, 1}));
    REQUIRE(subs.size() == 5);
    CHECK(subs[0] == Partition{});
    CHECK(subs[1] == P({1}));
    CHECK(subs[2] == P({1, 1}));
    CHECK(subs[3] == P({2}));
    CHECK(subs[4] == P({2, 1}));
}
