#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schurkit/exact_linalg.hpp"

using namespace schurkit;

namespace {

Mat random_matrix(std::mt19937& rng, int r, int c, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    return m;
}

void check_smith(const Mat& A) {
    SmithForm S = smith_normal_form(A);
    CHECK(S.U * A * S.V == S.D);
    CHECK(S.U * S.Uinv == Mat::identity(A.rows()));
    auto d = S.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (d[i] == 0)
            CHECK(d[i + 1] == 0);
        else
            CHECK(d[i + 1] % d[i] == 0);
    }
    // off-diagonal zero
    for (int i = 0; i < S.D.rows(); ++i)
        for (int j = 0; j < S.D.cols(); ++j)
            if (i != j) CHECK(S.D.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form basics") {
    Mat A = Mat::from_rows({{2, 0}, {0, 3}});
    SmithForm S = smith_normal_form(A);
    auto d = S.diagonal();
    CHECK(d == std::vector<Int>{1, 6});
    check_smith(A);

    check_smith(Mat(3, 2));
    CHECK(smith_normal_form(Mat(3, 2)).rank() == 0);

    Mat one = Mat::from_rows({{1}});
    CHECK(smith_normal_form(one).diagonal() == std::vector<Int>{1});
}

TEST_CASE("smith normal form randomized") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + trial % 6, c = 1 + (trial * 7) % 6;
        check_smith(random_matrix(rng, r, c));
    }
    // heavier entries force multi-step reduction
    for (int trial = 0; trial < 10; ++trial)
        check_smith(random_matrix(rng, 4, 4, -500, 500));
}

TEST_CASE("cokernel") {
    auto M = cokernel(Mat::from_rows({{2}}));
    CHECK(M.free_rank == 0);
    CHECK(M.torsion == std::vector<Int>{2});

    auto F = cokernel(Mat(3, 0));
    CHECK(F.free_rank == 3);
    CHECK(F.is_free());

    auto T = cokernel(Mat::from_rows({{1, 0}, {0, 3}}));
    CHECK(T.free_rank == 0);
    CHECK(T.torsion == std::vector<Int>{3});

    // projection * section = identity on generators
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Mat A = random_matrix(rng, 4, 3);
        auto C = cokernel(A);
        Mat ps = C.projection * C.section;
        CHECK(ps == Mat::identity(static_cast<int>(C.generator_count())));
        // projection kills the image
        Mat PA = C.projection * A;
        for (int i = 0; i < PA.rows(); ++i)
            for (int j = 0; j < PA.cols(); ++j) {
                Int v = PA.at(i, j);
                if (i >= C.free_rank) {
                    Int m = C.torsion[i - C.free_rank];
                    CHECK(v % m == 0);
                } else {
                    CHECK(v == 0);
                }
            }
        CHECK(C.free_rank + rank(A) == 4);
    }
}

TEST_CASE("image basis and rank") {
    Mat g = image_basis(Mat::from_rows({{2, 4}}));
    CHECK(g == Mat::from_rows({{2}}));
    CHECK(image_basis(Mat::identity(3)) == Mat::identity(3));
    Mat r1 = image_basis(Mat::from_rows({{1, 1}, {1, 1}}));
    CHECK(r1 == Mat::from_rows({{1}, {1}}));
    CHECK(rank(Mat::from_rows({{1, 2}, {2, 4}})) == 1);
    // image lattice invariant under column shuffles: compare Hermite forms
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        Mat A = random_matrix(rng, 4, 5);
        Mat B = A;
        B.swap_cols(0, 3);
        B.swap_cols(1, 4);
        CHECK(image_basis(A) == image_basis(B));
    }
}

TEST_CASE("kernel and solve") {
    Mat A = Mat::from_rows({{1, 2, 3}, {2, 4, 6}});
    Mat K = kernel_basis(A);
    CHECK(K.cols() == 2);
    CHECK((A * K).is_zero());

    Mat X;
    CHECK(solve(Mat::from_rows({{2, 0}, {0, 1}}), Mat::from_rows({{4}, {5}}), X));
    CHECK(Mat::from_rows({{2, 0}, {0, 1}}) * X == Mat::from_rows({{4}, {5}}));
    CHECK_FALSE(solve(Mat::from_rows({{2}}), Mat::from_rows({{3}}), X));

    // kernel is saturated: solving K x = v works for any integer v in ker
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Mat M = random_matrix(rng, 3, 5);
        Mat Kb = kernel_basis(M);
        CHECK((M * Kb).is_zero());
        CHECK(rank(M) + Kb.cols() == 5);
    }
}

TEST_CASE("chain complex validation and homology") {
    // 0 -> Z --2--> Z -> 0 in degrees 1,0
    ChainComplex C(0, 1, {1, 1}, {{1, Mat::from_rows({{2}})}});
    auto h0 = homology(C, 0);
    CHECK(h0.free_rank == 0);
    CHECK(h0.torsion == std::vector<Int>{2});
    auto h1 = homology(C, 1);
    CHECK(h1.is_zero());
    CHECK(homology(C, 5).is_zero());

    ChainComplex Z(0, 1, {1, 1}, {});  // zero differential
    CHECK(homology(Z, 0).free_rank == 1);
    CHECK(homology(Z, 1).free_rank == 1);

    CHECK_THROWS_AS(ChainComplex(0, 2, {1, 1, 1},
                                 {{1, Mat::from_rows({{1}})}, {2, Mat::from_rows({{1}})}}),
                    structural_error);
}

TEST_CASE("tensor of complexes") {
    ChainComplex unit(0, 0, {1}, {});
    ChainComplex C(0, 1, {1, 1}, {{1, Mat::from_rows({{3}})}});
    CHECK(tensor(C, unit) == C);
    CHECK(tensor(unit, C) == C);

    ChainComplex Z(0, 1, {1, 1}, {});
    auto T = tensor(Z, Z);
    CHECK(T.rank(0) == 1);
    CHECK(T.rank(1) == 2);
    CHECK(T.rank(2) == 1);

    // Koszul sign check: d.d = 0 already enforced by the constructor; verify
    // homology of tensor with an acyclic complex keeps free ranks.
    ChainComplex A(0, 1, {1, 1}, {{1, Mat::from_rows({{1}})}});  // acyclic
    auto TA = tensor(C, A);
    for (int i = TA.lo(); i <= TA.hi(); ++i) {
        auto h = homology(TA, i);
        CHECK(h.free_rank == 0);  // C has only torsion homology; acyclic tensor keeps rank 0
    }

    // Euler characteristic consistency on random small complexes
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Mat d1 = random_matrix(rng, 3, 2);
        ChainComplex R(0, 1, {3, 2}, {{1, d1}});
        auto TT = tensor(R, C);
        Int chi = TT.euler_characteristic();
        Int hchi = 0;
        for (int i = TT.lo(); i <= TT.hi(); ++i) {
            auto h = homology(TT, i);
            hchi += (i % 2 == 0 ? 1 : -1) * Int(h.free_rank);
        }
        CHECK(chi == hchi);
    }
}

TEST_CASE("tensor homology example") {
    // Lbar^1(rho) for rho = (a): complex Z --a--> Z in degrees 1,0.
    // H_0 of the tensor square is Z/a (Kunneth over Z: Z/a (x) Z/a etc.).
    ChainComplex L(0, 1, {1, 1}, {{1, Mat::from_rows({{4}})}});
    auto T = tensor(L, L);
    auto h0 = homology(T, 0);
    CHECK(h0.free_rank == 0);
    CHECK(h0.torsion == std::vector<Int>{4});
}

TEST_CASE("sparse quotient agrees with dense cokernel") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 2 + trial % 5, c = 1 + (trial * 3) % 6;
        Mat A = random_matrix(rng, r, c, -4, 4);
        std::vector<std::vector<std::pair<int, Int>>> cols(c);
        for (int j = 0; j < c; ++j)
            for (int i = 0; i < r; ++i)
                if (A.at(i, j) != 0) cols[j].push_back({i, A.at(i, j)});
        SparseQuotient Q(r, cols, true);
        auto dense = cokernel(A);
        CHECK(Q.free_rank() == dense.free_rank);
        CHECK(Q.torsion() == dense.torsion);

        // projection kills the image; projection . section = id when free
        auto M = Q.to_presented_module();
        Mat PA = M.projection * A;
        for (int i = 0; i < PA.rows(); ++i)
            for (int j = 0; j < PA.cols(); ++j) {
                if (i >= M.free_rank) {
                    CHECK(PA.at(i, j) % M.torsion[i - M.free_rank] == 0);
                } else {
                    CHECK(PA.at(i, j) == 0);
                }
            }
        if (M.is_free() && M.generator_count() > 0)
            CHECK(M.projection * M.section == Mat::identity(static_cast<int>(M.generator_count())));
    }
}

TEST_CASE("sparse quotient large structured input") {
    // Quotient of Z^n by pairwise difference relations: a single free generator.
    const int n = 2000;
    std::vector<std::vector<std::pair<int, Int>>> cols;
    for (int i = 0; i + 1 < n; ++i) cols.push_back({{i, Int(1)}, {i + 1, Int(-1)}});
    SparseQuotient Q(n, cols, false);
    CHECK(Q.free_rank() == 1);
    CHECK(Q.torsion().empty());
}
