#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qstab/rng.hpp"
#include "qstab/subspace.hpp"

using namespace qstab;

namespace {

Mat random_mat(Rng& rng, int rows, int cols, long lo = -4, long hi = 4) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rat(rng.uniform(lo, hi));
    return m;
}

Subspace random_subspace(Rng& rng, int ambient) {
    return image(random_mat(rng, ambient, static_cast<int>(rng.uniform(0, ambient))));
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rat_to_string(rat(1, 3) + rat(1, 6)) == "1/2");
    CHECK(rat_to_string(rat_from_string("4/8")) == "1/2");
    CHECK(rat_to_string(rat_from_string("-6/4")) == "-3/2");
    CHECK(rat_to_string(rat(7)) == "7");
    CHECK(rat_from_string("0/5") == 0);
    CHECK_THROWS_AS(rat_from_string("x"), InputError);
    CHECK_THROWS_AS(rat_from_string("1/0"), InputError);
}

TEST_CASE("rank basics") {
    CHECK(rank_of(Mat::identity(3)) == 3);
    CHECK(rank_of(Mat(2, 5)) == 0);
    CHECK(rank_of(Mat{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("rref and kernel") {
    Mat m{{1, 0}, {0, 0}};
    Subspace k = kernel(m);
    REQUIRE(k.dim() == 1);
    CHECK(k.basis().at(0, 0) == 0);
    CHECK(k.basis().at(1, 0) == 1);

    // fractional entries
    Mat f(2, 2);
    f.at(0, 0) = rat(1, 2);
    f.at(0, 1) = rat(1, 3);
    f.at(1, 0) = rat(3, 2);
    f.at(1, 1) = rat(2, 1);
    CHECK(rank_of(f) == 2);
    f.at(1, 1) = rat(1, 1);  // now the second row is 3x the first
    CHECK(rank_of(f) == 1);
}

TEST_CASE("subspace canonical form and lattice ops") {
    Mat e1(3, 1), e2(3, 1);
    e1.at(0, 0) = 1;
    e2.at(1, 0) = 1;
    Subspace s1 = Subspace::from_columns(e1);
    Subspace s2 = Subspace::from_columns(e2);
    Subspace s12 = sum(s1, s2);
    CHECK(s12.dim() == 2);

    Mat e23(3, 2);
    e23.at(1, 0) = 1;
    e23.at(2, 1) = 1;
    Subspace s23 = Subspace::from_columns(e23);
    CHECK(intersect(s12, s23) == s2);

    CHECK(apply(Mat::identity(3), s12) == s12);
    CHECK(preimage(Mat{{1, 0}, {0, 0}}, Subspace::zero(2)) ==
          Subspace::from_columns(Mat{{0}, {1}}));
}

TEST_CASE("dimension mismatches raise") {
    CHECK_THROWS_AS(sum(Subspace::zero(2), Subspace::zero(3)), DimensionError);
    CHECK_THROWS_AS(apply(Mat::identity(2), Subspace::zero(3)), DimensionError);
    CHECK_THROWS_AS(Mat::identity(2) * Mat::identity(3), DimensionError);
}

TEST_CASE("rank = dim image = cols - dim kernel on random matrices") {
    Rng rng(7);
    for (int t = 0; t < 60; ++t) {
        const int r = static_cast<int>(rng.uniform(0, 5)), c = static_cast<int>(rng.uniform(0, 5));
        Mat m = random_mat(rng, r, c);
        const int rk = rank_of(m);
        CHECK(rk == image(m).dim());
        CHECK(rk == c - kernel(m).dim());
        CHECK(rk == rank_of(m.transpose()));
    }
}

TEST_CASE("apply(m, preimage(m, T)) is contained in T, equality iff T inside image") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        const int r = static_cast<int>(rng.uniform(1, 4)), c = static_cast<int>(rng.uniform(1, 4));
        Mat m = random_mat(rng, r, c);
        Subspace target = random_subspace(rng, r);
        Subspace pre = preimage(m, target);
        Subspace img = apply(m, pre);
        CHECK(contains(target, img));
        const bool inside = contains(image(m), target);
        CHECK((img == target) == inside);
    }
}

TEST_CASE("canonicalization is idempotent and pivots strictly increase") {
    Rng rng(13);
    for (int t = 0; t < 60; ++t) {
        Subspace s = random_subspace(rng, static_cast<int>(rng.uniform(1, 6)));
        CHECK(Subspace::from_columns(s.basis()) == s);
        for (size_t i = 1; i < s.pivot_rows().size(); ++i)
            CHECK(s.pivot_rows()[i - 1] < s.pivot_rows()[i]);
    }
}

TEST_CASE("subspace equality iff mutual containment") {
    Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        const int n = static_cast<int>(rng.uniform(1, 5));
        Subspace a = random_subspace(rng, n), b = random_subspace(rng, n);
        CHECK((a == b) == (contains(a, b) && contains(b, a)));
    }
}

TEST_CASE("modular law: dim sum + dim intersect = dim u + dim v") {
    Rng rng(19);
    for (int t = 0; t < 100; ++t) {
        const int n = static_cast<int>(rng.uniform(1, 6));
        Subspace a = random_subspace(rng, n), b = random_subspace(rng, n);
        CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("complement basis completes to the ambient space") {
    Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        const int n = static_cast<int>(rng.uniform(1, 6));
        Subspace s = random_subspace(rng, n);
        Mat c = complement_basis(s);
        CHECK(c.cols() == n - s.dim());
        CHECK(rank_of(hcat(s.basis(), c)) == n);
    }
}
