#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qstab/matrix_space.hpp"
#include "qstab/oracles.hpp"

using namespace qstab;

namespace {

Mat unit(int n, int r, int c) {
    Mat e(n, n);
    e.at(r, c) = 1;
    return e;
}

MatrixSpace full_space(int n) {
    std::vector<Mat> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gens.push_back(unit(n, i, j));
    return make_matrix_space(n, std::move(gens));
}

PatternSpace random_pattern(Rng& rng, int n) {
    PatternSpace p;
    p.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rng.uniform(0, 99) < 35) p.support.emplace_back(i, j);
    return p;
}

}  // namespace

TEST_CASE("space_image basics") {
    MatrixSpace zero = make_matrix_space(2, {});
    CHECK(space_image(zero, Subspace::full(2)) == Subspace::zero(2));

    MatrixSpace e11 = make_matrix_space(2, {unit(2, 0, 0)});
    Subspace img = space_image(e11, Subspace::full(2));
    CHECK(img.dim() == 1);
    CHECK(img.basis().at(0, 0) == 1);

    CHECK(space_image(full_space(2), Subspace::from_columns(Mat{{1}, {0}})) == Subspace::full(2));
}

TEST_CASE("generator lists reduce to a basis") {
    MatrixSpace b = make_matrix_space(2, {unit(2, 0, 0), unit(2, 0, 0).scaled(rat(2))});
    CHECK(b.gens.size() == 1);
}

TEST_CASE("blow_up") {
    MatrixSpace e11 = make_matrix_space(2, {unit(2, 0, 0)});
    CHECK(blow_up(e11, 1).gens.size() == 1);
    MatrixSpace b2 = blow_up(e11, 2);
    CHECK(b2.n == 4);
    CHECK(b2.gens.size() == 4);
    // every point is E11 tensor C, so the best attainable rank is 2
    Rng rng(3);
    long best = 0;
    for (int t = 0; t < 8; ++t) best = std::max<long>(best, rank_of(b2.sample_point(1, rng, 9)));
    CHECK(best == 2);

    MatrixSpace full2 = blow_up(full_space(2), 2);
    Mat id_point = kronecker(Mat::identity(2), Mat::identity(2));
    CHECK(rank_of(id_point) == 4);
    CHECK(full2.contains_point(id_point, 1));
}

TEST_CASE("wong_limit hand cases") {
    MatrixSpace e11 = make_matrix_space(2, {unit(2, 0, 0)});
    Subspace t = wong_limit(unit(2, 0, 0), e11);
    CHECK(t == Subspace::zero(2));
    CHECK(preimage(unit(2, 0, 0), t) == Subspace::from_columns(Mat{{0}, {1}}));

    MatrixSpace zero = make_matrix_space(2, {});
    CHECK(wong_limit(Mat(2, 2), zero) == Subspace::zero(2));

    Mat inv = Mat::identity(3);
    CHECK(wong_limit(inv, full_space(3)) == Subspace::zero(3));
}

TEST_CASE("wong sequence is nondecreasing and stabilizes within n steps") {
    Rng rng(29);
    for (int t = 0; t < 25; ++t) {
        const int n = static_cast<int>(rng.uniform(2, 5));
        PatternSpace p = random_pattern(rng, n);
        MatrixSpace b = to_matrix_space(p);
        Mat a = b.sample_point(1, rng, 7);
        Subspace prev = Subspace::zero(n);
        int steps = 0;
        for (;; ++steps) {
            REQUIRE(steps <= n + 1);
            Subspace next = b.image_of(preimage(a, prev));
            CHECK(contains(next, prev));
            if (next == prev) break;
            prev = next;
        }
        CHECK(steps <= n);
    }
}

TEST_CASE("min_shrunk hand cases") {
    MatrixSpace zero = make_matrix_space(2, {});
    ShrunkCertificate c0 = min_shrunk(zero, 1);
    CHECK(c0.c == 2);
    CHECK(c0.U == Subspace::full(2));

    ShrunkCertificate c1 = min_shrunk(full_space(2), 1);
    CHECK(c1.c == 0);
    CHECK(c1.U == Subspace::zero(2));

    MatrixSpace e11 = make_matrix_space(2, {unit(2, 0, 0)});
    ShrunkCertificate c2 = min_shrunk(e11, 1);
    CHECK(c2.c == 1);
    CHECK(c2.U == Subspace::from_columns(Mat{{0}, {1}}));
    CHECK(ncrank(e11, 5).value == 1);
    CHECK(ncrank(full_space(3), 5).value == 3);
    CHECK(ncrank(zero, 5).value == 0);
}

TEST_CASE("certificates verify and match the matching oracle on patterns") {
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        const int n = static_cast<int>(rng.uniform(1, 6));
        PatternSpace p = random_pattern(rng, n);
        MatrixSpace b = to_matrix_space(p);
        ShrunkCertificate cert = min_shrunk(b, 1000 + t);
        CertReport rep = verify_certificate(b, cert);
        std::string why = rep.failures.empty() ? std::string{} : rep.failures[0];
        INFO(why);
        CHECK(rep.ok);
        KoenigResult k = koenig_disc(p);
        CHECK(cert.c == k.c);
        // the coordinate subspace on a maximizing column set is c-shrunk
        Mat cols(n, static_cast<int>(k.column_set.size()));
        for (size_t i = 0; i < k.column_set.size(); ++i) cols.at(k.column_set[i], static_cast<int>(i)) = 1;
        Subspace coord = Subspace::from_columns(cols);
        CHECK(coord.dim() - space_image(b, coord).dim() == k.c);
    }
}

TEST_CASE("monotonicity of space_image") {
    Rng rng(37);
    for (int t = 0; t < 25; ++t) {
        const int n = static_cast<int>(rng.uniform(2, 5));
        MatrixSpace b = to_matrix_space(random_pattern(rng, n));
        Mat m1(n, static_cast<int>(rng.uniform(0, n)));
        for (int i = 0; i < m1.rows(); ++i)
            for (int j = 0; j < m1.cols(); ++j) m1.at(i, j) = rat(rng.uniform(-3, 3));
        Subspace u1 = image(m1);
        Subspace u2 = sum(u1, image(Mat::identity(n).column(static_cast<int>(rng.uniform(0, n - 1)))));
        CHECK(contains(space_image(b, u2), space_image(b, u1)));
    }
}

TEST_CASE("certified value is seed independent; U agrees after tightening") {
    Rng rng(41);
    for (int t = 0; t < 12; ++t) {
        const int n = static_cast<int>(rng.uniform(2, 5));
        MatrixSpace b = to_matrix_space(random_pattern(rng, n));
        MinShrunkOptions opt;
        opt.tighten_rounds = 2;
        ShrunkCertificate a = min_shrunk(b, 100 + t, opt);
        ShrunkCertificate c = min_shrunk(b, 900 + t, opt);
        CHECK(a.c == c.c);
        CHECK(a.U == c.U);
    }
}

TEST_CASE("tampered certificates fail verification") {
    MatrixSpace e11 = make_matrix_space(2, {unit(2, 0, 0)});
    ShrunkCertificate cert = min_shrunk(e11, 1);
    ShrunkCertificate bad = cert;
    bad.c += 1;
    CHECK(!verify_certificate(e11, bad).ok);
    bad = cert;
    bad.blowup_rank += 1;
    CHECK(!verify_certificate(e11, bad).ok);
    bad = cert;
    bad.U = Subspace::full(2);
    CHECK(!verify_certificate(e11, bad).ok);
    bad = cert;
    bad.blowup_point.at(1, 1) = 1;  // leaves the space
    CHECK(!verify_certificate(e11, bad).ok);
}
