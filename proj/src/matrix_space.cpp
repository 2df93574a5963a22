#include "qstab/matrix_space.hpp"

#include "qstab/shrunk_core.hpp"

namespace qstab {

MatrixSpace make_matrix_space(int n, std::vector<Mat> gens) {
    for (const Mat& g : gens)
        if (g.rows() != n || g.cols() != n)
            throw DimensionError("matrix space generator is not n x n");
    // keep a maximal independent subset, in input order
    MatrixSpace b;
    b.n = n;
    if (gens.empty()) return b;
    Mat flat(n * n, static_cast<int>(gens.size()));
    for (size_t g = 0; g < gens.size(); ++g)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat.at(i * n + j, static_cast<int>(g)) = gens[g].at(i, j);
    RrefResult r = rref(flat);
    for (int pc : r.pivot_cols) b.gens.push_back(std::move(gens[pc]));
    return b;
}

Subspace MatrixSpace::image_of(const Subspace& u) const {
    if (u.ambient() != n) throw DimensionError("space_image: ambient mismatch");
    return image_of_raw(u.basis());
}

Subspace MatrixSpace::image_of_raw(const Mat& cols) const {
    if (cols.rows() != n) throw DimensionError("space_image: ambient mismatch");
    if (gens.empty() || cols.cols() == 0) return Subspace::zero(n);
    Mat all(n, static_cast<int>(gens.size()) * cols.cols());
    int off = 0;
    for (const Mat& g : gens) {
        all.paste(0, off, g * cols);
        off += cols.cols();
    }
    return image(all);
}

Subspace space_image(const MatrixSpace& b, const Subspace& u) { return b.image_of(u); }

Mat kronecker(const Mat& a, const Mat& b) {
    Mat k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    if (b.at(p, q) != 0) k.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return k;
}

MatrixSpace blow_up(const MatrixSpace& b, int d) {
    if (d < 1) throw InputError("blow-up degree must be >= 1");
    std::vector<Mat> gens;
    for (const Mat& g : b.gens)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                Mat e(d, d);
                e.at(k, l) = 1;
                gens.push_back(kronecker(g, e));
            }
    return make_matrix_space(b.n * d, std::move(gens));
}

Mat MatrixSpace::sample_point(int d, Rng& rng, long range) const {
    Mat a(n * d, n * d);
    for (const Mat& g : gens) {
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                const long coeff = rng.uniform(-range, range);
                if (coeff == 0) continue;
                Rat c = rat(coeff);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (g.at(i, j) != 0) a.at(i * d + k, j * d + l) += c * g.at(i, j);
            }
    }
    return a;
}

bool MatrixSpace::contains_point(const Mat& a, int d) const {
    if (a.rows() != n * d || a.cols() != n * d) return false;
    MatrixSpace big = d == 1 ? *this : blow_up(*this, d);
    const int nd = n * d;
    Mat flat(nd * nd, static_cast<int>(big.gens.size()) + 1);
    for (size_t g = 0; g < big.gens.size(); ++g)
        for (int i = 0; i < nd; ++i)
            for (int j = 0; j < nd; ++j) flat.at(i * nd + j, static_cast<int>(g)) = big.gens[g].at(i, j);
    for (int i = 0; i < nd; ++i)
        for (int j = 0; j < nd; ++j) flat.at(i * nd + j, static_cast<int>(big.gens.size())) = a.at(i, j);
    return rank_of(flat) == static_cast<int>(big.gens.size());
}

Subspace unblow_columns(const Subspace& big, int n, int d) {
    if (big.ambient() != n * d) throw DimensionError("unblow: ambient mismatch");
    if (d == 1) return big;
    if (big.dim() == 0) return Subspace::zero(n);
    Mat cols(n, big.dim() * d);
    for (int b = 0; b < big.dim(); ++b)
        for (int s = 0; s < n; ++s)
            for (int k = 0; k < d; ++k) cols.at(s, b * d + k) = big.basis().at(s * d + k, b);
    return image(cols);
}

Subspace tensor_with_full(const Subspace& t, int d) {
    if (d == 1) return t;
    const int n = t.ambient();
    Mat basis(n * d, t.dim() * d);
    std::vector<int> pivots;
    pivots.reserve(static_cast<size_t>(t.dim()) * d);
    for (int b = 0; b < t.dim(); ++b)
        for (int k = 0; k < d; ++k) {
            for (int s = 0; s < n; ++s)
                if (t.basis().at(s, b) != 0) basis.at(s * d + k, b * d + k) = t.basis().at(s, b);
            pivots.push_back(t.pivot_rows()[b] * d + k);
        }
    return Subspace::from_canonical(std::move(basis), std::move(pivots));
}

Subspace wong_limit(const Mat& a, const MatrixSpace& b) {
    if (a.rows() != b.n || a.cols() != b.n) throw DimensionError("wong_limit: shape mismatch");
    Subspace t = Subspace::zero(b.n);
    for (int guard = 0;; ++guard) {
        if (guard > b.n + 1) throw InternalError("Wong sequence failed to stabilize");
        Subspace tn = b.image_of(preimage(a, t));
        if (tn == t) return t;
        t = tn;
    }
}

ShrunkCertificate min_shrunk(const MatrixSpace& b, uint64_t seed, const MinShrunkOptions& opt) {
    return detail::min_shrunk_core(b, seed, opt);
}

NcrankResult ncrank(const MatrixSpace& b, uint64_t seed, const MinShrunkOptions& opt) {
    ShrunkCertificate cert = min_shrunk(b, seed, opt);
    NcrankResult r;
    r.value = b.n - cert.c;
    r.blowup_degree = cert.blowup_degree;
    r.point = cert.blowup_point;
    r.rank = cert.blowup_rank;
    return r;
}

CertReport verify_certificate(const MatrixSpace& b, const ShrunkCertificate& cert) {
    CertReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };
    if (cert.U.ambient() != b.n) fail("U ambient mismatch");
    if (cert.BU.ambient() != b.n) fail("BU ambient mismatch");
    if (cert.c < 0 || cert.c > b.n) fail("c out of range");
    if (cert.blowup_degree < 1) fail("blow-up degree must be >= 1");
    if (!rep.ok) return rep;
    if (b.image_of(cert.U) != cert.BU) fail("BU does not equal B(U)");
    if (cert.U.dim() - cert.BU.dim() != cert.c) fail("dim U - dim B(U) != c");
    const int nd = b.n * cert.blowup_degree;
    if (cert.blowup_point.rows() != nd || cert.blowup_point.cols() != nd)
        fail("blow-up point shape mismatch");
    else {
        if (!b.contains_point(cert.blowup_point, cert.blowup_degree))
            fail("blow-up point is not in the blown-up space");
        if (rank_of(cert.blowup_point) != cert.blowup_rank) fail("blow-up rank mismatch");
        if (detail::ceil_div(cert.blowup_rank, cert.blowup_degree) != b.n - cert.c)
            fail("ceil(r/d) != n - c");
    }
    return rep;
}

}  // namespace qstab
