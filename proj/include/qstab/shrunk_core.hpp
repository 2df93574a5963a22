#pragma once

#include <optional>

#include "qstab/matrix_space.hpp"

namespace qstab {
namespace detail {

inline long ceil_div(long a, long b) { return (a + b - 1) / b; }

// Raw spanning columns of the base-space projection of a subspace of
// F^(n d), under the (s, k) -> s*d + k layout. No canonicalization: large
// ambient spaces are only ever canonicalized through their block structure.
inline Mat unblow_raw(const Mat& big, int n, int d) {
    if (d == 1) return big;
    Mat cols(n, big.cols() * d);
    for (int b = 0; b < big.cols(); ++b)
        for (int s = 0; s < n; ++s)
            for (int k = 0; k < d; ++k) cols.at(s, b * d + k) = big.at(s * d + k, b);
    return cols;
}

// {v : A v in T (x) F^d} as a raw kernel basis, via the annihilator of the
// target; returns the basis and the rank of the annihilated system.
inline Mat preimage_raw(const Mat& a, const Subspace& t, int d) {
    Subspace big_t = tensor_with_full(t, d);
    if (big_t.dim() == big_t.ambient()) return Mat::identity(a.cols());
    Mat w = annihilator(big_t);
    return rank_and_kernel(w * a).basis;
}

// One randomized search pass: sample blow-up points of increasing degree,
// run the second Wong sequence at each point, slice the limit back to the
// base space, and accept only when the two certificate inequalities close.
//
// Space needs: ambient(), is_zero_space(), image_of(Subspace),
// image_of_raw(Mat), sample_point(d, rng, range), canonical_shrunk(Mat).
template <class Space>
ShrunkCertificate min_shrunk_single(const Space& sp, Rng& rng, const MinShrunkOptions& opt) {
    const int n = sp.ambient();
    ShrunkCertificate cert;
    if (n == 0) {
        cert.U = Subspace::zero(0);
        cert.BU = Subspace::zero(0);
        cert.c = 0;
        cert.blowup_point = Mat(0, 0);
        return cert;
    }
    if (sp.is_zero_space()) {
        cert.U = Subspace::full(n);
        cert.BU = Subspace::zero(n);
        cert.c = n;
        cert.blowup_point = Mat(n, n);
        return cert;
    }
    const int max_d = opt.max_degree > 0 ? opt.max_degree : std::max(1, n - 1);
    // range 4n+1 bounds the per-sample failure probability by 1/4, and every
    // candidate is validated before acceptance; doubling recovers misses
    const long base_range = 2L * n;
    for (int d = 1; d <= max_d; ++d) {
        long range = base_range;
        for (int attempt = 0; attempt < opt.attempts_per_degree; ++attempt, range *= 2) {
            Mat a = sp.sample_point(d, rng, range);
            KernelResult kr = rank_and_kernel(a);
            const long r = kr.rank;
            const long nd = static_cast<long>(n) * d;
            // Wong sequence on the blow-up, tracked in the base space:
            // every iterate is product-form T (x) F^d because
            // B'(X) = B(cols X) (x) F^d.
            Mat pre = std::move(kr.basis);  // A^{-1}(T (x) F^d), raw basis
            Subspace t = Subspace::zero(n);
            for (int guard = 0;; ++guard) {
                if (guard > n * d + 1) throw InternalError("Wong sequence failed to stabilize");
                Subspace tn = sp.image_of_raw(unblow_raw(pre, n, d));
                if (tn == t) break;
                t = tn;
                pre = preimage_raw(a, t, d);
            }
            // the limit lies in im(A) exactly when the preimage dimension is
            // dim T* * d + nullity(A)
            if (pre.cols() != t.dim() * d + (nd - r)) continue;
            std::optional<Subspace> u0 = sp.canonical_shrunk(unblow_raw(pre, n, d));
            if (!u0) continue;
            // raw preimage columns are independent and lie in U0 (x) F^d by
            // construction, so the dimension count settles product form
            if (static_cast<long>(pre.cols()) != static_cast<long>(d) * u0->dim()) continue;
            Subspace bu = sp.image_of(*u0);
            const long c = u0->dim() - bu.dim();
            if (c < 0 || r > static_cast<long>(d) * (n - c)) continue;
            if (ceil_div(r, d) != n - c) continue;
            cert.U = std::move(*u0);
            cert.BU = std::move(bu);
            cert.c = c;
            cert.blowup_degree = d;
            cert.blowup_point = std::move(a);
            cert.blowup_rank = r;
            return cert;
        }
    }
    throw ValidationError("min_shrunk: retry budget exhausted without a certified subspace");
}

template <class Space>
ShrunkCertificate min_shrunk_core(const Space& sp, uint64_t seed, const MinShrunkOptions& opt) {
    Rng rng(mix_seed(seed, 0x5ccf));
    ShrunkCertificate cert = min_shrunk_single(sp, rng, opt);
    // Intersecting c-shrunk subspaces for c = disc(B) is again c-shrunk, so
    // independent runs can only tighten U towards the minimal one.
    for (int round = 0; round < opt.tighten_rounds; ++round) {
        Rng rng2(mix_seed(seed, 0xa11 + round));
        MinShrunkOptions inner = opt;
        inner.tighten_rounds = 0;
        ShrunkCertificate other = min_shrunk_single(sp, rng2, inner);
        if (other.c != cert.c)
            throw InternalError("min_shrunk: certified values disagree across runs");
        if (other.U == cert.U) continue;
        Subspace meet = intersect(cert.U, other.U);
        Subspace bu = sp.image_of(meet);
        if (meet.dim() - bu.dim() == cert.c) {
            cert.U = meet;
            cert.BU = bu;
        }
    }
    return cert;
}

}  // namespace detail
}  // namespace qstab
