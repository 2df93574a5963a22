#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qstab/rng.hpp"
#include "qstab/subspace.hpp"

namespace qstab {

// Linear subspace of M(n, Q), held by a basis of generators.
struct MatrixSpace {
    int n = 0;
    std::vector<Mat> gens;

    int ambient() const { return n; }
    bool is_zero_space() const { return gens.empty(); }
    Subspace image_of(const Subspace& u) const;
    Subspace image_of_raw(const Mat& cols) const;
    std::optional<Subspace> canonical_shrunk(const Mat& raw) const {
        return Subspace::from_columns(raw);
    }
    Mat sample_point(int d, Rng& rng, long range) const;
    bool contains_point(const Mat& a, int d) const;
};

// Validates shapes and reduces the generator list to a maximal linearly
// independent subset (kept in input order).
MatrixSpace make_matrix_space(int n, std::vector<Mat> gens);

Subspace space_image(const MatrixSpace& b, const Subspace& u);

// Span of {g (x) E_kl}, acting on F^(n d); index (s, k) -> s*d + k.
MatrixSpace blow_up(const MatrixSpace& b, int d);

Mat kronecker(const Mat& a, const Mat& b);

// Second Wong sequence limit for A in B: T0 = 0, T_{i+1} = B(A^{-1}(T_i)).
Subspace wong_limit(const Mat& a, const MatrixSpace& b);

// Certified discrepancy witness for a matrix space.
//   lower bound: dim U - dim BU = c, so disc(B) >= c;
//   upper bound: a degree-d blow-up point of rank r with ceil(r/d) = n - c,
//   so disc(B) <= c.
struct ShrunkCertificate {
    Subspace U;
    long c = 0;
    Subspace BU;
    int blowup_degree = 1;
    Mat blowup_point;
    long blowup_rank = 0;
};

struct MinShrunkOptions {
    int attempts_per_degree = 4;
    int max_degree = 0;  // 0: up to max(1, n-1)
    int tighten_rounds = 1;
};

ShrunkCertificate min_shrunk(const MatrixSpace& b, uint64_t seed,
                             const MinShrunkOptions& opt = {});

struct NcrankResult {
    long value = 0;
    int blowup_degree = 1;
    Mat point;
    long rank = 0;
};

NcrankResult ncrank(const MatrixSpace& b, uint64_t seed, const MinShrunkOptions& opt = {});

struct CertReport {
    bool ok = true;
    std::vector<std::string> failures;
};

CertReport verify_certificate(const MatrixSpace& b, const ShrunkCertificate& cert);

// Helpers shared with the quiver-derived space.
// Column space of a subspace of F^(n d) under the (s, k) -> s*d + k layout.
Subspace unblow_columns(const Subspace& big, int n, int d);
// T (x) F^d as a canonical subspace of F^(n d).
Subspace tensor_with_full(const Subspace& t, int d);

}  // namespace qstab
