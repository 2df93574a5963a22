#pragma once

#include <optional>

#include "qstab/matrix_space.hpp"
#include "qstab/rep.hpp"

namespace qstab {

// Block layout of the matrix space A_{W,theta}. Columns are indexed by
// slots (i, r) with i a positive-weight vertex and r < theta_plus(i), each
// slot of width dim(x_i); rows by slots (j, q) on the negative side. The
// balance theta(W) = 0 forces both sides to have the same total size N.
struct BlockIndex {
    long N = 0;
    std::vector<int> pos;  // vertex indices with theta > 0
    std::vector<int> neg;  // vertex indices with theta < 0
    std::vector<long> theta_plus;
    std::vector<long> theta_minus;
    std::vector<long> col_off;  // base column offset per positive vertex
    std::vector<long> row_off;  // base row offset per negative vertex
};

BlockIndex make_block_index(const Representation& w, const Weight& theta);

// A_{W,theta} with structured operations: generators are single-block
// placements of path maps, so images and membership tests work blockwise
// instead of on dense N x N matrices.
class QuiverSpace {
   public:
    QuiverSpace(const Representation& w, const Weight& theta);

    const BlockIndex& block_index() const { return bi_; }
    // independent path maps x_i -> y_j, indexed [pos position][neg position]
    const std::vector<Mat>& path_basis(int i, int j) const { return paths_[i][j]; }

    int ambient() const { return static_cast<int>(bi_.N); }
    bool is_zero_space() const { return zero_; }
    Subspace image_of(const Subspace& x) const;
    Subspace image_of_raw(const Mat& cols) const;
    // Validates the direct-sum block structure of a candidate shrunk
    // subspace (equal slices across copy slots) and returns it assembled
    // in canonical form; nullopt when the structure fails.
    std::optional<Subspace> canonical_shrunk(const Mat& raw) const;
    Mat sample_point(int d, Rng& rng, long range) const;
    bool contains_point(const Mat& a, int d) const;

   private:
    const Representation& w_;
    BlockIndex bi_;
    std::vector<std::vector<std::vector<Mat>>> paths_;
    std::vector<std::vector<Subspace>> path_span_;  // flattened span per (i, j)
    bool zero_ = true;
};

// The explicit matrix space of the construction: one generator per
// independent path map per block position, deduplicated by span.
std::pair<MatrixSpace, BlockIndex> build_matrix_space(const Representation& w,
                                                      const Weight& theta);

struct DiscWitness {
    long value = 0;
    SubRep witness;
    ShrunkCertificate certificate;
    BlockIndex block_index;
    Weight theta_used;  // the (possibly gcd-reduced) weight the space was built from
    long scale = 1;     // value == scale * certificate.c
};

struct DiscOptions {
    int attempts = 6;
    MinShrunkOptions shrink;

    // Tightening starts disabled here: the Wong construction already lands
    // on the minimal subspace at generic points, and failed validations
    // escalate through intersections across attempts.
    DiscOptions() { shrink.tighten_rounds = 0; }
};

// Discrepancy of W with respect to theta (theta(W) = 0 required), with a
// witnessing subrepresentation and a soundness certificate.
DiscWitness disc_witness(const Representation& w, const Weight& theta, uint64_t seed,
                         const DiscOptions& opt = {});

// F(M) / G(M): the discrepancy oracle under theta_d.
DiscWitness oracle_fg(const Representation& m, const Weight& theta, const Weight& kappa,
                      uint64_t seed, const DiscOptions& opt = {});
SubRep F(const Representation& m, const Weight& theta, const Weight& kappa, uint64_t seed);
long G(const Representation& m, const Weight& theta, const Weight& kappa, uint64_t seed);

// Re-checks a certificate against the space rebuilt from (w, theta).
CertReport verify_quiver_certificate(const Representation& w, const Weight& theta,
                                     const ShrunkCertificate& cert);

}  // namespace qstab
