#include "qstab/disc.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qstab/shrunk_core.hpp"

namespace qstab {

namespace {

Mat flatten(const Mat& m) {
    Mat f(m.rows() * m.cols(), 1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) f.at(i * m.cols() + j, 0) = m.at(i, j);
    return f;
}

// Path map table: for each ordered vertex pair, a maximal independent set
// of composed matrices, in path enumeration order.
std::vector<std::vector<std::vector<Mat>>> path_map_table(const Representation& w) {
    const int nv = w.quiver.num_vertices();
    std::vector<std::vector<std::vector<Mat>>> raw(nv, std::vector<std::vector<Mat>>(nv));
    for (const Path& p : enumerate_paths(w.quiver)) raw[p.source][p.target].push_back(path_map(w, p));
    for (int s = 0; s < nv; ++s)
        for (int t = 0; t < nv; ++t) {
            auto& mats = raw[s][t];
            if (mats.empty()) continue;
            const int r = w.dims[t], c = w.dims[s];
            if (r == 0 || c == 0) {
                mats.clear();
                continue;
            }
            Mat flat(r * c, static_cast<int>(mats.size()));
            for (size_t k = 0; k < mats.size(); ++k) flat.paste(0, static_cast<int>(k), flatten(mats[k]));
            RrefResult rr = rref(flat);
            std::vector<Mat> indep;
            for (int pc : rr.pivot_cols)
                if (!mats[pc].is_zero()) indep.push_back(std::move(mats[pc]));
            mats = std::move(indep);
        }
    return raw;
}

long theta_gcd(const Weight& theta) {
    long g = 0;
    for (long t : theta.w) g = std::gcd(g, std::abs(t));
    return g == 0 ? 1 : g;
}

// U should be the direct sum over i of theta_plus(i) copies of its slice.
Subspace assemble_product(const Representation& w, const BlockIndex& bi,
                          const std::vector<Subspace>& wx) {
    long dim = 0;
    for (size_t i = 0; i < bi.pos.size(); ++i) dim += bi.theta_plus[i] * wx[i].dim();
    Mat basis(static_cast<int>(bi.N), static_cast<int>(dim));
    std::vector<int> pivots;
    pivots.reserve(dim);
    int out = 0;
    for (size_t i = 0; i < bi.pos.size(); ++i) {
        const int d = w.dims[bi.pos[i]];
        for (long r = 0; r < bi.theta_plus[i]; ++r) {
            const int base = static_cast<int>(bi.col_off[i] + r * d);
            for (int b = 0; b < wx[i].dim(); ++b) {
                for (int s = 0; s < d; ++s)
                    if (wx[i].basis().at(s, b) != 0) basis.at(base + s, out) = wx[i].basis().at(s, b);
                pivots.push_back(base + wx[i].pivot_rows()[b]);
                ++out;
            }
        }
    }
    return Subspace::from_canonical(std::move(basis), std::move(pivots));
}

}  // namespace

BlockIndex make_block_index(const Representation& w, const Weight& theta) {
    if (weight_of(theta, w.dims) != 0)
        throw WeightError("matrix space construction requires theta(W) = 0");
    BlockIndex bi;
    long col = 0, row = 0;
    for (int v = 0; v < w.quiver.num_vertices(); ++v) {
        if (theta(v) > 0) {
            bi.pos.push_back(v);
            bi.theta_plus.push_back(theta(v));
            bi.col_off.push_back(col);
            col += theta(v) * w.dims[v];
        } else if (theta(v) < 0) {
            bi.neg.push_back(v);
            bi.theta_minus.push_back(-theta(v));
            bi.row_off.push_back(row);
            row += -theta(v) * w.dims[v];
        }
    }
    if (col != row) throw InternalError("block index sides disagree");
    bi.N = col;
    return bi;
}

QuiverSpace::QuiverSpace(const Representation& w, const Weight& theta)
    : w_(w), bi_(make_block_index(w, theta)) {
    auto table = path_map_table(w);
    const size_t np = bi_.pos.size(), nn = bi_.neg.size();
    paths_.assign(np, std::vector<std::vector<Mat>>(nn));
    path_span_.assign(np, std::vector<Subspace>(nn));
    for (size_t i = 0; i < np; ++i)
        for (size_t j = 0; j < nn; ++j) {
            paths_[i][j] = table[bi_.pos[i]][bi_.neg[j]];
            const int amb = w.dims[bi_.neg[j]] * w.dims[bi_.pos[i]];
            if (paths_[i][j].empty()) {
                path_span_[i][j] = Subspace::zero(amb);
                continue;
            }
            Mat flat(amb, static_cast<int>(paths_[i][j].size()));
            for (size_t k = 0; k < paths_[i][j].size(); ++k)
                flat.paste(0, static_cast<int>(k), flatten(paths_[i][j][k]));
            path_span_[i][j] = image(flat);
            if (path_span_[i][j].dim() > 0) zero_ = false;
        }
}

Subspace QuiverSpace::image_of(const Subspace& x) const {
    if (x.ambient() != bi_.N) throw DimensionError("image_of: ambient mismatch");
    return image_of_raw(x.basis());
}

Subspace QuiverSpace::image_of_raw(const Mat& x) const {
    if (x.rows() != bi_.N) throw DimensionError("image_of: ambient mismatch");
    const size_t np = bi_.pos.size(), nn = bi_.neg.size();
    // projection span at each positive vertex: sum of the slot slices
    std::vector<Subspace> xi(np);
    for (size_t i = 0; i < np; ++i) {
        const int d = w_.dims[bi_.pos[i]];
        if (d == 0 || x.cols() == 0) {
            xi[i] = Subspace::zero(d);
            continue;
        }
        Mat cols(d, static_cast<int>(bi_.theta_plus[i]) * x.cols());
        for (long r = 0; r < bi_.theta_plus[i]; ++r)
            cols.paste(0, static_cast<int>(r) * x.cols(),
                       x.row_slice(static_cast<int>(bi_.col_off[i] + r * d), d));
        xi[i] = image(cols);
    }
    // image at each negative vertex
    std::vector<Subspace> yj(nn);
    for (size_t j = 0; j < nn; ++j) {
        const int d = w_.dims[bi_.neg[j]];
        yj[j] = Subspace::zero(d);
        std::vector<Mat> pieces;
        int total = 0;
        for (size_t i = 0; i < np; ++i) {
            if (xi[i].dim() == 0) continue;
            for (const Mat& p : paths_[i][j]) {
                pieces.push_back(p * xi[i].basis());
                total += pieces.back().cols();
            }
        }
        if (total == 0) continue;
        Mat cols(d, total);
        int off = 0;
        for (const Mat& p : pieces) {
            cols.paste(0, off, p);
            off += p.cols();
        }
        yj[j] = image(cols);
    }
    // assemble the replicated block subspace, canonical by construction
    long dim = 0;
    for (size_t j = 0; j < nn; ++j) dim += bi_.theta_minus[j] * yj[j].dim();
    Mat basis(static_cast<int>(bi_.N), static_cast<int>(dim));
    std::vector<int> pivots;
    pivots.reserve(dim);
    int out = 0;
    for (size_t j = 0; j < nn; ++j) {
        const int d = w_.dims[bi_.neg[j]];
        for (long q = 0; q < bi_.theta_minus[j]; ++q) {
            const int base = static_cast<int>(bi_.row_off[j] + q * d);
            for (int b = 0; b < yj[j].dim(); ++b) {
                for (int s = 0; s < d; ++s)
                    if (yj[j].basis().at(s, b) != 0) basis.at(base + s, out) = yj[j].basis().at(s, b);
                pivots.push_back(base + yj[j].pivot_rows()[b]);
                ++out;
            }
        }
    }
    return Subspace::from_canonical(std::move(basis), std::move(pivots));
}

std::optional<Subspace> QuiverSpace::canonical_shrunk(const Mat& raw) const {
    if (raw.rows() != bi_.N) throw DimensionError("canonical_shrunk: ambient mismatch");
    std::vector<Subspace> wx(bi_.pos.size());
    for (size_t i = 0; i < bi_.pos.size(); ++i) {
        const int d = w_.dims[bi_.pos[i]];
        Subspace first = Subspace::zero(d);
        for (long r = 0; r < bi_.theta_plus[i]; ++r) {
            Subspace slice =
                d == 0 || raw.cols() == 0
                    ? Subspace::zero(d)
                    : image(raw.row_slice(static_cast<int>(bi_.col_off[i] + r * d), d));
            if (r == 0)
                first = std::move(slice);
            else if (slice != first)
                return std::nullopt;  // slice depends on the copy slot
        }
        wx[i] = std::move(first);
    }
    return assemble_product(w_, bi_, wx);
}

Mat QuiverSpace::sample_point(int d, Rng& rng, long range) const {
    const long nd = bi_.N * d;
    Mat a(static_cast<int>(nd), static_cast<int>(nd));
    for (size_t i = 0; i < bi_.pos.size(); ++i) {
        const int di = w_.dims[bi_.pos[i]];
        for (size_t j = 0; j < bi_.neg.size(); ++j) {
            const int dj = w_.dims[bi_.neg[j]];
            for (const Mat& p : paths_[i][j]) {
                for (long q = 0; q < bi_.theta_minus[j]; ++q)
                    for (long r = 0; r < bi_.theta_plus[i]; ++r) {
                        const long rbase = bi_.row_off[j] + q * dj;
                        const long cbase = bi_.col_off[i] + r * di;
                        for (int k = 0; k < d; ++k)
                            for (int l = 0; l < d; ++l) {
                                const long coeff = rng.uniform(-range, range);
                                if (coeff == 0) continue;
                                Rat c = rat(coeff);
                                for (int u = 0; u < dj; ++u)
                                    for (int v = 0; v < di; ++v)
                                        if (p.at(u, v) != 0)
                                            a.at(static_cast<int>((rbase + u) * d + k),
                                                 static_cast<int>((cbase + v) * d + l)) += c * p.at(u, v);
                            }
                    }
            }
        }
    }
    return a;
}

bool QuiverSpace::contains_point(const Mat& a, int d) const {
    const long nd = bi_.N * d;
    if (a.rows() != nd || a.cols() != nd) return false;
    // column slot index -> (pos position, offset within slot), and same for rows
    std::vector<std::pair<int, int>> col_owner(bi_.N), row_owner(bi_.N);
    for (size_t i = 0; i < bi_.pos.size(); ++i) {
        const int di = w_.dims[bi_.pos[i]];
        for (long t = 0; t < bi_.theta_plus[i] * di; ++t)
            col_owner[bi_.col_off[i] + t] = {static_cast<int>(i), static_cast<int>(t % di)};
    }
    for (size_t j = 0; j < bi_.neg.size(); ++j) {
        const int dj = w_.dims[bi_.neg[j]];
        for (long t = 0; t < bi_.theta_minus[j] * dj; ++t)
            row_owner[bi_.row_off[j] + t] = {static_cast<int>(j), static_cast<int>(t % dj)};
    }
    for (size_t i = 0; i < bi_.pos.size(); ++i) {
        const int di = w_.dims[bi_.pos[i]];
        if (di == 0) continue;
        for (size_t j = 0; j < bi_.neg.size(); ++j) {
            const int dj = w_.dims[bi_.neg[j]];
            if (dj == 0) continue;
            for (long q = 0; q < bi_.theta_minus[j]; ++q)
                for (long r = 0; r < bi_.theta_plus[i]; ++r)
                    for (int k = 0; k < d; ++k)
                        for (int l = 0; l < d; ++l) {
                            Mat block(dj, di);
                            bool nonzero = false;
                            for (int u = 0; u < dj; ++u)
                                for (int v = 0; v < di; ++v) {
                                    const Rat& e = a.at(
                                        static_cast<int>((bi_.row_off[j] + q * dj + u) * d + k),
                                        static_cast<int>((bi_.col_off[i] + r * di + v) * d + l));
                                    if (e != 0) nonzero = true;
                                    block.at(u, v) = e;
                                }
                            if (!nonzero) continue;
                            if (!contains_vectors(path_span_[i][j], flatten(block))) return false;
                        }
        }
    }
    return true;
}

std::pair<MatrixSpace, BlockIndex> build_matrix_space(const Representation& w, const Weight& theta) {
    QuiverSpace qs(w, theta);
    const BlockIndex& bi = qs.block_index();
    std::vector<Mat> gens;
    for (size_t i = 0; i < bi.pos.size(); ++i) {
        const int di = w.dims[bi.pos[i]];
        for (size_t j = 0; j < bi.neg.size(); ++j) {
            const int dj = w.dims[bi.neg[j]];
            for (const Mat& p : qs.path_basis(static_cast<int>(i), static_cast<int>(j)))
                for (long q = 0; q < bi.theta_minus[j]; ++q)
                    for (long r = 0; r < bi.theta_plus[i]; ++r) {
                        Mat g(static_cast<int>(bi.N), static_cast<int>(bi.N));
                        for (int u = 0; u < dj; ++u)
                            for (int v = 0; v < di; ++v)
                                g.at(static_cast<int>(bi.row_off[j] + q * dj + u),
                                     static_cast<int>(bi.col_off[i] + r * di + v)) = p.at(u, v);
                        gens.push_back(std::move(g));
                    }
        }
    }
    return {make_matrix_space(static_cast<int>(bi.N), std::move(gens)), bi};
}

namespace {

// Invariant closure at every vertex outside the positive support: sum of
// path images from the vertices where spaces are already pinned.
void fill_closure(const Representation& w, const Weight& theta, std::vector<Subspace>& spaces,
                  const std::vector<std::vector<std::vector<Mat>>>& table) {
    const int nv = w.quiver.num_vertices();
    for (int y = 0; y < nv; ++y) {
        if (theta(y) != 0) continue;
        std::vector<Mat> pieces;
        int total = 0;
        for (int x = 0; x < nv; ++x) {
            if (theta(x) == 0 || spaces[x].dim() == 0) continue;
            for (const Mat& p : table[x][y]) {
                pieces.push_back(p * spaces[x].basis());
                total += pieces.back().cols();
            }
        }
        if (total == 0) {
            spaces[y] = Subspace::zero(w.dims[y]);
            continue;
        }
        Mat cols(w.dims[y], total);
        int off = 0;
        for (const Mat& p : pieces) {
            cols.paste(0, off, p);
            off += p.cols();
        }
        spaces[y] = image(cols);
    }
}

DiscWitness degenerate_witness(const Representation& w, const Weight& theta, bool pos_exists) {
    DiscWitness out;
    out.theta_used = theta;
    out.scale = 1;
    out.certificate.U = Subspace::zero(0);
    out.certificate.BU = Subspace::zero(0);
    out.certificate.blowup_point = Mat(0, 0);
    std::vector<Subspace> spaces(w.quiver.num_vertices());
    if (!pos_exists) {
        out.witness = zero_subrep(w);
        out.value = 0;
        return out;
    }
    // positive vertices but no negative ones: theta(W) = 0 forces their
    // dimensions to vanish, so the closure of the full spaces there is the
    // analytically forced witness.
    auto table = path_map_table(w);
    for (int v = 0; v < w.quiver.num_vertices(); ++v)
        spaces[v] = theta(v) > 0 ? Subspace::full(w.dims[v]) : Subspace::zero(w.dims[v]);
    fill_closure(w, theta, spaces, table);
    out.witness.spaces = std::move(spaces);
    if (!is_subrep(w, out.witness)) throw InternalError("degenerate closure is not invariant");
    out.value = weight_of(theta, out.witness);
    return out;
}

}  // namespace

DiscWitness disc_witness(const Representation& w, const Weight& theta, uint64_t seed,
                         const DiscOptions& opt) {
    validate_representation(w);
    if (static_cast<int>(theta.w.size()) != w.quiver.num_vertices())
        throw WeightError("theta length mismatch");
    if (weight_of(theta, w.dims) != 0) throw WeightError("disc requires theta(W) = 0");

    bool has_pos = false, has_neg = false;
    for (int v = 0; v < w.quiver.num_vertices(); ++v) {
        if (theta(v) > 0) has_pos = true;
        if (theta(v) < 0) has_neg = true;
    }
    if (!has_pos || !has_neg) return degenerate_witness(w, theta, has_pos);

    const long g = theta_gcd(theta);
    Weight thr;
    thr.w.resize(theta.w.size());
    for (size_t v = 0; v < theta.w.size(); ++v) thr.w[v] = theta.w[v] / g;

    QuiverSpace space(w, thr);
    const BlockIndex& bi = space.block_index();
    auto table = path_map_table(w);

    std::vector<Subspace> running_wx;  // blockwise intersection across attempts
    bool have_running = false;
    std::string last_failure = "no attempt executed";
    for (int attempt = 0; attempt < opt.attempts; ++attempt) {
        MinShrunkOptions mo = opt.shrink;
        mo.tighten_rounds = opt.shrink.tighten_rounds + (attempt > 0 ? attempt : 0);
        ShrunkCertificate cert;
        try {
            cert = detail::min_shrunk_core(space, mix_seed(seed, attempt), mo);
        } catch (const ValidationError& e) {
            last_failure = e.what();
            continue;
        }
        // slices per positive vertex; the certificate subspace is already in
        // validated product form
        std::vector<Subspace> wx(bi.pos.size());
        for (size_t i = 0; i < bi.pos.size(); ++i) {
            const int d = w.dims[bi.pos[i]];
            wx[i] = d == 0 || cert.U.dim() == 0
                        ? Subspace::zero(d)
                        : image(cert.U.basis().row_slice(static_cast<int>(bi.col_off[i]), d));
        }
        if (have_running) {
            // tighten towards the minimal witness blockwise across attempts
            std::vector<Subspace> meet(bi.pos.size());
            bool differs = false;
            for (size_t i = 0; i < bi.pos.size(); ++i) {
                meet[i] = intersect(running_wx[i], wx[i]);
                if (meet[i] != wx[i]) differs = true;
            }
            if (differs) {
                Subspace p = assemble_product(w, bi, meet);
                Subspace bu = space.image_of(p);
                if (p.dim() - bu.dim() == cert.c) {
                    cert.U = std::move(p);
                    cert.BU = std::move(bu);
                    wx = std::move(meet);
                }
            }
        }
        running_wx = wx;
        have_running = true;

        std::vector<Subspace> spaces(w.quiver.num_vertices());
        for (int v = 0; v < w.quiver.num_vertices(); ++v) spaces[v] = Subspace::zero(w.dims[v]);
        for (size_t i = 0; i < bi.pos.size(); ++i) spaces[bi.pos[i]] = wx[i];
        for (size_t j = 0; j < bi.neg.size(); ++j) {
            const int y = bi.neg[j];
            std::vector<Mat> pieces;
            int total = 0;
            for (size_t i = 0; i < bi.pos.size(); ++i) {
                if (wx[i].dim() == 0) continue;
                for (const Mat& p : space.path_basis(static_cast<int>(i), static_cast<int>(j))) {
                    pieces.push_back(p * wx[i].basis());
                    total += pieces.back().cols();
                }
            }
            if (total == 0) continue;
            Mat cols(w.dims[y], total);
            int off = 0;
            for (const Mat& p : pieces) {
                cols.paste(0, off, p);
                off += p.cols();
            }
            spaces[y] = image(cols);
        }
        fill_closure(w, thr, spaces, table);

        SubRep witness;
        witness.spaces = std::move(spaces);
        if (!is_subrep(w, witness)) {
            last_failure = "back-translated family is not invariant";
            continue;
        }
        if (weight_of(thr, witness) != cert.c) {
            last_failure = "witness weight disagrees with certified value";
            continue;
        }
        DiscWitness out;
        out.value = g * cert.c;
        out.witness = std::move(witness);
        out.certificate = std::move(cert);
        out.block_index = bi;
        out.theta_used = thr;
        out.scale = g;
        return out;
    }
    throw ValidationError("disc_witness: validation failed after retries (" + last_failure + ")");
}

DiscWitness oracle_fg(const Representation& m, const Weight& theta, const Weight& kappa,
                      uint64_t seed, const DiscOptions& opt) {
    if (!kappa_check(kappa)) throw WeightError("kappa must be >= 1 at every vertex");
    DiscWitness out = disc_witness(m, theta_d(theta, kappa, m.dims), seed, opt);
    if (out.value < 0) throw InternalError("G must be nonnegative");
    return out;
}

SubRep F(const Representation& m, const Weight& theta, const Weight& kappa, uint64_t seed) {
    return oracle_fg(m, theta, kappa, seed).witness;
}

long G(const Representation& m, const Weight& theta, const Weight& kappa, uint64_t seed) {
    return oracle_fg(m, theta, kappa, seed).value;
}

CertReport verify_quiver_certificate(const Representation& w, const Weight& theta,
                                     const ShrunkCertificate& cert) {
    CertReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };
    QuiverSpace space(w, theta);
    const int n = space.ambient();
    if (cert.U.ambient() != n) fail("U ambient mismatch");
    if (cert.BU.ambient() != n) fail("BU ambient mismatch");
    if (cert.c < 0 || cert.c > n) fail("c out of range");
    if (cert.blowup_degree < 1) fail("blow-up degree must be >= 1");
    if (!rep.ok) return rep;
    if (space.image_of(cert.U) != cert.BU) fail("BU does not equal B(U)");
    if (cert.U.dim() - cert.BU.dim() != cert.c) fail("dim U - dim B(U) != c");
    const long nd = static_cast<long>(n) * cert.blowup_degree;
    if (cert.blowup_point.rows() != nd || cert.blowup_point.cols() != nd)
        fail("blow-up point shape mismatch");
    else {
        if (!space.contains_point(cert.blowup_point, cert.blowup_degree))
            fail("blow-up point is not in the blown-up space");
        if (rank_of(cert.blowup_point) != cert.blowup_rank) fail("blow-up rank mismatch");
        if (detail::ceil_div(cert.blowup_rank, cert.blowup_degree) != n - cert.c)
            fail("ceil(r/d) != n - c");
    }
    return rep;
}

}  // namespace qstab
