#include "qstab/kempf.hpp"

namespace qstab {

WeightedFiltration make_weighted_filtration(Filtration f, std::vector<Rat> gammas) {
    if (gammas.size() != f.steps.size())
        throw InputError("weighted filtration: one weight per step required");
    for (size_t i = 1; i < gammas.size(); ++i)
        if (!(gammas[i - 1] > gammas[i]))
            throw InputError("weighted filtration weights must strictly decrease");
    WeightedFiltration wf;
    wf.filtration = std::move(f);
    wf.gammas = std::move(gammas);
    return wf;
}

Rat hm_pairing(const WeightedFiltration& wf, const Weight& theta) {
    const Filtration& f = wf.filtration;
    if (weight_of(theta, f.step_dims.back()) != 0)
        throw WeightError("hm_pairing requires theta(M) = 0");
    Rat by_quotients = 0;
    for (int i = 0; i < f.length(); ++i)
        by_quotients += wf.gammas[i] * rat(weight_of(theta, f.quotient_dims[i]));
    Rat telescoped = 0;
    for (int i = 0; i + 1 < f.length(); ++i)
        telescoped += (wf.gammas[i] - wf.gammas[i + 1]) * rat(weight_of(theta, f.step_dims[i]));
    if (by_quotients != telescoped)
        throw InternalError("Hilbert-Mumford pairing forms disagree");
    return by_quotients;
}

Rat norm_sq(const WeightedFiltration& wf, const Weight& kappa) {
    if (!kappa_check(kappa)) throw WeightError("kappa must be >= 1 at every vertex");
    const Filtration& f = wf.filtration;
    Rat grouped = 0;
    for (int i = 0; i < f.length(); ++i)
        grouped += wf.gammas[i] * wf.gammas[i] * rat(weight_of(kappa, f.quotient_dims[i]));
    Rat entrywise = 0;
    for (size_t v = 0; v < kappa.w.size(); ++v)
        for (int i = 0; i < f.length(); ++i)
            entrywise += rat(kappa.w[v]) * wf.gammas[i] * wf.gammas[i] *
                         rat(f.quotient_dims[i][static_cast<int>(v)]);
    if (grouped != entrywise) throw InternalError("norm forms disagree");
    return grouped;
}

KempfResult kempf_ops(const Representation& m, const Filtration& f, const Weight& theta,
                      const Weight& kappa) {
    if (f.length() <= 1)
        throw InputError("kempf_ops requires an unstable representation (nontrivial filtration)");
    if (!kappa_check(kappa)) throw WeightError("kappa must be >= 1 at every vertex");
    KempfResult k;
    const long theta_m = f.step_theta.back();
    const long kappa_m = f.step_kappa.back();
    for (int i = 0; i < f.length(); ++i) {
        if (theta_m == 0)
            k.u.push_back(f.quotient_slopes[i]);
        else
            k.u.push_back(rat(kappa_m) * f.quotient_slopes[i] - rat(theta_m));
    }
    k.instability_sq = 0;
    for (int i = 0; i < f.length(); ++i)
        k.instability_sq += k.u[i] * k.u[i] * rat(weight_of(kappa, f.quotient_dims[i]));

    const int nv = m.quiver.num_vertices();
    k.adapted_basis.resize(nv);
    k.layers.resize(nv);
    k.ray.weights.resize(nv);
    for (int v = 0; v < nv; ++v) {
        Mat basis(m.dims[v], m.dims[v]);
        int out = 0;
        Subspace prev = Subspace::zero(m.dims[v]);
        for (int i = 0; i < f.length(); ++i) {
            const Subspace& cur = f.steps[i].spaces[v];
            // canonical extension: complement of prev inside cur
            Mat prev_in_cur = coords_in_basis(cur, prev.basis());
            Mat ext = cur.basis() * complement_basis(image(prev_in_cur));
            for (int c = 0; c < ext.cols(); ++c) {
                for (int r = 0; r < m.dims[v]; ++r) basis.at(r, out) = ext.at(r, c);
                k.layers[v].push_back(i + 1);
                k.ray.weights[v].push_back(k.u[i]);
                ++out;
            }
            prev = cur;
        }
        if (out != m.dims[v]) throw InternalError("adapted basis is incomplete");
        k.adapted_basis[v] = std::move(basis);
    }
    return k;
}

std::vector<std::vector<long>> primitive_lattice_point(const OneParameterSubgroup& ray) {
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& vw : ray.weights)
        for (const Rat& x : vw) {
            if (x == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
        }
    for (const auto& vw : ray.weights)
        for (const Rat& x : vw) {
            if (x == 0) continue;
            Int scaled = x.get_num() * (den_lcm / x.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
    if (num_gcd == 0) throw InputError("primitive lattice point of the zero ray");
    std::vector<std::vector<long>> out;
    for (const auto& vw : ray.weights) {
        std::vector<long> row;
        for (const Rat& x : vw) {
            Int scaled = x.get_num() * (den_lcm / x.get_den());
            row.push_back(to_long(Int(scaled / num_gcd)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<LimitConstraint> limit_constraints(const Representation& m) {
    std::vector<LimitConstraint> cs;
    for (int a = 0; a < m.quiver.num_arrows(); ++a)
        for (int i = 0; i < m.maps[a].rows(); ++i)
            for (int j = 0; j < m.maps[a].cols(); ++j)
                if (m.maps[a].at(i, j) != 0) cs.push_back({a, i, j});
    return cs;
}

LimitCheck limit_exists(const Representation& m, const std::vector<std::vector<Rat>>& lambda) {
    if (static_cast<int>(lambda.size()) != m.quiver.num_vertices())
        throw DimensionError("limit_exists: lambda vertex count mismatch");
    for (int v = 0; v < m.quiver.num_vertices(); ++v)
        if (static_cast<int>(lambda[v].size()) != m.dims[v])
            throw DimensionError("limit_exists: lambda length mismatch at vertex " +
                                 m.quiver.vertex_id(v));
    LimitCheck out;
    out.constraints = limit_constraints(m);
    for (const LimitConstraint& c : out.constraints) {
        const Arrow& ar = m.quiver.arrow(c.arrow);
        const bool ok = lambda[ar.head][c.row] - lambda[ar.tail][c.col] >= 0;
        out.satisfied.push_back(ok);
        if (!ok) out.exists = false;
    }
    return out;
}

std::string render_constraint(const Representation& m, const LimitConstraint& c,
                              LimitConvention conv) {
    std::vector<long> slot_base(m.dims.size() + 1, 0);
    for (size_t v = 0; v < m.dims.size(); ++v) slot_base[v + 1] = slot_base[v] + m.dims[v];
    const Arrow& ar = m.quiver.arrow(c.arrow);
    const long head = slot_base[ar.head] + c.row + 1;
    const long tail = slot_base[ar.tail] + c.col + 1;
    if (conv == LimitConvention::tinf)
        return "-a" + std::to_string(tail) + "+a" + std::to_string(head) + ">=0";
    return "a" + std::to_string(head) + "-a" + std::to_string(tail) + ">=0";
}

KempfFnReport kempf_function_check(const std::vector<Rat>& u, const std::vector<Rat>& masses,
                                   int samples, uint64_t seed) {
    if (u.size() != masses.size()) throw DimensionError("u/masses length mismatch");
    const int r = static_cast<int>(u.size());
    auto dot = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        Rat s = 0;
        for (int i = 0; i < r; ++i) s += a[i] * b[i] * masses[i];
        return s;
    };
    const Rat uu = dot(u, u);
    KempfFnReport rep;
    rep.max_ratio = 0;
    Rng rng(mix_seed(seed, 0x6b));
    for (int s = 0; s < samples; ++s) {
        std::vector<Rat> x(r);
        Rat cur = rat(rng.uniform(-5, 10), rng.uniform(1, 4));
        for (int i = 0; i < r; ++i) {
            x[i] = cur;
            cur -= rat(rng.uniform(1, 5), rng.uniform(1, 3));
        }
        const Rat xu = dot(x, u);
        const Rat xx = dot(x, x);
        bool proportional = true;
        for (int i = 0; i < r && proportional; ++i)
            for (int j = i + 1; j < r; ++j)
                if (x[i] * u[j] != x[j] * u[i]) {
                    proportional = false;
                    break;
                }
        const Rat lhs = xu * xu;
        const Rat rhs = xx * uu;
        ++rep.samples;
        if (proportional) {
            ++rep.proportional_hits;
            if (lhs != rhs) ++rep.violations;
        } else if (!(lhs < rhs)) {
            ++rep.violations;
        }
        if (xx != 0 && uu != 0) {
            Rat ratio = lhs / (xx * uu);
            if (ratio > rep.max_ratio) rep.max_ratio = ratio;
        }
    }
    return rep;
}

Representation adapted_rep(const Representation& m, const KempfResult& k) {
    Representation out;
    out.quiver = m.quiver;
    out.dims = m.dims;
    out.maps.resize(m.quiver.num_arrows());
    std::vector<Mat> inv(m.quiver.num_vertices());
    for (int v = 0; v < m.quiver.num_vertices(); ++v) {
        const int d = m.dims[v];
        RrefResult r = rref(hcat(k.adapted_basis[v], Mat::identity(d)));
        if (r.rank != d) throw InternalError("adapted basis is singular");
        inv[v] = Mat(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) inv[v].at(i, j) = r.m.at(i, d + j);
    }
    for (int a = 0; a < m.quiver.num_arrows(); ++a) {
        const Arrow& ar = m.quiver.arrow(a);
        out.maps[a] = inv[ar.head] * (m.maps[a] * k.adapted_basis[ar.tail]);
    }
    return out;
}

}  // namespace qstab
