#include "qstab/hn.hpp"

#include <algorithm>

namespace qstab {

namespace {

struct ScssResult {
    Representation rep;       // the scss in its own bases
    std::vector<Mat> embed;   // into the argument's coordinates
    bool whole = false;       // scss == argument
};

// Iterates N <- F(N) until G(N) = 0, starting from the given FG value of m.
ScssResult scss_iterate(const Representation& m, const Weight& theta, const Weight& kappa,
                        uint64_t seed, const DiscOptions& opt, DiscWitness first) {
    ScssResult res;
    res.rep = m;
    res.embed.clear();
    for (int v = 0; v < m.quiver.num_vertices(); ++v) res.embed.push_back(Mat::identity(m.dims[v]));
    if (first.value == 0) {
        res.whole = true;
        return res;
    }
    DiscWitness fg = std::move(first);
    long total_dim = 0;
    for (int d : m.dims) total_dim += d;
    for (long iter = 0;; ++iter) {
        if (iter > total_dim + 1) throw InternalError("scss iteration failed to terminate");
        if (fg.witness.dims() == res.rep.dims)
            throw InternalError("positive-discrepancy witness is not proper");
        Restriction restr = subrep_to_rep(res.rep, fg.witness);
        for (int v = 0; v < m.quiver.num_vertices(); ++v)
            res.embed[v] = res.embed[v] * restr.embed[v];
        res.rep = std::move(restr.rep);
        fg = oracle_fg(res.rep, theta, kappa, mix_seed(seed, 0x515 + iter), opt);
        if (fg.value == 0) return res;
    }
}

SubRep embed_to_subrep(const Representation& parent, const ScssResult& r) {
    SubRep s;
    for (int v = 0; v < parent.quiver.num_vertices(); ++v)
        s.spaces.push_back(Subspace::from_columns(r.embed[v]));
    return s;
}

}  // namespace

SubRep scss(const Representation& m, const Weight& theta, const Weight& kappa, uint64_t seed,
            const DiscOptions& opt) {
    validate_representation(m);
    if (m.is_zero()) throw ZeroRepresentationError("scss of the zero representation");
    DiscWitness fg = oracle_fg(m, theta, kappa, mix_seed(seed, 0x5c0), opt);
    ScssResult r = scss_iterate(m, theta, kappa, seed, opt, std::move(fg));
    SubRep s = embed_to_subrep(m, r);
    if (!is_subrep(m, s)) throw InternalError("scss is not invariant");
    if (slope(theta, kappa, s.dims()) < slope(theta, kappa, m.dims))
        throw InternalError("scss slope fell below the ambient slope");
    return s;
}

Filtration hn_filtration(const Representation& m, const Weight& theta, const Weight& kappa,
                         uint64_t seed, const DiscOptions& opt) {
    validate_representation(m);
    if (m.is_zero()) throw ZeroRepresentationError("HN filtration of the zero representation");
    if (!kappa_check(kappa)) throw WeightError("kappa must be >= 1 at every vertex");

    struct Level {
        Representation parent;
        SubRep sub;
        Quotient qt;
    };
    std::vector<Level> levels;
    Representation cur = m;
    Filtration f;
    for (long outer = 0;; ++outer) {
        long total_dim = 0;
        for (int d : m.dims) total_dim += d;
        if (outer > total_dim + 1) throw InternalError("HN outer loop failed to terminate");
        DiscWitness fg = oracle_fg(cur, theta, kappa, mix_seed(seed, 0x0a1 + outer), opt);
        if (fg.value == 0) break;
        ScssResult sr =
            scss_iterate(cur, theta, kappa, mix_seed(seed, 0xba2 + outer), opt, std::move(fg));
        SubRep s = embed_to_subrep(cur, sr);
        // lift through the quotient stack into m's coordinates
        SubRep lifted = s;
        for (auto it = levels.rbegin(); it != levels.rend(); ++it)
            lifted = pull_back(it->parent, it->sub, it->qt, lifted);
        f.steps.push_back(std::move(lifted));
        Quotient qt = quotient_rep(cur, s);
        Representation next = qt.rep;
        levels.push_back({std::move(cur), std::move(s), std::move(qt)});
        cur = std::move(next);
    }
    f.steps.push_back(full_subrep(m));

    std::vector<int> prev(m.dims.size(), 0);
    for (const SubRep& s : f.steps) {
        std::vector<int> d = s.dims();
        f.step_dims.push_back(d);
        f.step_theta.push_back(weight_of(theta, d));
        f.step_kappa.push_back(weight_of(kappa, d));
        std::vector<int> qd(d.size());
        for (size_t v = 0; v < d.size(); ++v) qd[v] = d[v] - prev[v];
        f.quotient_slopes.push_back(slope(theta, kappa, qd));
        f.quotient_dims.push_back(std::move(qd));
        prev = std::move(d);
    }
    for (size_t i = 1; i < f.quotient_slopes.size(); ++i)
        if (!(f.quotient_slopes[i - 1] > f.quotient_slopes[i]))
            throw InternalError("HN quotient slopes are not strictly decreasing");
    return f;
}

Representation filtration_quotient(const Representation& m, const Filtration& f, int i) {
    Restriction top = subrep_to_rep(m, f.steps[i]);
    if (i == 0) return top.rep;
    SubRep below;
    for (int v = 0; v < m.quiver.num_vertices(); ++v)
        below.spaces.push_back(Subspace::from_columns(
            coords_in_basis(f.steps[i].spaces[v], f.steps[i - 1].spaces[v].basis())));
    return quotient_rep(top.rep, below).rep;
}

HnReport verify_hn(const Representation& m, const Filtration& f, const Weight& theta,
                   const Weight& kappa, uint64_t seed, const DiscOptions& opt) {
    HnReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };
    if (f.steps.empty()) {
        fail("empty filtration");
        return rep;
    }
    // (c) proper invariant inclusions ending at the full representation
    if (f.steps.back().dims() != m.dims) fail("last step is not the full representation");
    std::vector<int> prev(m.dims.size(), 0);
    for (int i = 0; i < f.length(); ++i) {
        if (!is_subrep(m, f.steps[i])) fail("step " + std::to_string(i + 1) + " is not invariant");
        std::vector<int> d = f.steps[i].dims();
        long before = 0, after = 0;
        for (size_t v = 0; v < d.size(); ++v) {
            before += prev[v];
            after += d[v];
        }
        if (after <= before) fail("step " + std::to_string(i + 1) + " is not a proper extension");
        if (i > 0 && !std::equal(prev.begin(), prev.end(), d.begin(),
                                 [](int a, int b) { return a <= b; }))
            fail("step dimensions are not monotone at step " + std::to_string(i + 1));
        if (i > 0) {
            bool inc = true;
            for (int v = 0; v < m.quiver.num_vertices(); ++v)
                if (!contains(f.steps[i].spaces[v], f.steps[i - 1].spaces[v])) inc = false;
            if (!inc) fail("step " + std::to_string(i) + " is not contained in its successor");
        }
        prev = std::move(d);
    }
    if (!rep.ok) return rep;
    // (a) strict slope decrease
    std::vector<Rat> slopes;
    prev.assign(m.dims.size(), 0);
    for (int i = 0; i < f.length(); ++i) {
        std::vector<int> d = f.steps[i].dims();
        std::vector<int> qd(d.size());
        for (size_t v = 0; v < d.size(); ++v) qd[v] = d[v] - prev[v];
        slopes.push_back(slope(theta, kappa, qd));
        prev = std::move(d);
    }
    for (size_t i = 1; i < slopes.size(); ++i)
        if (!(slopes[i - 1] > slopes[i]))
            fail("quotient slopes do not strictly decrease at step " + std::to_string(i + 1));
    // (b) each quotient is semistable under its own theta_d
    for (int i = 0; i < f.length(); ++i) {
        Representation q = filtration_quotient(m, f, i);
        DiscWitness fg = oracle_fg(q, theta, kappa, mix_seed(seed, 0xe0 + i), opt);
        if (fg.value != 0)
            fail("quotient " + std::to_string(i + 1) + " is unstable (G = " +
                 std::to_string(fg.value) + ")");
    }
    return rep;
}

std::pair<int, SubRep> theorem_a_term(const Representation& m, const Filtration& f,
                                      const Weight& theta, uint64_t seed, const DiscOptions& opt) {
    if (weight_of(theta, m.dims) != 0) throw WeightError("theorem_a_term requires theta(M) = 0");
    if (f.length() <= 1) throw InputError("theorem_a_term requires an unstable representation");
    int l = 0;
    while (l < f.length() && f.quotient_slopes[l] > 0) ++l;
    if (l == 0 || l >= f.length())
        throw InternalError("sign change index does not exist despite theta(M) = 0");
    DiscWitness dw = disc_witness(m, theta, seed, opt);
    if (f.step_theta[l - 1] != dw.value)
        throw InternalError("filtration term does not attain the discrepancy");
    return {l, f.steps[l - 1]};
}

}  // namespace qstab
