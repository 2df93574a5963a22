#include "qstab/rep.hpp"

namespace qstab {

void validate_representation(const Representation& m) {
    if (static_cast<int>(m.dims.size()) != m.quiver.num_vertices())
        throw InputError("dims length does not match vertex count");
    for (int d : m.dims)
        if (d < 0) throw InputError("negative dimension");
    if (static_cast<int>(m.maps.size()) != m.quiver.num_arrows())
        throw InputError("maps length does not match arrow count");
    for (int a = 0; a < m.quiver.num_arrows(); ++a) {
        const Arrow& ar = m.quiver.arrow(a);
        if (m.maps[a].rows() != m.dims[ar.head] || m.maps[a].cols() != m.dims[ar.tail])
            throw InputError("map shape mismatch on arrow '" + ar.id + "'");
    }
}

long weight_of(const Weight& w, const std::vector<int>& dims) {
    if (w.w.size() != dims.size()) throw DimensionError("weight/dims length mismatch");
    long total = 0;
    for (size_t v = 0; v < dims.size(); ++v) total += w.w[v] * dims[v];
    return total;
}

long weight_of(const Weight& w, const Representation& m) { return weight_of(w, m.dims); }

long weight_of(const Weight& w, const SubRep& s) { return weight_of(w, s.dims()); }

bool kappa_check(const Weight& kappa) {
    for (long k : kappa.w)
        if (k < 1) return false;
    return true;
}

Rat slope(const Weight& theta, const Weight& kappa, const std::vector<int>& dims) {
    if (!kappa_check(kappa)) throw WeightError("kappa must be >= 1 at every vertex");
    bool zero = true;
    for (int d : dims)
        if (d != 0) zero = false;
    if (zero) throw ZeroRepresentationError("slope of the zero representation");
    return rat(weight_of(theta, dims), weight_of(kappa, dims));
}

Weight theta_d(const Weight& theta, const Weight& kappa, const std::vector<int>& dims) {
    if (!kappa_check(kappa)) throw WeightError("kappa must be >= 1 at every vertex");
    const long kd = weight_of(kappa, dims);
    const long td = weight_of(theta, dims);
    Weight out;
    out.w.resize(theta.w.size());
    for (size_t v = 0; v < theta.w.size(); ++v) out.w[v] = kd * theta.w[v] - td * kappa.w[v];
    return out;
}

Mat path_map(const Representation& m, const Path& p) {
    if (p.arrows.empty()) return Mat::identity(m.dims[p.source]);
    Mat acc = m.maps[p.arrows[0]];
    for (size_t k = 1; k < p.arrows.size(); ++k) acc = m.maps[p.arrows[k]] * acc;
    return acc;
}

SubRep zero_subrep(const Representation& m) {
    SubRep s;
    for (int d : m.dims) s.spaces.push_back(Subspace::zero(d));
    return s;
}

SubRep full_subrep(const Representation& m) {
    SubRep s;
    for (int d : m.dims) s.spaces.push_back(Subspace::full(d));
    return s;
}

static void check_parent(const Representation& m, const SubRep& s) {
    if (static_cast<int>(s.spaces.size()) != m.quiver.num_vertices())
        throw ParentMismatchError("subrep vertex count mismatch");
    for (int v = 0; v < m.quiver.num_vertices(); ++v)
        if (s.spaces[v].ambient() != m.dims[v])
            throw ParentMismatchError("subrep ambient mismatch at vertex " + m.quiver.vertex_id(v));
}

bool is_subrep(const Representation& m, const SubRep& s) {
    check_parent(m, s);
    for (int a = 0; a < m.quiver.num_arrows(); ++a) {
        const Arrow& ar = m.quiver.arrow(a);
        if (!contains_vectors(s.spaces[ar.head], m.maps[a] * s.spaces[ar.tail].basis()))
            return false;
    }
    return true;
}

SubRep sum_subreps(const Representation& m, const SubRep& s, const SubRep& t) {
    check_parent(m, s);
    check_parent(m, t);
    SubRep out;
    for (size_t v = 0; v < s.spaces.size(); ++v) out.spaces.push_back(sum(s.spaces[v], t.spaces[v]));
    return out;
}

SubRep intersect_subreps(const Representation& m, const SubRep& s, const SubRep& t) {
    check_parent(m, s);
    check_parent(m, t);
    SubRep out;
    for (size_t v = 0; v < s.spaces.size(); ++v)
        out.spaces.push_back(intersect(s.spaces[v], t.spaces[v]));
    return out;
}

Quotient quotient_rep(const Representation& m, const SubRep& s) {
    if (!is_subrep(m, s)) throw InputError("quotient by a non-invariant family");
    const int nv = m.quiver.num_vertices();
    Quotient q;
    q.rep.quiver = m.quiver;
    q.rep.dims.resize(nv);
    q.proj.resize(nv);
    q.sect.resize(nv);

    // Per vertex: basis change T = [S | C] with C the canonical complement.
    // The projection is the lower block of T^{-1}, the section is C.
    std::vector<Mat> tinv_low(nv);
    for (int v = 0; v < nv; ++v) {
        const int d = m.dims[v];
        const int sd = s.spaces[v].dim();
        const int qd = d - sd;
        q.rep.dims[v] = qd;
        Mat c = complement_basis(s.spaces[v]);
        q.sect[v] = c;
        Mat t = hcat(s.spaces[v].basis(), c);
        // invert via rref of [T | I]
        RrefResult r = rref(hcat(t, Mat::identity(d)));
        if (r.rank != d) throw InternalError("complement basis failed to complete");
        Mat tinv(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) tinv.at(i, j) = r.m.at(i, d + j);
        q.proj[v] = Mat(qd, d);
        for (int i = 0; i < qd; ++i)
            for (int j = 0; j < d; ++j) q.proj[v].at(i, j) = tinv.at(sd + i, j);
    }
    q.rep.maps.resize(m.quiver.num_arrows());
    for (int a = 0; a < m.quiver.num_arrows(); ++a) {
        const Arrow& ar = m.quiver.arrow(a);
        q.rep.maps[a] = q.proj[ar.head] * (m.maps[a] * q.sect[ar.tail]);
    }
    return q;
}

SubRep pull_back(const Representation& m, const SubRep& s, const Quotient& q, const SubRep& t) {
    SubRep out;
    for (int v = 0; v < m.quiver.num_vertices(); ++v) {
        Subspace lifted = Subspace::from_columns(q.sect[v] * t.spaces[v].basis());
        out.spaces.push_back(sum(s.spaces[v], lifted));
    }
    if (!is_subrep(m, out)) throw InternalError("pullback is not invariant");
    return out;
}

Restriction subrep_to_rep(const Representation& m, const SubRep& s) {
    if (!is_subrep(m, s)) throw InputError("restriction to a non-invariant family");
    Restriction r;
    r.rep.quiver = m.quiver;
    r.rep.dims = s.dims();
    for (int v = 0; v < m.quiver.num_vertices(); ++v) r.embed.push_back(s.spaces[v].basis());
    r.rep.maps.resize(m.quiver.num_arrows());
    for (int a = 0; a < m.quiver.num_arrows(); ++a) {
        const Arrow& ar = m.quiver.arrow(a);
        r.rep.maps[a] = coords_in_basis(s.spaces[ar.head], m.maps[a] * s.spaces[ar.tail].basis());
    }
    return r;
}

SubRep embed_subrep(const Representation& parent, const Restriction& r, const SubRep& inner) {
    SubRep out;
    for (int v = 0; v < parent.quiver.num_vertices(); ++v)
        out.spaces.push_back(Subspace::from_columns(r.embed[v] * inner.spaces[v].basis()));
    return out;
}

}  // namespace qstab
