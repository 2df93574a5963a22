#include "qstab/gen.hpp"

#include <algorithm>

#include "qstab/oracles.hpp"

namespace qstab {

namespace {

std::string vname(int i) { return "v" + std::to_string(i + 1); }

Instance gen_general(Rng& rng, const GenSpec& spec) {
    const int nv = static_cast<int>(rng.uniform(2, std::max(2, spec.max_vertices)));
    std::vector<std::string> vertices;
    for (int v = 0; v < nv; ++v) vertices.push_back(vname(v));

    // arrows forward along the vertex order; short hops keep the path count
    // within the complexity budget
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    int aid = 0;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv && j <= i + 3; ++j) {
            if (rng.uniform(0, 99) >= spec.density_pct) continue;
            arrows.emplace_back("a" + std::to_string(++aid), vname(i), vname(j));
            if (rng.uniform(0, 99) < 10)
                arrows.emplace_back("a" + std::to_string(++aid), vname(i), vname(j));
        }

    Instance inst;
    inst.rep.quiver = Quiver(vertices, arrows);
    inst.rep.dims.resize(nv);
    for (int v = 0; v < nv; ++v) inst.rep.dims[v] = static_cast<int>(rng.uniform(1, spec.max_dim));
    inst.rep.dims[static_cast<size_t>(rng.uniform(0, nv - 1))] = 1;
    for (int a = 0; a < inst.rep.quiver.num_arrows(); ++a) {
        const Arrow& ar = inst.rep.quiver.arrow(a);
        Mat m(inst.rep.dims[ar.head], inst.rep.dims[ar.tail]);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rat(rng.uniform(-3, 3));
        inst.rep.maps.push_back(std::move(m));
    }
    inst.theta.w.resize(nv);
    inst.kappa.w.resize(nv);
    for (int v = 0; v < nv; ++v) {
        inst.theta.w[v] = rng.uniform(-spec.omega_max, spec.omega_max);
        inst.kappa.w[v] = rng.uniform(1, spec.kappa_max);
    }
    return inst;
}

Instance gen_bipartite(Rng& rng, const GenSpec& spec) {
    const int nv = std::max(2, spec.max_vertices);
    const int ns = static_cast<int>(rng.uniform(1, nv - 1));
    const int nt = static_cast<int>(rng.uniform(1, std::max(1, nv - ns)));
    std::vector<std::string> vertices;
    for (int v = 0; v < ns + nt; ++v) vertices.push_back(vname(v));

    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    int aid = 0;
    for (int s = 0; s < ns; ++s)
        for (int t = 0; t < nt; ++t)
            if (rng.uniform(0, 99) < spec.density_pct)
                arrows.emplace_back("a" + std::to_string(++aid), vname(s), vname(ns + t));

    Instance inst;
    inst.rep.quiver = Quiver(vertices, arrows);
    inst.rep.dims.resize(ns + nt);
    for (int s = 0; s < ns; ++s) inst.rep.dims[s] = 1;
    for (int t = 0; t < nt; ++t)
        inst.rep.dims[ns + t] = static_cast<int>(rng.uniform(1, spec.max_dim));
    inst.rep.dims[ns] = 1;  // balancing vertex
    for (int a = 0; a < inst.rep.quiver.num_arrows(); ++a) {
        const Arrow& ar = inst.rep.quiver.arrow(a);
        Mat m(inst.rep.dims[ar.head], inst.rep.dims[ar.tail]);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rat(rng.uniform(-3, 3));
        inst.rep.maps.push_back(std::move(m));
    }
    inst.theta.w.assign(ns + nt, 0);
    inst.kappa.w.resize(ns + nt);
    long budget = 0;
    for (int s = 0; s < ns; ++s) {
        inst.theta.w[s] = rng.uniform(1, spec.omega_max);
        budget += inst.theta.w[s];
    }
    for (int t = 1; t < nt; ++t) {
        const int v = ns + t;
        const long cap = std::min(spec.omega_max, budget / inst.rep.dims[v]);
        const long w = cap > 0 ? rng.uniform(0, cap) : 0;
        inst.theta.w[v] = -w;
        budget -= w * inst.rep.dims[v];
    }
    inst.theta.w[ns] = -budget;  // dimension 1, closes the balance
    for (int v = 0; v < ns + nt; ++v) inst.kappa.w[v] = rng.uniform(1, spec.kappa_max);

    if (weight_of(inst.theta, inst.rep.dims) != 0)
        throw InternalError("bipartite generator failed to balance theta");
    if (!oracle_supported(inst.rep, inst.theta))
        throw InternalError("bipartite generator left the oracle class");
    return inst;
}

}  // namespace

Instance gen_instance(const GenSpec& spec, long index) {
    Rng rng(mix_seed(spec.seed, 0x9e0 + static_cast<uint64_t>(index)));
    Instance inst = spec.klass == InstanceClass::general ? gen_general(rng, spec)
                                                         : gen_bipartite(rng, spec);
    validate_representation(inst.rep);
    validate_quiver(inst.rep.quiver);
    return inst;
}

void force_theta_zero(Instance& inst) {
    const long s = weight_of(inst.theta, inst.rep.dims);
    if (s == 0) return;
    for (int v = 0; v < inst.rep.quiver.num_vertices(); ++v)
        if (inst.rep.dims[v] == 1) {
            inst.theta.w[v] -= s;
            return;
        }
    throw InternalError("no dimension-1 vertex available to balance theta");
}

}  // namespace qstab
