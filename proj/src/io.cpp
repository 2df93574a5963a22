#include "qstab/io.hpp"

#include "qstab/oracles.hpp"

namespace qstab {

namespace {

json weight_to_json(const Weight& w, const Quiver& q) {
    json out = json::object();
    for (int v = 0; v < q.num_vertices(); ++v) out[q.vertex_id(v)] = w.w[v];
    return out;
}

Weight weight_from_json(const json& j, const Quiver& q, const std::string& what) {
    if (!j.is_object()) throw InputError(what + " must be an object keyed by vertex id");
    Weight w;
    w.w.assign(q.num_vertices(), 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number_integer())
            throw InputError(what + " values must be integers");
        w.w[q.vertex_index(it.key())] = it.value().get<long>();
    }
    if (j.size() != static_cast<size_t>(q.num_vertices()))
        throw InputError(what + " must assign a value to every vertex");
    return w;
}

json subspace_to_json(const Subspace& s) { return mat_to_json(s.basis()); }

Subspace subspace_from_json(const json& j, int ambient) {
    if (!j.is_array()) throw InputError("subspace basis must be an array");
    int cols = 0;
    if (!j.empty()) {
        if (!j[0].is_array()) throw InputError("subspace basis must be a nested array");
        cols = static_cast<int>(j[0].size());
    }
    return Subspace::from_columns(mat_from_json(j, ambient, cols));
}

}  // namespace

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw InputError("matrix row count mismatch");
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw InputError("matrix column count mismatch");
        for (int c = 0; c < cols; ++c) {
            if (row[c].is_string())
                m.at(i, c) = rat_from_string(row[c].get<std::string>());
            else if (row[c].is_number_integer())
                m.at(i, c) = rat(row[c].get<long>());
            else
                throw InputError("matrix entries must be strings or integers");
        }
    }
    return m;
}

Instance parse_instance(const json& j) {
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    if (!j.contains("quiver")) throw InputError("instance is missing 'quiver'");
    const json& qj = j["quiver"];
    if (!qj.contains("vertices") || !qj["vertices"].is_array())
        throw InputError("quiver is missing 'vertices'");
    std::vector<std::string> vertices;
    for (const auto& v : qj["vertices"]) vertices.push_back(v.get<std::string>());
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    if (qj.contains("arrows"))
        for (const auto& a : qj["arrows"])
            arrows.emplace_back(a.at("id").get<std::string>(), a.at("tail").get<std::string>(),
                                a.at("head").get<std::string>());
    Instance inst;
    inst.rep.quiver = Quiver(vertices, arrows);
    validate_quiver(inst.rep.quiver);

    const json& dims = j.at("dims");
    inst.rep.dims.assign(vertices.size(), 0);
    for (auto it = dims.begin(); it != dims.end(); ++it) {
        const long d = it.value().get<long>();
        if (d < 0) throw InputError("dimensions must be nonnegative");
        inst.rep.dims[inst.rep.quiver.vertex_index(it.key())] = static_cast<int>(d);
    }

    const json maps = j.contains("maps") ? j["maps"] : json::object();
    inst.rep.maps.resize(inst.rep.quiver.num_arrows());
    for (int a = 0; a < inst.rep.quiver.num_arrows(); ++a) {
        const Arrow& ar = inst.rep.quiver.arrow(a);
        const int r = inst.rep.dims[ar.head], c = inst.rep.dims[ar.tail];
        if (maps.contains(ar.id))
            inst.rep.maps[a] = mat_from_json(maps[ar.id], r, c);
        else if (r == 0 || c == 0)
            inst.rep.maps[a] = Mat(r, c);
        else
            throw InputError("missing map for arrow '" + ar.id + "'");
    }
    validate_representation(inst.rep);
    inst.theta = weight_from_json(j.at("theta"), inst.rep.quiver, "theta");
    inst.kappa = weight_from_json(j.at("kappa"), inst.rep.quiver, "kappa");
    return inst;
}

json instance_to_json(const Instance& inst) {
    json out;
    json vertices = json::array();
    for (int v = 0; v < inst.rep.quiver.num_vertices(); ++v)
        vertices.push_back(inst.rep.quiver.vertex_id(v));
    json arrows = json::array();
    for (const Arrow& a : inst.rep.quiver.arrows())
        arrows.push_back({{"id", a.id},
                          {"tail", inst.rep.quiver.vertex_id(a.tail)},
                          {"head", inst.rep.quiver.vertex_id(a.head)}});
    out["quiver"] = {{"vertices", vertices}, {"arrows", arrows}};
    json dims = json::object();
    for (int v = 0; v < inst.rep.quiver.num_vertices(); ++v)
        dims[inst.rep.quiver.vertex_id(v)] = inst.rep.dims[v];
    out["dims"] = std::move(dims);
    json maps = json::object();
    for (int a = 0; a < inst.rep.quiver.num_arrows(); ++a)
        maps[inst.rep.quiver.arrow(a).id] = mat_to_json(inst.rep.maps[a]);
    out["maps"] = std::move(maps);
    out["theta"] = weight_to_json(inst.theta, inst.rep.quiver);
    out["kappa"] = weight_to_json(inst.kappa, inst.rep.quiver);
    return out;
}

json certificate_to_json(const ShrunkCertificate& cert, const Weight& theta_used,
                         const Quiver& quiver, long scale) {
    json out;
    out["n"] = cert.U.ambient();
    out["theta"] = weight_to_json(theta_used, quiver);
    out["scale"] = scale;
    out["c"] = cert.c;
    out["U"] = mat_to_json(cert.U.basis());
    out["BU"] = mat_to_json(cert.BU.basis());
    out["blowup_degree"] = cert.blowup_degree;
    out["blowup_point"] = mat_to_json(cert.blowup_point);
    out["blowup_rank"] = cert.blowup_rank;
    return out;
}

ParsedCertificate certificate_from_json(const json& in, const Quiver* quiver) {
    const json& j = in.contains("certificate") ? in["certificate"] : in;
    ParsedCertificate out;
    const int n = j.at("n").get<int>();
    out.cert.c = j.at("c").get<long>();
    out.cert.U = subspace_from_json(j.at("U"), n);
    out.cert.BU = subspace_from_json(j.at("BU"), n);
    out.cert.blowup_degree = j.at("blowup_degree").get<int>();
    const int nd = n * out.cert.blowup_degree;
    out.cert.blowup_point = mat_from_json(j.at("blowup_point"), nd, nd);
    out.cert.blowup_rank = j.at("blowup_rank").get<long>();
    if (j.contains("scale")) out.scale = j.at("scale").get<long>();
    if (j.contains("theta") && quiver) {
        out.theta = weight_from_json(j.at("theta"), *quiver, "certificate theta");
        out.has_theta = true;
    }
    return out;
}

json check_output(const Instance& inst, uint64_t seed, const DiscOptions& opt) {
    DiscWitness fg = oracle_fg(inst.rep, inst.theta, inst.kappa, seed, opt);
    json out;
    out["G"] = fg.value;
    out["semistable"] = fg.value == 0;
    out["theta_d"] = weight_to_json(theta_d(inst.theta, inst.kappa, inst.rep.dims),
                                    inst.rep.quiver);
    return out;
}

json disc_output(const Instance& inst, uint64_t seed, const DiscOptions& opt) {
    DiscWitness dw = disc_witness(inst.rep, inst.theta, seed, opt);
    json out;
    out["value"] = dw.value;
    json witness = json::object();
    for (int v = 0; v < inst.rep.quiver.num_vertices(); ++v)
        witness[inst.rep.quiver.vertex_id(v)] = subspace_to_json(dw.witness.spaces[v]);
    out["witness"] = std::move(witness);
    out["certificate"] =
        certificate_to_json(dw.certificate, dw.theta_used, inst.rep.quiver, dw.scale);
    return out;
}

json hn_output(const Instance& inst, uint64_t seed, const DiscOptions& opt) {
    Filtration f = hn_filtration(inst.rep, inst.theta, inst.kappa, seed, opt);
    HnReport rep = verify_hn(inst.rep, f, inst.theta, inst.kappa, mix_seed(seed, 0x7e), opt);
    json out;
    json steps = json::array();
    for (int i = 0; i < f.length(); ++i) {
        json step;
        json dims = json::object(), bases = json::object();
        for (int v = 0; v < inst.rep.quiver.num_vertices(); ++v) {
            dims[inst.rep.quiver.vertex_id(v)] = f.step_dims[i][v];
            bases[inst.rep.quiver.vertex_id(v)] = subspace_to_json(f.steps[i].spaces[v]);
        }
        step["dims"] = std::move(dims);
        step["bases"] = std::move(bases);
        step["theta"] = f.step_theta[i];
        step["kappa"] = f.step_kappa[i];
        step["quotient_slope"] = rat_to_string(f.quotient_slopes[i]);
        steps.push_back(std::move(step));
    }
    out["steps"] = std::move(steps);
    json slopes = json::array();
    for (const Rat& s : f.quotient_slopes) slopes.push_back(rat_to_string(s));
    out["slopes"] = std::move(slopes);
    out["verify"] = {{"ok", rep.ok}, {"violations", rep.violations}};
    return out;
}

json kempf_output(const Instance& inst, uint64_t seed, LimitConvention conv,
                  const DiscOptions& opt) {
    Filtration f = hn_filtration(inst.rep, inst.theta, inst.kappa, seed, opt);
    if (f.length() <= 1) throw InputError("kempf: the representation is semistable");
    KempfResult k = kempf_ops(inst.rep, f, inst.theta, inst.kappa);
    json out;
    json u = json::array();
    for (const Rat& x : k.u) u.push_back(rat_to_string(x));
    out["u"] = std::move(u);
    json ray = json::object(), ray_flat = json::array();
    for (int v = 0; v < inst.rep.quiver.num_vertices(); ++v) {
        json vw = json::array();
        for (const Rat& x : k.ray.weights[v]) {
            vw.push_back(rat_to_string(x));
            ray_flat.push_back(rat_to_string(x));
        }
        ray[inst.rep.quiver.vertex_id(v)] = std::move(vw);
    }
    out["ray"] = std::move(ray);
    out["ray_flat"] = std::move(ray_flat);
    auto prim = primitive_lattice_point(k.ray);
    json primitive = json::object(), primitive_flat = json::array();
    for (int v = 0; v < inst.rep.quiver.num_vertices(); ++v) {
        json vw = json::array();
        for (long x : prim[v]) {
            vw.push_back(x);
            primitive_flat.push_back(x);
        }
        primitive[inst.rep.quiver.vertex_id(v)] = std::move(vw);
    }
    out["primitive"] = std::move(primitive);
    out["primitive_flat"] = std::move(primitive_flat);
    out["instability_sq"] = rat_to_string(k.instability_sq);
    json adapted = json::object();
    for (int v = 0; v < inst.rep.quiver.num_vertices(); ++v)
        adapted[inst.rep.quiver.vertex_id(v)] = mat_to_json(k.adapted_basis[v]);
    out["adapted_basis"] = std::move(adapted);

    // constraints in the adapted coordinates certify the limit of the
    // constructed 1-PS; the original-coordinate system is reported too
    Representation ad = adapted_rep(inst.rep, k);
    LimitCheck lc = limit_exists(ad, k.ray.weights);
    json cons = json::array();
    for (size_t i = 0; i < lc.constraints.size(); ++i) {
        const LimitConstraint& c = lc.constraints[i];
        cons.push_back({{"arrow", inst.rep.quiver.arrow(c.arrow).id},
                        {"row", c.row + 1},
                        {"col", c.col + 1},
                        {"expr", render_constraint(ad, c, conv)},
                        {"satisfied", static_cast<bool>(lc.satisfied[i])}});
    }
    out["adapted_constraints"] = std::move(cons);
    out["limit_exists"] = lc.exists;
    json original = json::array();
    for (const LimitConstraint& c : limit_constraints(inst.rep))
        original.push_back({{"arrow", inst.rep.quiver.arrow(c.arrow).id},
                            {"row", c.row + 1},
                            {"col", c.col + 1},
                            {"expr", render_constraint(inst.rep, c, conv)}});
    out["original_constraints"] = std::move(original);
    out["convention"] = conv == LimitConvention::tinf ? "tinf" : "t0";

    std::vector<Rat> masses;
    for (int i = 0; i < f.length(); ++i)
        masses.push_back(rat(weight_of(inst.kappa, f.quotient_dims[i])));
    // fixed sampling stream: the self-check must not vary with the run seed
    KempfFnReport kf = kempf_function_check(k.u, masses, 200, 0x6b);
    out["kempf_function"] = {{"samples", kf.samples},
                             {"violations", kf.violations},
                             {"proportional_hits", kf.proportional_hits},
                             {"max_ratio", rat_to_string(kf.max_ratio)}};
    return out;
}

json oracle_output(const Instance& inst) {
    json out;
    out["disc"] = bipartite_disc_oracle(inst.rep, inst.theta);
    SlopeBrute sb = slope_brute(inst.rep, inst.theta, inst.kappa);
    out["best_slope"] = rat_to_string(sb.best);
    json dims = json::object();
    for (int v = 0; v < inst.rep.quiver.num_vertices(); ++v)
        dims[inst.rep.quiver.vertex_id(v)] = sb.maximizer.spaces[v].dim();
    out["slope_maximizer_dims"] = std::move(dims);
    return out;
}

json verify_certificate_output(const Instance& inst, const json& cert_json) {
    ParsedCertificate pc = certificate_from_json(cert_json, &inst.rep.quiver);
    if (!pc.has_theta) throw InputError("certificate does not record its weight");
    CertReport rep = verify_quiver_certificate(inst.rep, pc.theta, pc.cert);
    json out;
    out["ok"] = rep.ok;
    out["failures"] = rep.failures;
    return out;
}

std::string dump_deterministic(const json& j) { return j.dump(2); }

}  // namespace qstab
