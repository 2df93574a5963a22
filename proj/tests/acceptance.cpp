// Acceptance suite: one pass/fail line per criterion, exact checks throughout.

#include <atomic>
#include <chrono>
#include <future>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>

#include "qstab/io.hpp"
#include "qstab/oracles.hpp"
#include "testutil.hpp"

using namespace qstab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// shared verdict for parallel checks
struct Verdict {
    std::atomic<bool> ok{true};
    std::atomic<long> count{0};
    std::mutex mu;
    std::string why;
    void fail(const std::string& w) {
        ok = false;
        std::lock_guard<std::mutex> lock(mu);
        if (why.empty()) why = w;
    }
};

// map over [0, n) on two workers
template <class Fn>
void parallel_for(long n, Fn fn) {
    auto half = std::async(std::launch::async, [&] {
        for (long i = 0; i < n; i += 2) fn(i);
    });
    for (long i = 1; i < n; i += 2) fn(i);
    half.get();
}

struct InstanceData {
    Instance inst;
    Instance balanced;  // theta adjusted so theta(M) = 0
    std::string hn[3];
    bool hn_ok = false;
    std::string hn_violation;
    bool unstable = false;       // under the instance's own slope
    std::string kempf[3];
    bool kempf_ok = true;
    long disc_value[3] = {0, 0, 0};
    bool balanced_unstable = false;
    std::string error;
};

void criterion1() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream why;
    try {
        Instance inst = testutil::sec5_instance();

        DiscWitness dw = disc_witness(inst.rep, inst.theta, 0);
        if (dw.value != 4) ok = false, why << "disc=" << dw.value << "; ";
        std::vector<SubRep> expected = {
            testutil::sec5_sp(inst, {1}), testutil::sec5_sp(inst, {1, 2}),
            testutil::sec5_sp(inst, {1, 3}), testutil::sec5_sp(inst, {1, 2, 3})};
        bool matched = false;
        for (const SubRep& e : expected)
            if (dw.witness == e) matched = true;
        if (!matched) ok = false, why << "witness not among the four; ";

        Filtration f = hn_filtration(inst.rep, inst.theta, inst.kappa, 0);
        if (f.length() != 3 || f.step_dims[0] != std::vector<int>{0, 1, 1, 0, 1} ||
            f.step_dims[1] != std::vector<int>{1, 1, 1, 1, 3} ||
            f.step_dims[2] != std::vector<int>{1, 1, 1, 1, 4})
            ok = false, why << "HN dims; ";
        if (!(f.steps[0] == expected[0]) || !(f.steps[1] == expected[3]) ||
            !(f.steps[2] == full_subrep(inst.rep)))
            ok = false, why << "HN subspaces; ";
        if (f.quotient_slopes != std::vector<Rat>{rat(4, 3), rat(0), rat(-4)})
            ok = false, why << "slopes; ";
        SubRep m1 = scss(inst.rep, inst.theta, inst.kappa, 0);
        if (!(m1 == expected[0])) ok = false, why << "scss; ";

        KempfResult k = kempf_ops(inst.rep, f, inst.theta, inst.kappa);
        if (k.u != std::vector<Rat>{rat(4, 3), rat(0), rat(-4)}) ok = false, why << "u; ";
        std::vector<Rat> flat;
        for (const auto& vw : k.ray.weights)
            for (const Rat& x : vw) flat.push_back(x);
        if (flat != std::vector<Rat>{rat(0), rat(4, 3), rat(4, 3), rat(0), rat(4, 3), rat(0),
                                     rat(0), rat(-4)})
            ok = false, why << "ray; ";
        std::vector<long> prim_flat;
        for (const auto& vw : primitive_lattice_point(k.ray))
            for (long x : vw) prim_flat.push_back(x);
        if (prim_flat != std::vector<long>{0, 1, 1, 0, 1, 0, 0, -3})
            ok = false, why << "primitive; ";
        if (k.instability_sq != rat(64, 3)) ok = false, why << "instability_sq; ";

        std::set<std::string> exprs;
        for (const LimitConstraint& c : limit_constraints(inst.rep))
            exprs.insert(render_constraint(inst.rep, c, LimitConvention::tinf));
        if (exprs != std::set<std::string>{"-a1+a6>=0", "-a2+a5>=0", "-a3+a5>=0", "-a4+a7>=0"})
            ok = false, why << "constraints; ";
    } catch (const std::exception& e) {
        ok = false;
        why << "exception: " << e.what();
    }
    const double dt = seconds_since(t0);
    if (dt >= 10.0) ok = false, why << "took " << dt << "s";
    std::ostringstream d;
    d << "worked example, exact; " << dt << "s";
    report("criterion 1: golden suite", ok, ok ? d.str() : why.str());
}

}  // namespace

int main() {
    criterion1();

    // shared pool for criteria 2, 3, 7, 8
    const long POOL = 200;
    std::vector<InstanceData> data(POOL);
    GenSpec spec;
    spec.seed = 2026;

    auto t2 = Clock::now();
    parallel_for(POOL, [&](long i) {
        InstanceData& d = data[i];
        try {
            d.inst = gen_instance(spec, i);
            json out = hn_output(d.inst, 0);
            d.hn[0] = dump_deterministic(out);
            d.hn_ok = out["verify"]["ok"].get<bool>();
            if (!d.hn_ok && !out["verify"]["violations"].empty())
                d.hn_violation = out["verify"]["violations"][0].get<std::string>();
            d.unstable = out["steps"].size() > 1;
        } catch (const std::exception& e) {
            d.hn_ok = false;
            d.error = e.what();
        }
    });
    const double dt2 = seconds_since(t2);
    {
        bool ok = dt2 <= 300.0;
        std::string why;
        for (const InstanceData& d : data)
            if (!d.hn_ok) {
                ok = false;
                why = d.error.empty() ? d.hn_violation : d.error;
                break;
            }
        std::ostringstream det;
        det << POOL << " instances, strict slope decrease + semistable quotients; " << dt2 << "s";
        report("criterion 2: HN definition properties", ok, ok ? det.str() : why);
    }

    {  // criterion 3: Theorem A on the unstable balanced subset, two kappas
        Verdict v3;
        parallel_for(POOL, [&](long i) {
            InstanceData& d = data[i];
            try {
                d.balanced = d.inst;
                force_theta_zero(d.balanced);
                Filtration f =
                    hn_filtration(d.balanced.rep, d.balanced.theta, d.balanced.kappa, 3000 + i);
                d.balanced_unstable = f.length() > 1 && f.quotient_slopes[0] > 0;
                if (!d.balanced_unstable) return;
                ++v3.count;
                auto [l, term] = theorem_a_term(d.balanced.rep, f, d.balanced.theta, 4000 + i);
                (void)l;
                Weight kappa2 = d.balanced.kappa;
                for (long& kv : kappa2.w) kv = 2 * kv + 1;
                for (const Weight& kap : {d.balanced.kappa, kappa2}) {
                    SubRep m1 = scss(d.balanced.rep, d.balanced.theta, kap, 5000 + i);
                    if (weight_of(d.balanced.theta, m1) <= 0) continue;
                    for (int v = 0; v < d.balanced.rep.quiver.num_vertices(); ++v)
                        if (!contains(term.spaces[v], m1.spaces[v]))
                            v3.fail("scss not contained in the optimal HN term");
                }
            } catch (const std::exception& e) {
                v3.fail(e.what());
            }
        });
        std::ostringstream det;
        det << v3.count << " unstable balanced instances, two kappas each";
        report("criterion 3: Theorem A properties", v3.ok, v3.ok ? det.str() : v3.why);
    }

    {  // criterion 4: oracle equivalence on bipartite instances
        Verdict v4;
        GenSpec bspec;
        bspec.seed = 777;
        bspec.klass = InstanceClass::bipartite;
        parallel_for(100, [&](long i) {
            try {
                Instance inst = gen_instance(bspec, i);
                DiscWitness dw = disc_witness(inst.rep, inst.theta, 100 + i);
                long oracle = bipartite_disc_oracle(inst.rep, inst.theta);
                if (dw.value != oracle) v4.fail("disc mismatch at index " + std::to_string(i));
                SubRep m1 = scss(inst.rep, inst.theta, inst.kappa, 200 + i);
                SlopeBrute sb = slope_brute(inst.rep, inst.theta, inst.kappa);
                if (slope(inst.theta, inst.kappa, m1.dims()) != sb.best)
                    v4.fail("slope mismatch at index " + std::to_string(i));
            } catch (const std::exception& e) {
                v4.fail(e.what());
            }
        });
        report("criterion 4: oracle equivalence", v4.ok,
               v4.ok ? "100 bipartite instances, disc and scss slope" : v4.why);
    }

    {  // criterion 5: certificate soundness on pattern spaces
        Rng rng(99);
        std::vector<PatternSpace> pats;
        for (int t = 0; t < 100; ++t) {
            PatternSpace p;
            p.n = static_cast<int>(rng.uniform(1, 6));
            for (int i = 0; i < p.n; ++i)
                for (int j = 0; j < p.n; ++j)
                    if (rng.uniform(0, 99) < 35) p.support.emplace_back(i, j);
            pats.push_back(std::move(p));
        }
        Verdict v5;
        parallel_for(100, [&](long t) {
            try {
                MatrixSpace b = to_matrix_space(pats[t]);
                ShrunkCertificate cert = min_shrunk(b, 500 + t);
                if (cert.c != koenig_disc(pats[t]).c)
                    v5.fail("pattern c mismatch at index " + std::to_string(t));
                CertReport rep = verify_certificate(b, cert);
                if (!rep.ok) v5.fail(rep.failures.empty() ? "verify failed" : rep.failures[0]);
            } catch (const std::exception& e) {
                v5.fail(e.what());
            }
        });
        report("criterion 5: shrunk-certificate soundness", v5.ok,
               v5.ok ? "100 pattern spaces, min_shrunk = Koenig + re-verified" : v5.why);
    }

    {  // criterion 6: algebraic identities, 500 cases each
        bool ok = true;
        std::string why;
        try {
            Instance inst = testutil::sec5_instance();
            Filtration base = hn_filtration(inst.rep, inst.theta, inst.kappa, 0);
            Rng rng(6);
            for (int t = 0; t < 500; ++t) {
                std::vector<Rat> g(base.length());
                g[0] = rat(rng.uniform(-6, 9), rng.uniform(1, 4));
                for (int i = 1; i < base.length(); ++i)
                    g[i] = g[i - 1] - rat(rng.uniform(1, 7), rng.uniform(1, 4));
                WeightedFiltration wf = make_weighted_filtration(base, g);
                Rat p = hm_pairing(wf, inst.theta);  // asserts the two-form identity
                Rat n2 = norm_sq(wf, inst.kappa);    // asserts entrywise vs grouped
                const long N = rng.uniform(1, 9);
                std::vector<Rat> gs;
                for (const Rat& x : g) gs.push_back(x * rat(N));
                WeightedFiltration wfs = make_weighted_filtration(base, gs);
                if (hm_pairing(wfs, inst.theta) != rat(N) * p) {
                    ok = false;
                    why = "pairing scale law";
                }
                if (norm_sq(wfs, inst.kappa) != rat(N) * rat(N) * n2) {
                    ok = false;
                    why = "norm scale law";
                }
            }
            // seesaw equivalences on random short exact sequences
            GenSpec sspec;
            sspec.seed = 314;
            Rng srng(15);
            int done = 0;
            for (long i = 0; done < 500; ++i) {
                Instance gi = gen_instance(sspec, i % 64);
                SubRep s = zero_subrep(gi.rep);
                for (int v = 0; v < gi.rep.quiver.num_vertices(); ++v)
                    if (gi.rep.dims[v] > 0 && srng.uniform(0, 1)) {
                        Mat vec(gi.rep.dims[v], 1);
                        for (int r = 0; r < vec.rows(); ++r) vec.at(r, 0) = rat(srng.uniform(-2, 2));
                        s.spaces[v] = sum(s.spaces[v], Subspace::from_columns(vec));
                    }
                for (int v : validate_quiver(gi.rep.quiver))
                    for (int a = 0; a < gi.rep.quiver.num_arrows(); ++a) {
                        const Arrow& ar = gi.rep.quiver.arrow(a);
                        if (ar.tail == v)
                            s.spaces[ar.head] =
                                sum(s.spaces[ar.head], apply(gi.rep.maps[a], s.spaces[v]));
                    }
                std::vector<int> sd = s.dims(), md = gi.rep.dims, qd(md.size());
                bool s_zero = true, q_zero = true;
                for (size_t v = 0; v < md.size(); ++v) {
                    qd[v] = md[v] - sd[v];
                    if (sd[v]) s_zero = false;
                    if (qd[v]) q_zero = false;
                }
                if (s_zero || q_zero) continue;
                ++done;
                Rat ml = slope(gi.theta, gi.kappa, sd);
                Rat mm = slope(gi.theta, gi.kappa, md);
                Rat mn = slope(gi.theta, gi.kappa, qd);
                if ((ml <= mm) != (ml <= mn) || (ml <= mm) != (mm <= mn) ||
                    (ml < mm) != (ml < mn) || (ml < mm) != (mm < mn)) {
                    ok = false;
                    why = "seesaw equivalence";
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        report("criterion 6: algebraic identities", ok,
               ok ? "500 cases each: pairing forms, norm forms, scale laws, seesaw" : why);
    }

    {  // criterion 7: Kempf-function maximality on the unstable subset of (2)
        Verdict v7;
        parallel_for(POOL, [&](long i) {
            InstanceData& d = data[i];
            if (!d.unstable || !d.hn_ok) return;
            try {
                Filtration f = hn_filtration(d.inst.rep, d.inst.theta, d.inst.kappa, 0);
                KempfResult k = kempf_ops(d.inst.rep, f, d.inst.theta, d.inst.kappa);
                std::vector<Rat> masses;
                for (int q = 0; q < f.length(); ++q)
                    masses.push_back(rat(weight_of(d.inst.kappa, f.quotient_dims[q])));
                KempfFnReport rep = kempf_function_check(k.u, masses, 200, 7000 + i);
                ++v7.count;
                if (rep.violations != 0) v7.fail("violation at index " + std::to_string(i));
            } catch (const std::exception& e) {
                v7.fail(e.what());
            }
        });
        std::ostringstream det;
        det << v7.count << " unstable instances, 200 cone points each";
        report("criterion 7: Kempf-function maximality", v7.ok, v7.ok ? det.str() : v7.why);
    }

    {  // criterion 8: determinism across seeds
        Verdict v8;
        parallel_for(POOL, [&](long i) {
            InstanceData& d = data[i];
            try {
                for (int s = 1; s <= 2; ++s) d.hn[s] = dump_deterministic(hn_output(d.inst, s));
                if (d.hn[0] != d.hn[1] || d.hn[0] != d.hn[2])
                    v8.fail("hn output differs at index " + std::to_string(i));
                if (d.unstable) {
                    for (int s = 0; s <= 2; ++s)
                        d.kempf[s] =
                            dump_deterministic(kempf_output(d.inst, s, LimitConvention::t0));
                    if (d.kempf[0] != d.kempf[1] || d.kempf[0] != d.kempf[2])
                        v8.fail("kempf output differs at index " + std::to_string(i));
                }
                if (weight_of(d.balanced.theta, d.balanced.rep) == 0) {
                    for (int s = 0; s <= 2; ++s)
                        d.disc_value[s] = disc_output(d.balanced, s)["value"].get<long>();
                    if (d.disc_value[0] != d.disc_value[1] || d.disc_value[0] != d.disc_value[2])
                        v8.fail("disc value differs at index " + std::to_string(i));
                }
            } catch (const std::exception& e) {
                v8.fail(e.what());
            }
        });
        report("criterion 8: determinism across seeds {0,1,2}", v8.ok,
               v8.ok ? "hn and kempf byte-identical; disc values stable" : v8.why);
    }

    {  // scaling smoke test: doubling dims on a fixed quiver
        bool ok = true;
        std::string why;
        try {
            Instance small = testutil::sec5_instance();
            auto ta = Clock::now();
            hn_output(small, 0);
            double t_small = seconds_since(ta);

            Instance big = small;
            for (int& dv : big.rep.dims) dv *= 2;
            Rng rng(55);
            for (int a = 0; a < big.rep.quiver.num_arrows(); ++a) {
                const Arrow& ar = big.rep.quiver.arrow(a);
                Mat m(big.rep.dims[ar.head], big.rep.dims[ar.tail]);
                for (int i = 0; i < m.rows(); ++i)
                    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rat(rng.uniform(-2, 2));
                big.rep.maps[a] = m;
            }
            auto tb = Clock::now();
            hn_output(big, 0);
            double t_big = seconds_since(tb);
            const double envelope = 10.0 * std::max(t_small, 0.25);
            if (t_big > envelope) {
                ok = false;
                std::ostringstream w;
                w << "doubled dims took " << t_big << "s vs envelope " << envelope << "s";
                why = w.str();
            } else {
                std::ostringstream w;
                w << "base " << t_small << "s, doubled " << t_big << "s";
                why = w.str();
            }
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        report("scaling smoke test", ok, why);
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << std::endl;
    return failures == 0 ? 0 : 1;
}
