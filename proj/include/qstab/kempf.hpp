#pragma once

#include "qstab/hn.hpp"

namespace qstab {

// Filtration with strictly decreasing rational weights, one per step.
struct WeightedFiltration {
    Filtration filtration;
    std::vector<Rat> gammas;
};

WeightedFiltration make_weighted_filtration(Filtration f, std::vector<Rat> gammas);

// Hilbert-Mumford pairing <chi_theta, lambda>: both forms
//   sum_i Gamma_i theta(M_i/M_{i-1})  and  sum_i (Gamma_i - Gamma_{i+1}) theta(M_i)
// are evaluated and must agree; requires theta(M) = 0.
Rat hm_pairing(const WeightedFiltration& wf, const Weight& theta);

// Squared kappa-weighted norm: the grouped form sum_i Gamma_i^2 kappa(M_i/M_{i-1})
// and the entrywise per-vertex form must agree.
Rat norm_sq(const WeightedFiltration& wf, const Weight& kappa);

// Diagonal one-parameter subgroup in a basis adapted to a filtration:
// per-vertex weight vectors, constant within each filtration layer.
struct OneParameterSubgroup {
    std::vector<std::vector<Rat>> weights;  // per vertex, adapted coordinates
};

struct KempfResult {
    std::vector<Rat> u;                 // per filtration step
    OneParameterSubgroup ray;           // layer-constant entries u_i
    Rat instability_sq;                 // sum u_i^2 kappa(M_i/M_{i-1})
    std::vector<Mat> adapted_basis;     // per vertex: columns ordered by layer
    std::vector<std::vector<int>> layers;  // per vertex: 1-based layer of each column
};

// u_i = kappa(M) mu(M_i/M_{i-1}) - Theta(M), reduced to u_i = mu(M_i/M_{i-1})
// when Theta(M) = 0; f must be the HN filtration of an unstable representation.
KempfResult kempf_ops(const Representation& m, const Filtration& f, const Weight& theta,
                      const Weight& kappa);

// The unique indivisible integral point on the positive ray of the 1-PS.
std::vector<std::vector<long>> primitive_lattice_point(const OneParameterSubgroup& ray);

// One inequality per nonzero entry of an arrow map: the weight at the head
// row minus the weight at the tail column must be nonnegative.
struct LimitConstraint {
    int arrow;
    int row;
    int col;
};

enum class LimitConvention { t0, tinf };

std::vector<LimitConstraint> limit_constraints(const Representation& m);

struct LimitCheck {
    bool exists = true;
    std::vector<LimitConstraint> constraints;
    std::vector<bool> satisfied;
};

LimitCheck limit_exists(const Representation& m, const std::vector<std::vector<Rat>>& lambda);

// Rendering follows the convention: the same halfspace is printed as
// "-a<tail>+a<head>>=0" (tinf, as in the worked example) or
// "a<head>-a<tail>>=0" (t0). Slots are numbered 1-based in vertex order.
std::string render_constraint(const Representation& m, const LimitConstraint& c,
                              LimitConvention conv);

// Samples points of the open cone x_1 > ... > x_r and checks the weighted
// Cauchy-Schwarz inequality (x,u)^2 <= (x,x)(u,u), strict off the ray of u.
struct KempfFnReport {
    int samples = 0;
    int violations = 0;
    int proportional_hits = 0;
    Rat max_ratio;  // max (x,u)^2 / ((x,x)(u,u)) over sampled x
};

KempfFnReport kempf_function_check(const std::vector<Rat>& u, const std::vector<Rat>& masses,
                                   int samples, uint64_t seed);

// The representation rewritten in the filtration-adapted bases.
Representation adapted_rep(const Representation& m, const KempfResult& k);

}  // namespace qstab
