#pragma once

#include "qstab/disc.hpp"

namespace qstab {

// Harder-Narasimhan filtration of a representation: strictly increasing
// subrepresentations in the parent's coordinates, the last being the whole
// representation, with strictly decreasing quotient slopes.
struct Filtration {
    std::vector<SubRep> steps;
    std::vector<std::vector<int>> step_dims;
    std::vector<std::vector<int>> quotient_dims;
    std::vector<long> step_theta;
    std::vector<long> step_kappa;
    std::vector<Rat> quotient_slopes;

    int length() const { return static_cast<int>(steps.size()); }
};

// Strongly contradicting semistability subrepresentation: the fixed point
// of N <- F(N) starting from M.
SubRep scss(const Representation& m, const Weight& theta, const Weight& kappa, uint64_t seed,
            const DiscOptions& opt = {});

Filtration hn_filtration(const Representation& m, const Weight& theta, const Weight& kappa,
                         uint64_t seed, const DiscOptions& opt = {});

struct HnReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Re-derives the defining properties: strict slope decrease, semistable
// quotients (G = 0 under each quotient's own theta_d), proper invariant
// inclusions ending at the full representation.
HnReport verify_hn(const Representation& m, const Filtration& f, const Weight& theta,
                   const Weight& kappa, uint64_t seed, const DiscOptions& opt = {});

// The quotient M_i/M_{i-1} of consecutive filtration terms as a representation.
Representation filtration_quotient(const Representation& m, const Filtration& f, int i);

// Index l (1-based) with slope(M_l/M_{l-1}) > 0 >= slope(M_{l+1}/M_l), whose
// term attains disc(M, theta); requires theta(M) = 0 and M unstable.
std::pair<int, SubRep> theorem_a_term(const Representation& m, const Filtration& f,
                                      const Weight& theta, uint64_t seed,
                                      const DiscOptions& opt = {});

}  // namespace qstab
