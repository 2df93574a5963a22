#pragma once

#include "qstab/rep.hpp"
#include "qstab/rng.hpp"

namespace qstab {

enum class InstanceClass { general, bipartite };

// Reproducible instance stream parameters: the same spec and index always
// produce the same instance.
struct GenSpec {
    uint64_t seed = 0;
    int max_vertices = 5;
    int max_dim = 4;
    int density_pct = 60;
    long omega_max = 5;
    long kappa_max = 3;
    InstanceClass klass = InstanceClass::general;
};

struct Instance {
    Representation rep;
    Weight theta;
    Weight kappa;
};

Instance gen_instance(const GenSpec& spec, long index);

// Adjusts theta on a dimension-1 vertex so that theta(M) = 0.
void force_theta_zero(Instance& inst);

}  // namespace qstab
