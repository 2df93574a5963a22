#pragma once

#include "qstab/matrix_space.hpp"
#include "qstab/rep.hpp"

namespace qstab {

// Matrix space spanned by elementary matrices on a support pattern.
struct PatternSpace {
    int n = 0;
    std::vector<std::pair<int, int>> support;  // (row, col), 0-based
};

MatrixSpace to_matrix_space(const PatternSpace& p);

struct KoenigResult {
    long c = 0;                  // max over column sets S of |S| - |N(S)|
    std::vector<int> column_set; // a maximizing S
    long matching_size = 0;
};

// Deficiency via maximum bipartite matching; c + matching size = n.
KoenigResult koenig_disc(const PatternSpace& p);

// Supported class for the exhaustive oracles: every positive-weight vertex
// has dimension <= 1 and no incoming arrows, and every arrow goes from a
// positive-weight vertex to a non-positive one.
bool oracle_supported(const Representation& w, const Weight& theta);

// Exhaustive discrepancy over the finite subrep family of the class.
long bipartite_disc_oracle(const Representation& w, const Weight& theta);

struct SlopeBrute {
    Rat best;
    SubRep maximizer;
};

// Exhaustive slope maximization over the same family.
SlopeBrute slope_brute(const Representation& w, const Weight& theta, const Weight& kappa);

}  // namespace qstab
