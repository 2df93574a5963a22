#pragma once

#include <vector>

#include "qstab/quiver.hpp"
#include "qstab/subspace.hpp"

namespace qstab {

// Integer weight on the vertex lattice, aligned with the quiver's vertex order.
struct Weight {
    std::vector<long> w;

    long operator()(int v) const { return w[v]; }
    friend bool operator==(const Weight& a, const Weight& b) { return a.w == b.w; }
};

// Representation of an acyclic quiver: a dimension per vertex and a matrix
// per arrow with rows = dims[head], cols = dims[tail].
struct Representation {
    Quiver quiver;
    std::vector<int> dims;
    std::vector<Mat> maps;  // per arrow

    int dim_at(int v) const { return dims[v]; }
    bool is_zero() const {
        for (int d : dims)
            if (d != 0) return false;
        return true;
    }
};

// Checks shape consistency of maps against dims.
void validate_representation(const Representation& m);

// Per-vertex subspaces of a parent representation (the parent is passed
// explicitly to the operations below).
struct SubRep {
    std::vector<Subspace> spaces;

    std::vector<int> dims() const {
        std::vector<int> d(spaces.size());
        for (size_t v = 0; v < spaces.size(); ++v) d[v] = spaces[v].dim();
        return d;
    }
    friend bool operator==(const SubRep& a, const SubRep& b) { return a.spaces == b.spaces; }
};

long weight_of(const Weight& w, const std::vector<int>& dims);
long weight_of(const Weight& w, const Representation& m);
long weight_of(const Weight& w, const SubRep& s);

// kappa must be >= 1 at every vertex.
bool kappa_check(const Weight& kappa);

Rat slope(const Weight& theta, const Weight& kappa, const std::vector<int>& dims);

// v -> kappa(d) theta(v) - theta(d) kappa(v); vanishes on d.
Weight theta_d(const Weight& theta, const Weight& kappa, const std::vector<int>& dims);

Mat path_map(const Representation& m, const Path& p);

SubRep zero_subrep(const Representation& m);
SubRep full_subrep(const Representation& m);
bool is_subrep(const Representation& m, const SubRep& s);
SubRep sum_subreps(const Representation& m, const SubRep& s, const SubRep& t);
SubRep intersect_subreps(const Representation& m, const SubRep& s, const SubRep& t);

// Quotient M/S with per-vertex projections and sections. The section
// composed with the projection is the identity of the quotient, so subreps
// of the quotient pull back exactly.
struct Quotient {
    Representation rep;
    std::vector<Mat> proj;  // dims[v] -> qdims[v]
    std::vector<Mat> sect;  // qdims[v] -> dims[v]
};
Quotient quotient_rep(const Representation& m, const SubRep& s);

// Subrep of m containing s corresponding to the subrep t of m/s.
SubRep pull_back(const Representation& m, const SubRep& s, const Quotient& q, const SubRep& t);

// The subrepresentation as a representation in its own bases, with the
// per-vertex embeddings into the parent's coordinates.
struct Restriction {
    Representation rep;
    std::vector<Mat> embed;  // sub dims -> parent dims
};
Restriction subrep_to_rep(const Representation& m, const SubRep& s);

// Transports a subrep of a restriction back into the parent's coordinates.
SubRep embed_subrep(const Representation& parent, const Restriction& r, const SubRep& inner);

}  // namespace qstab
