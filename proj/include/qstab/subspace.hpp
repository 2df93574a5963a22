#pragma once

#include <vector>

#include "qstab/matrix.hpp"

namespace qstab {

// Subspace of F^n in a canonical basis: reduced column echelon form with
// strictly increasing pivot rows and normalized pivots, so structural
// equality coincides with subspace equality.
class Subspace {
   public:
    Subspace() : ambient_(0), basis_(0, 0) {}

    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    // Canonicalizes the column span of `cols`.
    static Subspace from_columns(const Mat& cols);
    // Trusted constructor for callers that assemble canonical bases directly.
    static Subspace from_canonical(Mat basis, std::vector<int> pivot_rows);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }
    const std::vector<int>& pivot_rows() const { return pivot_rows_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

   private:
    int ambient_;
    Mat basis_;  // ambient_ x dim, canonical
    std::vector<int> pivot_rows_;
};

Subspace image(const Mat& m);
Subspace kernel(const Mat& m);
Subspace apply(const Mat& m, const Subspace& u);
// {v : m v in t}
Subspace preimage(const Mat& m, const Subspace& t);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
// Whether u contains v.
bool contains(const Subspace& u, const Subspace& v);
// Columns extending u's basis to a basis of the ambient space.
Mat complement_basis(const Subspace& u);

// Coordinates of the given vectors (columns) in u's canonical basis.
// Throws InternalError if a vector does not lie in u.
Mat coords_in_basis(const Subspace& u, const Mat& vectors);
bool contains_vectors(const Subspace& u, const Mat& vectors);

// Rows spanning the functionals vanishing on u, read directly off the
// canonical basis: u = kernel(annihilator(u)).
Mat annihilator(const Subspace& u);

}  // namespace qstab
