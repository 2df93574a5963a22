#include "qstab/subspace.hpp"

namespace qstab {

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat(ambient, 0);
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat::identity(ambient);
    s.pivot_rows_.resize(ambient);
    for (int i = 0; i < ambient; ++i) s.pivot_rows_[i] = i;
    return s;
}

Subspace Subspace::from_columns(const Mat& cols) {
    RrefResult r = rref(cols.transpose());
    Subspace s;
    s.ambient_ = cols.rows();
    s.basis_ = Mat(cols.rows(), r.rank);
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < cols.rows(); ++j) s.basis_.at(j, i) = r.m.at(i, j);
    s.pivot_rows_ = r.pivot_cols;
    return s;
}

Subspace Subspace::from_canonical(Mat basis, std::vector<int> pivot_rows) {
    Subspace s;
    s.ambient_ = basis.rows();
    s.basis_ = std::move(basis);
    s.pivot_rows_ = std::move(pivot_rows);
    return s;
}

Subspace image(const Mat& m) { return Subspace::from_columns(m); }

Subspace kernel(const Mat& m) { return Subspace::from_columns(kernel_basis(m)); }

Subspace apply(const Mat& m, const Subspace& u) {
    if (m.cols() != u.ambient()) throw DimensionError("apply: ambient mismatch");
    return Subspace::from_columns(m * u.basis());
}

// One functional per non-pivot row, read off the canonical basis directly.
Mat annihilator(const Subspace& t) {
    const int n = t.ambient();
    std::vector<bool> is_pivot(n, false);
    for (int p : t.pivot_rows()) is_pivot[p] = true;
    Mat w(n - t.dim(), n);
    int out = 0;
    for (int q = 0; q < n; ++q) {
        if (is_pivot[q]) continue;
        w.at(out, q) = 1;
        for (int i = 0; i < t.dim(); ++i)
            if (t.basis().at(q, i) != 0) w.at(out, t.pivot_rows()[i]) = -t.basis().at(q, i);
        ++out;
    }
    return w;
}

Subspace preimage(const Mat& m, const Subspace& t) {
    if (m.rows() != t.ambient()) throw DimensionError("preimage: ambient mismatch");
    if (t.dim() == 0) return kernel(m);
    if (t.dim() == t.ambient()) return Subspace::full(m.cols());
    return kernel(annihilator(t) * m);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw DimensionError("sum: ambient mismatch");
    if (v.dim() == 0) return u;
    if (u.dim() == 0) return v;
    return Subspace::from_columns(hcat(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw DimensionError("intersect: ambient mismatch");
    if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.ambient());
    if (u.dim() == u.ambient()) return v;
    if (v.dim() == v.ambient()) return u;
    return kernel(vcat(annihilator(u), annihilator(v)));
}

bool contains(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw DimensionError("contains: ambient mismatch");
    return contains_vectors(u, v.basis());
}

Mat complement_basis(const Subspace& u) {
    std::vector<bool> is_pivot(u.ambient(), false);
    for (int p : u.pivot_rows()) is_pivot[p] = true;
    Mat c(u.ambient(), u.ambient() - u.dim());
    int out = 0;
    for (int r = 0; r < u.ambient(); ++r)
        if (!is_pivot[r]) c.at(r, out++) = 1;
    return c;
}

// Pivot rows of a canonical basis read off coordinates directly.
Mat coords_in_basis(const Subspace& u, const Mat& vectors) {
    if (vectors.rows() != u.ambient()) throw DimensionError("coords: ambient mismatch");
    Mat c(u.dim(), vectors.cols());
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < vectors.cols(); ++j) c.at(i, j) = vectors.at(u.pivot_rows()[i], j);
    if (u.basis() * c != vectors) throw InternalError("coords: vector outside subspace");
    return c;
}

bool contains_vectors(const Subspace& u, const Mat& vectors) {
    if (vectors.rows() != u.ambient()) throw DimensionError("contains: ambient mismatch");
    Mat c(u.dim(), vectors.cols());
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < vectors.cols(); ++j) c.at(i, j) = vectors.at(u.pivot_rows()[i], j);
    return u.basis() * c == vectors;
}

}  // namespace qstab
