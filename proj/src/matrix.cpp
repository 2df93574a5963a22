#include "qstab/matrix.hpp"

#include <sstream>

namespace qstab {

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    e_.resize(static_cast<size_t>(rows_) * cols_);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw DimensionError("ragged initializer for matrix");
        int j = 0;
        for (long v : row) at(i, j++) = rat(v);
        ++i;
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& b = o.at(k, j);
                if (b != 0) r.at(i, j) += a * b;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    Mat r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
    Mat r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

Mat Mat::scaled(const Rat& s) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
    return r;
}

Mat Mat::column(int j) const {
    Mat c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
}

Mat Mat::row_slice(int r0, int len) const {
    Mat r(len, cols_);
    for (int i = 0; i < len; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(r0 + i, j);
    return r;
}

void Mat::paste(int i0, int j0, const Mat& src) {
    if (i0 + src.rows_ > rows_ || j0 + src.cols_ > cols_)
        throw DimensionError("paste out of bounds");
    for (int i = 0; i < src.rows_; ++i)
        for (int j = 0; j < src.cols_; ++j) at(i0 + i, j0 + j) = src.at(i, j);
}

Mat hcat(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw DimensionError("hcat row mismatch");
    Mat r(a.rows(), a.cols() + b.cols());
    r.paste(0, 0, a);
    r.paste(0, a.cols(), b);
    return r;
}

Mat vcat(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw DimensionError("vcat column mismatch");
    Mat r(a.rows() + b.rows(), a.cols());
    r.paste(0, 0, a);
    r.paste(a.rows(), 0, b);
    return r;
}

namespace {

// Integer working copy: each row scaled by the lcm of its denominators,
// which preserves rank, row space, and nullspace.
std::vector<Int> to_scaled_int(const Mat& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<Int> a(static_cast<size_t>(rows) * cols);
    Int l, g;
    for (int i = 0; i < rows; ++i) {
        l = 1;
        for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (int j = 0; j < cols; ++j) {
            const Rat& x = m.at(i, j);
            Int& out = a[static_cast<size_t>(i) * cols + j];
            mpz_divexact(out.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
            out *= x.get_num();
        }
    }
    return a;
}

// Fraction-free forward elimination with rank profile. Rows are permuted in
// place; after return, rows [0, rank) form an integer row echelon with the
// recorded pivot columns.
int bareiss_forward(std::vector<Int>& a, int rows, int cols, std::vector<int>& pivot_cols) {
    pivot_cols.clear();
    auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * cols + j]; };
    Int prev = 1, t;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pi = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) {
                pi = i;
                break;
            }
        if (pi < 0) continue;
        if (pi != r)
            for (int j = 0; j < cols; ++j) at(r, j).swap(at(pi, j));
        const Int& piv = at(r, c);
        for (int i = r + 1; i < rows; ++i) {
            Int& aic = at(i, c);
            if (aic == 0) {
                if (prev != 1)
                    for (int j = c + 1; j < cols; ++j) {
                        Int& aij = at(i, j);
                        if (aij == 0) continue;
                        mpz_mul(t.get_mpz_t(), piv.get_mpz_t(), aij.get_mpz_t());
                        mpz_divexact(aij.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                    }
                else
                    for (int j = c + 1; j < cols; ++j) at(i, j) *= piv;
                continue;
            }
            for (int j = c + 1; j < cols; ++j) {
                Int& aij = at(i, j);
                mpz_mul(t.get_mpz_t(), piv.get_mpz_t(), aij.get_mpz_t());
                mpz_submul(t.get_mpz_t(), aic.get_mpz_t(), at(r, j).get_mpz_t());
                mpz_divexact(aij.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            aic = 0;
        }
        prev = piv;
        pivot_cols.push_back(c);
        ++r;
    }
    return r;
}

// Plain rational forward elimination. Entries stay in lowest terms after
// every operation, which preserves the cancellation structure of matrices
// whose entries are themselves outputs of earlier eliminations; row-scaled
// integer elimination would compound their sizes instead.
int gauss_forward_q(std::vector<Rat>& a, int rows, int cols, std::vector<int>& pivot_cols) {
    pivot_cols.clear();
    auto at = [&](int i, int j) -> Rat& { return a[static_cast<size_t>(i) * cols + j]; };
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pi = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) {
                pi = i;
                break;
            }
        if (pi < 0) continue;
        if (pi != r)
            for (int j = 0; j < cols; ++j) std::swap(at(r, j), at(pi, j));
        const Rat piv = at(r, c);
        for (int i = r + 1; i < rows; ++i) {
            if (at(i, c) == 0) continue;
            Rat f = at(i, c) / piv;
            at(i, c) = 0;
            for (int j = c + 1; j < cols; ++j)
                if (at(r, j) != 0) at(i, j) -= f * at(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return r;
}

bool all_integer(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j).get_den() != 1) return false;
    return true;
}

// Forward elimination only: rational row echelon with rank and pivots.
struct Forward {
    std::vector<Rat> a;  // rows [0, rank) hold the echelon
    std::vector<int> pivot_cols;
    int rank = 0;
};

Forward forward_echelon(const Mat& m) {
    Forward f;
    const int rows = m.rows(), cols = m.cols();
    if (all_integer(m)) {
        auto z = to_scaled_int(m);
        f.rank = bareiss_forward(z, rows, cols, f.pivot_cols);
        f.a.assign(static_cast<size_t>(f.rank) * cols, Rat());
        for (int i = 0; i < f.rank; ++i)
            for (int j = 0; j < cols; ++j)
                if (z[static_cast<size_t>(i) * cols + j] != 0)
                    f.a[static_cast<size_t>(i) * cols + j] = Rat(z[static_cast<size_t>(i) * cols + j]);
    } else {
        f.a.assign(static_cast<size_t>(rows) * cols, Rat());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) f.a[static_cast<size_t>(i) * cols + j] = m.at(i, j);
        f.rank = gauss_forward_q(f.a, rows, cols, f.pivot_cols);
        f.a.resize(static_cast<size_t>(f.rank) * cols);
    }
    return f;
}

// Back-elimination to reduced row echelon, in place on the echelon rows.
void back_substitute(Forward& f, int cols) {
    for (int k = f.rank - 1; k >= 0; --k) {
        const int pc = f.pivot_cols[k];
        Rat inv = 1 / f.a[static_cast<size_t>(k) * cols + pc];
        for (int j = pc; j < cols; ++j) {
            Rat& x = f.a[static_cast<size_t>(k) * cols + j];
            if (x != 0) x *= inv;
        }
        for (int i = 0; i < k; ++i) {
            Rat fac = f.a[static_cast<size_t>(i) * cols + pc];
            if (fac == 0) continue;
            f.a[static_cast<size_t>(i) * cols + pc] = 0;
            for (int j = pc + 1; j < cols; ++j) {
                const Rat& src = f.a[static_cast<size_t>(k) * cols + j];
                if (src != 0) f.a[static_cast<size_t>(i) * cols + j] -= fac * src;
            }
        }
    }
}

}  // namespace

int rank_of(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return forward_echelon(m).rank;
}

RrefResult rref(const Mat& m) {
    RrefResult res;
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) {
        res.m = Mat(rows, cols);
        return res;
    }
    Forward f = forward_echelon(m);
    back_substitute(f, cols);
    res.rank = f.rank;
    res.pivot_cols = std::move(f.pivot_cols);
    res.m = Mat(rows, cols);
    for (int i = 0; i < res.rank; ++i)
        for (int j = 0; j < cols; ++j) res.m.at(i, j) = f.a[static_cast<size_t>(i) * cols + j];
    return res;
}

Mat kernel_basis(const Mat& m) {
    const int cols = m.cols();
    if (cols == 0) return Mat(0, 0);
    if (m.rows() == 0) return Mat::identity(cols);
    RrefResult r = rref(m);
    const int nullity = cols - r.rank;
    Mat k(cols, nullity);
    std::vector<bool> is_pivot(cols, false);
    for (int pc : r.pivot_cols) is_pivot[pc] = true;
    int out = 0;
    for (int j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        k.at(j, out) = 1;
        for (int i = 0; i < r.rank; ++i) {
            const Rat& v = r.m.at(i, j);
            if (v != 0) k.at(r.pivot_cols[i], out) = -v;
        }
        ++out;
    }
    return k;
}

KernelResult rank_and_kernel(const Mat& m) {
    KernelResult res;
    const int rows = m.rows(), cols = m.cols();
    if (cols == 0) {
        res.basis = Mat(0, 0);
        return res;
    }
    if (rows == 0) {
        res.basis = Mat::identity(cols);
        return res;
    }
    Forward f = forward_echelon(m);
    res.rank = f.rank;
    if (res.rank == cols) {
        res.basis = Mat(cols, 0);
        return res;
    }
    back_substitute(f, cols);
    const int nullity = cols - f.rank;
    res.basis = Mat(cols, nullity);
    std::vector<bool> is_pivot(cols, false);
    for (int pc : f.pivot_cols) is_pivot[pc] = true;
    Int l;
    int out = 0;
    for (int j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        l = 1;
        for (int i = 0; i < f.rank; ++i) {
            const Rat& v = f.a[static_cast<size_t>(i) * cols + j];
            if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        }
        res.basis.at(j, out) = Rat(l);
        for (int i = 0; i < f.rank; ++i) {
            const Rat& v = f.a[static_cast<size_t>(i) * cols + j];
            if (v != 0) res.basis.at(f.pivot_cols[i], out) = -v * l;
        }
        ++out;
    }
    return res;
}

std::string to_string(const Mat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << rat_to_string(m.at(i, j));
    }
    os << "]";
    return os.str();
}

}  // namespace qstab
