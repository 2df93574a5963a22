#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qstab/rational.hpp"

namespace qstab {

// Dense matrix over the rationals, row-major.
class Mat {
   public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    }
    Mat(std::initializer_list<std::initializer_list<long>> rows);

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    Mat transpose() const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Rat& s) const;

    // Column j as an rows()x1 matrix.
    Mat column(int j) const;
    // Rows [r0, r0+len) as a len x cols() matrix.
    Mat row_slice(int r0, int len) const;
    // Copies src into this at offset (i0, j0); src must fit.
    void paste(int i0, int j0, const Mat& src);

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

   private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);

// Exact rank over the rationals via fraction-free (Bareiss) elimination.
int rank_of(const Mat& m);

struct RrefResult {
    Mat m;                        // reduced row echelon form
    std::vector<int> pivot_cols;  // strictly increasing
    int rank = 0;
};

// Reduced row echelon form: Bareiss forward pass, exact back-substitution.
RrefResult rref(const Mat& m);

// Columns span the nullspace {v : m v = 0}; cols() == nullity.
Mat kernel_basis(const Mat& m);

struct KernelResult {
    int rank = 0;
    Mat basis;  // raw integer-scaled kernel basis, not canonicalized
};

// One elimination for rank and kernel; columns are scaled to integers.
KernelResult rank_and_kernel(const Mat& m);

std::string to_string(const Mat& m);

}  // namespace qstab
