#pragma once

#include "qsp/scalar.hpp"

#include <vector>

namespace qsp {

// Dense matrix over FieldElem; products skip zero entries.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, int d = 1);
    static Mat identity(int n, int d = 1);
    static Mat diag(const std::vector<FieldElem>& entries);

    int rows() const { return r_; }
    int cols() const { return c_; }
    FieldElem& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const FieldElem& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
    FieldElem& operator()(int i, int j) { return at(i, j); }
    const FieldElem& operator()(int i, int j) const { return at(i, j); }

    bool is_zero() const;
    bool is_identity() const;
    Mat transpose() const;
    Mat bar() const;
    Mat scaled(const FieldElem& s) const;
    Mat col(int j) const;
    Mat block(int r0, int c0, int nr, int nc) const;

    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    // Reduced row echelon form in place; returns pivot columns in increasing order.
    std::vector<int> rref();
    int rank() const;
    // Basis of {x : A x = 0} as columns.
    Mat nullspace() const;
    // Inverse; throws if singular.
    Mat inverse() const;
    // Some solution of A x = b (b a column or a matrix), or false if inconsistent.
    bool solve(const Mat& b, Mat& x) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<FieldElem> a_;
};

// Column vector helpers
using Vec = std::vector<FieldElem>;
Vec matvec(const Mat& m, const Vec& v);
Mat column(const Vec& v);
Vec to_vec(const Mat& col);
bool vec_is_zero(const Vec& v);
// a, b proportional (both nonzero) ?
bool collinear(const Vec& a, const Vec& b);
Mat hstack(const std::vector<Mat>& blocks);
Mat vstack(const std::vector<Mat>& blocks);

}  // namespace qsp
