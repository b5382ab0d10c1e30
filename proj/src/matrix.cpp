#include "qsp/matrix.hpp"

#include <stdexcept>

namespace qsp {

Mat::Mat(int rows, int cols, int d) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, FieldElem(0, d)) {}

Mat Mat::identity(int n, int d) {
    Mat m(n, n, d);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElem(1, d);
    return m;
}

Mat Mat::diag(const std::vector<FieldElem>& e) {
    int n = static_cast<int>(e.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = e[i];
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const auto& x = at(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

Mat Mat::transpose() const {
    Mat t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::bar() const {
    Mat t = *this;
    for (auto& x : t.a_)
        if (!x.is_zero()) x = x.bar();
    return t;
}

Mat Mat::scaled(const FieldElem& s) const {
    Mat t = *this;
    for (auto& x : t.a_)
        if (!x.is_zero()) x *= s;
    return t;
}

Mat Mat::col(int j) const { return block(0, j, r_, 1); }

Mat Mat::block(int r0, int c0, int nr, int nc) const {
    Mat b(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) b.at(i, j) = at(r0 + i, c0 + j);
    return b;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch in +");
    Mat m = a;
    for (size_t k = 0; k < m.a_.size(); ++k)
        if (!b.a_[k].is_zero()) m.a_[k] += b.a_[k];
    return m;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch in -");
    Mat m = a;
    for (size_t k = 0; k < m.a_.size(); ++k)
        if (!b.a_[k].is_zero()) m.a_[k] -= b.a_[k];
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch in *");
    Mat m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const auto& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.c_; ++j) {
                const auto& y = b.at(k, j);
                if (y.is_zero()) continue;
                m.at(i, j) += x * y;
            }
        }
    return m;
}

bool operator==(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (size_t k = 0; k < a.a_.size(); ++k)
        if (a.a_[k] != b.a_[k]) return false;
    return true;
}

std::vector<int> Mat::rref() {
    std::vector<int> piv;
    int row = 0;
    for (int j = 0; j < c_ && row < r_; ++j) {
        int p = -1;
        for (int i = row; i < r_; ++i)
            if (!at(i, j).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int k = 0; k < c_; ++k) std::swap(at(p, k), at(row, k));
        FieldElem inv = at(row, j).inv();
        for (int k = j; k < c_; ++k)
            if (!at(row, k).is_zero()) at(row, k) *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == row || at(i, j).is_zero()) continue;
            FieldElem f = at(i, j);
            for (int k = j; k < c_; ++k)
                if (!at(row, k).is_zero()) at(i, k) -= f * at(row, k);
        }
        piv.push_back(j);
        ++row;
    }
    return piv;
}

int Mat::rank() const {
    Mat t = *this;
    return static_cast<int>(t.rref().size());
}

Mat Mat::nullspace() const {
    Mat t = *this;
    auto piv = t.rref();
    std::vector<bool> is_piv(c_, false);
    for (int p : piv) is_piv[p] = true;
    int nfree = c_ - static_cast<int>(piv.size());
    Mat n(c_, nfree);
    int k = 0;
    for (int j = 0; j < c_; ++j) {
        if (is_piv[j]) continue;
        n.at(j, k) = FieldElem(1);
        for (size_t r = 0; r < piv.size(); ++r)
            if (!t.at(static_cast<int>(r), j).is_zero()) n.at(piv[r], k) = -t.at(static_cast<int>(r), j);
        ++k;
    }
    return n;
}

Mat Mat::inverse() const {
    if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
    Mat x;
    if (!solve(identity(r_), x)) throw std::domain_error("singular matrix");
    return x;
}

bool Mat::solve(const Mat& b, Mat& x) const {
    if (b.r_ != r_) throw std::invalid_argument("solve shape mismatch");
    Mat aug = hstack({*this, b});
    auto piv = aug.rref();
    for (int p : piv)
        if (p >= c_) return false;
    x = Mat(c_, b.c_);
    for (size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < b.c_; ++j) x.at(piv[r], j) = aug.at(static_cast<int>(r), c_ + j);
    return true;
}

Vec matvec(const Mat& m, const Vec& v) {
    Vec out(m.rows(), FieldElem(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (v[j].is_zero() || m.at(i, j).is_zero()) continue;
            out[i] += m.at(i, j) * v[j];
        }
    return out;
}

Mat column(const Vec& v) {
    Mat m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

Vec to_vec(const Mat& c) {
    Vec v(c.rows());
    for (int i = 0; i < c.rows(); ++i) v[i] = c.at(i, 0);
    return v;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool collinear(const Vec& a, const Vec& b) {
    if (a.size() != b.size() || vec_is_zero(a) || vec_is_zero(b)) return false;
    size_t k = 0;
    while (a[k].is_zero()) ++k;
    if (b[k].is_zero()) return false;
    FieldElem r = b[k] / a[k];
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] != r * a[i]) return false;
    return true;
}

Mat hstack(const std::vector<Mat>& bl) {
    int r = bl.empty() ? 0 : bl[0].rows(), c = 0;
    for (const auto& b : bl) c += b.cols();
    Mat m(r, c);
    int off = 0;
    for (const auto& b : bl) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(i, off + j) = b.at(i, j);
        off += b.cols();
    }
    return m;
}

Mat vstack(const std::vector<Mat>& bl) {
    int c = bl.empty() ? 0 : bl[0].cols(), r = 0;
    for (const auto& b : bl) r += b.rows();
    Mat m(r, c);
    int off = 0;
    for (const auto& b : bl) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < c; ++j) m.at(off + i, j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

}  // namespace qsp
