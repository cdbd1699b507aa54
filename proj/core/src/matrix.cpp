#include "bihom/matrix.hpp"

#include "bihom/errors.hpp"

namespace bihom {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vec Mat::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Mat::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Mat::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw StructuralError("matrix-vector dimension mismatch");
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (int j = 0; j < cols_; ++j) {
            if (!v[j].is_zero()) acc += at(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

Mat Mat::operator*(const Mat& other) const {
    if (cols_ != other.rows_) throw StructuralError("matrix product dimension mismatch");
    Mat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

Mat Mat::operator+(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw StructuralError("matrix sum dimension mismatch");
    Mat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + other.at(i, j);
    return out;
}

Mat Mat::operator-(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw StructuralError("matrix difference dimension mismatch");
    Mat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) - other.at(i, j);
    return out;
}

Mat Mat::scaled(const Rational& c) const {
    Mat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) * c;
    return out;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

int rref_in_place(Mat& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        int sel = -1;
        for (int i = pivot_row; i < rows; ++i) {
            if (!m.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivot_row)
            for (int j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        const Rational inv_pivot = Rational(1) / m.at(pivot_row, col);
        for (int j = col; j < cols; ++j) m.at(pivot_row, j) *= inv_pivot;
        for (int i = 0; i < rows; ++i) {
            if (i == pivot_row) continue;
            const Rational factor = m.at(i, col);
            if (factor.is_zero()) continue;
            for (int j = col; j < cols; ++j) m.at(i, j) -= factor * m.at(pivot_row, j);
        }
        ++pivot_row;
    }
    return pivot_row;
}

int rank(const Mat& m) {
    Mat copy = m;
    return rref_in_place(copy);
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    rref_in_place(aug);
    // singular iff the left block fails to reduce to the identity
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (aug.at(i, j) != Rational(i == j ? 1 : 0)) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<Vec> nullspace(const Mat& m) {
    Mat r = m;
    rref_in_place(r);
    const int rows = r.rows();
    const int cols = r.cols();

    std::vector<int> pivot_of_col(cols, -1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        if (!r.at(row, col).is_zero()) {
            pivot_of_col[col] = row;
            ++row;
        }
    }

    std::vector<Vec> basis;
    for (int free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        Vec v(cols);
        v[free] = 1;
        for (int col = 0; col < cols; ++col) {
            const int p = pivot_of_col[col];
            if (p >= 0) v[col] = -r.at(p, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool same_row_space(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) return false;
    Mat ra = a;
    Mat rb = b;
    const int rank_a = rref_in_place(ra);
    const int rank_b = rref_in_place(rb);
    if (rank_a != rank_b) return false;
    for (int i = 0; i < rank_a; ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (ra.at(i, j) != rb.at(i, j)) return false;
    return true;
}

bool in_row_space(const Mat& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw StructuralError("span membership dimension mismatch");
    Mat stacked(m.rows() + 1, m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) stacked.at(i, j) = m.at(i, j);
    for (int j = 0; j < m.cols(); ++j) stacked.at(m.rows(), j) = v[j];
    return rank(stacked) == rank(m);
}

Vec vec_zero(int n) { return Vec(static_cast<std::size_t>(n)); }

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw StructuralError("vector sum dimension mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw StructuralError("vector difference dimension mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec vec_scaled(const Vec& a, const Rational& c) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace bihom
