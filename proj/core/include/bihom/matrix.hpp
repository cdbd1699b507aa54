#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

/// Dense exact-rational matrix.  Target dimensions are small (a dozen at
/// most), so there is no sparsity machinery; every algorithm below decides
/// rank and singularity exactly, never by pivot thresholds.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vec col(int j) const;
    Vec row(int i) const;

    /// Matrix-vector product.
    Vec apply(const Vec& v) const;

    Mat operator*(const Mat& other) const;
    Mat operator+(const Mat& other) const;
    Mat operator-(const Mat& other) const;
    Mat scaled(const Rational& c) const;

    bool operator==(const Mat& other) const = default;
    bool is_zero() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// In-place reduced row echelon form; returns the rank.
int rref_in_place(Mat& m);

int rank(const Mat& m);

/// Exact inverse, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// Canonical nullspace basis of m (solutions of m*x = 0), one vector per
/// free column of the reduced echelon form, ordered by free column index.
std::vector<Vec> nullspace(const Mat& m);

/// Row spaces compared exactly via their reduced echelon forms.
bool same_row_space(const Mat& a, const Mat& b);

/// True when v is a linear combination of the rows of m.
bool in_row_space(const Mat& m, const Vec& v);

// Small exact-vector helpers shared by the verifiers.
Vec vec_zero(int n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Rational& c);
bool vec_is_zero(const Vec& a);

}  // namespace bihom
