#pragma once

#include <string>
#include <string_view>

#include "bihom/graded.hpp"
#include "bihom/matrix.hpp"

namespace bihom {

/// Homogeneous linear map of fixed Z2 degree on a graded space.
/// Column j holds the image of basis vector j; the block pattern
/// entries[i][j] = 0 unless |e_i| = |e_j| + degree is enforced on
/// construction.  Immutable afterwards.
class HomogeneousMap {
public:
    HomogeneousMap(GradedSpace space, Parity degree, Mat entries);

    const GradedSpace& space() const { return space_; }
    Parity degree() const { return degree_; }
    const Mat& entries() const { return entries_; }

    Vec apply(const Vec& v) const { return entries_.apply(v); }
    Vec apply_basis(int j) const { return entries_.col(j); }

    bool operator==(const HomogeneousMap&) const = default;

private:
    GradedSpace space_;
    Parity degree_;
    Mat entries_;
};

/// Parity-preserving (even) linear map; the shape used for the structure
/// maps alpha and beta.
class EvenMap {
public:
    EvenMap(GradedSpace space, Mat entries);

    static EvenMap identity(const GradedSpace& space);
    static EvenMap zero(const GradedSpace& space);

    const GradedSpace& space() const { return space_; }
    const Mat& entries() const { return entries_; }

    Vec apply(const Vec& v) const { return entries_.apply(v); }
    Vec apply_basis(int j) const { return entries_.col(j); }

    HomogeneousMap as_homogeneous() const { return HomogeneousMap(space_, Parity::even(), entries_); }

    bool is_identity() const { return entries_ == Mat::identity(space_.dim()); }
    bool operator==(const EvenMap&) const = default;

private:
    GradedSpace space_;
    Mat entries_;
};

/// True iff the square table has no cross-parity entries over the space.
bool check_even(const Mat& table, const GradedSpace& space);

/// f after g; the degree adds mod 2.
HomogeneousMap compose(const HomogeneousMap& f, const HomogeneousMap& g);
EvenMap compose(const EvenMap& f, const EvenMap& g);

/// Exact inverse.  Throws NotBijectiveError naming the map when singular.
EvenMap invert(const EvenMap& f, std::string_view name = "map");

bool commute(const EvenMap& f, const EvenMap& g);

}  // namespace bihom
