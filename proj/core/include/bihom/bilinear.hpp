#pragma once

#include <vector>

#include "bihom/graded.hpp"
#include "bihom/matrix.hpp"

namespace bihom {

/// Parity-even bilinear product given by exact structure constants:
/// mu(e_i, e_j) = sum_k c(i,j,k) e_k.  The evenness pattern
/// c(i,j,k) = 0 unless |e_k| = |e_i| + |e_j| is enforced on construction.
/// Products and brackets alike are stored this way, so every verifier and
/// the derivation solver share one representation.
class BilinearMap {
public:
    BilinearMap(GradedSpace space, std::vector<Rational> constants);

    static BilinearMap zero(const GradedSpace& space);

    struct Entry {
        int i, j, k;
        Rational value;
    };
    static BilinearMap from_entries(const GradedSpace& space, const std::vector<Entry>& entries);

    const GradedSpace& space() const { return space_; }

    const Rational& c(int i, int j, int k) const {
        return constants_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }

    /// mu(e_i, e_j) as a coefficient vector.
    Vec eval_basis(int i, int j) const;

    /// Bilinear extension: sum_{i,j} u_i v_j mu(e_i, e_j).
    Vec eval(const Vec& u, const Vec& v) const;

    /// Nonzero entries in lexicographic (i,j,k) order.
    std::vector<Entry> nonzero_entries() const;

    bool operator==(const BilinearMap&) const = default;

private:
    GradedSpace space_;
    int dim_ = 0;
    std::vector<Rational> constants_;
};

}  // namespace bihom
