#include "bihom/bilinear.hpp"

#include <string>

namespace bihom {

BilinearMap::BilinearMap(GradedSpace space, std::vector<Rational> constants)
    : space_(std::move(space)), dim_(space_.dim()), constants_(std::move(constants)) {
    const std::size_t expected = static_cast<std::size_t>(dim_) * dim_ * dim_;
    if (constants_.size() != expected)
        throw StructuralError("bilinear map: constants table has wrong size");
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (!c(i, j, k).is_zero() && space_.parity(k) != space_.parity(i) + space_.parity(j))
                    throw StructuralError("bilinear map: entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(k) +
                                          ") violates evenness");
}

BilinearMap BilinearMap::zero(const GradedSpace& space) {
    const std::size_t n = static_cast<std::size_t>(space.dim());
    return BilinearMap(space, std::vector<Rational>(n * n * n));
}

BilinearMap BilinearMap::from_entries(const GradedSpace& space, const std::vector<Entry>& entries) {
    const int dim = space.dim();
    std::vector<Rational> constants(static_cast<std::size_t>(dim) * dim * dim);
    for (const auto& e : entries) {
        if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
            throw StructuralError("bilinear map: entry index out of range");
        constants[(static_cast<std::size_t>(e.i) * dim + e.j) * dim + e.k] = e.value;
    }
    return BilinearMap(space, std::move(constants));
}

Vec BilinearMap::eval_basis(int i, int j) const {
    Vec out(dim_);
    for (int k = 0; k < dim_; ++k) out[k] = c(i, j, k);
    return out;
}

Vec BilinearMap::eval(const Vec& u, const Vec& v) const {
    if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
        throw StructuralError("bilinear map: argument dimension mismatch");
    Vec out(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            const Rational coeff = u[i] * v[j];
            for (int k = 0; k < dim_; ++k) {
                const Rational& cijk = c(i, j, k);
                if (!cijk.is_zero()) out[k] += coeff * cijk;
            }
        }
    }
    return out;
}

std::vector<BilinearMap::Entry> BilinearMap::nonzero_entries() const {
    std::vector<Entry> out;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (!c(i, j, k).is_zero()) out.push_back({i, j, k, c(i, j, k)});
    return out;
}

}  // namespace bihom
