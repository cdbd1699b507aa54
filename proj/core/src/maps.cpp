#include "bihom/maps.hpp"

namespace bihom {

namespace {

void require_square(const Mat& entries, const GradedSpace& space, const char* what) {
    if (entries.rows() != space.dim() || entries.cols() != space.dim())
        throw StructuralError(std::string(what) + ": table shape does not match the space");
}

}  // namespace

HomogeneousMap::HomogeneousMap(GradedSpace space, Parity degree, Mat entries)
    : space_(std::move(space)), degree_(degree), entries_(std::move(entries)) {
    require_square(entries_, space_, "homogeneous map");
    for (int i = 0; i < space_.dim(); ++i)
        for (int j = 0; j < space_.dim(); ++j)
            if (!entries_.at(i, j).is_zero() && space_.parity(i) != space_.parity(j) + degree_)
                throw StructuralError("homogeneous map: entry violates the degree block pattern");
}

EvenMap::EvenMap(GradedSpace space, Mat entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
    require_square(entries_, space_, "even map");
    if (!check_even(entries_, space_))
        throw StructuralError("even map: cross-parity entry present");
}

EvenMap EvenMap::identity(const GradedSpace& space) {
    return EvenMap(space, Mat::identity(space.dim()));
}

EvenMap EvenMap::zero(const GradedSpace& space) {
    return EvenMap(space, Mat(space.dim(), space.dim()));
}

bool check_even(const Mat& table, const GradedSpace& space) {
    if (table.rows() != space.dim() || table.cols() != space.dim()) return false;
    for (int i = 0; i < space.dim(); ++i)
        for (int j = 0; j < space.dim(); ++j)
            if (!table.at(i, j).is_zero() && space.parity(i) != space.parity(j)) return false;
    return true;
}

HomogeneousMap compose(const HomogeneousMap& f, const HomogeneousMap& g) {
    if (f.space() != g.space())
        throw StructuralError("composition: maps live on different spaces");
    return HomogeneousMap(f.space(), f.degree() + g.degree(), f.entries() * g.entries());
}

EvenMap compose(const EvenMap& f, const EvenMap& g) {
    if (f.space() != g.space())
        throw StructuralError("composition: maps live on different spaces");
    return EvenMap(f.space(), f.entries() * g.entries());
}

EvenMap invert(const EvenMap& f, std::string_view name) {
    auto inv = inverse(f.entries());
    if (!inv) throw NotBijectiveError(std::string(name));
    return EvenMap(f.space(), std::move(*inv));
}

bool commute(const EvenMap& f, const EvenMap& g) {
    if (f.space() != g.space()) return false;
    return f.entries() * g.entries() == g.entries() * f.entries();
}

}  // namespace bihom
