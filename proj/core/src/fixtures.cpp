#include "bihom/fixtures.hpp"

namespace bihom::fixtures {

namespace {

GradedSpace space_of(const std::vector<int>& bits) {
    std::vector<Parity> parities;
    parities.reserve(bits.size());
    for (int b : bits) parities.emplace_back(b);
    return GradedSpace(std::move(parities));
}

EvenMap diag(const GradedSpace& space, const std::vector<Rational>& entries) {
    Mat m(space.dim(), space.dim());
    for (int i = 0; i < space.dim(); ++i) m.at(i, i) = entries.at(i);
    return EvenMap(space, m);
}

}  // namespace

BiHomSuperalgebra zero_bracket2(const Rational& a0, const Rational& a1, const Rational& b0,
                                const Rational& b1) {
    const GradedSpace space = space_of({0, 1});
    return BiHomSuperalgebra("zero-bracket-2", space, BilinearMap::zero(space),
                             diag(space, {a0, a1}), diag(space, {b0, b1}),
                             AlgebraKind::lie_candidate);
}

BiHomSuperalgebra affine3(const Rational& mu, const Rational& lambda) {
    const GradedSpace space = space_of({0, 0, 1});
    const BilinearMap bracket = BilinearMap::from_entries(
        space, {{0, 1, 0, Rational(1)}, {1, 0, 0, Rational(-1)}});
    return BiHomSuperalgebra("affine3", space, bracket, diag(space, {mu, 1, lambda}),
                             diag(space, {mu, 1, -lambda}), AlgebraKind::lie_candidate);
}

BiHomSuperalgebra affine3_lie() {
    const GradedSpace space = space_of({0, 0, 1});
    const BilinearMap bracket = BilinearMap::from_entries(
        space, {{0, 1, 0, Rational(1)}, {1, 0, 0, Rational(-1)}});
    return BiHomSuperalgebra("affine3-lie", space, bracket, EvenMap::identity(space),
                             EvenMap::identity(space), AlgebraKind::lie_candidate);
}

BiHomSuperalgebra gl11() {
    // Basis order: E11, E22, E12, E21.
    const GradedSpace space = space_of({0, 0, 1, 1});
    std::vector<BilinearMap::Entry> entries = {
        {0, 0, 0, 1},  // E11 E11 = E11
        {1, 1, 1, 1},  // E22 E22 = E22
        {0, 2, 2, 1},  // E11 E12 = E12
        {2, 1, 2, 1},  // E12 E22 = E12
        {1, 3, 3, 1},  // E22 E21 = E21
        {3, 0, 3, 1},  // E21 E11 = E21
        {2, 3, 0, 1},  // E12 E21 = E11
        {3, 2, 1, 1},  // E21 E12 = E22
    };
    return BiHomSuperalgebra("gl11", space, BilinearMap::from_entries(space, entries),
                             EvenMap::identity(space), EvenMap::identity(space),
                             AlgebraKind::associative_candidate);
}

BiHomSuperalgebra gl11_bracket() {
    const GradedSpace space = space_of({0, 0, 1, 1});
    // Supercommutators of matrix units: [E11,E12] = E12, [E11,E21] = -E21,
    // [E22,E12] = -E12, [E22,E21] = E21, [E12,E21] = E11 + E22 (anticommutator).
    std::vector<BilinearMap::Entry> entries = {
        {0, 2, 2, 1},  {2, 0, 2, -1},  // [E11,E12] = E12
        {0, 3, 3, -1}, {3, 0, 3, 1},   // [E11,E21] = -E21
        {1, 2, 2, -1}, {2, 1, 2, 1},   // [E22,E12] = -E12
        {1, 3, 3, 1},  {3, 1, 3, -1},  // [E22,E21] = E21
        {2, 3, 0, 1},  {2, 3, 1, 1},   // [E12,E21] = E11 + E22
        {3, 2, 0, 1},  {3, 2, 1, 1},   // [E21,E12] = E11 + E22 (odd-odd symmetric)
    };
    return BiHomSuperalgebra("gl11-bracket", space, BilinearMap::from_entries(space, entries),
                             EvenMap::identity(space), EvenMap::identity(space),
                             AlgebraKind::lie_candidate);
}

BiHomSuperalgebra grassmann1() {
    const GradedSpace space = space_of({0, 1});
    std::vector<BilinearMap::Entry> entries = {
        {0, 0, 0, 1},  // 1*1 = 1
        {0, 1, 1, 1},  // 1*xi = xi
        {1, 0, 1, 1},  // xi*1 = xi
    };
    return BiHomSuperalgebra("grassmann1", space, BilinearMap::from_entries(space, entries),
                             EvenMap::identity(space), EvenMap::identity(space),
                             AlgebraKind::associative_candidate);
}

BiHomSuperalgebra grassmann2() {
    // Basis order: 1, xi1, xi2, xi1*xi2.
    const GradedSpace space = space_of({0, 1, 1, 0});
    std::vector<BilinearMap::Entry> entries = {
        {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {0, 3, 3, 1},
        {1, 0, 1, 1}, {2, 0, 2, 1}, {3, 0, 3, 1},
        {1, 2, 3, 1},   // xi1 xi2 = xi1xi2
        {2, 1, 3, -1},  // xi2 xi1 = -xi1xi2
    };
    return BiHomSuperalgebra("grassmann2", space, BilinearMap::from_entries(space, entries),
                             EvenMap::identity(space), EvenMap::identity(space),
                             AlgebraKind::associative_candidate);
}

BiHomSuperalgebra dual_numbers() {
    const GradedSpace space = space_of({0, 0});
    std::vector<BilinearMap::Entry> entries = {
        {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1},  // t^2 = 0
    };
    return BiHomSuperalgebra("dual-numbers", space, BilinearMap::from_entries(space, entries),
                             EvenMap::identity(space), EvenMap::identity(space),
                             AlgebraKind::associative_candidate);
}

BiHomSuperalgebra split_pair() {
    const GradedSpace space = space_of({0, 0});
    std::vector<BilinearMap::Entry> entries = {{0, 0, 0, 1}, {1, 1, 1, 1}};
    return BiHomSuperalgebra("split-pair", space, BilinearMap::from_entries(space, entries),
                             EvenMap::identity(space), EvenMap::identity(space),
                             AlgebraKind::associative_candidate);
}

BiHomSuperalgebra odd_heisenberg() {
    const GradedSpace space = space_of({0, 1});
    const BilinearMap bracket = BilinearMap::from_entries(space, {{1, 1, 0, Rational(1)}});
    return BiHomSuperalgebra("odd-heisenberg", space, bracket, EvenMap::identity(space),
                             EvenMap::identity(space), AlgebraKind::lie_candidate);
}

BiHomSuperalgebra abelian_identity(const std::vector<int>& parity_bits) {
    const GradedSpace space = space_of(parity_bits);
    return BiHomSuperalgebra("abelian", space, BilinearMap::zero(space),
                             EvenMap::identity(space), EvenMap::identity(space),
                             AlgebraKind::lie_candidate);
}

}  // namespace bihom::fixtures
