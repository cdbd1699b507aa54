#include "bihom/generator.hpp"

#include "bihom/constructions.hpp"
#include "bihom/fixtures.hpp"

namespace bihom {

namespace {

EvenMap diag(const GradedSpace& space, const std::vector<Rational>& entries) {
    Mat m(space.dim(), space.dim());
    for (int i = 0; i < space.dim(); ++i) m.at(i, i) = entries.at(i);
    return EvenMap(space, m);
}

const Rational kUnits[] = {Rational(1),  Rational(-1),     Rational(2),
                           Rational(-2), Rational(1, 2),   Rational(-1, 2)};

}  // namespace

int InstanceGenerator::pick(int bound) {
    return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound));
}

Rational InstanceGenerator::nonzero_unit() { return kUnits[pick(6)]; }

Rational InstanceGenerator::small_rational() {
    // zero-biased so structure tables stay sparse
    const int r = pick(10);
    if (r < 4) return Rational(0);
    return kUnits[r - 4];
}

BiHomSuperalgebra InstanceGenerator::bihom_associative() {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const int which = pick(5);
        BiHomSuperalgebra base = fixtures::gl11();
        EvenMap a = EvenMap::identity(base.space());
        EvenMap b = a;
        switch (which) {
            case 0: {  // gl(1|1) conjugations by diag(1,u) act as diag(1,1,u,1/u)
                base = fixtures::gl11();
                const Rational u = nonzero_unit();
                const Rational v = nonzero_unit();
                a = diag(base.space(), {1, 1, u, 1 / u});
                b = diag(base.space(), {1, 1, v, 1 / v});
                break;
            }
            case 1: {  // grassmann2 diagonal scalings of the generators
                base = fixtures::grassmann2();
                const Rational u = nonzero_unit(), v = nonzero_unit();
                const Rational s = nonzero_unit(), t = nonzero_unit();
                a = diag(base.space(), {1, u, v, u * v});
                b = diag(base.space(), {1, s, t, s * t});
                break;
            }
            case 2: {  // grassmann1 scaling
                base = fixtures::grassmann1();
                a = diag(base.space(), {1, nonzero_unit()});
                b = diag(base.space(), {1, nonzero_unit()});
                break;
            }
            case 3: {  // dual numbers scaling
                base = fixtures::dual_numbers();
                a = diag(base.space(), {1, nonzero_unit()});
                b = diag(base.space(), {1, nonzero_unit()});
                break;
            }
            default: {  // split pair: identity or the idempotent swap
                base = fixtures::split_pair();
                Mat swap(2, 2);
                swap.at(0, 1) = 1;
                swap.at(1, 0) = 1;
                const EvenMap swap_map(base.space(), swap);
                a = pick(2) ? swap_map : EvenMap::identity(base.space());
                b = pick(2) ? swap_map : EvenMap::identity(base.space());
                break;
            }
        }
        try {
            return yau_twist_associative(base, a, b);
        } catch (const ConstructionError&) {
            // sampled pair failed a precondition; draw again
        }
    }
    throw StructuralError("instance generator: no associative sample after 64 attempts");
}

InstanceGenerator::LieTwist InstanceGenerator::bihom_lie() {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const int which = pick(4);
        BiHomSuperalgebra base = fixtures::affine3_lie();
        EvenMap a = EvenMap::identity(base.space());
        EvenMap b = a;
        switch (which) {
            case 0: {  // affine3: e1 -> m e1, e3 -> l e3 preserves [e1,e2] = e1
                base = fixtures::affine3_lie();
                a = diag(base.space(), {nonzero_unit(), 1, nonzero_unit()});
                b = diag(base.space(), {nonzero_unit(), 1, nonzero_unit()});
                break;
            }
            case 1: {  // gl(1|1) bracket: diag(1,1,u,1/u)
                base = fixtures::gl11_bracket();
                const Rational u = nonzero_unit(), v = nonzero_unit();
                a = diag(base.space(), {1, 1, u, 1 / u});
                b = diag(base.space(), {1, 1, v, 1 / v});
                break;
            }
            case 2: {  // odd heisenberg: xi -> c xi forces x -> c^2 x
                base = fixtures::odd_heisenberg();
                const Rational c = nonzero_unit(), d = nonzero_unit();
                a = diag(base.space(), {c * c, c});
                b = diag(base.space(), {d * d, d});
                break;
            }
            default: {  // abelian: any invertible diagonal pair
                base = fixtures::abelian_identity({0, 1});
                a = diag(base.space(), {nonzero_unit(), nonzero_unit()});
                b = diag(base.space(), {nonzero_unit(), nonzero_unit()});
                break;
            }
        }
        try {
            BiHomSuperalgebra twisted = yau_twist_lie(base, a, b);
            return LieTwist{std::move(base), std::move(a), std::move(b), std::move(twisted)};
        } catch (const ConstructionError&) {
        }
    }
    throw StructuralError("instance generator: no lie sample after 64 attempts");
}

BiHomSuperalgebra InstanceGenerator::random_multiplicative() {
    const int dim = 2 + pick(2);
    std::vector<Parity> parities;
    for (int i = 0; i < dim; ++i) parities.emplace_back(pick(2));
    const GradedSpace space{parities};

    // Diagonal structure maps drawn from small patterns; the support of
    // the product table is then exactly the triples the maps allow.
    auto sample_diag = [&]() {
        std::vector<Rational> d(dim);
        switch (pick(3)) {
            case 0:
                for (int i = 0; i < dim; ++i) d[i] = 1;
                break;
            case 1: {  // geometric: g^(i+1), compatible with graded products
                const Rational g = kUnits[1 + pick(5)];
                Rational acc = 1;
                for (int i = 0; i < dim; ++i) {
                    acc *= g;
                    d[i] = acc;
                }
                break;
            }
            default:
                for (int i = 0; i < dim; ++i) d[i] = nonzero_unit();
                break;
        }
        return d;
    };
    std::vector<Rational> da = sample_diag();
    std::vector<Rational> db = pick(2) ? da : sample_diag();

    std::vector<Rational> constants(static_cast<std::size_t>(dim) * dim * dim);
    const bool force_commutative = pick(4) == 0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                if (space.parity(k) != space.parity(i) + space.parity(j)) continue;
                if (da[i] * da[j] != da[k] || db[i] * db[j] != db[k]) continue;
                if (force_commutative && j < i) continue;
                const Rational value = small_rational();
                constants[(static_cast<std::size_t>(i) * dim + j) * dim + k] = value;
                if (force_commutative && i != j)
                    constants[(static_cast<std::size_t>(j) * dim + i) * dim + k] = value;
            }

    return BiHomSuperalgebra("random-multiplicative", space,
                             BilinearMap(space, std::move(constants)), diag(space, da),
                             diag(space, db), AlgebraKind::unclassified);
}

}  // namespace bihom
