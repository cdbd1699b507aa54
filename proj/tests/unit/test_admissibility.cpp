#include <doctest.h>

#include "bihom/admissibility.hpp"
#include "bihom/constructions.hpp"
#include "bihom/fixtures.hpp"
#include "bihom/generator.hpp"
#include "corpus.hpp"

using namespace bihom;

namespace {

EvenMap diag_map(const GradedSpace& s, std::vector<Rational> d) {
    Mat m(s.dim(), s.dim());
    for (int i = 0; i < s.dim(); ++i) m.at(i, i) = d[i];
    return EvenMap(s, m);
}

/// Koszul sign exponent of a permuted triple, counted from inversions.
/// Independent route used to pin the parity table.
int inversion_exponent(const Permutation3& sigma, std::array<Parity, 3> p) {
    int e = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (sigma.image(a) > sigma.image(b))
                e += parity_product(p[sigma.image(a)], p[sigma.image(b)]);
    return e & 1;
}

}  // namespace

TEST_CASE("permutation elements and signatures") {
    CHECK(Permutation3::identity().signature() == 1);
    CHECK(Permutation3::swap12().signature() == -1);
    CHECK(Permutation3::swap23().signature() == -1);
    CHECK(Permutation3::swap13().signature() == -1);
    CHECK(Permutation3::cycle_312().signature() == 1);
    CHECK(Permutation3::cycle_231().signature() == 1);

    const std::array<int, 3> idx = {10, 20, 30};
    CHECK(Permutation3::swap12().act(idx) == std::array<int, 3>{20, 10, 30});
    CHECK(Permutation3::swap23().act(idx) == std::array<int, 3>{10, 30, 20});
    CHECK(Permutation3::swap13().act(idx) == std::array<int, 3>{30, 20, 10});
    CHECK(Permutation3::cycle_312().act(idx) == std::array<int, 3>{30, 10, 20});
    CHECK(Permutation3::cycle_231().act(idx) == std::array<int, 3>{20, 30, 10});

    // the two generators compose to the 3-cycles, tuple-action order
    CHECK(Permutation3::swap12().after(Permutation3::swap23()) == Permutation3::cycle_312());
    CHECK(Permutation3::swap23().after(Permutation3::swap12()) == Permutation3::cycle_231());
    CHECK(Permutation3::swap23().after(Permutation3::swap12().after(Permutation3::swap23())) ==
          Permutation3::swap13());
}

TEST_CASE("graded permutation parity") {
    SUBCASE("all-even triples carry no sign") {
        for (const auto& sigma : Permutation3::all())
            CHECK(perm_parity(sigma, Parity(0), Parity(0), Parity(0)) == Parity(0));
    }
    SUBCASE("pinned values") {
        CHECK(perm_parity(Permutation3::swap12(), Parity(1), Parity(1), Parity(0)) == Parity(1));
        CHECK(perm_parity(Permutation3::swap13(), Parity(1), Parity(1), Parity(1)) == Parity(1));
        CHECK(perm_parity(Permutation3::swap23(), Parity(0), Parity(1), Parity(1)) == Parity(1));
        CHECK(perm_parity(Permutation3::cycle_312(), Parity(1), Parity(0), Parity(1)) == Parity(1));
    }
    SUBCASE("the table is the inversion-counted Koszul exponent") {
        for (const auto& sigma : Permutation3::all())
            for (int bits = 0; bits < 8; ++bits) {
                const std::array<Parity, 3> p = {Parity(bits & 1), Parity((bits >> 1) & 1),
                                                 Parity((bits >> 2) & 1)};
                CHECK(perm_parity(sigma, p[0], p[1], p[2]).bit() ==
                      inversion_exponent(sigma, p));
            }
    }
    SUBCASE("additive under composition, exhaustively") {
        for (const auto& a : Permutation3::all())
            for (const auto& b : Permutation3::all())
                for (int bits = 0; bits < 8; ++bits) {
                    const std::array<Parity, 3> p = {Parity(bits & 1), Parity((bits >> 1) & 1),
                                                     Parity((bits >> 2) & 1)};
                    const std::array<Parity, 3> bp = b.act(p);
                    const int lhs = perm_parity(a.after(b), p[0], p[1], p[2]).bit();
                    const int rhs =
                        (perm_parity(b, p[0], p[1], p[2]) + perm_parity(a, bp[0], bp[1], bp[2]))
                            .bit();
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("associator") {
    SUBCASE("vanishes on bihom-associative input") {
        const BiHomSuperalgebra g = fixtures::gl11();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) CHECK(vec_is_zero(associator(g, i, j, k)));
    }
    SUBCASE("vanishes on the zero product") {
        const BiHomSuperalgebra z = fixtures::zero_bracket2(2, 3, 5, 7);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) CHECK(vec_is_zero(associator(z, i, j, k)));
    }
    SUBCASE("hand expansion on the affine bracket") {
        const BiHomSuperalgebra a = fixtures::affine3(3, 2);
        // alpha(e1)[e2,e2] = 0 and [[e1,e2], beta(e2)] = [e1,e2] = e1
        CHECK(associator(a, 0, 1, 1) == Vec{-1, 0, 0});
        CHECK(associator(a, 1, 1, 0) == Vec{1, 0, 0});
        CHECK(vec_is_zero(associator(a, 1, 0, 1)));
    }
}

TEST_CASE("cyclic dressed associator sum") {
    const BiHomSuperalgebra a = fixtures::affine3(3, 2);
    const EvenMap d1 = diag_map(a.space(), {3, 1, 2});    // alpha^{-1} beta^2
    const EvenMap d2 = a.beta();
    const EvenMap d3 = a.alpha();

    SUBCASE("dressing maps are what the formula says") {
        const EvenMap beta_sq = compose(a.beta(), a.beta());
        CHECK(compose(a.alpha_inverse(), beta_sq) == d1);
    }
    SUBCASE("terms at (e1,e2,e1) vanish one by one") {
        auto term = [&](int x, int y, int z) {
            return vec_scaled(associator_vec(a, d1.apply_basis(x), d2.apply_basis(y),
                                             d3.apply_basis(z)),
                              koszul_sign(a.parity(x), a.parity(z)));
        };
        CHECK(vec_is_zero(term(0, 1, 0)));
        CHECK(vec_is_zero(term(1, 0, 0)));
        CHECK(vec_is_zero(term(0, 0, 1)));
        CHECK(vec_is_zero(s_cyclic(a, 0, 1, 0)));
    }
    SUBCASE("terms at (e1,e2,e2) cancel in pairs") {
        auto term = [&](int x, int y, int z) {
            return vec_scaled(associator_vec(a, d1.apply_basis(x), d2.apply_basis(y),
                                             d3.apply_basis(z)),
                              koszul_sign(a.parity(x), a.parity(z)));
        };
        CHECK(term(0, 1, 1) == Vec{-3, 0, 0});
        CHECK(term(1, 1, 0) == Vec{3, 0, 0});
        CHECK(vec_is_zero(term(1, 0, 1)));
        CHECK(vec_is_zero(s_cyclic(a, 0, 1, 1)));
    }
    SUBCASE("bihom-associative input gives zero everywhere") {
        const BiHomSuperalgebra g = fixtures::gl11();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) CHECK(vec_is_zero(s_cyclic(g, i, j, k)));
    }
    SUBCASE("singular alpha is reported") {
        const GradedSpace s = a.space();
        const BiHomSuperalgebra degenerate("deg", s, a.product(),
                                           EvenMap::zero(s), a.beta());
        CHECK_THROWS_AS(s_cyclic(degenerate, 0, 0, 0), NotBijectiveError);
    }
}

TEST_CASE("six-term associator identity") {
    SUBCASE("holds on all 64 triples of a twisted gl(1|1)") {
        const BiHomSuperalgebra g = fixtures::gl11();
        const EvenMap ca = diag_map(g.space(), {1, 1, 2, Rational(1, 2)});
        const EvenMap cb = diag_map(g.space(), {1, 1, -1, -1});
        const BiHomSuperalgebra twisted = yau_twist_associative(g, ca, cb);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) CHECK(check_six_term_identity(twisted, i, j, k));
    }
    SUBCASE("holds on the lie fixtures") {
        for (const auto& a : corpus::lie_fixtures())
            for (int i = 0; i < a.dim(); ++i)
                for (int j = 0; j < a.dim(); ++j)
                    for (int k = 0; k < a.dim(); ++k) CHECK(check_six_term_identity(a, i, j, k));
    }
    SUBCASE("holds on random multiplicative bundles") {
        for (std::uint64_t seed = 200; seed < 215; ++seed) {
            InstanceGenerator gen(seed);
            const BiHomSuperalgebra a = gen.random_multiplicative();
            if (!a.alpha_bijective() || !a.beta_bijective()) continue;
            for (int i = 0; i < a.dim(); ++i)
                for (int j = 0; j < a.dim(); ++j)
                    for (int k = 0; k < a.dim(); ++k) CHECK(check_six_term_identity(a, i, j, k));
        }
    }
}

TEST_CASE("admissibility decision") {
    SUBCASE("bihom-associative instances are admissible") {
        CHECK(check_admissible(fixtures::gl11()));
        InstanceGenerator gen(5);
        CHECK(check_admissible(gen.bihom_associative()));
    }
    SUBCASE("verified bihom-lie instances are admissible") {
        for (const auto& a : corpus::lie_fixtures()) CHECK(check_admissible(a));
    }
    SUBCASE("a committed dim-2 search hit is non-admissible, by both routes") {
        const BiHomSuperalgebra a = corpus::non_admissible_dim2_instance();
        CHECK(!check_admissible(a));
        // independent jacobi expansion of the materialized bracket
        const BilinearMap bracket = admissible_bracket(a);
        bool some_triple_fails = false;
        for (int i = 0; i < a.dim() && !some_triple_fails; ++i)
            for (int j = 0; j < a.dim() && !some_triple_fails; ++j)
                for (int k = 0; k < a.dim() && !some_triple_fails; ++k) {
                    auto term = [&](int x, int y, int z) {
                        const Vec inner =
                            bracket.eval(a.beta().apply_basis(y), a.alpha().apply_basis(z));
                        const Vec outer = bracket.eval(
                            a.beta().apply(a.beta().apply_basis(x)), inner);
                        return vec_scaled(outer, koszul_sign(a.parity(x), a.parity(z)));
                    };
                    if (!vec_is_zero(
                            vec_add(vec_add(term(i, j, k), term(j, k, i)), term(k, i, j))))
                        some_triple_fails = true;
                }
        CHECK(some_triple_fails);
    }
}

TEST_CASE("subgroup sums") {
    SUBCASE("zero associator makes every subgroup sum vanish") {
        const BiHomSuperalgebra g = fixtures::gl11();
        for (Subgroup sub : {Subgroup::G1, Subgroup::G2, Subgroup::G3, Subgroup::G4, Subgroup::G5,
                             Subgroup::G6})
            CHECK(g_check(g, sub).holds);
    }
    SUBCASE("the G1 sum is the dressed associativity identity") {
        // fails exactly when the algebra is not bihom-associative
        CHECK(g_check(fixtures::gl11(), Subgroup::G1).holds);
        CHECK(!g_check(fixtures::affine3(3, 2), Subgroup::G1).holds);
        CHECK(!check_bihom_associative(fixtures::affine3(3, 2)).holds);
    }
    SUBCASE("commutative associative products with identity maps pass G2") {
        for (const auto& a : {fixtures::dual_numbers(), fixtures::split_pair()}) {
            const IdentityReport r = g_check(a, Subgroup::G2);
            CHECK(r.holds);
            // the two summands cancel term against term
            const EvenMap d1 = compose(a.alpha_inverse(), compose(a.beta(), a.beta()));
            for (int i = 0; i < a.dim(); ++i)
                for (int j = 0; j < a.dim(); ++j)
                    for (int k = 0; k < a.dim(); ++k) {
                        const Vec id_term = associator_vec(a, d1.apply_basis(i),
                                                           a.beta().apply_basis(j),
                                                           a.alpha().apply_basis(k));
                        const Vec swapped = associator_vec(a, a.beta().apply_basis(j),
                                                           d1.apply_basis(i),
                                                           a.alpha().apply_basis(k));
                        CHECK(id_term == vec_scaled(swapped, koszul_sign(a.parity(i), a.parity(j))));
                    }
        }
    }
    SUBCASE("passing any subgroup implies passing the full sum") {
        std::vector<BiHomSuperalgebra> probe = corpus::lie_fixtures();
        for (auto& inst : corpus::random_multiplicative_instances(60)) probe.push_back(inst);
        for (const auto& a : probe) {
            if (!a.alpha_bijective()) continue;
            const bool g6 = g_check(a, Subgroup::G6).holds;
            for (Subgroup sub :
                 {Subgroup::G1, Subgroup::G2, Subgroup::G3, Subgroup::G4, Subgroup::G5})
                if (g_check(a, sub).holds) CHECK(g6);
        }
    }
}

TEST_CASE("subgroup classification") {
    SUBCASE("bihom-associative instances carry all six subgroups") {
        const auto subs = classify_subgroups(fixtures::gl11());
        CHECK(subs.size() == 6);
    }
    SUBCASE("zero product carries all six") {
        const auto subs = classify_subgroups(fixtures::zero_bracket2(2, 3, 5, 7));
        CHECK(subs.size() == 6);
    }
    SUBCASE("a committed dim-2 instance separates G5 from G1") {
        const BiHomSuperalgebra a = corpus::g5_not_g1_instance();
        const auto subs = classify_subgroups(a);
        CHECK(subs.count(Subgroup::G5) == 1);
        CHECK(subs.count(Subgroup::G6) == 1);
        CHECK(subs.count(Subgroup::G1) == 0);
    }
    SUBCASE("a hom-type search hit agrees") {
        const BiHomSuperalgebra a = corpus::hom_type_g5_not_g1_instance();
        const auto subs = classify_subgroups(a);
        CHECK(subs.count(Subgroup::G5) == 1);
        CHECK(subs.count(Subgroup::G6) == 1);
        CHECK(subs.count(Subgroup::G1) == 0);
    }
    SUBCASE("lie instances are G6 members") {
        for (const auto& a : corpus::lie_fixtures()) {
            const auto subs = classify_subgroups(a);
            CHECK(subs.count(Subgroup::G6) == 1);
        }
    }
}
