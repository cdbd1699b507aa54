#include <doctest.h>

#include <random>

#include "bihom/graded.hpp"
#include "bihom/maps.hpp"
#include "oracle_linalg.hpp"

using namespace bihom;

namespace {

GradedSpace space_of(std::vector<int> bits) {
    std::vector<Parity> p;
    for (int b : bits) p.emplace_back(b);
    return GradedSpace(p);
}

EvenMap diag_map(const GradedSpace& s, std::vector<Rational> d) {
    Mat m(s.dim(), s.dim());
    for (int i = 0; i < s.dim(); ++i) m.at(i, i) = d[i];
    return EvenMap(s, m);
}

/// Seeded homogeneous map of the requested degree with small entries.
HomogeneousMap random_homogeneous(const GradedSpace& s, Parity degree, std::mt19937_64& rng) {
    Mat m(s.dim(), s.dim());
    const Rational pool[] = {0, 0, 1, -1, 2, Rational(1, 2)};
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j)
            if (s.parity(i) == s.parity(j) + degree) m.at(i, j) = pool[rng() % 6];
    return HomogeneousMap(s, degree, m);
}

}  // namespace

TEST_CASE("fraction strings parse and print canonically") {
    CHECK(to_fraction_string(Rational(3, 2)) == "3/2");
    CHECK(to_fraction_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_fraction_string(Rational(4, 2)) == "2");
    CHECK(to_fraction_string(Rational(0)) == "0");

    CHECK(*parse_fraction("-3/2") == Rational(-3, 2));
    CHECK(*parse_fraction("1") == Rational(1));
    CHECK(*parse_fraction("0") == Rational(0));
    CHECK(*parse_fraction("-0") == Rational(0));
    CHECK(!parse_fraction("1.5").has_value());
    CHECK(!parse_fraction("3/0").has_value());
    CHECK(!parse_fraction("3/-2").has_value());
    CHECK(!parse_fraction("3/02").has_value());
    CHECK(!parse_fraction(" 1").has_value());
    CHECK(!parse_fraction("").has_value());
    // equality is canonical-form equality
    CHECK(*parse_fraction("2/4") == *parse_fraction("1/2"));
}

TEST_CASE("rational arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a * b == Rational(1, 18));
    CHECK(Rational(1) / a == Rational(3));
    // no drift under repeated operations
    Rational acc = 0;
    for (int i = 0; i < 300; ++i) acc += Rational(1, 300);
    CHECK(acc == 1);
}

TEST_CASE("parity arithmetic is mod 2") {
    CHECK(Parity(1) + Parity(1) == Parity(0));
    CHECK(Parity(1) + Parity(0) == Parity(1));
    CHECK(koszul_sign(Parity(1), Parity(1)) == -1);
    CHECK(koszul_sign(Parity(1), Parity(0)) == 1);
}

TEST_CASE("composition follows the examples") {
    const GradedSpace s = space_of({0, 0, 1});

    SUBCASE("identity absorbs") {
        const EvenMap f = diag_map(s, {3, 1, 2});
        CHECK(compose(EvenMap::identity(s), f) == f);
        CHECK(compose(f, EvenMap::identity(s)) == f);
    }
    SUBCASE("diagonal product, mu=3 lambda=2") {
        const EvenMap f = diag_map(s, {3, 1, 2});
        const EvenMap g = diag_map(s, {3, 1, -2});
        CHECK(compose(f, g) == diag_map(s, {9, 1, -4}));
    }
    SUBCASE("even after odd is odd") {
        std::mt19937_64 rng(5);
        const HomogeneousMap even = random_homogeneous(s, Parity::even(), rng);
        const HomogeneousMap odd = random_homogeneous(s, Parity::odd(), rng);
        CHECK(compose(even, odd).degree() == Parity::odd());
        CHECK(compose(odd, odd).degree() == Parity::even());
    }
    SUBCASE("dimension mismatch is a structural error") {
        const GradedSpace s2 = space_of({0, 1});
        std::mt19937_64 rng(7);
        const HomogeneousMap f = random_homogeneous(s, Parity::even(), rng);
        const HomogeneousMap g = random_homogeneous(s2, Parity::even(), rng);
        CHECK_THROWS_AS(compose(f, g), StructuralError);
    }
}

TEST_CASE("inversion is exact") {
    const GradedSpace s3 = space_of({0, 0, 1});

    CHECK(invert(EvenMap::identity(s3)) == EvenMap::identity(s3));
    CHECK(invert(diag_map(s3, {3, 1, 2})) == diag_map(s3, {Rational(1, 3), 1, Rational(1, 2)}));

    SUBCASE("unipotent 2x2 block on equal-parity indices") {
        const GradedSpace s2 = space_of({0, 0});
        Mat m(2, 2);
        m.at(0, 0) = 1;
        m.at(0, 1) = 1;
        m.at(1, 1) = 1;
        const EvenMap inv = invert(EvenMap(s2, m));
        CHECK(inv.entries().at(0, 0) == 1);
        CHECK(inv.entries().at(0, 1) == -1);
        CHECK(inv.entries().at(1, 0) == 0);
        CHECK(inv.entries().at(1, 1) == 1);
        // cross-check against the adjugate oracle
        const auto adj = oracle::adjugate_inverse({{1, 1}, {0, 1}});
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(inv.entries().at(i, j) == adj[i][j]);
    }
    SUBCASE("singular map is named in the error") {
        try {
            invert(EvenMap::zero(s3), "alpha");
            FAIL("expected NotBijectiveError");
        } catch (const NotBijectiveError& e) {
            CHECK(e.map == "alpha");
        }
    }
}

TEST_CASE("check_even") {
    const GradedSpace s = space_of({0, 0, 1});
    CHECK(check_even(Mat::identity(3), s));
    // scaled structure maps on the mixed-parity space
    CHECK(check_even(diag_map(s, {3, 1, 2}).entries(), s));

    Mat swap_mixed(3, 3);
    swap_mixed.at(0, 2) = 1;
    swap_mixed.at(2, 0) = 1;
    swap_mixed.at(1, 1) = 1;
    CHECK(!check_even(swap_mixed, s));
    CHECK_THROWS_AS(EvenMap(s, swap_mixed), StructuralError);
}

TEST_CASE("commutation check") {
    const GradedSpace s2 = space_of({0, 0});
    CHECK(commute(diag_map(s2, {5, 7}), EvenMap::identity(s2)));
    CHECK(commute(diag_map(s2, {2, 3}), diag_map(s2, {5, 7})));

    Mat sw(2, 2);
    sw.at(0, 1) = 1;
    sw.at(1, 0) = 1;
    const EvenMap swap_map(s2, sw);
    const EvenMap d = diag_map(s2, {1, 2});
    // direct 2x2 multiplication: swap.diag = [[0,2],[1,0]], diag.swap = [[0,1],[2,0]]
    CHECK((swap_map.entries() * d.entries()).at(0, 1) == 2);
    CHECK((d.entries() * swap_map.entries()).at(0, 1) == 1);
    CHECK(!commute(swap_map, d));
}

TEST_CASE("homogeneous map block pattern is enforced") {
    const GradedSpace s = space_of({0, 1});
    Mat odd_ok(2, 2);
    odd_ok.at(0, 1) = 1;
    odd_ok.at(1, 0) = 2;
    CHECK_NOTHROW(HomogeneousMap(s, Parity::odd(), odd_ok));
    CHECK_THROWS_AS(HomogeneousMap(s, Parity::even(), odd_ok), StructuralError);
}

TEST_CASE("composition properties over seeded maps") {
    const GradedSpace s = space_of({0, 0, 1, 1});
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const Parity pf(static_cast<int>(rng() % 2));
        const Parity pg(static_cast<int>(rng() % 2));
        const Parity ph(static_cast<int>(rng() % 2));
        const HomogeneousMap f = random_homogeneous(s, pf, rng);
        const HomogeneousMap g = random_homogeneous(s, pg, rng);
        const HomogeneousMap h = random_homogeneous(s, ph, rng);
        // associativity, entrywise
        CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
        // degree is additive mod 2
        CHECK(compose(f, g).degree() == pf + pg);
        // evenness is closed under composition
        if (pf == Parity::even() && pg == Parity::even())
            CHECK(check_even(compose(f, g).entries(), s));
    }
}

TEST_CASE("inverse composes to the identity exactly") {
    const GradedSpace s = space_of({0, 0, 1, 1});
    std::mt19937_64 rng(99);
    int invertible_seen = 0;
    while (invertible_seen < 10) {
        const HomogeneousMap f = random_homogeneous(s, Parity::even(), rng);
        const EvenMap candidate(s, f.entries());
        try {
            const EvenMap inv = invert(candidate);
            ++invertible_seen;
            CHECK(compose(candidate, inv) == EvenMap::identity(s));
            CHECK(compose(inv, candidate) == EvenMap::identity(s));
        } catch (const NotBijectiveError&) {
            // singular sample, draw again
        }
    }
}

TEST_CASE("nullspace and rref agree with the oracle") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const int rows = 2 + static_cast<int>(rng() % 4);
        const int cols = 2 + static_cast<int>(rng() % 4);
        Mat m(rows, cols);
        oracle::Table t(rows, oracle::Row(cols, Rational(0)));
        const Rational pool[] = {0, 0, 1, -1, 2, Rational(-1, 2)};
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                const Rational v = pool[rng() % 6];
                m.at(i, j) = v;
                t[i][j] = v;
            }
        CHECK(rank(m) == oracle::table_rank(t));
        const auto kernel = nullspace(m);
        CHECK(static_cast<int>(kernel.size()) == cols - rank(m));
        for (const auto& v : kernel) CHECK(vec_is_zero(m.apply(v)));
    }
}
