#include "bihom/admissibility.hpp"

#include "bihom/constructions.hpp"

namespace bihom {

namespace {

const Permutation3 kId({0, 1, 2}, 1);
const Permutation3 kSwap12({1, 0, 2}, -1);
const Permutation3 kSwap23({0, 2, 1}, -1);
const Permutation3 kSwap13({2, 1, 0}, -1);
const Permutation3 kCycle312({2, 0, 1}, 1);
const Permutation3 kCycle231({1, 2, 0}, 1);

const std::array<Permutation3, 6> kAll = {kId,     kSwap12,   kSwap23,
                                          kSwap13, kCycle312, kCycle231};

}  // namespace

const Permutation3& Permutation3::identity() { return kId; }
const Permutation3& Permutation3::swap12() { return kSwap12; }
const Permutation3& Permutation3::swap23() { return kSwap23; }
const Permutation3& Permutation3::swap13() { return kSwap13; }
const Permutation3& Permutation3::cycle_312() { return kCycle312; }
const Permutation3& Permutation3::cycle_231() { return kCycle231; }
const std::array<Permutation3, 6>& Permutation3::all() { return kAll; }

Permutation3 Permutation3::after(const Permutation3& other) const {
    // (this.act . other.act)(x)[t] = other.act(x)[images_[t]] = x[other.images_[images_[t]]]
    return Permutation3({other.images_[images_[0]], other.images_[images_[1]],
                         other.images_[images_[2]]},
                        signature_ * other.signature_);
}

Parity perm_parity(const Permutation3& sigma, Parity p1, Parity p2, Parity p3) {
    int exponent = 0;
    if (sigma == kId) {
        exponent = 0;
    } else if (sigma == kSwap12) {
        exponent = parity_product(p1, p2);
    } else if (sigma == kSwap23) {
        exponent = parity_product(p2, p3);
    } else if (sigma == kCycle312) {
        exponent = parity_product(p2, p3) + parity_product(p1, p3);
    } else if (sigma == kCycle231) {
        exponent = parity_product(p1, p2) + parity_product(p1, p3);
    } else if (sigma == kSwap13) {
        exponent = parity_product(p2, p3) + parity_product(p1, p3) + parity_product(p1, p2);
    } else {
        throw StructuralError("perm_parity: not an S3 element");
    }
    return Parity(exponent);
}

const std::vector<Permutation3>& elements(Subgroup g) {
    static const std::vector<Permutation3> g1 = {kId};
    static const std::vector<Permutation3> g2 = {kId, kSwap12};
    static const std::vector<Permutation3> g3 = {kId, kSwap23};
    static const std::vector<Permutation3> g4 = {kId, kSwap13};
    static const std::vector<Permutation3> g5 = {kId, kCycle312, kCycle231};
    static const std::vector<Permutation3> g6 = {kId,     kSwap12,   kSwap23,
                                                 kSwap13, kCycle312, kCycle231};
    switch (g) {
        case Subgroup::G1: return g1;
        case Subgroup::G2: return g2;
        case Subgroup::G3: return g3;
        case Subgroup::G4: return g4;
        case Subgroup::G5: return g5;
        case Subgroup::G6: return g6;
    }
    throw StructuralError("unknown subgroup");
}

std::string subgroup_name(Subgroup g) {
    switch (g) {
        case Subgroup::G1: return "G1";
        case Subgroup::G2: return "G2";
        case Subgroup::G3: return "G3";
        case Subgroup::G4: return "G4";
        case Subgroup::G5: return "G5";
        case Subgroup::G6: return "G6";
    }
    return "?";
}

Vec associator_vec(const BiHomSuperalgebra& a, const Vec& u, const Vec& v, const Vec& w) {
    const auto& mu = a.product();
    return vec_sub(mu.eval(a.alpha().apply(u), mu.eval(v, w)),
                   mu.eval(mu.eval(u, v), a.beta().apply(w)));
}

Vec associator(const BiHomSuperalgebra& a, int i, int j, int k) {
    const auto& mu = a.product();
    return vec_sub(mu.eval(a.alpha().apply_basis(i), mu.eval_basis(j, k)),
                   mu.eval(mu.eval_basis(i, j), a.beta().apply_basis(k)));
}

namespace {

struct Dressing {
    EvenMap first;   // a^{-1} b^2
    EvenMap second;  // b
    EvenMap third;   // a
};

Dressing make_dressing(const BiHomSuperalgebra& a) {
    const EvenMap beta_sq = compose(a.beta(), a.beta());
    return {compose(a.alpha_inverse(), beta_sq), a.beta(), a.alpha()};
}

/// One cyclic term (-1)^{|x||z|} as(d1 x, d2 y, d3 z) with (x,y,z) taken
/// from basis indices.
Vec dressed_term(const BiHomSuperalgebra& a, const Dressing& d, int x, int y, int z) {
    Vec t = associator_vec(a, d.first.apply_basis(x), d.second.apply_basis(y),
                           d.third.apply_basis(z));
    return vec_scaled(t, koszul_sign(a.parity(x), a.parity(z)));
}

void require_bihom_superalgebra(const BiHomSuperalgebra& a, const char* who) {
    if (!check_commuting(a).holds)
        throw StructuralError(std::string(who) + ": structure maps do not commute");
    if (!check_multiplicative(a).holds)
        throw StructuralError(std::string(who) + ": structure maps are not multiplicative");
}

}  // namespace

Vec s_cyclic(const BiHomSuperalgebra& a, int i, int j, int k) {
    const Dressing d = make_dressing(a);
    return vec_add(vec_add(dressed_term(a, d, i, j, k), dressed_term(a, d, j, k, i)),
                   dressed_term(a, d, k, i, j));
}

bool check_six_term_identity(const BiHomSuperalgebra& a, int i, int j, int k) {
    const BilinearMap bracket = admissible_bracket(a);
    const BiHomSuperalgebra derived("derived", a.space(), bracket, a.alpha(), a.beta());

    // Cyclic double-bracket sum of the derived bracket.
    auto basis_vec = [&](int idx) {
        Vec v(a.dim());
        v[idx] = 1;
        return v;
    };
    const Vec lhs = jacobi_residual(derived, basis_vec(i), a.parity(i), basis_vec(j), a.parity(j),
                                    basis_vec(k), a.parity(k));

    // Six signed dressed associator terms.
    const Dressing d = make_dressing(a);
    auto raw = [&](int x, int y, int z) {
        return associator_vec(a, d.first.apply_basis(x), d.second.apply_basis(y),
                              d.third.apply_basis(z));
    };
    const Parity pi = a.parity(i), pj = a.parity(j), pk = a.parity(k);
    Vec rhs = vec_zero(a.dim());
    rhs = vec_add(rhs, vec_scaled(raw(i, j, k), sign_of_exponent(parity_product(pi, pk))));
    rhs = vec_add(rhs, vec_scaled(raw(j, k, i), sign_of_exponent(parity_product(pi, pj))));
    rhs = vec_add(rhs, vec_scaled(raw(k, i, j), sign_of_exponent(parity_product(pk, pj))));
    rhs = vec_sub(rhs, vec_scaled(raw(i, k, j), sign_of_exponent(parity_product(pi, pk) +
                                                                 parity_product(pk, pj))));
    rhs = vec_sub(rhs, vec_scaled(raw(k, j, i), sign_of_exponent(parity_product(pi, pj) +
                                                                 parity_product(pk, pj))));
    rhs = vec_sub(rhs, vec_scaled(raw(j, i, k), sign_of_exponent(parity_product(pi, pj) +
                                                                 parity_product(pk, pi))));
    return lhs == rhs;
}

bool check_admissible(const BiHomSuperalgebra& a) {
    require_bihom_superalgebra(a, "admissibility check");

    // Route 1: materialize the derived bracket, run the jacobi verifier.
    const BilinearMap bracket = admissible_bracket(a);
    const BiHomSuperalgebra derived("derived", a.space(), bracket, a.alpha(), a.beta());
    const IdentityReport jacobi = check_bihom_jacobi(derived);
    std::set<std::array<int, 3>> failing_jacobi;
    for (const auto& w : jacobi.witnesses)
        failing_jacobi.insert({w.indices[0], w.indices[1], w.indices[2]});

    // Route 2: the S-symmetry criterion
    //   S(x,y,z) = (-1)^{|x||y|+|y||z|+|z||x|} S(x,z,y)
    // evaluated triple by triple.
    std::set<std::array<int, 3>> failing_criterion;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k) {
                const int exponent = parity_product(a.parity(i), a.parity(j)) +
                                     parity_product(a.parity(j), a.parity(k)) +
                                     parity_product(a.parity(k), a.parity(i));
                const Vec lhs = s_cyclic(a, i, j, k);
                const Vec rhs = vec_scaled(s_cyclic(a, i, k, j), sign_of_exponent(exponent));
                if (lhs != rhs) failing_criterion.insert({i, j, k});
            }

    if (failing_jacobi != failing_criterion)
        throw InternalInconsistencyError(
            "admissibility routes disagree: jacobi of the derived bracket vs the S-symmetry "
            "criterion");
    return failing_jacobi.empty();
}

IdentityReport g_check(const BiHomSuperalgebra& a, Subgroup g) {
    IdentityReport report{subgroup_name(g) + "-sum"};
    const Dressing d = make_dressing(a);
    const auto& sigmas = elements(g);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k) {
                const std::array<Vec, 3> dressed = {d.first.apply_basis(i),
                                                    d.second.apply_basis(j),
                                                    d.third.apply_basis(k)};
                Vec sum = vec_zero(a.dim());
                for (const auto& sigma : sigmas) {
                    const std::array<Vec, 3> permuted = sigma.act(dressed);
                    const Parity weight =
                        perm_parity(sigma, a.parity(i), a.parity(j), a.parity(k));
                    const int sign = sigma.signature() * sign_of_exponent(weight.bit());
                    sum = vec_add(sum, vec_scaled(associator_vec(a, permuted[0], permuted[1],
                                                                 permuted[2]),
                                                  sign));
                }
                if (!vec_is_zero(sum)) report.witnesses.push_back({{i, j, k}, std::move(sum), ""});
            }
    report.holds = report.witnesses.empty();
    return report;
}

namespace {

/// Independent evaluation of the expanded two-sided conditions for the
/// order-2 and order-3 subgroups, straight from their displayed forms.
/// Returns the failing triples.
std::set<std::array<int, 3>> expanded_condition_failures(const BiHomSuperalgebra& alg, Subgroup g) {
    const auto& mu = alg.product();
    const EvenMap& al = alg.alpha();
    const EvenMap& be = alg.beta();
    const EvenMap al_be = compose(al, be);
    const EvenMap be_sq = compose(be, be);
    const EvenMap al_sq = compose(al, al);
    const EvenMap ainv_bsq = compose(alg.alpha_inverse(), be_sq);
    const EvenMap ainv_bcu = compose(ainv_bsq, be);  // a^{-1} b^3

    auto basis_vec = [&](int idx) {
        Vec v(alg.dim());
        v[idx] = 1;
        return v;
    };
    std::set<std::array<int, 3>> failing;
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j)
            for (int k = 0; k < alg.dim(); ++k) {
                const Vec x = basis_vec(i);
                const Vec y = basis_vec(j);
                const Vec z = basis_vec(k);
                const int pxy = parity_product(alg.parity(i), alg.parity(j));
                const int pxz = parity_product(alg.parity(i), alg.parity(k));
                const int pyz = parity_product(alg.parity(j), alg.parity(k));

                const Vec lhs = vec_sub(
                    mu.eval(be_sq.apply(x), mu.eval(be.apply(y), al.apply(z))),
                    mu.eval(mu.eval(ainv_bsq.apply(x), be.apply(y)), al_be.apply(z)));

                Vec rhs;
                switch (g) {
                    case Subgroup::G2:
                        rhs = vec_scaled(
                            vec_sub(mu.eval(al_be.apply(y), mu.eval(ainv_bsq.apply(x), al.apply(z))),
                                    mu.eval(mu.eval(be.apply(y), ainv_bsq.apply(x)),
                                            al_be.apply(z))),
                            sign_of_exponent(pxy));
                        break;
                    case Subgroup::G3:
                        rhs = vec_scaled(
                            vec_sub(mu.eval(be_sq.apply(x), mu.eval(al.apply(z), be.apply(y))),
                                    mu.eval(mu.eval(ainv_bsq.apply(x), al.apply(z)),
                                            be_sq.apply(y))),
                            sign_of_exponent(pyz));
                        break;
                    case Subgroup::G4:
                        rhs = vec_scaled(
                            vec_sub(mu.eval(al_sq.apply(z), mu.eval(be.apply(y), ainv_bsq.apply(x))),
                                    mu.eval(mu.eval(al.apply(z), be.apply(y)),
                                            ainv_bcu.apply(x))),
                            sign_of_exponent(pxy + pxz + pyz));
                        break;
                    case Subgroup::G5: {
                        const Vec first = vec_scaled(
                            vec_sub(mu.eval(al_be.apply(y), mu.eval(al.apply(z), ainv_bsq.apply(x))),
                                    mu.eval(mu.eval(be.apply(y), al.apply(z)),
                                            ainv_bcu.apply(x))),
                            -sign_of_exponent(pxy + pxz));
                        const Vec second = vec_scaled(
                            vec_sub(mu.eval(al_sq.apply(z), mu.eval(ainv_bsq.apply(x), be.apply(y))),
                                    mu.eval(mu.eval(al.apply(z), ainv_bsq.apply(x)),
                                            be_sq.apply(y))),
                            -sign_of_exponent(pyz + pxz));
                        rhs = vec_add(first, second);
                        break;
                    }
                    default:
                        throw StructuralError("expanded condition: only G2..G5 have one");
                }
                if (lhs != rhs) failing.insert({i, j, k});
            }
    return failing;
}

}  // namespace

std::set<Subgroup> classify_subgroups(const BiHomSuperalgebra& a) {
    require_bihom_superalgebra(a, "subgroup classification");

    std::set<Subgroup> satisfied;
    for (Subgroup g : {Subgroup::G1, Subgroup::G2, Subgroup::G3, Subgroup::G4, Subgroup::G5,
                       Subgroup::G6}) {
        const IdentityReport report = g_check(a, g);

        if (g == Subgroup::G2 || g == Subgroup::G3 || g == Subgroup::G4 || g == Subgroup::G5) {
            std::set<std::array<int, 3>> generic;
            for (const auto& w : report.witnesses)
                generic.insert({w.indices[0], w.indices[1], w.indices[2]});
            if (generic != expanded_condition_failures(a, g))
                throw InternalInconsistencyError(
                    "subgroup classification: expanded condition disagrees with the generic sum "
                    "for " + subgroup_name(g));
        }
        if (report.holds) satisfied.insert(g);
    }
    return satisfied;
}

}  // namespace bihom
