#include "bihom/constructions.hpp"

namespace bihom {

namespace {

/// Structure constants of (x,y) -> mu(x,y) - (-1)^{|x||y|} mu(ainv.b(y), a.binv(x)).
BilinearMap twisted_commutator_table(const BiHomSuperalgebra& a) {
    const EvenMap left_dress = compose(a.alpha_inverse(), a.beta());   // a^{-1} b
    const EvenMap right_dress = compose(a.alpha(), a.beta_inverse());  // a b^{-1}
    const auto& mu = a.product();
    const int dim = a.dim();
    std::vector<Rational> constants(static_cast<std::size_t>(dim) * dim * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const Vec direct = mu.eval_basis(i, j);
            const Vec swapped = mu.eval(left_dress.apply_basis(j), right_dress.apply_basis(i));
            const int sign = koszul_sign(a.parity(i), a.parity(j));
            for (int k = 0; k < dim; ++k)
                constants[(static_cast<std::size_t>(i) * dim + j) * dim + k] =
                    direct[k] - Rational(sign) * swapped[k];
        }
    return BilinearMap(a.space(), std::move(constants));
}

void require_lie_suite(const BiHomSuperalgebra& a, const std::string& who) {
    StructureReport r = classify_structure(a);
    if (!r.commuting.holds) throw ConstructionError(who + ": structure maps do not commute", r.commuting);
    if (!r.multiplicative.holds)
        throw ConstructionError(who + ": structure maps are not multiplicative", r.multiplicative);
    if (!r.skew_supersymmetry.holds)
        throw ConstructionError(who + ": skew supersymmetry fails", r.skew_supersymmetry);
    if (!r.jacobi.holds) throw ConstructionError(who + ": super jacobi fails", r.jacobi);
}

}  // namespace

BilinearMap admissible_bracket(const BiHomSuperalgebra& a) {
    return twisted_commutator_table(a);
}

BiHomSuperalgebra supercommutator(const BiHomSuperalgebra& a) {
    IdentityReport commuting = check_commuting(a);
    if (!commuting.holds)
        throw ConstructionError("supercommutator: structure maps do not commute", commuting);
    IdentityReport mult = check_multiplicative(a);
    if (!mult.holds)
        throw ConstructionError("supercommutator: structure maps are not multiplicative", mult);
    IdentityReport assoc = check_bihom_associative(a);
    if (!assoc.holds)
        throw ConstructionError("supercommutator: input is not bihom-associative", assoc);

    BiHomSuperalgebra out(a.name().empty() ? "supercommutator" : a.name() + "-supercommutator",
                          a.space(), twisted_commutator_table(a), a.alpha(), a.beta(),
                          AlgebraKind::lie_candidate);
    // The theorem this realizes is re-checked on every output; a failure
    // here would mean a sign-convention bug, not bad data.
    require_lie_suite(out, "supercommutator output");
    return out;
}

BiHomSuperalgebra yau_twist_lie(const BiHomSuperalgebra& lie, const EvenMap& a, const EvenMap& b) {
    if (!lie.alpha().is_identity() || !lie.beta().is_identity())
        throw StructuralError("lie twist: input must carry identity structure maps");
    if (a.space() != lie.space() || b.space() != lie.space())
        throw StructuralError("lie twist: twist maps live on a different space");
    require_lie_suite(lie, "lie twist input");

    if (!commute(a, b)) {
        throw ConstructionError("lie twist: twist maps do not commute",
                                IdentityReport{"twist maps commute", false, {}});
    }
    auto require_bracket_hom = [&](const EvenMap& f, const char* name) {
        const auto& mu = lie.product();
        for (int i = 0; i < lie.dim(); ++i)
            for (int j = 0; j < lie.dim(); ++j) {
                Vec residual = vec_sub(f.apply(mu.eval_basis(i, j)),
                                       mu.eval(f.apply_basis(i), f.apply_basis(j)));
                if (!vec_is_zero(residual))
                    throw ConstructionError(
                        std::string("lie twist: ") + name + " is not a bracket homomorphism",
                        IdentityReport{"twist multiplicativity", false, {{{i, j}, residual, name}}});
            }
    };
    require_bracket_hom(a, "alpha");
    require_bracket_hom(b, "beta");

    const auto& mu = lie.product();
    const int dim = lie.dim();
    std::vector<Rational> constants(static_cast<std::size_t>(dim) * dim * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const Vec value = mu.eval(a.apply_basis(i), b.apply_basis(j));
            for (int k = 0; k < dim; ++k)
                constants[(static_cast<std::size_t>(i) * dim + j) * dim + k] = value[k];
        }
    BiHomSuperalgebra out(lie.name() + "-twisted", lie.space(),
                          BilinearMap(lie.space(), std::move(constants)), a, b,
                          AlgebraKind::lie_candidate);
    require_lie_suite(out, "lie twist output");
    return out;
}

BiHomSuperalgebra yau_twist_associative(const BiHomSuperalgebra& assoc, const EvenMap& a,
                                        const EvenMap& b) {
    if (!assoc.alpha().is_identity() || !assoc.beta().is_identity())
        throw StructuralError("associative twist: input must carry identity structure maps");
    if (a.space() != assoc.space() || b.space() != assoc.space())
        throw StructuralError("associative twist: twist maps live on a different space");
    {
        IdentityReport r = check_bihom_associative(assoc);
        if (!r.holds) throw ConstructionError("associative twist: input is not associative", r);
    }
    if (!commute(a, b))
        throw ConstructionError("associative twist: twist maps do not commute",
                                IdentityReport{"twist maps commute", false, {}});
    auto require_mult = [&](const EvenMap& f, const char* name) {
        const auto& mu = assoc.product();
        for (int i = 0; i < assoc.dim(); ++i)
            for (int j = 0; j < assoc.dim(); ++j) {
                Vec residual = vec_sub(f.apply(mu.eval_basis(i, j)),
                                       mu.eval(f.apply_basis(i), f.apply_basis(j)));
                if (!vec_is_zero(residual))
                    throw ConstructionError(
                        std::string("associative twist: ") + name + " is not multiplicative",
                        IdentityReport{"twist multiplicativity", false, {{{i, j}, residual, name}}});
            }
    };
    require_mult(a, "alpha");
    require_mult(b, "beta");

    const auto& mu = assoc.product();
    const int dim = assoc.dim();
    std::vector<Rational> constants(static_cast<std::size_t>(dim) * dim * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const Vec value = mu.eval(a.apply_basis(i), b.apply_basis(j));
            for (int k = 0; k < dim; ++k)
                constants[(static_cast<std::size_t>(i) * dim + j) * dim + k] = value[k];
        }
    BiHomSuperalgebra out(assoc.name() + "-twisted", assoc.space(),
                          BilinearMap(assoc.space(), std::move(constants)), a, b,
                          AlgebraKind::associative_candidate);
    IdentityReport post = check_bihom_associative(out);
    if (!post.holds)
        throw ConstructionError("associative twist: twisted product is not bihom-associative", post);
    IdentityReport mult = check_multiplicative(out);
    if (!mult.holds)
        throw ConstructionError("associative twist: twisted bundle is not multiplicative", mult);
    return out;
}

BilinearMap second_bracket(const BiHomSuperalgebra& lie) {
    require_lie_suite(lie, "second bracket input");
    return twisted_commutator_table(lie);
}

}  // namespace bihom
