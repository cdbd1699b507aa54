#include "bihom/algebra.hpp"

namespace bihom {

BiHomSuperalgebra::BiHomSuperalgebra(std::string name, GradedSpace space, BilinearMap product,
                                     EvenMap alpha, EvenMap beta, AlgebraKind kind)
    : name_(std::move(name)),
      space_(std::move(space)),
      product_(std::move(product)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      kind_(kind) {
    if (product_.space() != space_ || alpha_.space() != space_ || beta_.space() != space_)
        throw StructuralError("algebra bundle: components live on different spaces");
    if (auto inv = inverse(alpha_.entries())) alpha_inv_ = EvenMap(space_, std::move(*inv));
    if (auto inv = inverse(beta_.entries())) beta_inv_ = EvenMap(space_, std::move(*inv));
}

const EvenMap& BiHomSuperalgebra::alpha_inverse() const {
    if (!alpha_inv_) throw NotBijectiveError("alpha");
    return *alpha_inv_;
}

const EvenMap& BiHomSuperalgebra::beta_inverse() const {
    if (!beta_inv_) throw NotBijectiveError("beta");
    return *beta_inv_;
}

IdentityReport check_commuting(const BiHomSuperalgebra& a) {
    IdentityReport report{"structure maps commute"};
    const Mat lhs = a.alpha().entries() * a.beta().entries();
    const Mat rhs = a.beta().entries() * a.alpha().entries();
    for (int j = 0; j < a.dim(); ++j) {
        Vec residual = vec_sub(lhs.col(j), rhs.col(j));
        if (!vec_is_zero(residual)) report.witnesses.push_back({{j}, std::move(residual), ""});
    }
    report.holds = report.witnesses.empty();
    return report;
}

IdentityReport check_multiplicative(const BiHomSuperalgebra& a) {
    IdentityReport report{"multiplicativity"};
    const auto& mu = a.product();
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            const Vec product_ij = mu.eval_basis(i, j);
            {
                Vec residual = vec_sub(a.alpha().apply(product_ij),
                                       mu.eval(a.alpha().apply_basis(i), a.alpha().apply_basis(j)));
                if (!vec_is_zero(residual))
                    report.witnesses.push_back({{i, j}, std::move(residual), "alpha"});
            }
            {
                Vec residual = vec_sub(a.beta().apply(product_ij),
                                       mu.eval(a.beta().apply_basis(i), a.beta().apply_basis(j)));
                if (!vec_is_zero(residual))
                    report.witnesses.push_back({{i, j}, std::move(residual), "beta"});
            }
        }
    }
    report.holds = report.witnesses.empty();
    return report;
}

IdentityReport check_bihom_associative(const BiHomSuperalgebra& a) {
    IdentityReport report{"bihom associativity"};
    const auto& mu = a.product();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k) {
                const Vec lhs = mu.eval(a.alpha().apply_basis(i), mu.eval_basis(j, k));
                const Vec rhs = mu.eval(mu.eval_basis(i, j), a.beta().apply_basis(k));
                Vec residual = vec_sub(lhs, rhs);
                if (!vec_is_zero(residual))
                    report.witnesses.push_back({{i, j, k}, std::move(residual), ""});
            }
    report.holds = report.witnesses.empty();
    return report;
}

IdentityReport check_skew_supersymmetry(const BiHomSuperalgebra& a) {
    IdentityReport report{"skew supersymmetry"};
    const auto& mu = a.product();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            const Vec lhs = mu.eval(a.beta().apply_basis(i), a.alpha().apply_basis(j));
            const Vec swapped = mu.eval(a.beta().apply_basis(j), a.alpha().apply_basis(i));
            const int sign = koszul_sign(a.parity(i), a.parity(j));
            // residual of [b(x),a(y)] + (-1)^{|x||y|}[b(y),a(x)]
            Vec residual = vec_add(lhs, vec_scaled(swapped, sign));
            if (!vec_is_zero(residual))
                report.witnesses.push_back({{i, j}, std::move(residual), ""});
        }
    report.holds = report.witnesses.empty();
    return report;
}

IdentityReport check_bihom_jacobi(const BiHomSuperalgebra& a) {
    IdentityReport report{"super jacobi"};
    const auto& mu = a.product();
    const EvenMap beta_sq = compose(a.beta(), a.beta());
    auto term = [&](int x, int y, int z) {
        // (-1)^{|x||z|} [beta^2(x), [beta(y), alpha(z)]]
        const Vec inner = mu.eval(a.beta().apply_basis(y), a.alpha().apply_basis(z));
        const Vec outer = mu.eval(beta_sq.apply_basis(x), inner);
        return vec_scaled(outer, koszul_sign(a.parity(x), a.parity(z)));
    };
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k) {
                Vec residual = vec_add(vec_add(term(i, j, k), term(j, k, i)), term(k, i, j));
                if (!vec_is_zero(residual))
                    report.witnesses.push_back({{i, j, k}, std::move(residual), ""});
            }
    report.holds = report.witnesses.empty();
    return report;
}

StructureReport classify_structure(const BiHomSuperalgebra& a) {
    StructureReport report;
    report.commuting = check_commuting(a);
    report.multiplicative = check_multiplicative(a);
    report.associative = check_bihom_associative(a);
    report.skew_supersymmetry = check_skew_supersymmetry(a);
    report.jacobi = check_bihom_jacobi(a);
    return report;
}

Vec associativity_residual(const BiHomSuperalgebra& a, const Vec& u, const Vec& v, const Vec& w) {
    const auto& mu = a.product();
    const Vec lhs = mu.eval(a.alpha().apply(u), mu.eval(v, w));
    const Vec rhs = mu.eval(mu.eval(u, v), a.beta().apply(w));
    return vec_sub(lhs, rhs);
}

Vec skew_residual(const BiHomSuperalgebra& a, const Vec& u, Parity pu, const Vec& v, Parity pv) {
    const auto& mu = a.product();
    const Vec lhs = mu.eval(a.beta().apply(u), a.alpha().apply(v));
    const Vec swapped = mu.eval(a.beta().apply(v), a.alpha().apply(u));
    return vec_add(lhs, vec_scaled(swapped, koszul_sign(pu, pv)));
}

Vec jacobi_residual(const BiHomSuperalgebra& a, const Vec& u, Parity pu, const Vec& v, Parity pv,
                    const Vec& w, Parity pw) {
    const auto& mu = a.product();
    const EvenMap beta_sq = compose(a.beta(), a.beta());
    auto term = [&](const Vec& x, Parity px, const Vec& y, const Vec& z, Parity pz) {
        const Vec inner = mu.eval(a.beta().apply(y), a.alpha().apply(z));
        return vec_scaled(mu.eval(beta_sq.apply(x), inner), koszul_sign(px, pz));
    };
    return vec_add(vec_add(term(u, pu, v, w, pw), term(v, pv, w, u, pu)),
                   term(w, pw, u, v, pv));
}

}  // namespace bihom
