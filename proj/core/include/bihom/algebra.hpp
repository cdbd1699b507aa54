#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bihom/bilinear.hpp"
#include "bihom/maps.hpp"

namespace bihom {

enum class AlgebraKind { associative_candidate, lie_candidate, unclassified };

/// The (space, product, alpha, beta) bundle.  alpha and beta inverses are
/// computed once at construction and cached; commutation and
/// multiplicativity are NOT assumed here, the verifiers below decide them.
/// Immutable after construction, safe to share between threads.
class BiHomSuperalgebra {
public:
    BiHomSuperalgebra(std::string name, GradedSpace space, BilinearMap product, EvenMap alpha,
                      EvenMap beta, AlgebraKind kind = AlgebraKind::unclassified);

    const std::string& name() const { return name_; }
    const GradedSpace& space() const { return space_; }
    const BilinearMap& product() const { return product_; }
    const EvenMap& alpha() const { return alpha_; }
    const EvenMap& beta() const { return beta_; }
    AlgebraKind kind() const { return kind_; }
    int dim() const { return space_.dim(); }
    Parity parity(int i) const { return space_.parity(i); }

    bool alpha_bijective() const { return alpha_inv_.has_value(); }
    bool beta_bijective() const { return beta_inv_.has_value(); }

    /// Throws NotBijectiveError("alpha") / ("beta") when singular.
    const EvenMap& alpha_inverse() const;
    const EvenMap& beta_inverse() const;

    bool operator==(const BiHomSuperalgebra& other) const {
        return space_ == other.space_ && product_ == other.product_ && alpha_ == other.alpha_ &&
               beta_ == other.beta_;
    }

private:
    std::string name_;
    GradedSpace space_;
    BilinearMap product_;
    EvenMap alpha_;
    EvenMap beta_;
    AlgebraKind kind_;
    std::optional<EvenMap> alpha_inv_;
    std::optional<EvenMap> beta_inv_;
};

/// One failing basis tuple together with its exact residual vector.
struct Witness {
    std::vector<int> indices;
    Vec residual;
    std::string tag;  // optional qualifier, e.g. which structure map failed
};

struct IdentityReport {
    std::string identity;
    bool holds = true;
    std::vector<Witness> witnesses;  // lexicographic tuple order, empty iff holds
};

/// alpha.beta = beta.alpha, columnwise.
IdentityReport check_commuting(const BiHomSuperalgebra& a);

/// alpha(xy) = alpha(x)alpha(y) and the beta analogue, on all basis pairs.
/// Bilinearity makes basis pairs sufficient.
IdentityReport check_multiplicative(const BiHomSuperalgebra& a);

/// alpha(x)(yz) = (xy)beta(z), on all basis triples.
IdentityReport check_bihom_associative(const BiHomSuperalgebra& a);

/// [beta(x),alpha(y)] = -(-1)^{|x||y|}[beta(y),alpha(x)], on all basis pairs.
IdentityReport check_skew_supersymmetry(const BiHomSuperalgebra& a);

/// Cyclic sum of (-1)^{|x||z|}[beta^2(x),[beta(y),alpha(z)]] over all basis
/// triples, with Koszul signs from the basis parities.
IdentityReport check_bihom_jacobi(const BiHomSuperalgebra& a);

struct StructureReport {
    IdentityReport commuting;
    IdentityReport multiplicative;
    IdentityReport associative;
    IdentityReport skew_supersymmetry;
    IdentityReport jacobi;

    bool common_axioms_hold() const { return commuting.holds && multiplicative.holds; }
    bool is_bihom_associative() const { return common_axioms_hold() && associative.holds; }
    bool is_bihom_lie() const {
        return common_axioms_hold() && skew_supersymmetry.holds && jacobi.holds;
    }
};

/// Runs every defining identity and reports which of
/// {bihom-associative, bihom-lie, neither} the input satisfies.
StructureReport classify_structure(const BiHomSuperalgebra& a);

// Residuals at arbitrary homogeneous vectors (u of parity pu, ...).  The
// basis checks above are the canonical path; these extensions exist so
// property tests can confirm basis sufficiency on random vectors.
Vec associativity_residual(const BiHomSuperalgebra& a, const Vec& u, const Vec& v, const Vec& w);
Vec skew_residual(const BiHomSuperalgebra& a, const Vec& u, Parity pu, const Vec& v, Parity pv);
Vec jacobi_residual(const BiHomSuperalgebra& a, const Vec& u, Parity pu, const Vec& v, Parity pv,
                    const Vec& w, Parity pw);

}  // namespace bihom
