#pragma once

#include "bihom/algebra.hpp"

namespace bihom::fixtures {

/// dim-2 superspace (one even, one odd generator), zero bracket, diagonal
/// structure maps diag(a0,a1) and diag(b0,b1).  A bihom-lie superalgebra
/// for any choice of the scalars.
BiHomSuperalgebra zero_bracket2(const Rational& a0, const Rational& a1, const Rational& b0,
                                const Rational& b1);

/// dim-3 superspace with even e1,e2 and odd e3, bracket [e1,e2] = e1
/// (completed skew: [e2,e1] = -e1, everything with e3 zero), structure
/// maps alpha = diag(mu,1,lambda), beta = diag(mu,1,-lambda).
/// A bihom-lie superalgebra for all nonzero mu, lambda.
BiHomSuperalgebra affine3(const Rational& mu, const Rational& lambda);

/// The untwisted version of affine3: same bracket, identity structure
/// maps.  A genuine lie superalgebra, the natural input for a twist.
BiHomSuperalgebra affine3_lie();

/// gl(1|1): 2x2 matrix units E11,E22 (even), E12,E21 (odd) under matrix
/// multiplication, identity structure maps.  Associative superalgebra.
BiHomSuperalgebra gl11();

/// gl(1|1) under the supercommutator [x,y] = xy - (-1)^{|x||y|} yx,
/// identity structure maps.  A lie superalgebra.
BiHomSuperalgebra gl11_bracket();

/// Grassmann algebra on one generator: basis 1, xi with xi^2 = 0,
/// parities (0,1), identity maps.  Associative supercommutative.
BiHomSuperalgebra grassmann1();

/// Grassmann algebra on two generators: basis 1, xi1, xi2, xi1*xi2,
/// parities (0,1,1,0), identity maps.  Associative.
BiHomSuperalgebra grassmann2();

/// Dual numbers k[t]/(t^2) with even t, identity maps.  Commutative
/// associative, not semisimple.
BiHomSuperalgebra dual_numbers();

/// k x k: two even orthogonal idempotents.  Commutative associative.
BiHomSuperalgebra split_pair();

/// dim-2 superspace, x even and xi odd with [xi,xi] = x, identity maps.
/// A lie superalgebra with a genuinely odd bracket relation.
BiHomSuperalgebra odd_heisenberg();

/// Abelian with identity structure maps on a given parity signature;
/// every endomorphism is a derivation for every exponent.
BiHomSuperalgebra abelian_identity(const std::vector<int>& parity_bits);

}  // namespace bihom::fixtures
