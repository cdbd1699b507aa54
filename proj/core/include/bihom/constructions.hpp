#pragma once

#include "bihom/algebra.hpp"

namespace bihom {

/// A construction rejected its input (precondition) or, impossibly, its
/// own output (postcondition).  Carries the first failed identity report.
struct ConstructionError : std::runtime_error {
    ConstructionError(const std::string& what, IdentityReport failed)
        : std::runtime_error(what), report(std::move(failed)) {}
    IdentityReport report;
};

/// Bracket table [x,y] = xy - (-1)^{|x||y|} (a^{-1}b(y))(ab^{-1}(x)),
/// materialized on basis pairs.  Requires bijective structure maps.
BilinearMap admissible_bracket(const BiHomSuperalgebra& a);

/// Supercommutator of a bihom-associative superalgebra with bijective
/// structure maps.  The input is re-verified (associativity and
/// multiplicativity), and the output is re-verified to pass the full
/// bihom-lie suite rather than trusted.
BiHomSuperalgebra supercommutator(const BiHomSuperalgebra& a);

/// Twist of a genuine lie superalgebra (identity structure maps) by a
/// commuting pair of even bracket homomorphisms:
/// [x,y]_{a,b} = [a(x), b(y)] with structure maps (a, b).
/// Preconditions and the bihom-lie output are both verified.
BiHomSuperalgebra yau_twist_lie(const BiHomSuperalgebra& lie, const EvenMap& a, const EvenMap& b);

/// Twist of an associative superalgebra (identity structure maps) by a
/// commuting pair of even multiplicative maps: x*y = a(x)b(y) with
/// structure maps (a, b).  Returned only if the twisted bundle passes the
/// bihom-associativity check; rejected with witnesses otherwise.
BiHomSuperalgebra yau_twist_associative(const BiHomSuperalgebra& assoc, const EvenMap& a,
                                        const EvenMap& b);

/// Second bracket [x,y]' = [x,y] - (-1)^{|x||y|}[a^{-1}b(y), ab^{-1}(x)]
/// of a verified bihom-lie superalgebra; satisfies the doubling identity
/// [b(x), a(y)]' = 2 [b(x), a(y)] on all pairs.
BilinearMap second_bracket(const BiHomSuperalgebra& lie);

}  // namespace bihom
