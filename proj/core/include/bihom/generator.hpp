#pragma once

#include <cstdint>
#include <random>

#include "bihom/algebra.hpp"

namespace bihom {

/// Seed-controlled source of exact test instances.  Twist parameters are
/// drawn from small rationals (+-1, +-2, +-1/2) so arithmetic stays
/// bounded; every constructed instance is verified, never assumed.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    /// A verified bihom-associative superalgebra: one of the associative
    /// base fixtures twisted by a commuting automorphism pair.
    BiHomSuperalgebra bihom_associative();

    /// A verified bihom-lie superalgebra: one of the lie base fixtures
    /// twisted by a commuting pair of bracket homomorphisms, together
    /// with the untwisted base and the pair used (for identities that
    /// relate the twist to its source).
    struct LieTwist {
        BiHomSuperalgebra base;
        EvenMap a;
        EvenMap b;
        BiHomSuperalgebra twisted;
    };
    LieTwist bihom_lie();

    /// A random multiplicative bundle with commuting bijective diagonal
    /// structure maps on a random dim-2/dim-3 graded space.  No
    /// associativity or jacobi property is arranged; these probe the
    /// subgroup classifiers.
    BiHomSuperalgebra random_multiplicative();

private:
    Rational small_rational();
    Rational nonzero_unit();
    int pick(int bound);

    std::mt19937_64 rng_;
};

}  // namespace bihom
