#pragma once

// Shared seeded corpora for the property and acceptance suites.  Seeds
// are committed so every run sees the same instances.

#include <cstdint>
#include <vector>

#include "bihom/constructions.hpp"
#include "bihom/fixtures.hpp"
#include "bihom/generator.hpp"

namespace corpus {

using namespace bihom;

inline std::vector<BiHomSuperalgebra> lie_fixtures() {
    return {
        fixtures::affine3(3, 2),
        fixtures::affine3(1, 1),
        fixtures::affine3(-1, Rational(1, 2)),
        fixtures::zero_bracket2(2, 3, 5, 7),
        fixtures::zero_bracket2(1, 1, 1, 1),
        fixtures::gl11_bracket(),
        fixtures::odd_heisenberg(),
    };
}

/// Twisted bihom-associative instances (each one verified on construction).
inline std::vector<BiHomSuperalgebra> associative_instances(int count, std::uint64_t seed0 = 100) {
    std::vector<BiHomSuperalgebra> out;
    for (int n = 0; n < count; ++n) {
        InstanceGenerator gen(seed0 + static_cast<std::uint64_t>(n));
        out.push_back(gen.bihom_associative());
    }
    return out;
}

inline std::vector<InstanceGenerator::LieTwist> lie_twists(int count, std::uint64_t seed0 = 300) {
    std::vector<InstanceGenerator::LieTwist> out;
    for (int n = 0; n < count; ++n) {
        InstanceGenerator gen(seed0 + static_cast<std::uint64_t>(n));
        out.push_back(gen.bihom_lie());
    }
    return out;
}

/// Every verified bihom-lie instance the suites exercise: the fixtures,
/// the twist outputs, and the supercommutators of the associative corpus.
inline std::vector<BiHomSuperalgebra> lie_corpus() {
    std::vector<BiHomSuperalgebra> out = lie_fixtures();
    for (auto& t : lie_twists(20)) out.push_back(std::move(t.twisted));
    for (const auto& a : associative_instances(20)) out.push_back(supercommutator(a));
    return out;
}

/// Committed discriminating instances found by seeded random search.
inline BiHomSuperalgebra g5_not_g1_instance() {
    // dim 2, purely even, commutative non-associative product, identity maps
    return InstanceGenerator(1).random_multiplicative();
}

inline BiHomSuperalgebra hom_type_g5_not_g1_instance() {
    return InstanceGenerator(12).random_multiplicative();
}

inline BiHomSuperalgebra non_admissible_dim2_instance() {
    return InstanceGenerator(70).random_multiplicative();
}

inline std::vector<BiHomSuperalgebra> random_multiplicative_instances(int count,
                                                                      std::uint64_t seed0 = 1) {
    std::vector<BiHomSuperalgebra> out;
    for (int n = 0; n < count; ++n) {
        InstanceGenerator gen(seed0 + static_cast<std::uint64_t>(n));
        out.push_back(gen.random_multiplicative());
    }
    return out;
}

}  // namespace corpus
