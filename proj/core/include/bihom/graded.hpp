#pragma once

#include <vector>

#include "bihom/errors.hpp"

namespace bihom {

/// Z2 degree of a homogeneous object.  Addition is mod 2.
class Parity {
public:
    constexpr Parity() = default;
    constexpr explicit Parity(int bit) : bit_(bit & 1) {}

    static constexpr Parity even() { return Parity(0); }
    static constexpr Parity odd() { return Parity(1); }

    constexpr int bit() const { return bit_; }
    constexpr Parity operator+(Parity other) const { return Parity(bit_ ^ other.bit_); }
    constexpr bool operator==(const Parity&) const = default;

private:
    int bit_ = 0;
};

/// Product of two parity bits, as a sign exponent.
constexpr int parity_product(Parity a, Parity b) { return a.bit() & b.bit(); }

/// (-1)^(|a||b|), the Koszul sign of swapping two homogeneous objects.
constexpr int koszul_sign(Parity a, Parity b) { return parity_product(a, b) ? -1 : 1; }

constexpr int sign_of_exponent(int exponent) { return (exponent & 1) ? -1 : 1; }

/// Finite-dimensional Z2-graded space presented by a homogeneous basis:
/// basis index i carries parity parities[i].  dim 0 is accepted; all
/// identities over an empty basis hold vacuously.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<Parity> parities) : parities_(std::move(parities)) {}

    int dim() const { return static_cast<int>(parities_.size()); }
    Parity parity(int i) const { return parities_.at(i); }
    const std::vector<Parity>& parities() const { return parities_; }

    /// All indices even (the ungraded special case, all Koszul signs +1).
    bool purely_even() const {
        for (const auto& p : parities_)
            if (p.bit()) return false;
        return true;
    }

    bool operator==(const GradedSpace&) const = default;

private:
    std::vector<Parity> parities_;
};

}  // namespace bihom
