#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "ckgraph/errors.hpp"

namespace ckgraph {

/// A natural number extended with the symbol ω. Used for edge
/// multiplicities: a vertex with an ω entry is an infinite emitter.
///
/// Arithmetic follows the usual conventions: ω + n = ω, ω · n = ω for
/// n ≥ 1, ω · 0 = 0. Comparison is total with ω above every finite value.
class ExtendedNat {
public:
    constexpr ExtendedNat() = default;
    constexpr ExtendedNat(std::uint64_t n) : n_(n) {}

    static constexpr ExtendedNat omega() {
        ExtendedNat e;
        e.omega_ = true;
        return e;
    }

    constexpr bool is_omega() const { return omega_; }
    constexpr bool is_zero() const { return !omega_ && n_ == 0; }

    /// The finite value; throws on ω.
    std::uint64_t finite() const {
        if (omega_)
            throw error("ExtendedNat: ω has no finite value");
        return n_;
    }

    friend constexpr ExtendedNat operator+(ExtendedNat a, ExtendedNat b) {
        if (a.omega_ || b.omega_)
            return omega();
        return ExtendedNat(a.n_ + b.n_);
    }

    friend constexpr ExtendedNat operator*(ExtendedNat a, ExtendedNat b) {
        if (a.is_zero() || b.is_zero())
            return ExtendedNat(0);
        if (a.omega_ || b.omega_)
            return omega();
        return ExtendedNat(a.n_ * b.n_);
    }

    ExtendedNat& operator+=(ExtendedNat b) { return *this = *this + b; }

    friend constexpr bool operator==(ExtendedNat a, ExtendedNat b) {
        return a.omega_ == b.omega_ && (a.omega_ || a.n_ == b.n_);
    }

    friend constexpr std::strong_ordering operator<=>(ExtendedNat a, ExtendedNat b) {
        if (a.omega_ && b.omega_)
            return std::strong_ordering::equal;
        if (a.omega_)
            return std::strong_ordering::greater;
        if (b.omega_)
            return std::strong_ordering::less;
        return a.n_ <=> b.n_;
    }

    std::string str() const { return omega_ ? "ω" : std::to_string(n_); }

private:
    bool omega_ = false;
    std::uint64_t n_ = 0;
};

} // namespace ckgraph
