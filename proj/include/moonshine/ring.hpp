#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace moonshine {

/// Thrown when two operands live over different coefficient rings.
class RingMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a coefficient beyond the known precision is requested.
class PrecisionError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Thrown when an operation needs a unit and did not get one.
class NotInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class RingKind { Integers, IntegersMod, PrimeField };

/// Coefficient ring tag for q-series: Z, Z/mZ or F_p.
///
/// Modular rings store residues in [0, m) as machine words, so the modulus
/// is limited to 32 bits (products then fit in 64 bits).
class Ring {
public:
    static Ring integers() { return Ring(RingKind::Integers, 0); }
    static Ring integers_mod(std::uint64_t m);
    static Ring prime_field(std::uint64_t p);

    RingKind kind() const { return kind_; }
    bool is_exact() const { return kind_ == RingKind::Integers; }
    /// Zero for Integers.
    std::uint64_t modulus() const { return modulus_; }

    /// "Z", "Z/169Z" or "F_13".
    std::string name() const;

    bool operator==(const Ring&) const = default;

private:
    Ring(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    RingKind kind_;
    std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

}  // namespace moonshine
