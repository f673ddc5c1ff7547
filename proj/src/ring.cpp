#include "moonshine/ring.hpp"

#include <limits>

namespace moonshine {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Ring Ring::integers_mod(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    if (m > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("modulus must fit in 32 bits");
    return Ring(RingKind::IntegersMod, m);
}

Ring Ring::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("prime field needs a prime, got " + std::to_string(p));
    if (p > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("characteristic must fit in 32 bits");
    return Ring(RingKind::PrimeField, p);
}

std::string Ring::name() const {
    switch (kind_) {
        case RingKind::Integers: return "Z";
        case RingKind::IntegersMod: return "Z/" + std::to_string(modulus_) + "Z";
        case RingKind::PrimeField: return "F_" + std::to_string(modulus_);
    }
    return "?";
}

}  // namespace moonshine
