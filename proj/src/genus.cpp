#include "moonshine/genus.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "moonshine/forms.hpp"
#include "moonshine/ring.hpp"

namespace moonshine {

namespace {

void require_prime(std::int64_t p) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
}

// Kronecker-style symbol (D|p) for an odd prime p via Euler's criterion.
int legendre(std::int64_t a, std::int64_t p) {
    std::int64_t r = ((a % p) + p) % p;
    if (r == 0) return 0;
    std::int64_t result = 1, base = r, e = (p - 1) / 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

}  // namespace

std::int64_t class_number(std::int64_t D) {
    if (D >= 0 || (((D % 4) + 4) % 4 > 1))
        throw std::invalid_argument("class_number needs D < 0 with D = 0 or 1 mod 4");
    std::int64_t count = 0;
    // Reduced forms satisfy 3a^2 <= |D|.
    for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t num = b * b - D;
            if (num % (4 * a) != 0) continue;
            std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

std::int64_t genus_x0(std::int64_t p) {
    require_prime(p);
    // 12 g = (p + 1) - 3 nu2 - 4 nu3 - 6 nu_inf + 12, with two cusps.
    std::int64_t nu2, nu3;
    if (p == 2) {
        nu2 = 1;
        nu3 = 0;
    } else if (p == 3) {
        nu2 = 0;
        nu3 = 1;
    } else {
        nu2 = 1 + legendre(-1, p);
        nu3 = 1 + legendre(-3, p);
    }
    std::int64_t twelve_g = (p + 1) - 3 * nu2 - 4 * nu3;
    if (twelve_g % 12 != 0)
        throw std::logic_error("genus formula for X0(" + std::to_string(p) + ") is not integral");
    return twelve_g / 12;
}

std::int64_t fricke_fixed_points(std::int64_t p) {
    require_prime(p);
    if (p < 5) throw std::domain_error("fricke_fixed_points needs p >= 5");
    std::int64_t n = class_number(-4 * p);
    if (p % 4 == 3) n += class_number(-p);
    return n;
}

GenusReport genus_x0_plus(std::int64_t p) {
    GenusReport r;
    r.p = p;
    r.genus_x0 = genus_x0(p);
    if (r.genus_x0 == 0) {
        r.genus_x0_plus = 0;
    } else {
        r.fixed_points = fricke_fixed_points(p);
        std::int64_t num = 2 * r.genus_x0 + 2 - r.fixed_points;
        if (num < 0 || num % 4 != 0)
            throw std::logic_error("Riemann-Hurwitz division is not exact for p = " + std::to_string(p));
        r.genus_x0_plus = num / 4;
    }
    r.is_ogg_prime = r.genus_x0_plus == 0;
    return r;
}

std::vector<std::int64_t> ogg_scan(std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= limit; ++p)
        if (is_prime(static_cast<std::uint64_t>(p)) && genus_x0_plus(p).is_ogg_prime) out.push_back(p);
    return out;
}

std::int64_t dim_s2_gamma0(std::int64_t p) { return genus_x0(p); }

std::int64_t dim_level1(int k) { return static_cast<std::int64_t>(cusp_basis(k).size()); }

}  // namespace moonshine
