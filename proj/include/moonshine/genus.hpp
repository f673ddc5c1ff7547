#pragma once

#include <cstdint>
#include <vector>

namespace moonshine {

/// Number of reduced primitive positive definite forms (a, b, c) with
/// b^2 - 4ac = D. D must be negative and 0 or 1 mod 4.
std::int64_t class_number(std::int64_t D);

/// Genus of X0(p) for a prime p.
std::int64_t genus_x0(std::int64_t p);

/// Fixed points of the Fricke involution on X0(p), p >= 5 prime:
/// h(-4p), plus h(-p) when p = 3 (mod 4).
std::int64_t fricke_fixed_points(std::int64_t p);

struct GenusReport {
    std::int64_t p = 0;
    std::int64_t genus_x0 = 0;
    /// Not computed (left 0) when X0(p) already has genus 0.
    std::int64_t fixed_points = 0;
    std::int64_t genus_x0_plus = 0;
    bool is_ogg_prime = false;
};

/// Riemann-Hurwitz for X0(p) -> X0(p)+: g+ = (2g + 2 - fixed) / 4.
GenusReport genus_x0_plus(std::int64_t p);

/// Primes p <= limit for which X0(p)+ has genus zero.
std::vector<std::int64_t> ogg_scan(std::int64_t limit);

/// dim S_2(Gamma0(p)), which is the genus of X0(p).
std::int64_t dim_s2_gamma0(std::int64_t p);
/// dim S_k(SL2(Z)) for even k >= 0.
std::int64_t dim_level1(int k);

}  // namespace moonshine
