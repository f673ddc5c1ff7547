#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moonshine/ffield.hpp"

namespace moonshine {

/// y^2 = x^3 + a x + b over F_p.
struct CurveFp {
    FieldElem a;
    FieldElem b;
};

/// y^2 = x^3 + a x + b over F_{p^2}.
struct CurveFp2 {
    QuadExtElem a;
    QuadExtElem b;
};

/// Short Weierstrass model with the given j-invariant. Characteristic must be >= 5.
CurveFp curve_from_j(const FieldElem& j);
CurveFp2 curve_from_j(const QuadExtElem& j);

/// 1728 * 4a^3 / (4a^3 + 27b^2); throws std::domain_error for singular curves.
FieldElem j_invariant(const CurveFp& e);
QuadExtElem j_invariant(const CurveFp2& e);

/// #E(F_p) and #E(F_{p^2}), including the point at infinity.
std::uint64_t count_points(const CurveFp& e);
std::uint64_t count_points(const CurveFp2& e, const QuadExtField& field);

/// Supersingular iff #E(F_{p^2}) = 1 (mod p). Needs p >= 5.
bool is_supersingular(const QuadExtElem& j);
bool is_supersingular(const FieldElem& j);

/// x^2 + c1 x + c0, irreducible over F_p.
struct MonicQuadratic {
    FieldElem c1;
    FieldElem c0;

    FieldElem operator()(const FieldElem& x) const { return x * x + c1 * x + c0; }
    bool operator==(const MonicQuadratic&) const = default;
    std::string to_string() const;
};

struct SupersingularData {
    std::uint32_t p = 0;
    /// False for p in {2, 3}: short Weierstrass point counting does not apply.
    bool computed = false;
    /// All supersingular j in F_p, sorted, possibly including 0 and 1728.
    std::vector<FieldElem> roots_fp;
    /// roots_fp without 0 and 1728.
    std::vector<FieldElem> ss_p;
    /// Minimal polynomials of the conjugate pairs in F_{p^2} \ F_p.
    std::vector<MonicQuadratic> ss_star_p;

    std::size_t total_count() const { return roots_fp.size() + 2 * ss_star_p.size(); }
};

/// Exhaustive scan of F_{p^2} up to Galois conjugacy.
SupersingularData supersingular_data(std::uint32_t p);

/// Monic polynomial over F_p, coefficients from the constant term up.
struct FpPoly {
    std::uint32_t p = 0;
    std::vector<FieldElem> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }
    std::string to_string() const;
};

/// prod_{alpha in SS_p} (x - alpha) * prod_{g in SS*_p} g(x).
FpPoly ss_polynomial(std::uint32_t p);
FpPoly ss_polynomial(const SupersingularData& ss);

}  // namespace moonshine
