#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "moonshine/forms.hpp"

/// Published reference values that the computations are checked against.
/// Nothing in the library reads these as inputs; they are comparison targets.
namespace moonshine::fixtures {

inline constexpr int kVersion = 1;

/// numerator / (j + shift), i.e. a pole at j = -shift.
struct PartialFractionTerm {
    std::int64_t numerator;
    std::int64_t shift;
    bool operator==(const PartialFractionTerm&) const = default;
};

struct CuspTerm {
    std::int64_t coeff;
    BasisMonomial monomial;
};

struct PrimeRow {
    std::int64_t p;
    std::string_view class_label;
    /// U mod p as a sum of numerator/(j + shift), sorted by shift. Empty means 0.
    std::vector<PartialFractionTerm> partial_fractions;
    /// U mod p as a combination of E4^a E6^b Delta^c. Empty means 0.
    std::vector<CuspTerm> cusp_form;
    /// The printed cusp-form row is known not to match; see `anomaly`.
    bool cusp_form_anomaly = false;
    std::string_view anomaly;
};

/// One row per prime 2, 3, 5, ..., 71.
const std::vector<PrimeRow>& prime_rows();
/// Throws std::out_of_range for primes without a row.
const PrimeRow& prime_row(std::int64_t p);
bool has_prime_row(std::int64_t p);

/// Primes whose characteristic-p supersingular j-invariants all lie in F_p.
const std::vector<std::int64_t>& ogg_primes();

/// j - 744 = q^-1 + 0 + c(1) q + c(2) q^2 + ... ; these are c(1), c(2), c(3).
const std::vector<std::int64_t>& j_minus_744_head();

/// The p = 71 Hauptmodul, coefficients of q^-1 .. q^7.
const std::vector<std::int64_t>& hauptmodul71_head();
/// Its U(71) image over Z, coefficients of q^1 .. q^5.
const std::vector<std::int64_t>& u71_exact_head();
/// Its U(71) image mod 71, coefficients of q^1 .. q^10.
const std::vector<std::int64_t>& u71_mod_head();
/// Supersingular j-invariants mod 71 other than 0 and 1728, as j = -s.
const std::vector<std::int64_t>& ss71_negated();

}  // namespace moonshine::fixtures
