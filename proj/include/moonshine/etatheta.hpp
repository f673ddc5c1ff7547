#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "moonshine/series.hpp"

namespace moonshine {

/// The product of eta(d tau)^e has a q-prefactor that is not a whole power of q.
class NonIntegralPrefactorError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// No self-contained exact construction of the Hauptmodul is known for p.
class UnsupportedPrimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct EtaFactor {
    std::int64_t scale;     // d in eta(d tau)
    std::int64_t exponent;  // may be negative
};

/// prod eta(d tau)^e, written q^{prefactor} * prod_n prod_d (1 - q^{dn})^e.
class EtaQuotient {
public:
    explicit EtaQuotient(std::vector<EtaFactor> factors);

    const std::vector<EtaFactor>& factors() const { return factors_; }
    /// 24 times the exponent of the q-prefactor, i.e. sum d*e.
    std::int64_t prefactor_times_24() const { return weighted_; }
    bool has_integral_prefactor() const { return weighted_ % 24 == 0; }
    /// Throws NonIntegralPrefactorError unless has_integral_prefactor().
    std::int64_t prefactor() const;

private:
    std::vector<EtaFactor> factors_;
    std::int64_t weighted_ = 0;
};

/// prod_{n >= 1} (1 - q^n) through q^prec, from the pentagonal number theorem.
QSeries eta_expansion(const Ring& ring, std::int64_t prec);

QSeries eta_quotient_expansion(const EtaQuotient& eq, const Ring& ring, std::int64_t prec);

/// sum_{x,y in Z} q^{(a x^2 + b x y + c y^2) / 2} through q^prec. The form
/// must be positive definite with a, b, c even.
QSeries theta_binary(std::int64_t a, std::int64_t b, std::int64_t c, const Ring& ring,
                     std::int64_t prec);

bool has_exact_hauptmodul(std::int64_t p);

struct HauptmodulConstruction {
    QSeries series;             // normalized: q^-1 + 0 + O(q)
    mpz_class removed_constant; // constant term of the raw construction
};

/// Normalized Hauptmodul of Gamma0(p)+ over Z, for p in {2, 3, 5, 7, 13, 71}.
///
/// For (p - 1) | 24 this is t + p^{12/(p-1)} / t with t = (eta(tau)/eta(p tau))^{24/(p-1)};
/// for p = 71 it is (Theta(4,2,18) - Theta(6,2,12)) / (2 eta(tau) eta(71 tau)).
HauptmodulConstruction hauptmodul_construction(std::int64_t p, std::int64_t prec);
QSeries hauptmodul_exact(std::int64_t p, std::int64_t prec);

}  // namespace moonshine
