#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "moonshine/ring.hpp"

namespace moonshine {

/// Truncated Laurent q-expansion
///
///     sum_{n = lead}^{prec} a(n) q^n + O(q^{prec+1})
///
/// over a Ring. `precision()` is the largest exponent whose coefficient is
/// known; asking for anything above it throws PrecisionError.
///
/// Representation is normalized: the coefficient at `lead()` is nonzero, and
/// a series that vanishes to its precision has lead() == precision() + 1 and
/// no stored coefficients. Values are immutable once built.
class QSeries {
public:
    using IntegerCoeffs = std::vector<mpz_class>;
    using ResidueCoeffs = std::vector<std::uint64_t>;

    /// The zero series O(q^{prec+1}).
    QSeries(Ring ring, std::int64_t prec);

    /// Coefficients of q^start, q^(start+1), ... ; anything between the last
    /// given coefficient and `prec` is zero. Integers are reduced into a
    /// modular ring.
    static QSeries from_integers(Ring ring, std::int64_t start,
                                 std::span<const mpz_class> coeffs, std::int64_t prec);
    static QSeries from_values(Ring ring, std::int64_t start,
                               std::span<const std::int64_t> coeffs, std::int64_t prec);
    /// Residues must already lie in [0, m); ring must be modular.
    static QSeries from_residues(Ring ring, std::int64_t start, ResidueCoeffs coeffs,
                                 std::int64_t prec);

    static QSeries monomial(Ring ring, const mpz_class& c, std::int64_t exponent,
                            std::int64_t prec);
    static QSeries one(Ring ring, std::int64_t prec) { return monomial(ring, 1, 0, prec); }

    const Ring& ring() const { return ring_; }
    std::int64_t lead() const { return lead_; }
    std::int64_t precision() const { return prec_; }
    bool is_zero() const { return lead_ > prec_; }

    /// Coefficient of q^n as an integer (residues are returned in [0, m)).
    mpz_class coeff(std::int64_t n) const;
    /// Coefficient of q^n for modular rings.
    std::uint64_t residue(std::int64_t n) const;
    /// Coefficients of q^from .. q^to inclusive.
    std::vector<mpz_class> coeffs(std::int64_t from, std::int64_t to) const;

    /// Smallest exponent at which the two series differ, comparing only up
    /// to the smaller precision; nullopt when they agree.
    std::optional<std::int64_t> first_difference(const QSeries& other) const;
    bool agrees_with(const QSeries& other) const { return !first_difference(other); }

    /// Structural equality: same ring, precision and coefficients.
    bool operator==(const QSeries&) const = default;

    /// Human-readable rendering with at most `max_terms` nonzero terms.
    std::string to_string(std::size_t max_terms = 12) const;

private:
    friend struct SeriesAccess;

    QSeries(Ring ring, std::int64_t start, std::int64_t prec,
            std::variant<IntegerCoeffs, ResidueCoeffs> coeffs);
    void normalize();

    Ring ring_;
    std::int64_t lead_;
    std::int64_t prec_;
    std::variant<IntegerCoeffs, ResidueCoeffs> coeffs_;
};

QSeries add(const QSeries& f, const QSeries& g);
QSeries sub(const QSeries& f, const QSeries& g);
QSeries neg(const QSeries& f);
QSeries scale(const QSeries& f, const mpz_class& c);
/// Cauchy product; precision is lead_f + lead_g + min of the relative precisions.
QSeries mul(const QSeries& f, const QSeries& g);
/// Requires a unit leading coefficient (+-1 over Z).
QSeries invert(const QSeries& f);
/// f / g without forming 1/g. Cost is proportional to the number of nonzero
/// terms of g, so dividing by eta products stays cheap.
QSeries divide(const QSeries& f, const QSeries& g);
QSeries pow(const QSeries& f, std::int64_t n);

/// Multiplication by q^k.
QSeries shift(const QSeries& f, std::int64_t k);
/// Drops everything above q^prec.
QSeries truncate(const QSeries& f, std::int64_t prec);
/// Ring change Z -> Z/mZ, or Z/mZ -> Z/m'Z with m' | m.
QSeries reduce(const QSeries& f, const Ring& target);

/// sum a(n) q^n  ->  sum a(pn) q^n.
QSeries u_operator(const QSeries& f, std::int64_t p);
/// q -> q^p.
QSeries v_operator(const QSeries& f, std::int64_t p);
/// p * (f | T(p)) for weight 0, computed integrally as f|V(p) + p (f|U(p)).
QSeries hecke_scaled(const QSeries& f, std::int64_t p);

inline QSeries operator+(const QSeries& f, const QSeries& g) { return add(f, g); }
inline QSeries operator-(const QSeries& f, const QSeries& g) { return sub(f, g); }
inline QSeries operator-(const QSeries& f) { return neg(f); }
inline QSeries operator*(const QSeries& f, const QSeries& g) { return mul(f, g); }
inline QSeries operator*(const mpz_class& c, const QSeries& f) { return scale(f, c); }

}  // namespace moonshine
