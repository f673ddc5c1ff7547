#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moonshine/series.hpp"

namespace moonshine {

/// E4^a E6^b Delta^c, of weight 4a + 6b + 12c.
struct BasisMonomial {
    int a = 0;
    int b = 0;
    int c = 0;

    int weight() const { return 4 * a + 6 * b + 12 * c; }
    bool operator==(const BasisMonomial&) const = default;
    /// e.g. "E4*E6^9*Delta", "1" for the empty monomial.
    std::string to_string() const;
};

/// sigma_k(n) = sum of d^k over the divisors d of n (n >= 1).
mpz_class divisor_sum(std::int64_t n, unsigned k);

QSeries eisenstein_e4(const Ring& ring, std::int64_t prec);
QSeries eisenstein_e6(const Ring& ring, std::int64_t prec);

/// (E4^3 - E6^2) / 1728. Over Z the division is checked to be exact; over a
/// ring where 1728 is not a unit the series is built over Z and reduced.
QSeries delta(const Ring& ring, std::int64_t prec);

/// j = E4^3 / Delta, constant term 744 included.
QSeries j_function(const Ring& ring, std::int64_t prec);
QSeries j_minus_744(const Ring& ring, std::int64_t prec);
/// E4^2 E6 / Delta, which equals -q dj/dq.
QSeries j_prime(const Ring& ring, std::int64_t prec);

/// Monomials E4^a E6^b Delta^c, c >= 1, b in {0,1}, one per c with 12c <= k
/// and k - 12c != 2. Element i has q-order exactly i+1 with leading
/// coefficient 1. Throws std::invalid_argument for odd or negative k.
std::vector<BasisMonomial> cusp_basis(int k);

/// Same rule with c starting at 0. Throws for odd, negative, or k == 2.
std::vector<BasisMonomial> holomorphic_basis(int k);

/// Caches E4, E6 and Delta over one ring so that many monomials of the
/// same precision can be expanded cheaply.
class LevelOneForms {
public:
    LevelOneForms(const Ring& ring, std::int64_t prec);

    const Ring& ring() const { return ring_; }
    std::int64_t precision() const { return prec_; }
    const QSeries& e4() const { return e4_; }
    const QSeries& e6() const { return e6_; }
    const QSeries& delta() const { return delta_; }

    QSeries expand(const BasisMonomial& m) const;

private:
    Ring ring_;
    std::int64_t prec_;
    QSeries e4_;
    QSeries e6_;
    QSeries delta_;
};

}  // namespace moonshine
