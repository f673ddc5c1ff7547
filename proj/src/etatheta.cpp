#include "moonshine/etatheta.hpp"

#include <algorithm>
#include <cmath>

namespace moonshine {

namespace {

std::int64_t isqrt(std::int64_t n) {
    if (n <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if (f.scale < 1) throw std::invalid_argument("eta scale must be positive");
        weighted_ += f.scale * f.exponent;
    }
}

std::int64_t EtaQuotient::prefactor() const {
    if (!has_integral_prefactor())
        throw NonIntegralPrefactorError("eta quotient prefactor " + std::to_string(weighted_) +
                                        "/24 is not an integer");
    return weighted_ / 24;
}

QSeries eta_expansion(const Ring& ring, std::int64_t prec) {
    if (prec < 0) return QSeries(ring, prec);
    std::vector<std::int64_t> c(static_cast<std::size_t>(prec + 1), 0);
    c[0] = 1;
    // Exponents k(3k-1)/2 for k = 1, -1, 2, -2, ... with sign (-1)^k.
    for (std::int64_t k = 1;; ++k) {
        std::int64_t e1 = k * (3 * k - 1) / 2;
        std::int64_t e2 = k * (3 * k + 1) / 2;
        if (e1 > prec) break;
        std::int64_t sign = (k % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(e1)] += sign;
        if (e2 <= prec) c[static_cast<std::size_t>(e2)] += sign;
    }
    return QSeries::from_values(ring, 0, c, prec);
}

QSeries eta_quotient_expansion(const EtaQuotient& eq, const Ring& ring, std::int64_t prec) {
    const std::int64_t lead = eq.prefactor();
    const std::int64_t rel = prec - lead;
    if (rel < 0) return QSeries(ring, prec);

    QSeries eta = eta_expansion(ring, rel);
    QSeries body = QSeries::one(ring, rel);
    // Only sparse factors are ever multiplied or divided in, one at a time.
    for (const auto& f : eq.factors()) {
        QSeries factor = truncate(v_operator(eta, f.scale), rel);
        for (std::int64_t i = 0; i < f.exponent; ++i) body = mul(body, factor);
        for (std::int64_t i = 0; i < -f.exponent; ++i) body = divide(body, factor);
    }
    return shift(body, lead);
}

QSeries theta_binary(std::int64_t a, std::int64_t b, std::int64_t c, const Ring& ring,
                     std::int64_t prec) {
    const std::int64_t det = 4 * a * c - b * b;
    if (a <= 0 || det <= 0) throw std::invalid_argument("theta_binary needs a positive definite form");
    if (a % 2 || b % 2 || c % 2)
        throw std::invalid_argument("theta_binary needs a form taking only even values");
    if (prec < 0) return QSeries(ring, prec);

    const std::int64_t limit = 2 * prec;  // bound on a x^2 + b x y + c y^2
    const std::int64_t xmax = isqrt(4 * c * limit / det);
    const std::int64_t ymax = isqrt(4 * a * limit / det);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(prec + 1), 0);
    for (std::int64_t x = -xmax; x <= xmax; ++x) {
        for (std::int64_t y = -ymax; y <= ymax; ++y) {
            std::int64_t value = a * x * x + b * x * y + c * y * y;
            if (value <= limit) ++counts[static_cast<std::size_t>(value / 2)];
        }
    }
    return QSeries::from_values(ring, 0, counts, prec);
}

bool has_exact_hauptmodul(std::int64_t p) {
    return p == 2 || p == 3 || p == 5 || p == 7 || p == 13 || p == 71;
}

HauptmodulConstruction hauptmodul_construction(std::int64_t p, std::int64_t prec) {
    if (!is_prime(static_cast<std::uint64_t>(p < 0 ? 0 : p)))
        throw std::invalid_argument("hauptmodul_exact needs a prime, got " + std::to_string(p));
    if (!has_exact_hauptmodul(p))
        throw UnsupportedPrimeError("no exact Hauptmodul construction for p = " + std::to_string(p));

    const Ring zz = Ring::integers();
    QSeries raw(zz, prec);
    if (p == 71) {
        // eta(tau) eta(71 tau) = q^3 * (...), so the numerator is needed to q^{prec+3}.
        QSeries num = theta_binary(4, 2, 18, zz, prec + 3) - theta_binary(6, 2, 12, zz, prec + 3);
        std::vector<mpz_class> c = num.coeffs(0, prec + 3);
        for (auto& x : c) {
            if (!mpz_divisible_ui_p(x.get_mpz_t(), 2))
                throw std::logic_error("theta difference has an odd coefficient");
            x /= 2;
        }
        QSeries half = QSeries::from_integers(zz, 0, c, prec + 3);
        QSeries eta = eta_expansion(zz, prec + 3);
        QSeries body = divide(divide(half, eta), truncate(v_operator(eta, 71), prec + 3));
        raw = shift(body, -3);
    } else {
        const std::int64_t k = 24 / (p - 1);
        mpz_class fricke;
        mpz_ui_pow_ui(fricke.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(12 / (p - 1)));
        QSeries t = eta_quotient_expansion(EtaQuotient({{1, k}, {p, -k}}), zz, prec);
        QSeries t_inv = eta_quotient_expansion(EtaQuotient({{p, k}, {1, -k}}), zz, prec);
        raw = t + scale(t_inv, fricke);
    }
    mpz_class constant = raw.coeff(0);
    QSeries normalized = raw - QSeries::monomial(zz, constant, 0, prec);
    return {std::move(normalized), std::move(constant)};
}

QSeries hauptmodul_exact(std::int64_t p, std::int64_t prec) {
    return hauptmodul_construction(p, prec).series;
}

}  // namespace moonshine
