#include "moonshine/forms.hpp"

#include <numeric>
#include <stdexcept>

namespace moonshine {

namespace {

std::uint64_t powmod(std::uint64_t base, unsigned e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

// 1 + scale * sum sigma_k(n) q^n
QSeries eisenstein(const Ring& ring, std::int64_t prec, unsigned k, long scale) {
    if (prec < 0) return QSeries(ring, prec);
    if (ring.is_exact()) {
        std::vector<mpz_class> c(static_cast<std::size_t>(prec + 1));
        c[0] = 1;
        for (std::int64_t n = 1; n <= prec; ++n) c[static_cast<std::size_t>(n)] = scale * divisor_sum(n, k);
        return QSeries::from_integers(ring, 0, c, prec);
    }
    const std::uint64_t m = ring.modulus();
    const std::uint64_t s = static_cast<std::uint64_t>(((scale % static_cast<long>(m)) + static_cast<long>(m))) % m;
    QSeries::ResidueCoeffs c(static_cast<std::size_t>(prec + 1));
    c[0] = 1 % m;
    for (std::int64_t n = 1; n <= prec; ++n) {
        std::uint64_t sigma = 0;
        for (std::int64_t d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            sigma = (sigma + powmod(static_cast<std::uint64_t>(d), k, m)) % m;
            std::int64_t e = n / d;
            if (e != d) sigma = (sigma + powmod(static_cast<std::uint64_t>(e), k, m)) % m;
        }
        c[static_cast<std::size_t>(n)] = sigma * s % m;
    }
    return QSeries::from_residues(ring, 0, std::move(c), prec);
}

}  // namespace

std::string BasisMonomial::to_string() const {
    std::string out;
    auto factor = [&out](const char* name, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    };
    factor("E4", a);
    factor("E6", b);
    factor("Delta", c);
    return out.empty() ? "1" : out;
}

mpz_class divisor_sum(std::int64_t n, unsigned k) {
    if (n < 1) throw std::invalid_argument("divisor_sum needs n >= 1");
    mpz_class sum = 0, term;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), k);
        sum += term;
        std::int64_t e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(e), k);
            sum += term;
        }
    }
    return sum;
}

QSeries eisenstein_e4(const Ring& ring, std::int64_t prec) { return eisenstein(ring, prec, 3, 240); }

QSeries eisenstein_e6(const Ring& ring, std::int64_t prec) { return eisenstein(ring, prec, 5, -504); }

QSeries delta(const Ring& ring, std::int64_t prec) {
    if (ring.is_exact()) {
        QSeries e4 = eisenstein_e4(ring, prec);
        QSeries e6 = eisenstein_e6(ring, prec);
        QSeries diff = mul(mul(e4, e4), e4) - mul(e6, e6);
        std::vector<mpz_class> c = diff.coeffs(0, prec);
        for (auto& x : c) {
            if (!mpz_divisible_ui_p(x.get_mpz_t(), 1728))
                throw std::logic_error("E4^3 - E6^2 is not divisible by 1728");
            mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 1728);
        }
        return QSeries::from_integers(ring, 0, c, prec);
    }
    if (std::gcd<std::uint64_t>(ring.modulus(), 1728) != 1)
        return reduce(delta(Ring::integers(), prec), ring);

    QSeries e4 = eisenstein_e4(ring, prec);
    QSeries e6 = eisenstein_e6(ring, prec);
    mpz_class inv, m(static_cast<unsigned long>(ring.modulus())), k(1728);
    mpz_invert(inv.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
    return scale(mul(mul(e4, e4), e4) - mul(e6, e6), inv);
}

QSeries j_function(const Ring& ring, std::int64_t prec) {
    QSeries e4 = eisenstein_e4(ring, prec + 1);
    return truncate(divide(mul(mul(e4, e4), e4), delta(ring, prec + 2)), prec);
}

QSeries j_minus_744(const Ring& ring, std::int64_t prec) {
    return j_function(ring, prec) - QSeries::monomial(ring, 744, 0, prec);
}

QSeries j_prime(const Ring& ring, std::int64_t prec) {
    QSeries e4 = eisenstein_e4(ring, prec + 1);
    QSeries e6 = eisenstein_e6(ring, prec + 1);
    return truncate(divide(mul(mul(e4, e4), e6), delta(ring, prec + 2)), prec);
}

namespace {

std::vector<BasisMonomial> monomial_basis(int k, int first_c) {
    std::vector<BasisMonomial> basis;
    for (int c = first_c; 12 * c <= k; ++c) {
        int r = k - 12 * c;
        if (r % 4 == 0)
            basis.push_back({r / 4, 0, c});
        else if (r >= 6)
            basis.push_back({(r - 6) / 4, 1, c});
    }
    return basis;
}

}  // namespace

std::vector<BasisMonomial> cusp_basis(int k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("cusp_basis needs an even weight >= 0");
    return monomial_basis(k, 1);
}

std::vector<BasisMonomial> holomorphic_basis(int k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("holomorphic_basis needs an even weight >= 0");
    if (k == 2) throw std::invalid_argument("weight 2 is not representable at level 1");
    return monomial_basis(k, 0);
}

LevelOneForms::LevelOneForms(const Ring& ring, std::int64_t prec)
    : ring_(ring),
      prec_(prec),
      e4_(eisenstein_e4(ring, prec)),
      e6_(eisenstein_e6(ring, prec)),
      delta_(moonshine::delta(ring, prec)) {}

QSeries LevelOneForms::expand(const BasisMonomial& m) const {
    QSeries out = QSeries::one(ring_, prec_);
    if (m.a) out = mul(out, pow(e4_, m.a));
    if (m.b) out = mul(out, pow(e6_, m.b));
    if (m.c) out = truncate(mul(out, pow(delta_, m.c)), prec_);
    return out;
}

}  // namespace moonshine
