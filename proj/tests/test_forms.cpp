#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moonshine/etatheta.hpp"
#include "moonshine/fixtures.hpp"
#include "moonshine/forms.hpp"
#include "oracles.hpp"

using namespace moonshine;

namespace {

// dim M_k at level one for even k >= 0.
std::size_t dim_modular(int k) { return static_cast<std::size_t>(k / 12 + (k % 12 == 2 ? 0 : 1)); }

}  // namespace

TEST_CASE("divisor sums match brute force") {
    for (std::int64_t n = 1; n <= 200; ++n)
        for (unsigned k : {0u, 1u, 3u, 5u, 11u}) CHECK(divisor_sum(n, k) == oracle::sigma(n, k));
}

TEST_CASE("Eisenstein series coefficients") {
    const std::int64_t prec = 80;
    QSeries e4 = eisenstein_e4(Ring::integers(), prec);
    QSeries e6 = eisenstein_e6(Ring::integers(), prec);
    CHECK(e4.coeff(0) == 1);
    CHECK(e6.coeff(0) == 1);
    for (std::int64_t n = 1; n <= prec; ++n) {
        CHECK(e4.coeff(n) == 240 * oracle::sigma(n, 3));
        CHECK(e6.coeff(n) == -504 * oracle::sigma(n, 5));
    }
    QSeries e4m = eisenstein_e4(Ring::prime_field(71), prec);
    CHECK(e4m == reduce(e4, Ring::prime_field(71)));
}

TEST_CASE("Delta is q times the 24th power of the eta product") {
    const std::int64_t prec = 60;
    std::vector<mpz_class> prod = oracle::eta_power(1, 24, prec - 1);
    QSeries d = delta(Ring::integers(), prec);
    CHECK(d.lead() == 1);
    CHECK(d.precision() == prec);
    for (std::int64_t n = 1; n <= prec; ++n) CHECK(d.coeff(n) == prod[n - 1]);
}

TEST_CASE("Delta over rings where 1728 is not a unit") {
    QSeries dz = delta(Ring::integers(), 40);
    for (std::uint64_t m : {2ull, 3ull, 4ull, 9ull, 1728ull, 5041ull}) {
        const Ring r = m == 2 || m == 3 ? Ring::prime_field(m) : Ring::integers_mod(m);
        CHECK(delta(r, 40) == reduce(dz, r));
    }
}

TEST_CASE("Ramanujan tau is congruent to sigma_11 mod 691") {
    QSeries d = delta(Ring::prime_field(691), 120);
    for (std::int64_t n = 1; n <= 120; ++n) {
        mpz_class s = oracle::sigma(n, 11) % 691;
        CHECK(d.residue(n) == s.get_ui());
    }
}

TEST_CASE("j-invariant head") {
    QSeries j = j_minus_744(Ring::integers(), 10);
    CHECK(j.lead() == -1);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 0);
    const auto& head = fixtures::j_minus_744_head();
    for (std::size_t i = 0; i < head.size(); ++i) CHECK(j.coeff(static_cast<std::int64_t>(i + 1)) == head[i]);
    CHECK(j_function(Ring::integers(), 10).coeff(0) == 744);
}

TEST_CASE("j' is -q dj/dq") {
    for (const Ring& r : {Ring::integers(), Ring::prime_field(13), Ring::integers_mod(169)}) {
        const std::int64_t prec = 50;
        QSeries j = j_function(r, prec);
        QSeries jp = j_prime(r, prec);
        CHECK(jp.precision() >= prec);
        for (std::int64_t n = -1; n <= prec; ++n) {
            mpz_class want = -n * j.coeff(n);
            if (!r.is_exact()) {
                mpz_class m = static_cast<unsigned long>(r.modulus());
                want = ((want % m) + m) % m;
            }
            CHECK(jp.coeff(n) == want);
        }
    }
}

TEST_CASE("1728 Delta = E4^3 - E6^2 and j Delta = E4^3") {
    const Ring z = Ring::integers();
    const std::int64_t prec = 200;
    QSeries e4 = eisenstein_e4(z, prec), e6 = eisenstein_e6(z, prec), d = delta(z, prec);
    CHECK(scale(d, 1728).agrees_with(pow(e4, 3) - pow(e6, 2)));
    CHECK(mul(j_function(z, prec), d).agrees_with(pow(e4, 3)));
}

TEST_CASE("canonical bases") {
    for (int k = 0; k <= 120; k += 2) {
        if (k != 2) {
            auto m = holomorphic_basis(k);
            CHECK(m.size() == dim_modular(k));
            for (std::size_t i = 0; i < m.size(); ++i) {
                CHECK(m[i].weight() == k);
                CHECK(m[i].c == static_cast<int>(i));
                CHECK(m[i].b <= 1);
            }
        }
        auto s = cusp_basis(k);
        CHECK(s.size() == (k >= 4 ? dim_modular(k) - 1 : 0));
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(s[i].weight() == k);
            CHECK(s[i].c == static_cast<int>(i + 1));
        }
    }
    CHECK_THROWS_AS(cusp_basis(3), std::invalid_argument);
    CHECK_THROWS_AS(cusp_basis(-2), std::invalid_argument);
    CHECK_THROWS_AS(holomorphic_basis(2), std::invalid_argument);
    CHECK(BasisMonomial{1, 9, 1}.to_string() == "E4*E6^9*Delta");
    CHECK(BasisMonomial{}.to_string() == "1");
}

TEST_CASE("basis elements are in echelon form") {
    const Ring r = Ring::prime_field(71);
    LevelOneForms forms(r, 40);
    for (int k : {12, 24, 36, 70, 72}) {
        for (const auto& m : holomorphic_basis(k)) {
            QSeries f = forms.expand(m);
            CHECK(f.lead() == m.c);
            CHECK(f.residue(m.c) == 1);
            CHECK(f.precision() == 40);
        }
    }
}

TEST_CASE("Delta from the eta product equals the Eisenstein Delta") {
    const Ring z = Ring::integers();
    QSeries eta24 = eta_quotient_expansion(EtaQuotient({{1, 24}}), z, 300);
    CHECK(eta24 == delta(z, 300));
}
