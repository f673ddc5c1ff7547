#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "moonshine/fixtures.hpp"
#include "moonshine/supersingular.hpp"
#include "oracles.hpp"

using namespace moonshine;

namespace {

// Coefficient of x^{p-1} in (x^3 + a x + b)^{(p-1)/2}: the Hasse invariant,
// which vanishes exactly on supersingular curves.
template <class E>
E hasse_invariant(const E& a, const E& b, const E& zero, const E& one, std::uint32_t p) {
    std::vector<E> cubic{b, a, zero, one};
    std::vector<E> acc{one};
    for (std::uint32_t i = 0; i < (p - 1) / 2; ++i) {
        std::vector<E> next(acc.size() + 3, zero);
        for (std::size_t m = 0; m < acc.size(); ++m)
            for (std::size_t k = 0; k < 4; ++k) next[m + k] = next[m + k] + acc[m] * cubic[k];
        acc = std::move(next);
    }
    return acc[p - 1];
}

std::uint64_t brute_count(const CurveFp& e) {
    const std::uint32_t p = e.a.p();
    std::uint64_t n = 1;
    for (std::uint32_t x = 0; x < p; ++x)
        for (std::uint32_t y = 0; y < p; ++y) {
            FieldElem X(p, x), Y(p, y);
            if (Y * Y == X * X * X + e.a * X + e.b) ++n;
        }
    return n;
}

// floor(p/12) + (0, 1, 1, 2) for p = 1, 5, 7, 11 mod 12.
std::size_t expected_count(std::uint32_t p) {
    static const int eps[12] = {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2};
    return p / 12 + static_cast<std::size_t>(eps[p % 12]);
}

}  // namespace

TEST_CASE("point counts over F_p match enumeration and the Hasse bound") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 37u}) {
        for (std::uint32_t a = 0; a < p; ++a)
            for (std::uint32_t b = 0; b < p; ++b) {
                CurveFp e{FieldElem(p, a), FieldElem(p, b)};
                if ((FieldElem(p, 4) * e.a * e.a * e.a + FieldElem(p, 27) * e.b * e.b).is_zero()) continue;
                std::uint64_t n = count_points(e);
                CHECK(n == brute_count(e));
                CHECK(std::abs(static_cast<double>(p + 1) - static_cast<double>(n)) <= 2 * std::sqrt(double(p)));
            }
    }
}

TEST_CASE("curves with prescribed j-invariant") {
    for (std::uint32_t p : {5u, 13u, 37u, 71u}) {
        for (std::uint32_t j = 0; j < p; ++j) CHECK(j_invariant(curve_from_j(FieldElem(p, j))) == FieldElem(p, j));
        QuadExtField F(p);
        for (int trial = 0; trial < 50; ++trial) {
            QuadExtElem j = F.element(static_cast<std::uint64_t>(oracle::uniform(0, F.size() - 1)));
            CHECK(j_invariant(curve_from_j(j)) == j);
        }
    }
    CHECK_THROWS(curve_from_j(FieldElem(3, 1)));
    CHECK_THROWS(j_invariant(CurveFp{FieldElem(7, 0), FieldElem(7, 0)}));
}

TEST_CASE("point counting agrees with the Hasse invariant") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 37u, 43u}) {
        QuadExtField F(p);
        QuadExtElem zero = F.make(0, 0), one = F.make(1, 0);
        for (std::uint64_t i = 0; i < F.size(); ++i) {
            QuadExtElem j = F.element(i);
            CurveFp2 e = curve_from_j(j);
            bool hasse_zero = hasse_invariant(e.a, e.b, zero, one, p).is_zero();
            CHECK(is_supersingular(j) == hasse_zero);
        }
    }
}

TEST_CASE("supersingular scan") {
    for (std::int64_t p64 : oracle::primes_up_to(73)) {
        const auto p = static_cast<std::uint32_t>(p64);
        SupersingularData ss = supersingular_data(p);
        if (p < 5) {
            CHECK_FALSE(ss.computed);
            continue;
        }
        CAPTURE(p);
        CHECK(ss.computed);
        CHECK(ss.total_count() == expected_count(p));
        CHECK(std::is_sorted(ss.roots_fp.begin(), ss.roots_fp.end()));
        // j = 0 is supersingular iff p = 2 mod 3; j = 1728 iff p = 3 mod 4.
        bool has0 = std::find(ss.roots_fp.begin(), ss.roots_fp.end(), FieldElem(p, 0)) != ss.roots_fp.end();
        bool has1728 = std::find(ss.roots_fp.begin(), ss.roots_fp.end(), FieldElem(p, 1728)) != ss.roots_fp.end();
        CHECK(has0 == (p % 3 == 2));
        CHECK(has1728 == (p % 4 == 3));
        CHECK(ss.ss_p.size() == ss.roots_fp.size() - (has0 ? 1 : 0) - (has1728 && 1728 % p != 0 ? 1 : 0));
        for (const auto& a : ss.roots_fp) CHECK(is_supersingular(a));
        for (const auto& g : ss.ss_star_p) {
            // Irreducible over F_p.
            for (std::uint32_t x = 0; x < p; ++x) CHECK_FALSE(g(FieldElem(p, x)).is_zero());
            FieldElem disc = g.c1 * g.c1 - FieldElem(p, 4) * g.c0;
            CHECK_FALSE(sqrt_exists(disc));
        }
        bool ogg = std::find(fixtures::ogg_primes().begin(), fixtures::ogg_primes().end(), p64) !=
                   fixtures::ogg_primes().end();
        CHECK(ss.ss_star_p.empty() == ogg);
    }
}

TEST_CASE("supersingular invariants mod 71") {
    SupersingularData ss = supersingular_data(71);
    std::vector<std::int64_t> negated;
    for (const auto& a : ss.ss_p) negated.push_back((-a).value());
    std::sort(negated.begin(), negated.end());
    CHECK(negated == fixtures::ss71_negated());
    CHECK(ss.ss_star_p.empty());
}

TEST_CASE("supersingular polynomial") {
    for (std::uint32_t p : {37u, 71u, 73u}) {
        SupersingularData ss = supersingular_data(p);
        FpPoly f = ss_polynomial(ss);
        CHECK(f.degree() == ss.ss_p.size() + 2 * ss.ss_star_p.size());
        CHECK(f.coeffs.back() == FieldElem(p, 1));
        for (const auto& a : ss.ss_p) {
            FieldElem v(p, 0);
            for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) v = v * a + *it;
            CHECK(v.is_zero());
        }
    }
    CHECK(ss_polynomial(11).to_string() == "1");
    CHECK_THROWS(ss_polynomial(3));
}
