#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moonshine/series.hpp"
#include "oracles.hpp"

using namespace moonshine;

namespace {

std::vector<Ring> test_rings() {
    return {Ring::integers(), Ring::prime_field(71), Ring::integers_mod(169), Ring::integers_mod(1000)};
}

QSeries random_series(const Ring& ring, std::int64_t lead, std::int64_t prec, bool unit_lead = false) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(prec - lead + 1));
    for (auto& v : c) v = oracle::uniform(-40, 40);
    if (unit_lead) c[0] = oracle::uniform(0, 1) ? 1 : -1;
    return QSeries::from_values(ring, lead, c, prec);
}

std::vector<mpz_class> dense(const QSeries& f, std::int64_t from, std::int64_t to) { return f.coeffs(from, to); }

}  // namespace

TEST_CASE("construction normalizes leading zeros") {
    std::vector<std::int64_t> c{0, 0, 3, 0, -1};
    QSeries f = QSeries::from_values(Ring::integers(), -1, c, 5);
    CHECK(f.lead() == 1);
    CHECK(f.precision() == 5);
    CHECK(f.coeff(1) == 3);
    CHECK(f.coeff(3) == -1);
    CHECK(f.coeff(5) == 0);
    CHECK(f.coeff(-7) == 0);
    CHECK_THROWS_AS(f.coeff(6), PrecisionError);

    QSeries z = QSeries::from_values(Ring::integers(), 0, std::vector<std::int64_t>{0, 0}, 4);
    CHECK(z.is_zero());
    CHECK(z.lead() == 5);
    CHECK(z == QSeries(Ring::integers(), 4));
}

TEST_CASE("modular construction reduces integers") {
    QSeries f = QSeries::from_values(Ring::prime_field(7), 0, std::vector<std::int64_t>{-1, 14, 9}, 3);
    CHECK(f.residue(0) == 6);
    CHECK(f.residue(1) == 0);
    CHECK(f.residue(2) == 2);
    CHECK_THROWS_AS(QSeries::from_residues(Ring::prime_field(7), 0, {7}, 3), std::invalid_argument);
}

TEST_CASE("ring mismatch is rejected") {
    QSeries a = QSeries::one(Ring::integers(), 5);
    QSeries b = QSeries::one(Ring::prime_field(5), 5);
    CHECK_THROWS_AS(a + b, RingMismatchError);
    CHECK_THROWS_AS(a * b, RingMismatchError);
    CHECK_THROWS_AS(a.first_difference(b), RingMismatchError);
}

TEST_CASE("precision bookkeeping for products and quotients") {
    const Ring z = Ring::integers();
    QSeries f = random_series(z, -1, 10, true);  // relative precision 11
    QSeries g = random_series(z, 2, 6, true);    // relative precision 4
    QSeries h = mul(f, g);
    CHECK(h.lead() == 1);
    CHECK(h.precision() == 1 + 4);
    QSeries d = divide(f, g);
    CHECK(d.lead() == -3);
    CHECK(d.precision() == -3 + 4);
    CHECK(add(f, g).precision() == 6);
}

TEST_CASE("product agrees with the schoolbook oracle") {
    for (const Ring& ring : test_rings()) {
        QSeries f = random_series(ring, 0, 25);
        QSeries g = random_series(ring, 0, 25);
        std::vector<mpz_class> want = oracle::mul(dense(f, 0, 25), dense(g, 0, 25), 25);
        QSeries h = mul(f, g);
        for (std::int64_t n = 0; n <= 25; ++n) {
            mpz_class w = want[n];
            if (!ring.is_exact()) {
                mpz_class m = static_cast<unsigned long>(ring.modulus());
                w = ((w % m) + m) % m;
            }
            CHECK(h.coeff(n) == w);
        }
    }
}

TEST_CASE("ring axioms hold on random series") {
    for (const Ring& ring : test_rings()) {
        for (int trial = 0; trial < 10; ++trial) {
            QSeries f = random_series(ring, oracle::uniform(-2, 2), 30);
            QSeries g = random_series(ring, oracle::uniform(-2, 2), 30);
            QSeries h = random_series(ring, oracle::uniform(-2, 2), 30);
            CHECK((f * g).agrees_with(g * f));
            CHECK(((f * g) * h).agrees_with(f * (g * h)));
            CHECK((f * (g + h)).agrees_with(f * g + f * h));
            CHECK((f - f).is_zero());
            CHECK((f + (-f)).is_zero());
        }
    }
}

TEST_CASE("inverse and division round-trip") {
    for (const Ring& ring : test_rings()) {
        for (int trial = 0; trial < 10; ++trial) {
            QSeries f = random_series(ring, oracle::uniform(-3, 3), 40, true);
            QSeries g = random_series(ring, oracle::uniform(-3, 3), 40, true);
            QSeries inv = invert(f);
            QSeries one = mul(f, inv);
            CHECK(one.agrees_with(QSeries::one(ring, one.precision())));
            CHECK(divide(mul(f, g), g).agrees_with(f));
            CHECK(divide(f, g).agrees_with(mul(f, invert(g))));
        }
    }
}

TEST_CASE("non-unit leading coefficients are not invertible") {
    QSeries f = QSeries::from_values(Ring::integers(), 0, std::vector<std::int64_t>{2, 1}, 5);
    CHECK_THROWS_AS(invert(f), NotInvertibleError);
    QSeries g = QSeries::from_values(Ring::integers_mod(169), 0, std::vector<std::int64_t>{13, 1}, 5);
    CHECK_THROWS_AS(invert(g), NotInvertibleError);
    CHECK_THROWS_AS(invert(QSeries(Ring::prime_field(5), 5)), NotInvertibleError);
}

TEST_CASE("powers match repeated products") {
    for (const Ring& ring : test_rings()) {
        QSeries f = random_series(ring, 1, 30, true);
        QSeries cube = f * f * f;
        CHECK(pow(f, 3).agrees_with(cube));
        CHECK(pow(f, 0).agrees_with(QSeries::one(ring, 30)));
        CHECK(mul(pow(f, -2), pow(f, 2)).agrees_with(QSeries::one(ring, 20)));
    }
}

TEST_CASE("reduction is a ring homomorphism") {
    const Ring z = Ring::integers();
    const Ring m = Ring::integers_mod(5041);
    const Ring p = Ring::prime_field(71);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries f = random_series(z, 0, 30, true);
        QSeries g = random_series(z, -1, 30, true);
        CHECK(reduce(f * g, p).agrees_with(reduce(f, p) * reduce(g, p)));
        CHECK(reduce(f + g, m).agrees_with(reduce(f, m) + reduce(g, m)));
        CHECK(reduce(reduce(f, m), p) == reduce(f, p));
        CHECK(reduce(invert(g), p).agrees_with(invert(reduce(g, p))));
    }
    CHECK_THROWS_AS(reduce(QSeries::one(Ring::integers_mod(10), 3), Ring::prime_field(3)), RingMismatchError);
    CHECK_THROWS_AS(reduce(QSeries::one(p, 3), z), RingMismatchError);
}

TEST_CASE("U and V operators") {
    const Ring z = Ring::integers();
    for (std::int64_t p : {2, 3, 5, 71}) {
        QSeries f = random_series(z, -1, 40);
        QSeries vf = v_operator(f, p);
        CHECK(vf.precision() == 40 * p);
        CHECK(u_operator(vf, p) == f);
        for (std::int64_t n = -1; n <= 40; ++n) CHECK(vf.coeff(n * p) == f.coeff(n));

        QSeries g = random_series(z, 0, 40);
        CHECK(v_operator(f * g, p).agrees_with(v_operator(f, p) * v_operator(g, p)));
        CHECK(u_operator(f + g, p).agrees_with(u_operator(f, p) + u_operator(g, p)));
        // U(f * (g|V)) = (U f) * g
        CHECK(u_operator(f * v_operator(g, p), p).agrees_with(u_operator(f, p) * g));

        QSeries uf = u_operator(f, p);
        CHECK(uf.precision() == 40 / p);
        for (std::int64_t n = 0; n <= uf.precision(); ++n) CHECK(uf.coeff(n) == f.coeff(n * p));
    }
}

TEST_CASE("scaled Hecke operator") {
    const Ring z = Ring::integers();
    QSeries f = random_series(z, -1, 60);
    QSeries t = hecke_scaled(f, 5);
    QSeries want = v_operator(f, 5) + scale(u_operator(f, 5), 5);
    CHECK(t.agrees_with(want));
    CHECK(t.precision() == 12);
    CHECK_THROWS_AS(hecke_scaled(reduce(f, Ring::integers_mod(6)), 5), RingMismatchError);
    CHECK_NOTHROW(hecke_scaled(reduce(f, Ring::integers_mod(25)), 5));
}

TEST_CASE("shift, truncate and comparison") {
    const Ring z = Ring::integers();
    QSeries f = random_series(z, 0, 10, true);
    QSeries s = shift(f, 3);
    CHECK(s.lead() == 3);
    CHECK(s.precision() == 13);
    CHECK(truncate(f, 4).precision() == 4);
    CHECK(truncate(f, 4).agrees_with(f));
    QSeries g = f + QSeries::monomial(z, 1, 7, 10);
    CHECK(f.first_difference(g) == 7);
    CHECK(truncate(f, 6).agrees_with(g));
}

TEST_CASE("rendering") {
    QSeries f = QSeries::from_values(Ring::integers(), -1, std::vector<std::int64_t>{1, 0, -2, 1}, 2);
    CHECK(f.to_string() == "q^-1 - 2*q + q^2 + O(q^3)");
    CHECK(QSeries(Ring::integers(), 4).to_string() == "O(q^5)");
}
