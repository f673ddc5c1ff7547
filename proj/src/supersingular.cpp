#include "moonshine/supersingular.hpp"

#include <algorithm>
#include <stdexcept>

#include "moonshine/ring.hpp"

namespace moonshine {

namespace {

void require_large_characteristic(std::uint32_t p) {
    if (p < 5) throw std::domain_error("short Weierstrass models need characteristic >= 5");
}

// Quadratic character of every element of F_{p^2}, indexed as in QuadExtField.
std::vector<std::int8_t> character_table(const QuadExtField& field) {
    std::vector<std::int8_t> chi(field.size(), -1);
    chi[0] = 0;
    for (std::uint64_t i = 1; i < field.size(); ++i) {
        QuadExtElem x = field.element(i);
        chi[field.index(x * x)] = 1;
    }
    return chi;
}

std::uint64_t count_with_table(const CurveFp2& e, const QuadExtField& field,
                               const std::vector<std::int8_t>& chi) {
    std::int64_t sum = 0;
    for (std::uint64_t i = 0; i < field.size(); ++i) {
        QuadExtElem x = field.element(i);
        sum += chi[field.index((x * x + e.a) * x + e.b)];
    }
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(field.size()) + 1 + sum);
}

void require_nonsingular(const QuadExtElem& a, const QuadExtElem& b) {
    QuadExtElem four(a.p(), a.d(), 4, 0), tw7(a.p(), a.d(), 27, 0);
    if ((four * a * a * a + tw7 * b * b).is_zero()) throw std::domain_error("singular curve");
}

}  // namespace

CurveFp curve_from_j(const FieldElem& j) {
    const std::uint32_t p = j.p();
    require_large_characteristic(p);
    if (j.is_zero()) return {FieldElem(p, 0), FieldElem(p, 1)};
    FieldElem k1728(p, 1728);
    if (j == k1728) return {FieldElem(p, 1), FieldElem(p, 0)};
    FieldElem k = j / (k1728 - j);
    return {FieldElem(p, 3) * k, FieldElem(p, 2) * k};
}

CurveFp2 curve_from_j(const QuadExtElem& j) {
    const std::uint32_t p = j.p();
    const std::uint32_t d = j.d();
    require_large_characteristic(p);
    if (j.is_zero()) return {QuadExtElem(p, d, 0, 0), QuadExtElem(p, d, 1, 0)};
    QuadExtElem k1728(p, d, 1728, 0);
    if (j == k1728) return {QuadExtElem(p, d, 1, 0), QuadExtElem(p, d, 0, 0)};
    QuadExtElem k = j / (k1728 - j);
    return {QuadExtElem(p, d, 3, 0) * k, QuadExtElem(p, d, 2, 0) * k};
}

FieldElem j_invariant(const CurveFp& e) {
    const std::uint32_t p = e.a.p();
    FieldElem a3 = FieldElem(p, 4) * e.a * e.a * e.a;
    FieldElem disc = a3 + FieldElem(p, 27) * e.b * e.b;
    if (disc.is_zero()) throw std::domain_error("singular curve");
    return FieldElem(p, 1728) * a3 / disc;
}

QuadExtElem j_invariant(const CurveFp2& e) {
    const std::uint32_t p = e.a.p(), d = e.a.d();
    QuadExtElem a3 = QuadExtElem(p, d, 4, 0) * e.a * e.a * e.a;
    QuadExtElem disc = a3 + QuadExtElem(p, d, 27, 0) * e.b * e.b;
    if (disc.is_zero()) throw std::domain_error("singular curve");
    return QuadExtElem(p, d, 1728, 0) * a3 / disc;
}

std::uint64_t count_points(const CurveFp& e) {
    const std::uint32_t p = e.a.p();
    if ((FieldElem(p, 4) * e.a * e.a * e.a + FieldElem(p, 27) * e.b * e.b).is_zero())
        throw std::domain_error("singular curve");
    std::int64_t sum = 0;
    for (std::uint32_t i = 0; i < p; ++i) {
        FieldElem x(p, i);
        FieldElem f = (x * x + e.a) * x + e.b;
        if (!f.is_zero()) sum += sqrt_exists(f) ? 1 : -1;
    }
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + 1 + sum);
}

std::uint64_t count_points(const CurveFp2& e, const QuadExtField& field) {
    require_nonsingular(e.a, e.b);
    if (e.a.p() != field.p() || e.a.d() != field.d() || e.b.d() != field.d())
        throw FieldMismatchError("curve is not defined over this F_p^2 model");
    return count_with_table(e, field, character_table(field));
}

bool is_supersingular(const QuadExtElem& j) {
    require_large_characteristic(j.p());
    QuadExtField field(j.p());
    if (field.d() != j.d()) throw FieldMismatchError("j is not in the standard F_p^2 model");
    return count_points(curve_from_j(j), field) % j.p() == 1;
}

bool is_supersingular(const FieldElem& j) {
    require_large_characteristic(j.p());
    QuadExtField field(j.p());
    return is_supersingular(field.embed(j));
}

std::string MonicQuadratic::to_string() const {
    return "x^2 + " + std::to_string(c1.value()) + "*x + " + std::to_string(c0.value());
}

SupersingularData supersingular_data(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("supersingular_data needs a prime");
    SupersingularData out;
    out.p = p;
    if (p < 5) return out;
    out.computed = true;

    QuadExtField field(p);
    const auto chi = character_table(field);
    const FieldElem zero(p, 0), k1728(p, 1728);
    // v = 0 covers F_p; 0 < v <= (p-1)/2 picks one element of each conjugate pair.
    for (std::uint32_t v = 0; v <= (p - 1) / 2; ++v) {
        for (std::uint32_t u = 0; u < p; ++u) {
            QuadExtElem j = field.make(u, v);
            if (count_with_table(curve_from_j(j), field, chi) % p != 1) continue;
            if (v == 0) {
                FieldElem r(p, u);
                out.roots_fp.push_back(r);
                if (r != zero && r != k1728) out.ss_p.push_back(r);
            } else {
                // (x - j)(x - conj j) = x^2 - 2u x + (u^2 - d v^2)
                out.ss_star_p.push_back({FieldElem(p, -2 * std::int64_t{u}), j.norm()});
            }
        }
    }
    std::sort(out.roots_fp.begin(), out.roots_fp.end());
    std::sort(out.ss_p.begin(), out.ss_p.end());
    return out;
}

std::string FpPoly::to_string() const {
    std::string s;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        std::uint32_t c = coeffs[i].value();
        if (c == 0 && i != 0) continue;
        if (c == 0 && !s.empty()) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c != 1) s += std::to_string(c);
        if (i > 0) {
            if (c != 1) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

FpPoly ss_polynomial(const SupersingularData& ss) {
    if (!ss.computed) throw std::domain_error("supersingular data not computed for this characteristic");
    const std::uint32_t p = ss.p;
    FpPoly poly{p, {FieldElem(p, 1)}};
    auto multiply = [&](const std::vector<FieldElem>& factor) {
        std::vector<FieldElem> next(poly.coeffs.size() + factor.size() - 1, FieldElem(p, 0));
        for (std::size_t i = 0; i < poly.coeffs.size(); ++i)
            for (std::size_t k = 0; k < factor.size(); ++k) next[i + k] = next[i + k] + poly.coeffs[i] * factor[k];
        poly.coeffs = std::move(next);
    };
    for (const auto& alpha : ss.ss_p) multiply({-alpha, FieldElem(p, 1)});
    for (const auto& g : ss.ss_star_p) multiply({g.c0, g.c1, FieldElem(p, 1)});
    return poly;
}

FpPoly ss_polynomial(std::uint32_t p) { return ss_polynomial(supersingular_data(p)); }

}  // namespace moonshine
