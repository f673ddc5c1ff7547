#include "moonshine/congruence.hpp"

#include <algorithm>
#include <set>

#include "moonshine/etatheta.hpp"
#include "moonshine/fixtures.hpp"

namespace moonshine {

namespace {

// Extra equations beyond the number of unknowns, so that an accidental
// solution of a square system is caught before the full verification pass.
constexpr std::int64_t kGuardRows = 10;

void require_prime(std::int64_t p) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::uint32_t field_characteristic(const QSeries& f) {
    if (f.ring().kind() != RingKind::PrimeField)
        throw RingMismatchError("expected a series over a prime field, got " + f.ring().name());
    return static_cast<std::uint32_t>(f.ring().modulus());
}

struct SolveResult {
    std::vector<std::uint32_t> x;
};

// Solves rows * x = rhs over F_p by Gauss-Jordan elimination. `exponents`
// labels each row with the q-exponent it came from, for error reporting.
SolveResult solve_mod_p(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows,
                        std::vector<std::uint32_t> rhs, const std::vector<std::int64_t>& exponents,
                        std::size_t unknowns) {
    const std::size_t m = rows.size();
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::vector<std::size_t> pivot_row_of(unknowns, m);
    std::size_t r = 0;
    for (std::size_t col = 0; col < unknowns && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && rows[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(rows[piv], rows[r]);
        std::swap(rhs[piv], rhs[r]);
        std::swap(order[piv], order[r]);
        std::uint32_t inv = FieldElem(p, rows[r][col]).inv().value();
        for (auto& v : rows[r]) v = static_cast<std::uint32_t>(std::uint64_t{v} * inv % p);
        rhs[r] = static_cast<std::uint32_t>(std::uint64_t{rhs[r]} * inv % p);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            std::uint64_t factor = rows[i][col];
            for (std::size_t k = 0; k < unknowns; ++k)
                rows[i][k] = static_cast<std::uint32_t>((rows[i][k] + (p - factor) * rows[r][k]) % p);
            rhs[i] = static_cast<std::uint32_t>((rhs[i] + (p - factor) * rhs[r]) % p);
        }
        pivot_row_of[col] = r;
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (rhs[i] != 0)
            throw InconsistentSystemError("no decomposition of the requested shape (equation at q^" +
                                              std::to_string(exponents[order[i]]) + " fails)",
                                          exponents[order[i]]);
    if (r < unknowns) throw UnderdeterminedSystemError("partial fraction system does not have full rank");
    SolveResult out;
    out.x.resize(unknowns);
    for (std::size_t col = 0; col < unknowns; ++col) out.x[col] = rhs[pivot_row_of[col]];
    return out;
}

QSeries constant(const Ring& ring, const mpz_class& c, std::int64_t prec) {
    return QSeries::monomial(ring, c, 0, prec);
}

// 1/(j - alpha), j/g(j) and 1/g(j) over `ring`, through q^prec.
QSeries linear_pole(const QSeries& j, const FieldElem& alpha, std::int64_t prec) {
    return truncate(invert(j - constant(j.ring(), alpha.value(), j.precision())), prec);
}

std::pair<QSeries, QSeries> quadratic_pole(const QSeries& j, const MonicQuadratic& g, std::int64_t prec) {
    QSeries gj = mul(j, j) + scale(j, g.c1.value()) + constant(j.ring(), g.c0.value(), j.precision());
    QSeries inv = invert(gj);
    return {truncate(mul(j, inv), prec), truncate(inv, prec)};
}

std::int64_t shift_of(const FieldElem& alpha) {
    return static_cast<std::int64_t>((alpha.p() - alpha.value()) % alpha.p());
}

Verdict make_verdict(std::string name, std::int64_t prec, std::optional<std::int64_t> mismatch,
                     std::string detail_pass, std::string detail_fail) {
    Verdict v;
    v.name = std::move(name);
    v.precision = prec;
    v.first_mismatch = mismatch;
    v.status = mismatch ? VerdictStatus::Fail : VerdictStatus::Pass;
    v.detail = mismatch ? detail_fail + " (first mismatch at q^" + std::to_string(*mismatch) + ")"
                        : std::move(detail_pass);
    return v;
}

CuspFormCombination echelon_express(const QSeries& f, int k, std::vector<BasisMonomial> basis) {
    const std::uint32_t p = field_characteristic(f);
    const std::int64_t prec = f.precision();
    CuspFormCombination out;
    out.p = p;
    out.weight = k;
    out.basis = basis;
    LevelOneForms forms(f.ring(), prec);
    QSeries residual = f;
    for (const auto& m : basis) {
        // Each basis element is q^c + O(q^{c+1}).
        if (m.c > prec) throw UnderdeterminedSystemError("precision too low for the weight " + std::to_string(k) + " basis");
        std::uint64_t coord = residual.residue(m.c);
        out.coords.push_back(coord);
        if (coord != 0) residual = residual - scale(forms.expand(m), static_cast<unsigned long>(coord));
    }
    if (!residual.is_zero())
        throw ResidualError("series is not a level-1 form of weight " + std::to_string(k) +
                                " mod " + std::to_string(p) + " (residual at q^" +
                                std::to_string(residual.lead()) + ")",
                            residual.lead());
    out.verified_precision = prec;
    return out;
}

Verdict eqnc2_from(const QSeries& h, std::int64_t p, std::int64_t prec) {
    const Ring fp = Ring::prime_field(static_cast<std::uint64_t>(p));
    QSeries u = reduce(u_operator(h, p), fp);
    QSeries product = truncate(mul(j_prime(fp, prec + 2), u), prec);
    Verdict v;
    v.name = "eqnC2";
    v.precision = prec;
    try {
        CuspFormCombination c = holomorphic_express(product, static_cast<int>(p + 1));
        v.status = VerdictStatus::Pass;
        v.detail = "j' * (h|U(p)) mod p = " + c.to_string();
    } catch (const ResidualError& e) {
        v.status = VerdictStatus::Fail;
        v.first_mismatch = e.index();
        v.detail = e.what();
    }
    return v;
}

}  // namespace

ClassLabel class_label(std::int64_t p) {
    const auto& row = fixtures::prime_row(p);
    return {p, std::string(row.class_label)};
}

std::string PartialFractionDecomposition::to_string() const {
    if (empty()) return "0";
    std::vector<std::pair<std::int64_t, std::string>> parts;
    for (const auto& t : linear_terms)
        parts.push_back({shift_of(t.alpha), std::to_string(t.numerator().value()) + "/(j+" +
                                                std::to_string(shift_of(t.alpha)) + ")"});
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& [s, text] : parts) out += (out.empty() ? "" : "+") + text;
    for (const auto& t : quadratic_terms)
        out += (out.empty() ? "" : "+") + std::string("(") + std::to_string((-t.b).value()) + "*j+" +
               std::to_string((-t.c).value()) + ")/(j^2+" + std::to_string(t.g.c1.value()) + "*j+" +
               std::to_string(t.g.c0.value()) + ")";
    return out;
}

QSeries expand_partial_fractions(const PartialFractionDecomposition& pfd, const Ring& ring,
                                 std::int64_t prec) {
    if (ring.is_exact() || ring.modulus() % pfd.p != 0)
        throw RingMismatchError("partial fractions mod " + std::to_string(pfd.p) + " cannot be expanded over " +
                                ring.name());
    QSeries j = j_function(ring, prec);
    QSeries sum(ring, prec);
    for (const auto& t : pfd.linear_terms) sum = sum - scale(linear_pole(j, t.alpha, prec), t.a.value());
    for (const auto& t : pfd.quadratic_terms) {
        auto [jg, g] = quadratic_pole(j, t.g, prec);
        sum = sum - scale(jg, t.b.value()) - scale(g, t.c.value());
    }
    return truncate(sum, prec);
}

PartialFractionDecomposition solve_partial_fractions(const QSeries& f,
                                                     const std::vector<FieldElem>& alphas,
                                                     const std::vector<MonicQuadratic>& quadratics) {
    const std::uint32_t p = field_characteristic(f);
    const std::int64_t prec = f.precision();
    if (f.lead() < 1)
        throw std::invalid_argument("partial fractions need a series with zero constant term and no poles");

    PartialFractionDecomposition out;
    out.p = p;
    const std::size_t n = alphas.size() + 2 * quadratics.size();
    if (n == 0) {
        if (!f.is_zero())
            throw InconsistentSystemError("nonzero series but no poles allowed", f.lead());
        out.verified_precision = prec;
        return out;
    }
    if (prec < static_cast<std::int64_t>(n))
        throw UnderdeterminedSystemError("precision " + std::to_string(prec) + " is below the " +
                                         std::to_string(n) + " unknowns");

    QSeries j = j_function(f.ring(), prec);
    std::vector<QSeries> columns;
    for (const auto& a : alphas) columns.push_back(linear_pole(j, a, prec));
    for (const auto& g : quadratics) {
        auto [jg, inv] = quadratic_pole(j, g, prec);
        columns.push_back(std::move(jg));
        columns.push_back(std::move(inv));
    }

    const std::int64_t top = std::min<std::int64_t>(prec, static_cast<std::int64_t>(n) + kGuardRows);
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::uint32_t> rhs;
    std::vector<std::int64_t> exponents;
    for (std::int64_t e = 1; e <= top; ++e) {
        std::vector<std::uint32_t> row;
        for (const auto& c : columns) row.push_back(static_cast<std::uint32_t>(c.residue(e)));
        rows.push_back(std::move(row));
        rhs.push_back(static_cast<std::uint32_t>(f.residue(e)));
        exponents.push_back(e);
    }
    SolveResult sol = solve_mod_p(p, std::move(rows), std::move(rhs), exponents, n);

    QSeries rebuilt(f.ring(), prec);
    for (std::size_t k = 0; k < n; ++k) rebuilt = rebuilt + scale(columns[k], sol.x[k]);
    if (auto diff = f.first_difference(rebuilt))
        throw InconsistentSystemError("decomposition fits the leading equations but fails at q^" +
                                          std::to_string(*diff),
                                      *diff);

    // f = sum x_k column_k, with a = -x for each term.
    std::size_t k = 0;
    for (const auto& alpha : alphas) {
        FieldElem a = -FieldElem(p, sol.x[k++]);
        if (!a.is_zero()) out.linear_terms.push_back({alpha, a});
    }
    for (const auto& g : quadratics) {
        FieldElem b = -FieldElem(p, sol.x[k++]);
        FieldElem c = -FieldElem(p, sol.x[k++]);
        if (!b.is_zero() || !c.is_zero()) out.quadratic_terms.push_back({g, b, c});
    }
    out.verified_precision = prec;
    return out;
}

PartialFractionDecomposition partial_fractions(const QSeries& f, const SupersingularData& ss) {
    const std::uint32_t p = field_characteristic(f);
    if (ss.p != p) throw std::invalid_argument("supersingular data is for a different prime");
    if (!ss.computed) {
        // Characteristics 2 and 3: no poles away from j = 0 = 1728.
        return solve_partial_fractions(f, {}, {});
    }
    return solve_partial_fractions(f, ss.ss_p, ss.ss_star_p);
}

std::vector<FieldElem> discover_linear_poles(const QSeries& f) {
    const std::uint32_t p = field_characteristic(f);
    std::vector<FieldElem> candidates;
    for (std::uint32_t a = 0; a < p; ++a) candidates.emplace_back(p, a);
    PartialFractionDecomposition pfd = solve_partial_fractions(f, candidates, {});
    std::vector<FieldElem> poles;
    for (const auto& t : pfd.linear_terms) poles.push_back(t.alpha);
    std::sort(poles.begin(), poles.end());
    return poles;
}

std::string CuspFormCombination::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coords[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (coords[i] != 1 || basis[i] == BasisMonomial{}) out += std::to_string(coords[i]);
        if (!(basis[i] == BasisMonomial{})) out += (coords[i] != 1 ? "*" : "") + basis[i].to_string();
    }
    return out.empty() ? "0" : out;
}

CuspFormCombination cusp_express(const QSeries& f, int k) {
    if (f.lead() < 1) throw std::invalid_argument("cusp_express needs a series with zero constant term");
    std::vector<BasisMonomial> basis = (k % 2 != 0) ? std::vector<BasisMonomial>{} : cusp_basis(k);
    return echelon_express(f, k, std::move(basis));
}

CuspFormCombination holomorphic_express(const QSeries& f, int k) {
    if (f.lead() < 0) throw std::invalid_argument("holomorphic_express needs a series without poles");
    std::vector<BasisMonomial> basis;
    if (k >= 0 && k % 2 == 0 && k != 2) basis = holomorphic_basis(k);
    return echelon_express(f, k, std::move(basis));
}

QSeries expand_combination(const std::vector<std::pair<std::int64_t, BasisMonomial>>& terms,
                           const Ring& ring, std::int64_t prec) {
    LevelOneForms forms(ring, prec);
    QSeries sum(ring, prec);
    for (const auto& [c, m] : terms) sum = sum + scale(forms.expand(m), static_cast<long>(c));
    return sum;
}

QSeries u_gp_mod_p(std::int64_t p, std::int64_t prec) {
    require_prime(p);
    const Ring fp = Ring::prime_field(static_cast<std::uint64_t>(p));
    return u_operator(j_minus_744(fp, p * prec), p);
}

QSeries u_gp_exact(std::int64_t p, std::int64_t prec) {
    return u_operator(hauptmodul_exact(p, p * prec), p);
}

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Pass: return "pass";
        case VerdictStatus::Fail: return "fail";
        case VerdictStatus::Skipped: return "skipped";
        case VerdictStatus::KnownAnomaly: return "known-anomaly";
    }
    return "?";
}

Verdict check_replicability(const QSeries& h, std::int64_t p, std::int64_t prec) {
    if (!h.ring().is_exact()) throw RingMismatchError("replicability is checked over Z");
    QSeries lhs = h + scale(u_operator(h, p), p);
    if (lhs.precision() < prec)
        throw PrecisionError("Hauptmodul precision " + std::to_string(h.precision()) + " too low for q^" +
                             std::to_string(prec));
    lhs = truncate(lhs, prec);
    QSeries rhs = j_minus_744(Ring::integers(), prec);
    return make_verdict("replicability", prec, lhs.first_difference(rhs), "h + p(h|U(p)) = j - 744 over Z",
                        "h + p(h|U(p)) differs from j - 744");
}

Verdict verify_replicability(std::int64_t p, std::int64_t prec) {
    return check_replicability(hauptmodul_exact(p, p * prec), p, prec);
}

Verdict check_swisher(std::int64_t p, std::int64_t prec, const PartialFractionDecomposition& pfd,
                      bool include_correction) {
    require_prime(p);
    if (p < 5) throw std::domain_error("the mod p^2 congruence is stated for p >= 5");
    const Ring ring = Ring::integers_mod(static_cast<std::uint64_t>(p * p));
    QSeries j = j_function(ring, p * prec);
    QSeries lhs = truncate(v_operator(j, p), prec);
    QSeries rhs = hecke_scaled(j - constant(ring, 744, j.precision()), p) + constant(ring, 744, prec);
    if (include_correction) rhs = rhs - scale(expand_partial_fractions(pfd, ring, prec), p);
    rhs = truncate(rhs, prec);
    return make_verdict("swisher", prec, lhs.first_difference(rhs),
                        "j(p tau) = p(j-744)|T(p) + 744 + p*(poles) mod p^2",
                        include_correction ? "congruence mod p^2 fails" : "congruence fails without the pole terms");
}

Verdict verify_swisher(std::int64_t p, std::int64_t prec) {
    require_prime(p);
    SupersingularData ss = supersingular_data(static_cast<std::uint32_t>(p));
    PartialFractionDecomposition pfd = partial_fractions(u_gp_mod_p(p, default_precision(p)), ss);
    return check_swisher(p, prec, pfd, true);
}

Verdict verify_eqnC2(std::int64_t p, std::int64_t prec) {
    require_prime(p);
    if (p == 2) {
        Verdict v;
        v.name = "eqnC2";
        v.status = VerdictStatus::Skipped;
        v.precision = prec;
        v.detail = "weight p+1 = 3 is odd";
        return v;
    }
    return eqnc2_from(hauptmodul_exact(p, p * (prec + 2)), p, prec);
}

std::int64_t default_precision(std::int64_t p) {
    require_prime(p);
    // The blind pole search has p unknowns, which dominates both the
    // supersingular count (about p/12) and dim S_{p-1}.
    return std::max<std::int64_t>(50, 2 * p + 20);
}

PrimeReport prime_report(std::int64_t p, const ReportOptions& options) {
    require_prime(p);
    PrimeReport r;
    r.p = p;
    r.precision = options.precision > 0 ? options.precision : default_precision(p);
    const std::int64_t prec = r.precision;
    const Ring fp = Ring::prime_field(static_cast<std::uint64_t>(p));
    const bool has_row = fixtures::has_prime_row(p);
    if (has_row) r.label = class_label(p);

    r.u_mod_p = u_gp_mod_p(p, prec);

    auto skipped = [prec](std::string name, std::string why) {
        Verdict v;
        v.name = std::move(name);
        v.status = VerdictStatus::Skipped;
        v.precision = prec;
        v.detail = std::move(why);
        return v;
    };

    if (has_exact_hauptmodul(p)) {
        HauptmodulConstruction h = hauptmodul_construction(p, p * (prec + 2));
        r.hauptmodul_constant = h.removed_constant;
        QSeries u = u_operator(h.series, p);
        r.u_exact = truncate(u, options.exact_terms);
        r.checks["replicability"] = check_replicability(h.series, p, prec);
        r.checks["exactCoherence"] = make_verdict("exactCoherence", prec, reduce(truncate(u, prec), fp).first_difference(r.u_mod_p),
                                                  "exact U reduces to (j-744)|U(p) mod p",
                                                  "exact U differs from (j-744)|U(p) mod p");
        r.checks["eqnC2"] = p == 2 ? skipped("eqnC2", "weight p+1 = 3 is odd") : eqnc2_from(h.series, p, prec);
    } else {
        r.checks["replicability"] = skipped("replicability", "no exact Hauptmodul construction");
        r.checks["exactCoherence"] = skipped("exactCoherence", "no exact Hauptmodul construction");
        r.checks["eqnC2"] = skipped("eqnC2", "no exact Hauptmodul construction");
    }

    r.ss = supersingular_data(static_cast<std::uint32_t>(p));
    try {
        r.pfd = partial_fractions(r.u_mod_p, r.ss);
    } catch (const std::runtime_error& e) {
        r.pfd_error = e.what();
    }
    try {
        r.blind_poles = discover_linear_poles(r.u_mod_p);
    } catch (const InconsistentSystemError&) {
        r.blind_poles.reset();
    }
    try {
        r.cusp = cusp_express(r.u_mod_p, static_cast<int>(p - 1));
    } catch (const std::runtime_error& e) {
        r.cusp_error = e.what();
    }

    // Poles found from the q-series alone versus the point-counting locus.
    if (!r.ss.computed) {
        r.checks["ssAgreement"] = skipped("ssAgreement", "no point counting in characteristic 2 or 3");
    } else {
        Verdict v;
        v.name = "ssAgreement";
        v.precision = prec;
        if (r.blind_poles) {
            bool same = *r.blind_poles == r.ss.ss_p && r.ss.ss_star_p.empty();
            v.status = same ? VerdictStatus::Pass : VerdictStatus::Fail;
            v.detail = same ? "poles recovered from U match the supersingular locus"
                            : "poles recovered from U differ from the supersingular locus";
        } else {
            bool expected = !r.ss.ss_star_p.empty();
            v.status = expected ? VerdictStatus::Pass : VerdictStatus::Fail;
            v.detail = expected ? "no linear-only decomposition, matching the quadratic supersingular factors"
                                : "no linear-only decomposition although every supersingular j is in F_p";
        }
        r.checks["ssAgreement"] = v;
    }

    {
        Verdict v;
        v.name = "cuspForm";
        v.precision = prec;
        v.status = r.cusp ? VerdictStatus::Pass : VerdictStatus::Fail;
        v.detail = r.cusp ? "U mod p = " + r.cusp->to_string() + " in weight " + std::to_string(p - 1) : r.cusp_error;
        r.checks["cuspForm"] = v;
    }

    if (r.cusp && r.pfd) {
        std::vector<std::pair<std::int64_t, BasisMonomial>> terms;
        for (std::size_t i = 0; i < r.cusp->basis.size(); ++i)
            terms.push_back({static_cast<std::int64_t>(r.cusp->coords[i]), r.cusp->basis[i]});
        QSeries a = expand_combination(terms, fp, prec);
        QSeries b = expand_partial_fractions(*r.pfd, fp, prec);
        r.checks["cuspPfdConsistency"] = make_verdict("cuspPfdConsistency", prec, a.first_difference(b),
                                                      "cusp form and partial fractions agree",
                                                      "cusp form and partial fractions disagree");
    } else {
        r.checks["cuspPfdConsistency"] = skipped("cuspPfdConsistency", "missing decomposition");
    }

    if (p >= 5 && r.pfd) {
        r.checks["swisher"] = check_swisher(p, prec, *r.pfd, true);
    } else {
        r.checks["swisher"] = skipped("swisher", p < 5 ? "stated for p >= 5" : "no decomposition");
    }

    if (has_row) {
        const auto& row = fixtures::prime_row(p);
        Verdict t2;
        t2.name = "table2match";
        t2.precision = prec;
        if (r.pfd && r.pfd->quadratic_terms.empty()) {
            std::vector<fixtures::PartialFractionTerm> got;
            for (const auto& t : r.pfd->linear_terms)
                got.push_back({static_cast<std::int64_t>(t.numerator().value()), shift_of(t.alpha)});
            std::sort(got.begin(), got.end(), [](auto& x, auto& y) { return x.shift < y.shift; });
            auto want = row.partial_fractions;
            std::sort(want.begin(), want.end(), [](auto& x, auto& y) { return x.shift < y.shift; });
            t2.status = got == want ? VerdictStatus::Pass : VerdictStatus::Fail;
            t2.detail = "computed " + r.pfd->to_string();
        } else {
            t2.status = VerdictStatus::Fail;
            t2.detail = r.pfd ? "computed decomposition has quadratic terms" : r.pfd_error;
        }
        r.checks["table2match"] = t2;

        std::vector<std::pair<std::int64_t, BasisMonomial>> printed;
        for (const auto& t : row.cusp_form) printed.push_back({t.coeff, t.monomial});
        QSeries expansion = expand_combination(printed, fp, prec);
        auto diff = expansion.first_difference(r.u_mod_p);
        Verdict t3 = make_verdict("table3match", prec, diff, "printed combination is congruent to U mod p",
                                  "printed combination is not congruent to U mod p");
        if (diff && row.cusp_form_anomaly) {
            t3.status = VerdictStatus::KnownAnomaly;
            t3.detail = std::string(row.anomaly) + " (first mismatch at q^" + std::to_string(*diff) + ")";
        }
        r.checks["table3match"] = t3;
    } else {
        r.checks["table2match"] = skipped("table2match", "p does not divide the monster order");
        r.checks["table3match"] = skipped("table3match", "p does not divide the monster order");
    }
    return r;
}

}  // namespace moonshine
