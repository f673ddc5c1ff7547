#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moonshine/ffield.hpp"
#include "moonshine/forms.hpp"
#include "moonshine/series.hpp"
#include "moonshine/supersingular.hpp"

namespace moonshine {

/// The linear system admits no solution of the requested shape.
class InconsistentSystemError : public std::runtime_error {
public:
    InconsistentSystemError(const std::string& what, std::int64_t index)
        : std::runtime_error(what), index_(index) {}
    /// First q-exponent at which the best candidate fails.
    std::int64_t index() const { return index_; }

private:
    std::int64_t index_;
};

/// Not enough coefficients to pin down the unknowns.
class UnderdeterminedSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series is not in the span it was asked to be expressed in.
class ResidualError : public std::runtime_error {
public:
    ResidualError(const std::string& what, std::int64_t index) : std::runtime_error(what), index_(index) {}
    std::int64_t index() const { return index_; }

private:
    std::int64_t index_;
};

/// Conjugacy class [g_p] of the monster with Gamma_{g_p} = Gamma0(p)+.
struct ClassLabel {
    std::int64_t p;
    std::string name;  // "pAB" stands for pA u pB
};

/// Throws std::out_of_range for primes not dividing the monster order.
ClassLabel class_label(std::int64_t p);

struct LinearTerm {
    FieldElem alpha;  // pole at j = alpha
    FieldElem a;      // contributes -a / (j - alpha)
    /// Numerator in the form  n / (j - alpha).
    FieldElem numerator() const { return -a; }
};

struct QuadraticTerm {
    MonicQuadratic g;
    FieldElem b;  // contributes -(b j + c) / g(j)
    FieldElem c;
};

/// f = - sum a/(j - alpha) - sum (b j + c)/g(j)  (mod p), zero coefficients dropped.
struct PartialFractionDecomposition {
    std::uint32_t p = 0;
    std::vector<LinearTerm> linear_terms;
    std::vector<QuadraticTerm> quadratic_terms;
    /// Precision through which the reconstruction was checked.
    std::int64_t verified_precision = -1;

    bool empty() const { return linear_terms.empty() && quadratic_terms.empty(); }
    /// "12/(j+8)" style, terms sorted by shift; "0" when empty.
    std::string to_string() const;
};

/// Reconstructs the q-expansion of a decomposition over Z/mZ with m a power of p.
QSeries expand_partial_fractions(const PartialFractionDecomposition& pfd, const Ring& ring,
                                 std::int64_t prec);

/// Solve f = -sum a/(j - alpha) - sum (b j + c)/g(j) for the given poles.
PartialFractionDecomposition solve_partial_fractions(const QSeries& f,
                                                     const std::vector<FieldElem>& alphas,
                                                     const std::vector<MonicQuadratic>& quadratics);

/// Poles taken from the supersingular locus.
PartialFractionDecomposition partial_fractions(const QSeries& f, const SupersingularData& ss);

/// Linear poles recovered from f alone, testing every alpha in F_p.
/// Throws InconsistentSystemError when f is not a sum of 1/(j - alpha) terms.
std::vector<FieldElem> discover_linear_poles(const QSeries& f);

struct CuspFormCombination {
    std::uint32_t p = 0;
    int weight = 0;
    std::vector<BasisMonomial> basis;
    std::vector<std::uint64_t> coords;  // mod p, one per basis element
    std::int64_t verified_precision = -1;

    std::string to_string() const;
};

/// Coordinates of f in the canonical weight-k cusp basis (echelon solve).
/// Odd k gives the zero space. Throws ResidualError when f is not in the span.
CuspFormCombination cusp_express(const QSeries& f, int k);

/// Same for the canonical holomorphic basis (orders starting at 0).
CuspFormCombination holomorphic_express(const QSeries& f, int k);

/// sum coeff * E4^a E6^b Delta^c expanded over `ring`.
QSeries expand_combination(const std::vector<std::pair<std::int64_t, BasisMonomial>>& terms,
                           const Ring& ring, std::int64_t prec);

/// ((j - 744) mod p) | U(p), which is T_{g_p} | U(p) mod p.
QSeries u_gp_mod_p(std::int64_t p, std::int64_t prec);
/// hauptmodul_exact(p) | U(p) over Z, for p with an exact Hauptmodul.
QSeries u_gp_exact(std::int64_t p, std::int64_t prec);

enum class VerdictStatus { Pass, Fail, Skipped, KnownAnomaly };

struct Verdict {
    std::string name;
    VerdictStatus status = VerdictStatus::Skipped;
    std::int64_t precision = -1;
    std::string detail;
    std::optional<std::int64_t> first_mismatch;

    bool passed() const { return status == VerdictStatus::Pass; }
};

std::string to_string(VerdictStatus s);

/// h + p (h | U(p)) == j - 744 over Z through q^prec.
Verdict check_replicability(const QSeries& h, std::int64_t p, std::int64_t prec);
Verdict verify_replicability(std::int64_t p, std::int64_t prec);

/// j(p tau) == p(j - 744)|T(p) + 744 + p * (supersingular correction)  (mod p^2).
Verdict check_swisher(std::int64_t p, std::int64_t prec, const PartialFractionDecomposition& pfd,
                      bool include_correction = true);
Verdict verify_swisher(std::int64_t p, std::int64_t prec);

/// j' * (h_p | U(p)) mod p lies in the level-1 holomorphic space of weight p + 1.
Verdict verify_eqnC2(std::int64_t p, std::int64_t prec);

/// Default working precision: 2 * (largest number of unknowns) + 20, at least 50.
std::int64_t default_precision(std::int64_t p);

struct PrimeReport {
    std::int64_t p = 0;
    std::optional<ClassLabel> label;
    std::int64_t precision = 0;
    QSeries u_mod_p{Ring::integers(), -1};
    std::optional<QSeries> u_exact;
    std::optional<mpz_class> hauptmodul_constant;
    SupersingularData ss;
    std::optional<PartialFractionDecomposition> pfd;
    std::string pfd_error;
    std::optional<std::vector<FieldElem>> blind_poles;
    std::optional<CuspFormCombination> cusp;
    std::string cusp_error;
    std::map<std::string, Verdict> checks;
};

struct ReportOptions {
    std::int64_t precision = 0;    // 0 selects default_precision(p)
    std::int64_t exact_terms = 10; // precision of the exact U series
};

PrimeReport prime_report(std::int64_t p, const ReportOptions& options = {});

}  // namespace moonshine
