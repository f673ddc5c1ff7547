// Reference data, version 1.
//
// Every entry below is transcribed from the published moonshine / supersingular
// tables and the worked p = 71 example. Entries are never used as solver
// input; the test and report layers diff recomputed values against them.

#include "moonshine/fixtures.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace moonshine::fixtures {

namespace {

using B = BasisMonomial;

std::vector<PrimeRow> build_rows() {
    return {
        // Vanishing rows: no supersingular j outside {0, 1728} for p <= 11.
        {2, "2A", {}, {}},
        {3, "3A", {}, {}},
        {5, "5A", {}, {}},
        {7, "7A", {}, {}},
        {11, "11A", {}, {}},
        // Printed as E4*Delta (weight 16, leading coefficient 1), but U mod 13
        // starts 12q and must have weight 12.
        {13, "13A", {{12, 8}}, {{1, B{1, 0, 1}}}, true,
         "printed E4*Delta has weight 16 and leading coefficient 1; weight 12 is required"},
        {17, "17A", {{4, 9}}, {{4, B{1, 0, 1}}}},
        {19, "19A", {{7, 12}}, {{7, B{0, 1, 1}}}},
        {23, "23AB", {{4, 4}}, {{4, B{1, 1, 1}}}},
        // Printed 3*E4^3*Delta has weight 24 next to a weight 28 term.
        {29, "29A", {{9, 4}, {23, 27}}, {{3, B{3, 0, 1}}, {16, B{1, 0, 2}}}, true,
         "printed 3*E4^3*Delta has weight 24 while 16*E4*Delta^2 has weight 28"},
        {31, "31AB", {{20, 27}, {7, 29}}, {{27, B{0, 3, 1}}, {26, B{0, 1, 2}}}},
        {41, "41A", {{36, 9}, {20, 13}, {31, 38}},
         {{5, B{1, 4, 1}}, {33, B{1, 2, 2}}, {20, B{1, 0, 3}}}},
        {47, "47AB", {{32, 3}, {4, 37}, {17, 38}},
         {{6, B{1, 5, 1}}, {10, B{1, 3, 2}}, {16, B{1, 1, 3}}}},
        {59, "59AB", {{21, 11}, {5, 12}, {4, 31}, {3, 44}},
         {{33, B{1, 7, 1}}, {4, B{1, 5, 2}}, {14, B{1, 3, 3}}, {38, B{1, 1, 4}}}},
        {71, "71AB", {{18, 5}, {48, 23}, {16, 30}, {40, 31}, {24, 54}},
         {{4, B{1, 9, 1}}, {12, B{1, 7, 2}}, {65, B{1, 5, 3}}, {11, B{1, 3, 4}}, {35, B{1, 1, 5}}}},
    };
}

}  // namespace

const std::vector<PrimeRow>& prime_rows() {
    static const std::vector<PrimeRow> rows = build_rows();
    return rows;
}

bool has_prime_row(std::int64_t p) {
    const auto& rows = prime_rows();
    return std::any_of(rows.begin(), rows.end(), [p](const PrimeRow& r) { return r.p == p; });
}

const PrimeRow& prime_row(std::int64_t p) {
    for (const auto& r : prime_rows())
        if (r.p == p) return r;
    throw std::out_of_range("no reference row for p = " + std::to_string(p));
}

const std::vector<std::int64_t>& ogg_primes() {
    static const std::vector<std::int64_t> v{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71};
    return v;
}

const std::vector<std::int64_t>& j_minus_744_head() {
    static const std::vector<std::int64_t> v{196884, 21493760, 864299970};
    return v;
}

const std::vector<std::int64_t>& hauptmodul71_head() {
    static const std::vector<std::int64_t> v{1, 0, 1, 1, 1, 1, 2, 2, 3};
    return v;
}

const std::vector<std::int64_t>& u71_exact_head() {
    static const std::vector<std::int64_t> v{2773, 302729, 12173239, 285152905, 4692994938};
    return v;
}

const std::vector<std::int64_t>& u71_mod_head() {
    static const std::vector<std::int64_t> v{4, 56, 5, 7, 18, 67, 66, 55, 47, 68};
    return v;
}

const std::vector<std::int64_t>& ss71_negated() {
    static const std::vector<std::int64_t> v{5, 23, 30, 31, 54};
    return v;
}

}  // namespace moonshine::fixtures
