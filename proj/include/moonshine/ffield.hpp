#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace moonshine {

class FieldMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element of F_p, p < 2^31, stored as a representative in [0, p).
class FieldElem {
public:
    FieldElem(std::uint32_t p, std::int64_t value);

    std::uint32_t p() const { return p_; }
    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    /// Representative in (-p/2, p/2].
    std::int64_t centered() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const { return *this * o.inv(); }
    FieldElem operator-() const { return FieldElem(p_, p_ - v_); }
    FieldElem inv() const;
    FieldElem pow(std::uint64_t e) const;

    bool operator==(const FieldElem&) const = default;
    auto operator<=>(const FieldElem&) const = default;

private:
    std::uint32_t p_;
    std::uint32_t v_;
};

/// Euler's criterion; zero counts as a square.
bool sqrt_exists(const FieldElem& x);

/// Smallest positive quadratic non-residue mod an odd prime p.
FieldElem find_nonresidue(std::uint32_t p);

/// Element u + v*sqrt(d) of F_{p^2} = F_p[sqrt(d)], d a non-residue.
class QuadExtElem {
public:
    QuadExtElem(std::uint32_t p, std::uint32_t d, std::int64_t u, std::int64_t v);
    /// Embeds an element of F_p.
    QuadExtElem(const FieldElem& x, std::uint32_t d);

    std::uint32_t p() const { return p_; }
    std::uint32_t d() const { return d_; }
    std::uint32_t u() const { return u_; }
    std::uint32_t v() const { return v_; }
    bool is_zero() const { return u_ == 0 && v_ == 0; }
    bool in_base_field() const { return v_ == 0; }

    QuadExtElem operator+(const QuadExtElem& o) const;
    QuadExtElem operator-(const QuadExtElem& o) const;
    QuadExtElem operator*(const QuadExtElem& o) const;
    QuadExtElem operator/(const QuadExtElem& o) const { return *this * o.inv(); }
    QuadExtElem operator-() const;
    QuadExtElem conj() const;
    /// u^2 - d v^2, an element of F_p.
    FieldElem norm() const;
    QuadExtElem inv() const;
    QuadExtElem pow(std::uint64_t e) const;

    bool operator==(const QuadExtElem&) const = default;

    std::string to_string() const;

private:
    void check(const QuadExtElem& o) const;

    std::uint32_t p_;
    std::uint32_t d_;
    std::uint32_t u_;
    std::uint32_t v_;
};

bool sqrt_exists(const QuadExtElem& x);

/// F_p[sqrt(d)] with d the smallest non-residue. Elements are indexed
/// u + p*v for enumeration.
class QuadExtField {
public:
    explicit QuadExtField(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::uint32_t d() const { return d_; }
    std::uint64_t size() const { return std::uint64_t{p_} * p_; }

    QuadExtElem element(std::uint64_t index) const;
    QuadExtElem make(std::int64_t u, std::int64_t v) const { return QuadExtElem(p_, d_, u, v); }
    QuadExtElem embed(const FieldElem& x) const { return QuadExtElem(x, d_); }
    std::uint64_t index(const QuadExtElem& x) const { return x.u() + std::uint64_t{p_} * x.v(); }

private:
    std::uint32_t p_;
    std::uint32_t d_;
};

}  // namespace moonshine
