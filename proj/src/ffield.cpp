#include "moonshine/ffield.hpp"

#include "moonshine/ring.hpp"

namespace moonshine {

namespace {

std::uint32_t residue(std::int64_t x, std::uint32_t p) {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

}  // namespace

FieldElem::FieldElem(std::uint32_t p, std::int64_t value) : p_(p), v_(0) {
    if (p < 2 || p > (1u << 31)) throw std::invalid_argument("field characteristic out of range");
    v_ = residue(value, p);
}

std::int64_t FieldElem::centered() const {
    return v_ > p_ / 2 ? static_cast<std::int64_t>(v_) - p_ : static_cast<std::int64_t>(v_);
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (p_ != o.p_) throw FieldMismatchError("F_p elements of different characteristic");
    return FieldElem(p_, std::int64_t{v_} + o.v_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    if (p_ != o.p_) throw FieldMismatchError("F_p elements of different characteristic");
    return FieldElem(p_, std::int64_t{v_} - o.v_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (p_ != o.p_) throw FieldMismatchError("F_p elements of different characteristic");
    return FieldElem(p_, mulmod(v_, o.v_, p_));
}

FieldElem FieldElem::pow(std::uint64_t e) const {
    FieldElem r(p_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in F_" + std::to_string(p_));
    // Extended Euclid, valid for any modulus coprime to v.
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m) {
        std::int64_t q = a / m;
        std::int64_t t = a - q * m;
        a = m;
        m = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (a != 1) throw std::domain_error("element is not invertible");
    return FieldElem(p_, x0);
}

bool sqrt_exists(const FieldElem& x) {
    if (x.is_zero() || x.p() == 2) return true;
    return x.pow((x.p() - 1) / 2).value() == 1;
}

FieldElem find_nonresidue(std::uint32_t p) {
    if (p == 2) throw std::invalid_argument("F_2 has no quadratic non-residues");
    if (!is_prime(p)) throw std::invalid_argument("find_nonresidue needs a prime");
    for (std::uint32_t n = 2; n < p; ++n)
        if (!sqrt_exists(FieldElem(p, n))) return FieldElem(p, n);
    throw std::logic_error("no non-residue found");
}

// ---------------------------------------------------------------------------

QuadExtElem::QuadExtElem(std::uint32_t p, std::uint32_t d, std::int64_t u, std::int64_t v)
    : p_(p), d_(d), u_(residue(u, p)), v_(residue(v, p)) {}

QuadExtElem::QuadExtElem(const FieldElem& x, std::uint32_t d)
    : p_(x.p()), d_(d), u_(x.value()), v_(0) {}

void QuadExtElem::check(const QuadExtElem& o) const {
    if (p_ != o.p_ || d_ != o.d_) throw FieldMismatchError("F_p^2 elements from different fields");
}

QuadExtElem QuadExtElem::operator+(const QuadExtElem& o) const {
    check(o);
    return QuadExtElem(p_, d_, std::int64_t{u_} + o.u_, std::int64_t{v_} + o.v_);
}

QuadExtElem QuadExtElem::operator-(const QuadExtElem& o) const {
    check(o);
    return QuadExtElem(p_, d_, std::int64_t{u_} - o.u_, std::int64_t{v_} - o.v_);
}

QuadExtElem QuadExtElem::operator-() const {
    return QuadExtElem(p_, d_, -std::int64_t{u_}, -std::int64_t{v_});
}

QuadExtElem QuadExtElem::operator*(const QuadExtElem& o) const {
    check(o);
    std::uint64_t uu = std::uint64_t{u_} * o.u_ % p_;
    std::uint64_t vv = std::uint64_t{v_} * o.v_ % p_ * d_ % p_;
    std::uint64_t uv = (std::uint64_t{u_} * o.v_ + std::uint64_t{v_} * o.u_) % p_;
    return QuadExtElem(p_, d_, static_cast<std::int64_t>((uu + vv) % p_), static_cast<std::int64_t>(uv));
}

QuadExtElem QuadExtElem::conj() const { return QuadExtElem(p_, d_, u_, -std::int64_t{v_}); }

FieldElem QuadExtElem::norm() const {
    FieldElem u(p_, u_), v(p_, v_), d(p_, d_);
    return u * u - d * v * v;
}

QuadExtElem QuadExtElem::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in F_p^2");
    FieldElem n = norm().inv();
    QuadExtElem c = conj();
    return QuadExtElem(p_, d_, (FieldElem(p_, c.u_) * n).value(), (FieldElem(p_, c.v_) * n).value());
}

QuadExtElem QuadExtElem::pow(std::uint64_t e) const {
    QuadExtElem r(p_, d_, 1, 0), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string QuadExtElem::to_string() const {
    if (v_ == 0) return std::to_string(u_);
    return std::to_string(u_) + "+" + std::to_string(v_) + "*sqrt(" + std::to_string(d_) + ")";
}

bool sqrt_exists(const QuadExtElem& x) {
    if (x.is_zero()) return true;
    std::uint64_t q = std::uint64_t{x.p()} * x.p();
    QuadExtElem r = x.pow((q - 1) / 2);
    return r.u() == 1 && r.v() == 0;
}

QuadExtField::QuadExtField(std::uint32_t p) : p_(p), d_(find_nonresidue(p).value()) {}

QuadExtElem QuadExtField::element(std::uint64_t index) const {
    if (index >= size()) throw std::out_of_range("F_p^2 element index out of range");
    return make(static_cast<std::int64_t>(index % p_), static_cast<std::int64_t>(index / p_));
}

}  // namespace moonshine
