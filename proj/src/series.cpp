#include "moonshine/series.hpp"

#include <algorithm>
#include <sstream>

namespace moonshine {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    mpz_class inv;
    mpz_class aa(static_cast<unsigned long>(a)), mm(static_cast<unsigned long>(m));
    if (mpz_invert(inv.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0)
        throw NotInvertibleError("leading coefficient " + std::to_string(a) +
                                 " is not a unit mod " + std::to_string(m));
    return inv.get_ui();
}

std::uint64_t to_residue(const mpz_class& c, std::uint64_t m) {
    return mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(m));
}

void require_same_ring(const QSeries& f, const QSeries& g) {
    if (f.ring() != g.ring())
        throw RingMismatchError("ring mismatch: " + f.ring().name() + " vs " + g.ring().name());
}

struct IntArith {
    using value_type = mpz_class;
    explicit IntArith(const Ring&) {}
    static bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
    mpz_class add(const mpz_class& a, const mpz_class& b) const { return a + b; }
    mpz_class sub(const mpz_class& a, const mpz_class& b) const { return a - b; }
    mpz_class mul(const mpz_class& a, const mpz_class& b) const { return a * b; }
    mpz_class lift(const mpz_class& c) const { return c; }
};

struct ModArith {
    using value_type = std::uint64_t;
    std::uint64_t m;
    explicit ModArith(const Ring& r) : m(r.modulus()) {}
    static bool is_zero(std::uint64_t x) { return x == 0; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= m ? s - m : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + m - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % m; }
    std::uint64_t lift(const mpz_class& c) const { return to_residue(c, m); }
};

}  // namespace

struct SeriesAccess {
    template <class A>
    static const std::vector<typename A::value_type>& data(const QSeries& f) {
        return std::get<std::vector<typename A::value_type>>(f.coeffs_);
    }
    template <class V>
    static QSeries make(Ring ring, std::int64_t start, std::int64_t prec, V coeffs) {
        return QSeries(ring, start, prec, std::variant<QSeries::IntegerCoeffs, QSeries::ResidueCoeffs>(
                                              std::move(coeffs)));
    }
};

namespace {

template <class A>
typename A::value_type at(const QSeries& f, std::int64_t n) {
    if (n < f.lead() || n > f.precision()) return typename A::value_type(0);
    return SeriesAccess::data<A>(f)[static_cast<std::size_t>(n - f.lead())];
}

template <class F>
decltype(auto) dispatch(const Ring& ring, F&& fn) {
    if (ring.is_exact()) return fn(IntArith(ring));
    return fn(ModArith(ring));
}

}  // namespace

// ---------------------------------------------------------------------------

QSeries::QSeries(Ring ring, std::int64_t prec)
    : ring_(ring), lead_(prec + 1), prec_(prec) {
    if (ring.is_exact())
        coeffs_ = IntegerCoeffs{};
    else
        coeffs_ = ResidueCoeffs{};
}

QSeries::QSeries(Ring ring, std::int64_t start, std::int64_t prec,
                 std::variant<IntegerCoeffs, ResidueCoeffs> coeffs)
    : ring_(ring), lead_(start), prec_(prec), coeffs_(std::move(coeffs)) {
    std::int64_t len = std::max<std::int64_t>(0, prec - start + 1);
    std::visit([len](auto& v) { v.resize(static_cast<std::size_t>(len)); }, coeffs_);
    normalize();
}

void QSeries::normalize() {
    std::visit(
        [this](auto& v) {
            std::size_t i = 0;
            while (i < v.size() && v[i] == 0) ++i;
            if (i == v.size()) {
                v.clear();
                lead_ = prec_ + 1;
                return;
            }
            v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i));
            lead_ += static_cast<std::int64_t>(i);
        },
        coeffs_);
}

QSeries QSeries::from_integers(Ring ring, std::int64_t start, std::span<const mpz_class> coeffs,
                               std::int64_t prec) {
    if (ring.is_exact()) return QSeries(ring, start, prec, IntegerCoeffs(coeffs.begin(), coeffs.end()));
    ResidueCoeffs r;
    r.reserve(coeffs.size());
    for (const auto& c : coeffs) r.push_back(to_residue(c, ring.modulus()));
    return QSeries(ring, start, prec, std::move(r));
}

QSeries QSeries::from_values(Ring ring, std::int64_t start, std::span<const std::int64_t> coeffs,
                             std::int64_t prec) {
    IntegerCoeffs z;
    z.reserve(coeffs.size());
    for (auto c : coeffs) z.emplace_back(static_cast<long>(c));
    return from_integers(ring, start, z, prec);
}

QSeries QSeries::from_residues(Ring ring, std::int64_t start, ResidueCoeffs coeffs,
                               std::int64_t prec) {
    if (ring.is_exact()) throw std::invalid_argument("from_residues needs a modular ring");
    for (auto c : coeffs)
        if (c >= ring.modulus()) throw std::invalid_argument("residue out of range");
    return QSeries(ring, start, prec, std::move(coeffs));
}

QSeries QSeries::monomial(Ring ring, const mpz_class& c, std::int64_t exponent, std::int64_t prec) {
    IntegerCoeffs v{c};
    return from_integers(ring, exponent, v, prec);
}

mpz_class QSeries::coeff(std::int64_t n) const {
    if (n > prec_)
        throw PrecisionError("coefficient of q^" + std::to_string(n) + " requested, precision is " +
                             std::to_string(prec_));
    return dispatch(ring_, [&](auto a) -> mpz_class {
        using A = decltype(a);
        if constexpr (std::is_same_v<A, IntArith>)
            return at<A>(*this, n);
        else
            return mpz_class(static_cast<unsigned long>(at<A>(*this, n)));
    });
}

std::uint64_t QSeries::residue(std::int64_t n) const {
    if (ring_.is_exact()) throw std::invalid_argument("residue() needs a modular ring");
    if (n > prec_)
        throw PrecisionError("coefficient of q^" + std::to_string(n) + " requested, precision is " +
                             std::to_string(prec_));
    return at<ModArith>(*this, n);
}

std::vector<mpz_class> QSeries::coeffs(std::int64_t from, std::int64_t to) const {
    std::vector<mpz_class> out;
    for (std::int64_t n = from; n <= to; ++n) out.push_back(coeff(n));
    return out;
}

std::optional<std::int64_t> QSeries::first_difference(const QSeries& other) const {
    require_same_ring(*this, other);
    std::int64_t top = std::min(prec_, other.prec_);
    std::int64_t lo = std::min(lead_, other.lead_);
    return dispatch(ring_, [&](auto a) -> std::optional<std::int64_t> {
        using A = decltype(a);
        for (std::int64_t n = lo; n <= top; ++n)
            if (at<A>(*this, n) != at<A>(other, n)) return n;
        return std::nullopt;
    });
}

std::string QSeries::to_string(std::size_t max_terms) const {
    std::ostringstream out;
    std::size_t shown = 0;
    for (std::int64_t n = lead_; n <= prec_ && shown < max_terms; ++n) {
        mpz_class c = coeff(n);
        if (c == 0) continue;
        if (shown > 0) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        mpz_class mag = abs(c);
        bool unit = (mag == 1) && n != 0;
        if (!unit) out << mag.get_str();
        if (n != 0) {
            if (!unit) out << "*";
            out << "q";
            if (n != 1) out << "^" << n;
        }
        ++shown;
    }
    if (shown > 0) out << " + ";
    out << "O(q^" << (prec_ + 1) << ")";
    return out.str();
}

// ---------------------------------------------------------------------------

QSeries add(const QSeries& f, const QSeries& g) {
    require_same_ring(f, g);
    std::int64_t prec = std::min(f.precision(), g.precision());
    std::int64_t lead = std::min(f.lead(), g.lead());
    return dispatch(f.ring(), [&](auto a) {
        using A = decltype(a);
        std::vector<typename A::value_type> out;
        for (std::int64_t n = lead; n <= prec; ++n) out.push_back(a.add(at<A>(f, n), at<A>(g, n)));
        return SeriesAccess::make(f.ring(), lead, prec, std::move(out));
    });
}

QSeries neg(const QSeries& f) {
    return dispatch(f.ring(), [&](auto a) {
        using A = decltype(a);
        std::vector<typename A::value_type> out;
        for (const auto& c : SeriesAccess::data<A>(f)) out.push_back(a.sub(0, c));
        return SeriesAccess::make(f.ring(), f.lead(), f.precision(), std::move(out));
    });
}

QSeries sub(const QSeries& f, const QSeries& g) { return add(f, neg(g)); }

QSeries scale(const QSeries& f, const mpz_class& c) {
    return dispatch(f.ring(), [&](auto a) {
        using A = decltype(a);
        auto k = a.lift(c);
        std::vector<typename A::value_type> out;
        for (const auto& x : SeriesAccess::data<A>(f)) out.push_back(a.mul(x, k));
        return SeriesAccess::make(f.ring(), f.lead(), f.precision(), std::move(out));
    });
}

QSeries mul(const QSeries& f, const QSeries& g) {
    require_same_ring(f, g);
    std::int64_t rel = std::min(f.precision() - f.lead(), g.precision() - g.lead());
    std::int64_t lead = f.lead() + g.lead();
    std::int64_t prec = lead + rel;
    std::size_t len = rel < 0 ? 0 : static_cast<std::size_t>(rel + 1);

    return dispatch(f.ring(), [&](auto a) {
        using A = decltype(a);
        // Outer loop over the nonzero terms of the sparser factor.
        const auto* sparse = &SeriesAccess::data<A>(f);
        const auto* dense = &SeriesAccess::data<A>(g);
        auto nnz = [](const auto& v) {
            return std::count_if(v.begin(), v.end(), [](const auto& x) { return !A::is_zero(x); });
        };
        if (nnz(*sparse) > nnz(*dense)) std::swap(sparse, dense);
        std::size_t ns = std::min(sparse->size(), len);
        std::size_t nd = dense->size();

        if constexpr (std::is_same_v<A, IntArith>) {
            std::vector<mpz_class> out(len);
            for (std::size_t i = 0; i < ns; ++i) {
                const mpz_class& x = (*sparse)[i];
                if (sgn(x) == 0) continue;
                std::size_t top = std::min(nd, len - i);
                for (std::size_t j = 0; j < top; ++j)
                    mpz_addmul(out[i + j].get_mpz_t(), x.get_mpz_t(), (*dense)[j].get_mpz_t());
            }
            return SeriesAccess::make(f.ring(), lead, prec, std::move(out));
        } else {
            std::vector<unsigned __int128> acc(len, 0);
            for (std::size_t i = 0; i < ns; ++i) {
                std::uint64_t x = (*sparse)[i];
                if (x == 0) continue;
                std::size_t top = std::min(nd, len - i);
                for (std::size_t j = 0; j < top; ++j) acc[i + j] += x * (*dense)[j];
            }
            std::vector<std::uint64_t> out(len);
            for (std::size_t k = 0; k < len; ++k) out[k] = static_cast<std::uint64_t>(acc[k] % a.m);
            return SeriesAccess::make(f.ring(), lead, prec, std::move(out));
        }
    });
}

QSeries divide(const QSeries& f, const QSeries& g) {
    require_same_ring(f, g);
    if (g.is_zero()) throw NotInvertibleError("division by a series that vanishes to its precision");
    std::int64_t rel = std::min(f.precision() - f.lead(), g.precision() - g.lead());
    std::int64_t lead = f.lead() - g.lead();
    std::int64_t prec = lead + rel;
    std::size_t len = rel < 0 ? 0 : static_cast<std::size_t>(rel + 1);

    return dispatch(f.ring(), [&](auto a) {
        using A = decltype(a);
        const auto& num = SeriesAccess::data<A>(f);
        const auto& den = SeriesAccess::data<A>(g);
        std::vector<std::size_t> support;
        for (std::size_t k = 1; k < den.size() && k < len; ++k)
            if (!A::is_zero(den[k])) support.push_back(k);

        if constexpr (std::is_same_v<A, IntArith>) {
            const mpz_class& g0 = den[0];
            if (g0 != 1 && g0 != -1)
                throw NotInvertibleError("leading coefficient " + g0.get_str() + " is not a unit in Z");
            std::vector<mpz_class> out(len);
            mpz_class acc;
            for (std::size_t n = 0; n < len; ++n) {
                acc = n < num.size() ? num[n] : mpz_class(0);
                for (std::size_t k : support) {
                    if (k > n) break;
                    mpz_submul(acc.get_mpz_t(), den[k].get_mpz_t(), out[n - k].get_mpz_t());
                }
                out[n] = g0 == 1 ? acc : mpz_class(-acc);
            }
            return SeriesAccess::make(f.ring(), lead, prec, std::move(out));
        } else {
            std::uint64_t inv = inverse_mod(den[0], a.m);
            std::vector<std::uint64_t> out(len);
            for (std::size_t n = 0; n < len; ++n) {
                unsigned __int128 s = 0;
                for (std::size_t k : support) {
                    if (k > n) break;
                    s += den[k] * out[n - k];
                }
                std::uint64_t rhs = a.sub(n < num.size() ? num[n] : 0, static_cast<std::uint64_t>(s % a.m));
                out[n] = a.mul(rhs, inv);
            }
            return SeriesAccess::make(f.ring(), lead, prec, std::move(out));
        }
    });
}

QSeries invert(const QSeries& f) {
    return divide(QSeries::one(f.ring(), f.precision() - f.lead()), f);
}

QSeries pow(const QSeries& f, std::int64_t n) {
    if (n < 0) return invert(pow(f, -n));
    if (n == 0) return QSeries::one(f.ring(), f.precision() - f.lead());
    std::optional<QSeries> result;
    QSeries base = f;
    while (true) {
        if (n & 1) result = result ? mul(*result, base) : base;
        n >>= 1;
        if (n == 0) break;
        base = mul(base, base);
    }
    return *result;
}

QSeries shift(const QSeries& f, std::int64_t k) {
    return dispatch(f.ring(), [&](auto a) {
        using A = decltype(a);
        return SeriesAccess::make(f.ring(), f.lead() + k, f.precision() + k, SeriesAccess::data<A>(f));
    });
}

QSeries truncate(const QSeries& f, std::int64_t prec) {
    if (prec >= f.precision()) return f;
    return dispatch(f.ring(), [&](auto a) {
        using A = decltype(a);
        return SeriesAccess::make(f.ring(), f.lead(), prec, SeriesAccess::data<A>(f));
    });
}

QSeries reduce(const QSeries& f, const Ring& target) {
    if (f.ring() == target) return f;
    if (target.is_exact()) throw RingMismatchError("cannot lift " + f.ring().name() + " to Z");
    std::uint64_t m = target.modulus();
    std::vector<std::uint64_t> out;
    if (f.ring().is_exact()) {
        for (const auto& c : SeriesAccess::data<IntArith>(f)) out.push_back(to_residue(c, m));
    } else {
        if (f.ring().modulus() % m != 0)
            throw RingMismatchError("cannot reduce " + f.ring().name() + " to " + target.name());
        for (auto c : SeriesAccess::data<ModArith>(f)) out.push_back(c % m);
    }
    return SeriesAccess::make(target, f.lead(), f.precision(), std::move(out));
}

QSeries u_operator(const QSeries& f, std::int64_t p) {
    if (p < 1) throw std::invalid_argument("U(p) needs p >= 1");
    std::int64_t lead = ceil_div(f.lead(), p);
    std::int64_t prec = floor_div(f.precision(), p);
    return dispatch(f.ring(), [&](auto a) {
        using A = decltype(a);
        std::vector<typename A::value_type> out;
        for (std::int64_t n = lead; n <= prec; ++n) out.push_back(at<A>(f, n * p));
        return SeriesAccess::make(f.ring(), lead, prec, std::move(out));
    });
}

QSeries v_operator(const QSeries& f, std::int64_t p) {
    if (p < 1) throw std::invalid_argument("V(p) needs p >= 1");
    std::int64_t lead = f.lead() * p;
    std::int64_t prec = f.precision() * p;
    return dispatch(f.ring(), [&](auto a) {
        using A = decltype(a);
        const auto& src = SeriesAccess::data<A>(f);
        std::vector<typename A::value_type> out(
            src.empty() ? 0 : (src.size() - 1) * static_cast<std::size_t>(p) + 1);
        for (std::size_t i = 0; i < src.size(); ++i) out[i * static_cast<std::size_t>(p)] = src[i];
        return SeriesAccess::make(f.ring(), lead, prec, std::move(out));
    });
}

QSeries hecke_scaled(const QSeries& f, std::int64_t p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("hecke_scaled needs a prime");
    if (!f.ring().is_exact()) {
        std::uint64_t m = f.ring().modulus();
        while (m % static_cast<std::uint64_t>(p) == 0) m /= static_cast<std::uint64_t>(p);
        if (m != 1)
            throw RingMismatchError("hecke_scaled over " + f.ring().name() +
                                        " needs a power of " + std::to_string(p));
    }
    return add(v_operator(f, p), scale(u_operator(f, p), p));
}

}  // namespace moonshine
