#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "pfkit/poly.hpp"

namespace pfkit {

// Power series known modulo t^order. The coefficient vector always has
// exactly `order` entries; nothing past the order is ever fabricated.
template <class R>
class Series {
public:
    using Traits = RingTraits<R>;

    Series() = default;
    Series(std::vector<R> coeffs, const R& proto) : c_(std::move(coeffs)), zero_(Traits::zero(proto)) {}

    static Series from_poly(const Poly<R>& a, size_t order) {
        std::vector<R> v(order, a.zero());
        for (size_t i = 0; i < order && i < a.coeffs().size(); ++i) v[i] = a.coeffs()[i];
        return Series(std::move(v), a.zero());
    }
    static Series one(const R& proto, size_t order) {
        std::vector<R> v(order, Traits::zero(proto));
        if (order) v[0] = Traits::one(proto);
        return Series(std::move(v), proto);
    }

    size_t order() const { return c_.size(); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& zero() const { return zero_; }
    const R& operator[](size_t i) const {
        if (i >= c_.size()) throw Error("series coefficient beyond the known order");
        return c_[i];
    }
    size_t valuation() const {
        size_t i = 0;
        while (i < c_.size() && Traits::is_zero(c_[i])) ++i;
        return i;
    }

    Series truncated(size_t order) const {
        if (order > c_.size()) throw Error("cannot extend a series beyond its known order");
        return Series(std::vector<R>(c_.begin(), c_.begin() + static_cast<long>(order)), zero_);
    }

    Poly<R> truncate(size_t m) const {
        if (m > c_.size()) throw Error("truncation order exceeds the known order");
        return Poly<R>(std::vector<R>(c_.begin(), c_.begin() + static_cast<long>(m)), zero_);
    }

    friend Series operator+(const Series& a, const Series& b) {
        size_t n = std::min(a.order(), b.order());
        std::vector<R> v(n, a.zero_);
        for (size_t i = 0; i < n; ++i) v[i] = a.c_[i] + b.c_[i];
        return Series(std::move(v), a.zero_);
    }
    friend Series operator-(const Series& a, const Series& b) {
        size_t n = std::min(a.order(), b.order());
        std::vector<R> v(n, a.zero_);
        for (size_t i = 0; i < n; ++i) v[i] = a.c_[i] - b.c_[i];
        return Series(std::move(v), a.zero_);
    }
    friend Series operator-(const Series& a) {
        std::vector<R> v(a.c_);
        for (auto& x : v) x = -x;
        return Series(std::move(v), a.zero_);
    }
    friend Series operator*(const R& s, const Series& a) {
        std::vector<R> v(a.c_);
        for (auto& x : v) x = s * x;
        return Series(std::move(v), a.zero_);
    }
    friend Series operator*(const Series& a, const Series& b) {
        size_t va = a.valuation(), vb = b.valuation();
        size_t n = std::min(a.order() + vb, b.order() + va);
        std::vector<R> v(n, a.zero_);
        for (size_t i = va; i < std::min(n, a.order()); ++i) {
            if (Traits::is_zero(a.c_[i])) continue;
            size_t jmax = std::min(n - i, b.order());
            for (size_t j = vb; j < jmax; ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Series(std::move(v), a.zero_);
    }

    Series reciprocal() const {
        if (c_.empty()) return *this;
        if (Traits::is_zero(c_[0])) throw Error("reciprocal of a series with zero constant term");
        R inv0 = Traits::inv(c_[0]);
        std::vector<R> v(c_.size(), zero_);
        v[0] = inv0;
        for (size_t n = 1; n < c_.size(); ++n) {
            R acc = zero_;
            for (size_t k = 1; k <= n; ++k)
                if (!Traits::is_zero(c_[k])) acc += c_[k] * v[n - k];
            v[n] = -(acc * inv0);
        }
        return Series(std::move(v), zero_);
    }

    friend Series operator/(const Series& a, const Series& b) { return a * b.reciprocal(); }

    Series pow(unsigned n) const {
        Series r = one(zero_, order()), b = *this;
        while (n) {
            if (n & 1) r = r * b;
            n >>= 1;
            if (n) b = b * b;
        }
        return r;
    }

    // Principal branch s^e for s(0) = 1 via n u_n = sum ((e+1)k - n) s_k u_{n-k}.
    Series pow_rational(const Rational& e) const {
        if (c_.empty()) return *this;
        if (c_[0] != Traits::one(zero_)) throw Error("pow_rational needs constant term 1");
        std::vector<R> u(c_.size(), zero_);
        u[0] = Traits::one(zero_);
        Rational e1 = e + Rational(1);
        for (size_t n = 1; n < c_.size(); ++n) {
            R acc = zero_;
            for (size_t k = 1; k <= n; ++k) {
                if (Traits::is_zero(c_[k])) continue;
                Rational w = e1 * Rational(static_cast<long>(k)) - Rational(static_cast<long>(n));
                if (w.is_zero()) continue;
                acc += Traits::from_rational(zero_, w) * c_[k] * u[n - k];
            }
            u[n] = Traits::from_rational(zero_, Rational(1, static_cast<long>(n))) * acc;
        }
        return Series(std::move(u), zero_);
    }

    Series substitute_power(size_t p) const {
        if (p == 0) throw Error("substitute_power needs p >= 1");
        std::vector<R> v(c_.size() * p, zero_);
        for (size_t i = 0; i < c_.size(); ++i) v[i * p] = c_[i];
        return Series(std::move(v), zero_);
    }

    Series derivative() const {
        if (c_.empty()) return *this;
        std::vector<R> v(c_.size() - 1, zero_);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Traits::from_int(zero_, static_cast<long long>(i)) * c_[i];
        return Series(std::move(v), zero_);
    }

    Series mul_t_power(size_t k) const {
        std::vector<R> v(k, zero_);
        v.insert(v.end(), c_.begin(), c_.end());
        return Series(std::move(v), zero_);
    }

    // Explicit valuation shift: requires the k lowest coefficients to vanish.
    Series div_t_power(size_t k) const {
        if (k > c_.size()) throw Error("div_t_power beyond the known order");
        for (size_t i = 0; i < k; ++i)
            if (!Traits::is_zero(c_[i])) throw Error("div_t_power: series not divisible by the requested power of t");
        return Series(std::vector<R>(c_.begin() + static_cast<long>(k), c_.end()), zero_);
    }

    template <class S, class F>
    Series<S> map(F f, const S& proto) const {
        std::vector<S> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(f(x));
        return Series<S>(std::move(v), proto);
    }

    friend bool operator==(const Series& a, const Series& b) {
        if (a.order() != b.order()) return false;
        for (size_t i = 0; i < a.order(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

    // Equality of the first `n` coefficients (both must be known that far).
    bool agrees(const Series& b, size_t n) const {
        if (n > order() || n > b.order()) throw Error("comparison beyond known order");
        for (size_t i = 0; i < n; ++i)
            if (c_[i] != b.c_[i]) return false;
        return true;
    }

private:
    std::vector<R> c_;
    R zero_{};
};

// a / b as t^shift * value, dividing out the valuations of both operands.
template <class R>
struct LaurentQuotient {
    long shift;
    Series<R> value;
};

template <class R>
LaurentQuotient<R> div_laurent(const Series<R>& a, const Series<R>& b) {
    size_t va = a.valuation(), vb = b.valuation();
    if (vb >= b.order()) throw Error("division by a series that is zero to its known order");
    if (va >= a.order()) va = a.order();
    Series<R> an = a.div_t_power(va), bn = b.div_t_power(vb);
    return {static_cast<long>(va) - static_cast<long>(vb), an / bn};
}

using SeriesQ = Series<Rational>;
using SeriesZ = Series<Zmod>;

inline SeriesZ reduce_series(const SeriesQ& s, u64 p, unsigned m = 1) {
    return s.map([p, m](const Rational& q) { return reduce_rational(q, p, m); }, Zmod(p, m, 0));
}

inline Poly<Zmod> as_zmod_poly(const PolyF& a) {
    const FieldContext* k = a.zero().ctx();
    return a.map([k](const GF& x) { return Zmod(k->p(), 1, static_cast<long long>(x.index())); }, Zmod(k->p(), 1, 0));
}

inline PolyF as_field_poly(const Poly<Zmod>& a) {
    const FieldContext* k = field(a.zero().p(), 1);
    if (a.zero().m() != 1) throw NonFieldRing("only residues mod p map to F_p");
    return a.map([k](const Zmod& x) { return GF(k, x.value()); }, GF(k, 0));
}

}  // namespace pfkit
