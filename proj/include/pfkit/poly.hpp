#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfkit/exactring.hpp"

namespace pfkit {

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
// Every instance carries a zero element of its ring so that constants can
// be produced for rings with runtime context (finite fields, Z/p^m).
template <class R>
class Poly {
public:
    using Traits = RingTraits<R>;

    Poly() : zero_() {}
    explicit Poly(const R& proto) : zero_(Traits::zero(proto)) {}
    Poly(std::vector<R> coeffs, const R& proto) : c_(std::move(coeffs)), zero_(Traits::zero(proto)) { trim(); }

    static Poly constant(const R& c) { return Poly(std::vector<R>{c}, c); }
    static Poly monomial(const R& c, size_t k) {
        std::vector<R> v(k + 1, Traits::zero(c));
        v[k] = c;
        return Poly(std::move(v), c);
    }
    static Poly x(const R& proto) { return monomial(Traits::one(proto), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& zero() const { return zero_; }
    R one() const { return Traits::one(zero_); }
    R coeff(size_t i) const { return i < c_.size() ? c_[i] : zero_; }
    R lead() const { return c_.empty() ? zero_ : c_.back(); }
    size_t valuation() const {
        size_t i = 0;
        while (i < c_.size() && Traits::is_zero(c_[i])) ++i;
        return i;
    }

    R eval(const R& x) const {
        R acc = Traits::zero(x);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), zero_);
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), zero_);
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly(a.zero_) - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (Traits::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r), a.zero_);
    }
    friend Poly operator*(const R& s, const Poly& a) {
        std::vector<R> r(a.c_);
        for (auto& x : r) x = s * x;
        return Poly(std::move(r), a.zero_);
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(zero_);
        std::vector<R> r;
        for (size_t i = 1; i < c_.size(); ++i) r.push_back(Traits::from_int(zero_, static_cast<long long>(i)) * c_[i]);
        return Poly(std::move(r), zero_);
    }

    Poly pow(unsigned n) const {
        Poly r = constant(one()), b = *this;
        while (n) {
            if (n & 1) r = r * b;
            n >>= 1;
            if (n) b = b * b;
        }
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return Traits::inv(lead()) * *this;
    }

    // Coefficient c_k moves to J^{D-k}.
    Poly reverse(int D) const {
        if (D < degree()) throw Error("reverse: D smaller than the degree");
        std::vector<R> r(static_cast<size_t>(D + 1), zero_);
        for (size_t k = 0; k < c_.size(); ++k) r[static_cast<size_t>(D) - k] = c_[k];
        return Poly(std::move(r), zero_);
    }

    Poly shift(size_t k) const {  // multiply by t^k
        if (is_zero()) return *this;
        std::vector<R> r(k, zero_);
        r.insert(r.end(), c_.begin(), c_.end());
        return Poly(std::move(r), zero_);
    }

    // this(u(t))
    Poly compose(const Poly& u) const {
        Poly acc(zero_);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * u + constant(c_[i]);
        return acc;
    }

    template <class S, class F>
    Poly<S> map(F f, const S& proto) const {
        std::vector<S> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(f(x));
        return Poly<S>(std::move(r), proto);
    }

    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (Traits::is_zero(c_[i])) continue;
            std::string cs = Traits::str(c_[i]);
            if (!s.empty()) s += " + ";
            if (i == 0) s += cs;
            else {
                if (cs != "1") s += (cs.find_first_of("+- ") != std::string::npos ? "(" + cs + ")" : cs) + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
    R zero_;
};

template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
    using T = RingTraits<R>;
    if (b.is_zero()) throw Error("polynomial division by zero");
    R li = T::inv(b.lead());
    std::vector<R> rem = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    std::vector<R> q(dq >= 0 ? static_cast<size_t>(dq + 1) : 0, a.zero());
    for (int k = dq; k >= 0; --k) {
        R c = rem[static_cast<size_t>(k + db)] * li;
        q[static_cast<size_t>(k)] = c;
        if (T::is_zero(c)) continue;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(k + i)] -= c * b.coeffs()[static_cast<size_t>(i)];
    }
    return {Poly<R>(std::move(q), a.zero()), Poly<R>(std::move(rem), a.zero())};
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) { return divmod(a, b).second; }

template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("polynomial division is not exact");
    return q;
}

template <class R>
bool divides(const Poly<R>& d, const Poly<R>& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
    if (!RingTraits<R>::is_field(a.zero())) throw NonFieldRing("gcd requires field coefficients");
    while (!b.is_zero()) {
        Poly<R> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class R>
Poly<R> lcm(const Poly<R>& a, const Poly<R>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<R>(a.zero());
    return exact_div(a * b, gcd(a, b)).monic();
}

template <class R>
Poly<R> powmod(Poly<R> base, BigInt e, const Poly<R>& mod) {
    Poly<R> r = Poly<R>::constant(mod.one()) % mod;
    base = base % mod;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % mod;
        e >>= 1;
        if (e > 0) base = (base * base) % mod;
    }
    return r;
}

using PolyQ = Poly<Rational>;
using PolyF = Poly<GF>;

PolyF poly_over(const FieldContext* ctx, const std::vector<long long>& coeffs);
PolyF reduce_poly(const PolyQ& a, const FieldContext* ctx);

// Radical of a over F_{p^e}; handles the a' = 0 branch by p-th roots.
PolyF squarefree_part(const PolyF& a);

// Square-free factorization as (factor, multiplicity) pairs.
std::vector<std::pair<PolyF, unsigned>> squarefree_decomposition(const PolyF& a);

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<unsigned, PolyF>> distinct_degree_factorization(const PolyF& a);

// Full factorization into monic irreducibles with multiplicities, sorted.
std::vector<std::pair<PolyF, unsigned>> factor(const PolyF& a);

// Embedding of a subfield element into a larger field (canonical: maps the
// subfield generator to the smallest-encoded root of its defining polynomial).
GF embed(const GF& x, const FieldContext* target);

struct Root {
    GF value;
    unsigned multiplicity;
};
std::vector<Root> roots_in_field(const PolyF& a, const FieldContext* target);

// Rational roots of a polynomial over Q.
std::vector<Rational> rational_roots(const PolyQ& a);

}  // namespace pfkit
