#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pfkit/errors.hpp"

namespace pfkit {

using BigInt = mpz_class;
using u64 = std::uint64_t;

// Deterministic trial division; inputs at or above 2^20 are rejected.
bool is_prime(u64 n);
void require_prime(u64 p);
constexpr u64 kPrimeLimit = u64(1) << 20;

std::vector<u64> prime_factors(u64 n);
std::vector<u64> primes_in_range(u64 lo, u64 hi);

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den = 1);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational inv() const;
    BigInt floor() const;
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

private:
    mpq_class v_{0};
};

// a + b*sqrt(d), d squarefree > 1. Elements with different d never mix.
class QuadraticElement {
public:
    QuadraticElement() = default;
    QuadraticElement(long d, Rational a, Rational b = Rational(0));

    long d() const { return d_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
    QuadraticElement conj() const { return {d_, a_, -b_}; }
    QuadraticElement inv() const;
    std::string str() const;

    QuadraticElement& operator+=(const QuadraticElement& o);
    QuadraticElement& operator-=(const QuadraticElement& o);
    QuadraticElement& operator*=(const QuadraticElement& o);
    friend QuadraticElement operator+(QuadraticElement x, const QuadraticElement& y) { return x += y; }
    friend QuadraticElement operator-(QuadraticElement x, const QuadraticElement& y) { return x -= y; }
    friend QuadraticElement operator*(QuadraticElement x, const QuadraticElement& y) { return x *= y; }
    friend QuadraticElement operator/(const QuadraticElement& x, const QuadraticElement& y) { return x * y.inv(); }
    friend QuadraticElement operator-(const QuadraticElement& x) { return {x.d_, -x.a_, -x.b_}; }
    friend bool operator==(const QuadraticElement& x, const QuadraticElement& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadraticElement& x, const QuadraticElement& y) { return !(x == y); }

private:
    void check(const QuadraticElement& o) const;
    long d_ = 0;  // 0 marks a context-free rational placeholder
    Rational a_, b_;
};

bool is_squarefree(long d);

// Residues modulo p^m, p < 2^20 prime, p^m < 2^62.
class Zmod {
public:
    Zmod() = default;
    Zmod(u64 p, unsigned m, long long value);
    static Zmod from_residue(u64 p, unsigned m, u64 modulus, u64 value) {
        Zmod z; z.p_ = p; z.m_ = m; z.mod_ = modulus; z.v_ = value % modulus; return z;
    }

    u64 p() const { return p_; }
    unsigned m() const { return m_; }
    u64 modulus() const { return mod_; }
    u64 value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ % p_ != 0; }
    Zmod inv() const;
    Zmod pow(u64 e) const;
    long long signed_value() const;  // representative in (-mod/2, mod/2]
    std::string str() const { return std::to_string(v_); }

    Zmod& operator+=(const Zmod& o);
    Zmod& operator-=(const Zmod& o);
    Zmod& operator*=(const Zmod& o);
    friend Zmod operator+(Zmod a, const Zmod& b) { return a += b; }
    friend Zmod operator-(Zmod a, const Zmod& b) { return a -= b; }
    friend Zmod operator*(Zmod a, const Zmod& b) { return a *= b; }
    friend Zmod operator/(const Zmod& a, const Zmod& b) { return a * b.inv(); }
    friend Zmod operator-(const Zmod& a) { return from_residue(a.p_, a.m_, a.mod_, (a.mod_ - a.v_) % a.mod_); }
    friend bool operator==(const Zmod& a, const Zmod& b) { return a.mod_ == b.mod_ && a.v_ == b.v_; }
    friend bool operator!=(const Zmod& a, const Zmod& b) { return !(a == b); }

private:
    void check(const Zmod& o) const;
    u64 p_ = 0, mod_ = 0, v_ = 0;
    unsigned m_ = 0;
};

Zmod reduce_rational(const Rational& q, u64 p, unsigned m = 1);

enum class SplittingType { split, inert, ramified };
SplittingType splitting_type(u64 p, long d);
std::string to_string(SplittingType s);

// F_{p^e} = F_p[x]/(f) with f the lexicographically smallest monic
// irreducible of degree e (compared from the x^{e-1} coefficient down).
// Elements are encoded as integers sum c_i p^i. Contexts are interned and
// immutable; fields up to kTableLimit elements carry log/exp tables.
class FieldContext {
public:
    static constexpr u64 kTableLimit = u64(1) << 22;

    u64 p() const { return p_; }
    unsigned e() const { return e_; }
    u64 size() const { return q_; }
    const std::vector<u64>& modulus() const { return modulus_; }
    bool has_tables() const { return !exp_.empty(); }

    u64 add(u64 a, u64 b) const;
    u64 sub(u64 a, u64 b) const;
    u64 neg(u64 a) const;
    u64 mul(u64 a, u64 b) const;
    u64 inv(u64 a) const;
    u64 pow(u64 a, u64 n) const;
    u64 frobenius(u64 a) const { return pow(a, p_); }
    u64 from_int(long long v) const;
    bool is_square(u64 a) const;
    // Some square root when one exists in this field (smallest encoding).
    bool sqrt(u64 a, u64& root) const;

    std::vector<u64> digits(u64 a) const;
    u64 encode(const std::vector<u64>& d) const;

    FieldContext(u64 p, unsigned e);

private:
    u64 mul_poly(u64 a, u64 b) const;
    void build_tables();

    u64 p_;
    unsigned e_;
    u64 q_;
    std::vector<u64> modulus_;  // ascending, monic, size e+1
    std::vector<std::uint32_t> exp_, log_;
    std::vector<std::uint8_t> square_;
};

const FieldContext* field(u64 p, unsigned e);
std::vector<u64> build_extension_field(u64 p, unsigned e);

class GF {
public:
    GF() = default;
    GF(const FieldContext* ctx, u64 idx) : ctx_(ctx), v_(idx) {}
    static GF from_int(const FieldContext* ctx, long long v) { return {ctx, ctx->from_int(v)}; }

    const FieldContext* ctx() const { return ctx_; }
    u64 index() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    GF inv() const { return {ctx_, ctx_->inv(v_)}; }
    GF pow(u64 n) const { return {ctx_, ctx_->pow(v_, n)}; }
    GF frobenius() const { return {ctx_, ctx_->frobenius(v_)}; }
    std::vector<u64> coeffs() const { return ctx_->digits(v_); }
    std::string str() const;

    GF& operator+=(const GF& o) { check(o); v_ = ctx_->add(v_, o.v_); return *this; }
    GF& operator-=(const GF& o) { check(o); v_ = ctx_->sub(v_, o.v_); return *this; }
    GF& operator*=(const GF& o) { check(o); v_ = ctx_->mul(v_, o.v_); return *this; }
    friend GF operator+(GF a, const GF& b) { return a += b; }
    friend GF operator-(GF a, const GF& b) { return a -= b; }
    friend GF operator*(GF a, const GF& b) { return a *= b; }
    friend GF operator/(const GF& a, const GF& b) { return a * b.inv(); }
    friend GF operator-(const GF& a) { return {a.ctx_, a.ctx_->neg(a.v_)}; }
    friend bool operator==(const GF& a, const GF& b) { return a.ctx_ == b.ctx_ && a.v_ == b.v_; }
    friend bool operator!=(const GF& a, const GF& b) { return !(a == b); }
    friend bool operator<(const GF& a, const GF& b) { return a.v_ < b.v_; }

private:
    void check(const GF& o) const {
        if (ctx_ != o.ctx_) throw MixedRings("finite field elements from different fields");
    }
    const FieldContext* ctx_ = nullptr;
    u64 v_ = 0;
};

GF reduce_to_field(const Rational& q, const FieldContext* ctx);

// Uniform access to constants and inverses for generic containers.
template <class R> struct RingTraits;

template <> struct RingTraits<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static Rational from_int(const Rational&, long long v) { return Rational(BigInt(std::to_string(v))); }
    static Rational from_rational(const Rational&, const Rational& q) { return q; }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational inv(const Rational& x) { return x.inv(); }
    static bool is_field(const Rational&) { return true; }
    static u64 characteristic(const Rational&) { return 0; }
    static std::string str(const Rational& x) { return x.str(); }
};

template <> struct RingTraits<QuadraticElement> {
    static QuadraticElement zero(const QuadraticElement& l) { return {l.d(), 0, 0}; }
    static QuadraticElement one(const QuadraticElement& l) { return {l.d(), 1, 0}; }
    static QuadraticElement from_int(const QuadraticElement& l, long long v) {
        return {l.d(), Rational(BigInt(std::to_string(v))), 0};
    }
    static QuadraticElement from_rational(const QuadraticElement& l, const Rational& q) { return {l.d(), q, 0}; }
    static bool is_zero(const QuadraticElement& x) { return x.is_zero(); }
    static QuadraticElement inv(const QuadraticElement& x) { return x.inv(); }
    static bool is_field(const QuadraticElement&) { return true; }
    static u64 characteristic(const QuadraticElement&) { return 0; }
    static std::string str(const QuadraticElement& x) { return x.str(); }
};

template <> struct RingTraits<Zmod> {
    static Zmod zero(const Zmod& l) { return Zmod::from_residue(l.p(), l.m(), l.modulus(), 0); }
    static Zmod one(const Zmod& l) { return Zmod::from_residue(l.p(), l.m(), l.modulus(), 1); }
    static Zmod from_int(const Zmod& l, long long v) { return Zmod(l.p(), l.m(), v); }
    static Zmod from_rational(const Zmod& l, const Rational& q) { return reduce_rational(q, l.p(), l.m()); }
    static bool is_zero(const Zmod& x) { return x.is_zero(); }
    static Zmod inv(const Zmod& x) { return x.inv(); }
    static bool is_field(const Zmod& l) { return l.m() == 1; }
    static u64 characteristic(const Zmod& l) { return l.p(); }
    static std::string str(const Zmod& x) { return x.str(); }
};

template <> struct RingTraits<GF> {
    static GF zero(const GF& l) { return {l.ctx(), 0}; }
    static GF one(const GF& l) { return {l.ctx(), 1}; }
    static GF from_int(const GF& l, long long v) { return GF::from_int(l.ctx(), v); }
    static GF from_rational(const GF& l, const Rational& q) { return reduce_to_field(q, l.ctx()); }
    static bool is_zero(const GF& x) { return x.is_zero(); }
    static GF inv(const GF& x) { return x.inv(); }
    static bool is_field(const GF&) { return true; }
    static u64 characteristic(const GF& l) { return l.ctx()->p(); }
    static std::string str(const GF& x) { return x.str(); }
};

}  // namespace pfkit
