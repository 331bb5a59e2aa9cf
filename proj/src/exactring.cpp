#include "pfkit/exactring.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace pfkit {

using u128 = unsigned __int128;

bool is_prime(u64 n) {
    if (n >= kPrimeLimit) throw NotPrime("primality is only decided below 2^20: " + std::to_string(n));
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_prime(u64 p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s), 1);
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

Rational Rational::inv() const {
    if (is_zero()) throw Error("inverse of zero rational");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// ------------------------------------------------------- QuadraticElement

bool is_squarefree(long d) {
    if (d == 0) return false;
    long n = d < 0 ? -d : d;
    for (long k = 2; k * k <= n; ++k)
        if (n % (k * k) == 0) return false;
    return true;
}

QuadraticElement::QuadraticElement(long d, Rational a, Rational b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
    if (d != 0 && (d <= 1 || !is_squarefree(d))) throw Error("quadratic field datum must be squarefree > 1");
}

void QuadraticElement::check(const QuadraticElement& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        throw MixedRings("Q(sqrt " + std::to_string(d_) + ") and Q(sqrt " + std::to_string(o.d_) + ") do not mix");
}

QuadraticElement& QuadraticElement::operator+=(const QuadraticElement& o) {
    check(o);
    if (d_ == 0) d_ = o.d_;
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadraticElement& QuadraticElement::operator-=(const QuadraticElement& o) {
    check(o);
    if (d_ == 0) d_ = o.d_;
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadraticElement& QuadraticElement::operator*=(const QuadraticElement& o) {
    check(o);
    if (d_ == 0) d_ = o.d_;
    Rational na = a_ * o.a_ + Rational(d_) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadraticElement QuadraticElement::inv() const {
    Rational n = norm();
    if (n.is_zero()) throw Error("inverse of zero in quadratic field");
    return {d_, a_ / n, -b_ / n};
}

std::string QuadraticElement::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = a_.is_zero() ? "" : a_.str();
    Rational b = b_;
    if (!a_.is_zero()) s += b.sign() < 0 ? "-" : "+";
    else if (b.sign() < 0) s += "-";
    if (b.sign() < 0) b = -b;
    if (b != Rational(1)) s += b.str() + "*";
    return s + "sqrt(" + std::to_string(d_) + ")";
}

// -------------------------------------------------------------------- Zmod

Zmod::Zmod(u64 p, unsigned m, long long value) : p_(p), m_(m) {
    require_prime(p);
    if (m == 0) throw Error("Zmod exponent must be >= 1");
    u128 mod = 1;
    for (unsigned i = 0; i < m; ++i) {
        mod *= p;
        if (mod >= (u128(1) << 62)) throw Error("p^m exceeds the 2^62 envelope");
    }
    mod_ = static_cast<u64>(mod);
    long long r = value % static_cast<long long>(mod_);
    if (r < 0) r += static_cast<long long>(mod_);
    v_ = static_cast<u64>(r);
}

void Zmod::check(const Zmod& o) const {
    if (mod_ != o.mod_) throw MixedRings("residues modulo different p^m");
}

Zmod& Zmod::operator+=(const Zmod& o) {
    check(o);
    v_ = static_cast<u64>((u128(v_) + o.v_) % mod_);
    return *this;
}

Zmod& Zmod::operator-=(const Zmod& o) {
    check(o);
    v_ = static_cast<u64>((u128(v_) + mod_ - o.v_) % mod_);
    return *this;
}

Zmod& Zmod::operator*=(const Zmod& o) {
    check(o);
    v_ = static_cast<u64>((u128(v_) * o.v_) % mod_);
    return *this;
}

Zmod Zmod::inv() const {
    if (!is_unit())
        throw DenominatorNotInvertible(p_, std::to_string(v_) + " is not a unit modulo " + std::to_string(mod_));
    // extended Euclid on signed 128-bit values
    __int128 a = v_, b = mod_, x0 = 1, x1 = 0;
    while (b != 0) {
        __int128 q = a / b;
        __int128 t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    __int128 r = x0 % static_cast<__int128>(mod_);
    if (r < 0) r += mod_;
    return from_residue(p_, m_, mod_, static_cast<u64>(r));
}

Zmod Zmod::pow(u64 e) const {
    Zmod r = from_residue(p_, m_, mod_, 1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

long long Zmod::signed_value() const {
    if (v_ > mod_ / 2) return static_cast<long long>(v_) - static_cast<long long>(mod_);
    return static_cast<long long>(v_);
}

namespace {
u64 mod_bigint(const BigInt& n, u64 mod) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), mod);
    return r.get_ui();
}
}  // namespace

Zmod reduce_rational(const Rational& q, u64 p, unsigned m) {
    Zmod unit(p, m, 0);
    if (mod_bigint(q.den(), p) == 0)
        throw DenominatorNotInvertible(p, "denominator of " + q.str() + " divisible by " + std::to_string(p));
    Zmod num = Zmod::from_residue(p, m, unit.modulus(), mod_bigint(q.num(), unit.modulus()));
    Zmod den = Zmod::from_residue(p, m, unit.modulus(), mod_bigint(q.den(), unit.modulus()));
    return num * den.inv();
}

// -------------------------------------------------------- splitting type

SplittingType splitting_type(u64 p, long d) {
    require_prime(p);
    if (d <= 1 || !is_squarefree(d)) throw Error("splitting_type expects squarefree d > 1");
    if (p == 2) {
        long r = ((d % 8) + 8) % 8;
        if (r % 2 == 0) return SplittingType::ramified;
        return r == 1 ? SplittingType::split : SplittingType::inert;
    }
    u64 dm = static_cast<u64>(((d % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p));
    if (dm == 0) return SplittingType::ramified;
    Zmod x(p, 1, static_cast<long long>(dm));
    return x.pow((p - 1) / 2).value() == 1 ? SplittingType::split : SplittingType::inert;
}

std::string to_string(SplittingType s) {
    switch (s) {
        case SplittingType::split: return "split";
        case SplittingType::inert: return "inert";
        case SplittingType::ramified: return "ramified";
    }
    return "?";
}

// ---------------------------------------------------- F_p polynomial helpers

namespace {

using PolyP = std::vector<u64>;

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mulp(u64 a, u64 b, u64 p) { return static_cast<u64>((u128(a) * b) % p); }

u64 invp(u64 a, u64 p) {
    u64 r = 1, e = p - 2;
    while (e) {
        if (e & 1) r = mulp(r, a, p);
        a = mulp(a, a, p);
        e >>= 1;
    }
    return r;
}

PolyP remp(PolyP a, const PolyP& f, u64 p) {
    trim(a);
    u64 li = invp(f.back(), p);
    while (a.size() >= f.size()) {
        u64 c = mulp(a.back(), li, p);
        size_t shift = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i)
            a[shift + i] = (a[shift + i] + p - mulp(c, f[i], p)) % p;
        trim(a);
    }
    return a;
}

PolyP mulmodp(const PolyP& a, const PolyP& b, const PolyP& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulp(a[i], b[j], p)) % p;
    return remp(std::move(c), f, p);
}

PolyP powmodp(PolyP b, u64 e, const PolyP& f, u64 p) {
    PolyP r{1};
    b = remp(std::move(b), f, p);
    while (e) {
        if (e & 1) r = mulmodp(r, b, f, p);
        b = mulmodp(b, b, f, p);
        e >>= 1;
    }
    return r;
}

PolyP gcdp(PolyP a, PolyP b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyP r = remp(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool irreducible_fp(const PolyP& f, u64 p) {
    unsigned e = static_cast<unsigned>(f.size() - 1);
    if (e == 1) return true;
    if (f[0] == 0) return false;
    PolyP h{0, 1};
    for (unsigned i = 1; i <= e / 2; ++i) {
        h = powmodp(h, p, f, p);
        PolyP d = h;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        if (gcdp(f, d, p).size() > 1) return false;
    }
    return true;
}

}  // namespace

std::vector<u64> build_extension_field(u64 p, unsigned e) {
    require_prime(p);
    if (e == 0) throw Error("extension degree must be >= 1");
    u128 q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q >= (u128(1) << 62)) throw FieldTooLarge("field size exceeds 2^62");
    }
    // n enumerates the lower coefficients with c_{e-1} most significant,
    // which is lexicographic order read from the top coefficient down.
    for (u64 n = 0; n < static_cast<u64>(q); ++n) {
        PolyP f(e + 1, 0);
        u64 t = n;
        for (unsigned i = 0; i < e; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[e] = 1;
        if (irreducible_fp(f, p)) return f;
    }
    throw Error("no irreducible polynomial found");
}

// ----------------------------------------------------------- FieldContext

FieldContext::FieldContext(u64 p, unsigned e) : p_(p), e_(e) {
    modulus_ = build_extension_field(p, e);
    u64 q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    q_ = q;
    if (q_ <= kTableLimit) build_tables();
}

std::vector<u64> FieldContext::digits(u64 a) const {
    std::vector<u64> d(e_, 0);
    for (unsigned i = 0; i < e_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

u64 FieldContext::encode(const std::vector<u64>& d) const {
    u64 a = 0;
    for (size_t i = d.size(); i-- > 0;) a = a * p_ + d[i] % p_;
    return a;
}

u64 FieldContext::add(u64 a, u64 b) const {
    if (e_ == 1) return (a + b) % p_;
    u64 r = 0, w = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * w;
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

u64 FieldContext::neg(u64 a) const {
    if (e_ == 1) return (p_ - a) % p_;
    u64 r = 0, w = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * w;
        a /= p_;
        w *= p_;
    }
    return r;
}

u64 FieldContext::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 FieldContext::mul_poly(u64 a, u64 b) const {
    if (e_ == 1) return mulp(a, b, p_);
    PolyP x = digits(a), y = digits(b);
    trim(x);
    trim(y);
    PolyP r = mulmodp(x, y, modulus_, p_);
    r.resize(e_, 0);
    return encode(r);
}

u64 FieldContext::mul(u64 a, u64 b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables()) {
        u64 s = static_cast<u64>(log_[a]) + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    return mul_poly(a, b);
}

u64 FieldContext::pow(u64 a, u64 n) const {
    if (n == 0) return 1;
    if (a == 0) return 0;
    if (has_tables()) return exp_[static_cast<u64>((u128(log_[a]) * n) % (q_ - 1))];
    u64 r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

u64 FieldContext::inv(u64 a) const {
    if (a == 0) throw Error("inverse of zero in finite field");
    if (has_tables()) return log_[a] == 0 ? 1 : exp_[q_ - 1 - log_[a]];
    return pow(a, q_ - 2);
}

u64 FieldContext::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<u64>(r);
}

bool FieldContext::is_square(u64 a) const {
    if (a == 0 || p_ == 2) return true;
    if (!square_.empty()) return square_[a] != 0;
    return pow(a, (q_ - 1) / 2) == 1;
}

bool FieldContext::sqrt(u64 a, u64& root) const {
    if (a == 0) { root = 0; return true; }
    if (!is_square(a)) return false;
    u64 r;
    if (has_tables()) {
        r = exp_[log_[a] / 2];
    } else if (p_ == 2) {
        r = pow(a, q_ / 2);
    } else {
        // Tonelli-Shanks over F_q
        u64 s = 0, t = q_ - 1;
        while (t % 2 == 0) { t /= 2; ++s; }
        u64 z = 2;
        while (is_square(z)) ++z;
        u64 m = s, c = pow(z, t), x = pow(a, (t + 1) / 2), b = pow(a, t);
        while (b != 1) {
            u64 i = 0, bb = b;
            while (bb != 1) { bb = mul(bb, bb); ++i; }
            u64 g = c;
            for (u64 k = 0; k + i + 1 < m; ++k) g = mul(g, g);
            x = mul(x, g);
            c = mul(g, g);
            b = mul(b, c);
            m = i;
        }
        r = x;
    }
    root = std::min(r, neg(r));
    return true;
}

void FieldContext::build_tables() {
    if (q_ == 2) {
        exp_ = {1};
        log_ = {0, 0};
        square_ = {1, 1};
        return;
    }
    std::vector<u64> fac = prime_factors(q_ - 1);
    u64 g = 0;
    for (u64 cand = 2; cand < q_ && g == 0; ++cand) {
        bool prim = true;
        for (u64 r : fac) {
            u64 acc = 1, base = cand, n = (q_ - 1) / r;
            while (n) {
                if (n & 1) acc = mul_poly(acc, base);
                base = mul_poly(base, base);
                n >>= 1;
            }
            if (acc == 1) { prim = false; break; }
        }
        if (prim) g = cand;
    }
    if (q_ == 3) g = 2;
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    u64 x = 1;
    for (u64 k = 0; k < q_ - 1; ++k) {
        exp_[k] = static_cast<std::uint32_t>(x);
        log_[x] = static_cast<std::uint32_t>(k);
        x = mul_poly(x, g);
    }
    square_.assign(q_, 0);
    square_[0] = 1;
    for (u64 a = 1; a < q_; ++a) square_[a] = (log_[a] % 2 == 0) ? 1 : 0;
}

const FieldContext* field(u64 p, unsigned e) {
    static std::mutex mu;
    static std::map<std::pair<u64, unsigned>, std::unique_ptr<FieldContext>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second.get();
    require_prime(p);
    auto ctx = std::make_unique<FieldContext>(p, e);
    const FieldContext* raw = ctx.get();
    registry.emplace(key, std::move(ctx));
    return raw;
}

std::string GF::str() const {
    if (ctx_ == nullptr) return "0";
    if (ctx_->e() == 1) return std::to_string(v_);
    std::string s = "[";
    auto d = ctx_->digits(v_);
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

GF reduce_to_field(const Rational& q, const FieldContext* ctx) {
    Zmod z = reduce_rational(q, ctx->p(), 1);
    return {ctx, z.value()};
}

}  // namespace pfkit
